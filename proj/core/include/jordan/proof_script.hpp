#pragma once

// Line-oriented proof scripts.
//
//   # comment
//   theorem <free text>
//   generators x y
//   budget 2, m, n, m+n, 2m+n
//   step <label> <Kind> <args...> => <claimed polynomial>
//   goal <polynomial>
//
// A trailing backslash continues a line. A claimed polynomial may be written
// `lhs = rhs`, meaning lhs - rhs.

#include "jordan/expr.hpp"
#include "jordan/ncpoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jordan {

enum class StepKind {
  Define,
  Substitute,
  PolarizeEven,
  MulLeft,
  MulRight,
  Combine,
  Cancel,
  PatternABC,
  SemiprimeSquash,
  ExternalTheorem,
  Assume,
};

std::string_view name_of(StepKind k);
std::optional<StepKind> step_kind_from_name(std::string_view name);

enum class Law { centralizer, gen_centralizer, derivation, gen_derivation, difference };

std::string_view name_of(Law law);
std::optional<Law> law_from_name(std::string_view name);

/// Whitelisted external results, each invoked as a one-shot transform.
enum class ExternalResult { commuting, t0_two_sided, d_central_derivation };

std::string_view name_of(ExternalResult r);
std::optional<ExternalResult> external_from_name(std::string_view name);

namespace steps {

/// One of the defining laws, or `difference N A B` introducing N := A - B.
struct Define {
  Law law;
  std::vector<MapSym> maps;
};

struct Substitute {
  std::string use;
  Substitution sigma;
};

struct PolarizeEven {
  std::string use;
  Generator on;
};

struct Multiply {
  std::string use;
  NCPoly by;
};

struct Combine {
  ExprPtr certificate;
};

struct Cancel {
  std::string use;
  ScalarPoly factor;
};

/// a g b + b g c = 0  ==>  (a + c) g b = 0
struct PatternABC {
  std::string use;
  Generator on;
  NCPoly a, b, c;
};

/// W g W = 0  ==>  W = 0
struct SemiprimeSquash {
  std::string use;
  Generator on;
  NCPoly witness;
};

struct ExternalTheorem {
  ExternalResult result;
  std::string use;
  MapSym map;
};

struct Assume {};

}  // namespace steps

using StepArgs = std::variant<steps::Define, steps::Substitute, steps::PolarizeEven, steps::Multiply, steps::Combine,
                              steps::Cancel, steps::PatternABC, steps::SemiprimeSquash, steps::ExternalTheorem,
                              steps::Assume>;

struct Step {
  std::string label;
  StepKind kind = StepKind::Assume;
  StepArgs args;
  NCPoly claimed;
  int line = 0;

  /// Labels this step depends on.
  std::vector<std::string> citations() const;
};

struct Goal {
  NCPoly body;
  int line = 0;
};

struct ProofScript {
  std::string theorem;
  std::vector<Generator> generators{kX, kY};
  /// Torsion factors the theorem's hypothesis allows cancelling, as written.
  std::vector<ScalarPoly> budget;
  std::vector<Step> steps;
  std::vector<Goal> goals;
};

/// Parses a script; throws ParseError with line/column on the first problem.
ProofScript parse_script(std::string_view text);
ProofScript load_script(const std::string& path);

}  // namespace jordan
