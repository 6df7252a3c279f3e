#pragma once

// Functional identities on finite rings: solving the defining laws and
// checking the theorems' conclusions on every solution.

#include "jordan/finring.hpp"
#include "jordan/proof_script.hpp"

#include <map>
#include <string>
#include <vector>

namespace jordan {

struct LawSpec {
  Law law = Law::centralizer;  // never Law::difference
  std::int64_t m = 1;
  std::int64_t n = 1;
};

/// Torsion factor the theorem for `spec` assumes: mn(m+n)(2m+n),
/// mn(m+n)|m-n| or mn(m+n).
std::int64_t hypothesis_torsion(const LawSpec& spec);
bool is_generalized(Law law);

/// One solution: `map` is T, T0-free laws leave `base` empty. For generalized
/// laws `map` is T (resp. F) and `base` is T0 (resp. D).
struct Solution {
  AddMap map;
  AddMap base;
  bool operator==(const Solution&) const = default;
  auto operator<=>(const Solution&) const = default;
};

struct SolutionSet {
  std::vector<Solution> solutions;  // all of them when `complete`
  std::vector<Solution> generators;
  /// Decimal; may exceed 64 bits.
  std::string count;
  bool complete = true;
  /// Smith invariants > 1 of the solution group.
  std::vector<std::string> elementary_divisors;
  /// Unknown coordinates whose Hermite pivot is not the full modulus.
  int free_rank = 0;
};

SolutionSet solve_identity(const FinRing& r, const LawSpec& spec, const Bounds& b = {});

/// Residual of the law at x; zero iff the law holds there.
RingElem law_residual(const FinRing& r, const LawSpec& spec, const Solution& s, const RingElem& x);
bool satisfies_law(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b = {});

struct TheoremReport {
  std::string ring;
  LawSpec spec;
  std::uint64_t order = 0;
  std::int64_t torsion = 0;
  std::map<std::string, bool> hypotheses;  // "semiprime", "torsion-free"
  bool hypotheses_hold = false;
  std::string count;
  bool enumerated = true;
  /// Otherwise the conclusion was checked on generators of the solution group.
  bool checked_every_solution = true;
  /// Conclusion holds on every solution.
  bool conclusion = true;
  /// "VERIFIED", "COUNTEREXAMPLE" or "NOT-CLAIMED".
  std::string verdict;
  std::vector<Solution> witnesses;  // solutions violating the conclusion
  std::vector<std::string> elementary_divisors;
};

/// Whether `s` meets the theorem's conclusion for `spec`.
bool conclusion_holds(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b = {});

TheoremReport check_theorem(const FinRing& r, const LawSpec& spec, const Bounds& b = {});

/// Throws std::invalid_argument when the maps do not satisfy the law.
bool cross_check_lemma(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b = {});

struct Family {
  enum class Kind { Zn, Mat2, Products } kind = Kind::Zn;
  /// Zn: 2..bound. Mat2: primes up to bound, or `members` if set.
  /// Products: Zp + Zq and Zp + Mat(2,q) over primes up to bound.
  std::int64_t bound = 0;
  std::vector<std::int64_t> members;
};

std::vector<FinRing> family_members(const Family& f);
std::vector<TheoremReport> search_family(const Family& f, const LawSpec& spec, const Bounds& b = {}, int jobs = 1);

std::string to_text(const TheoremReport& r);
std::string to_json(const TheoremReport& r, int indent = 2);
std::string to_text(const std::vector<TheoremReport>& rows);
std::string to_json(const std::vector<TheoremReport>& rows, int indent = 2);

}  // namespace jordan
