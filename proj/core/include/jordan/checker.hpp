#pragma once

// Step-by-step replay of proof scripts.

#include "jordan/proof_script.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordan {

/// A verified identity: body = 0 for all values of the generators.
struct Identity {
  std::string label;
  NCPoly body;
  /// Step label, or "axiom" for Define/Assume.
  std::string provenance;
  /// Structural hypotheses used by the step itself: "semiprime", external theorem names, ...
  std::set<std::string> axioms;
  /// Torsion factors cancelled by the step itself.
  std::vector<ScalarPoly> factors;
  bool assumed = false;
};

/// Thrown by check_step. `difference` is claimed - computed when the failure
/// is a mismatch, otherwise zero.
class StepError : public std::runtime_error {
 public:
  StepError(const std::string& msg, NCPoly difference = {})
      : std::runtime_error(msg), difference_(std::move(difference)) {}
  const NCPoly& difference() const { return difference_; }

 private:
  NCPoly difference_;
};

/// Verified identities plus the rewrite rules licensed so far.
class Env {
 public:
  explicit Env(std::vector<ScalarPoly> budget = {}) : budget_(std::move(budget)) {}

  const RewriteRules& rules() const { return rules_; }
  const std::vector<ScalarPoly>& budget() const { return budget_; }
  /// Body of `label`, renormalized under the current rules.
  NCPoly body(const std::string& label) const;
  bool has(const std::string& label) const { return identities_.count(label) != 0; }
  bool map_defined(MapSym s) const { return defined_maps_.count(s) != 0; }
  const std::vector<std::string>& order() const { return order_; }
  const Identity& identity(const std::string& label) const { return identities_.at(label); }

  NCPoly normal(const NCPoly& p) const { return normalize(p, rules_); }

 private:
  friend Identity check_step(Env& env, const Step& s);
  std::vector<ScalarPoly> budget_;
  RewriteRules rules_;
  std::map<std::string, Identity> identities_;
  std::vector<std::string> order_;
  std::set<MapSym> defined_maps_;
};

/// Checks `s` against `env`; on success records and returns the new identity.
Identity check_step(Env& env, const Step& s);

/// The defining identity of a law as a polynomial (law body = 0), in generator `g`.
NCPoly law_body(Law law, const std::vector<MapSym>& maps, Generator g = kX);

/// Splits `factor` into budget members, up to sign; nullopt when impossible.
std::optional<std::vector<ScalarPoly>> decompose_factor(const ScalarPoly& factor, const std::vector<ScalarPoly>& budget);

struct StepReport {
  std::string label;
  std::string kind;
  std::string verdict;  // "verified", "assumed", "failed"
  std::vector<std::string> factors;
  std::vector<std::string> axioms;
  std::string body;
  std::string error;
  /// Term-by-term claimed - computed on mismatch.
  std::vector<std::string> difference;
  int line = 0;
};

struct GoalReport {
  std::string goal;
  bool met = false;
  std::string by;
};

struct AuditReport {
  std::string theorem;
  /// "VERIFIED", "VERIFIED-WITH-ASSUMPTIONS" or "FAILED(<step>)".
  std::string verdict;
  std::vector<StepReport> steps;
  std::vector<std::string> budget;
  /// Every factor cancelled, in order of use, by budget member.
  std::map<std::string, int> factor_totals;
  std::vector<std::string> external_theorems;
  std::vector<std::string> assumptions;
  std::vector<GoalReport> goals;
  std::string failed_step;

  bool verified() const { return verdict == "VERIFIED"; }
  bool failed() const { return verdict.rfind("FAILED", 0) == 0; }
};

AuditReport replay(const ProofScript& script);

std::string to_text(const AuditReport& report);
std::string to_json(const AuditReport& report, int indent = 2);

}  // namespace jordan
