#include "jordan/checker.hpp"

#include "json.hpp"

#include <sstream>

namespace jordan {

namespace {

NCPoly app(MapSym s, const NCPoly& arg) { return NCPoly::apply(s, arg); }

void require_no(const NCPoly& p, Generator g, const std::string& what) {
  for (const auto& [w, c] : p.terms())
    if (degree_in(w, g) != 0)
      throw StepError(what + " must not mention " + std::string(1, g.name) + " (term " + monomial_to_string(w) + ")");
}

bool mentions(const Monomial& w, MapSym s) {
  for (const Atom& a : w)
    if (a.is_app() && (a.map() == s || mentions(a.argument(), s))) return true;
  return false;
}

bool mentions(const NCPoly& p, MapSym s) {
  for (const auto& [w, c] : p.terms())
    if (mentions(w, s)) return true;
  return false;
}

std::string difference_message(const NCPoly& diff) {
  std::string out = "claimed - computed =";
  for (const auto& [w, c] : diff.terms()) out += "\n    (" + c.to_string() + ") * " + monomial_to_string(w);
  return out;
}

void expect_equal(const NCPoly& claimed, const NCPoly& computed) {
  if (claimed == computed) return;
  NCPoly diff = claimed - computed;
  throw StepError("claimed identity does not match the computed one; " + difference_message(diff), diff);
}

bool equal_up_to_sign(const NCPoly& a, const NCPoly& b) { return a == b || a == -b; }

struct StepRecord {
  std::set<std::string> axioms;
  std::vector<ScalarPoly> factors;
};

void spend(const ScalarPoly& factor, const std::vector<ScalarPoly>& budget, StepRecord& rec) {
  auto parts = decompose_factor(factor, budget);
  if (!parts)
    throw StepError("factor " + factor.to_string() + " is outside the multiplicative closure of the torsion budget");
  for (auto& p : *parts) rec.factors.push_back(p);
}

}  // namespace

NCPoly Env::body(const std::string& label) const {
  auto it = identities_.find(label);
  if (it == identities_.end()) throw StepError("unknown label '" + label + "'");
  return normalize(it->second.body, rules_);
}

NCPoly law_body(Law law, const std::vector<MapSym>& maps, Generator g) {
  NCPoly x = NCPoly::generator(g);
  ScalarPoly m = ScalarPoly::m();
  ScalarPoly n = ScalarPoly::n();
  switch (law) {
    case Law::centralizer:
      return (m + n) * app(maps[0], x * x) - m * (app(maps[0], x) * x) - n * (x * app(maps[0], x));
    case Law::gen_centralizer:
      return (m + n) * app(maps[0], x * x) - m * (app(maps[0], x) * x) - n * (x * app(maps[1], x));
    case Law::derivation:
      return (m + n) * app(maps[0], x * x) - ScalarPoly(2) * m * (app(maps[0], x) * x) -
             ScalarPoly(2) * n * (x * app(maps[0], x));
    case Law::gen_derivation:
      return (m + n) * app(maps[0], x * x) - ScalarPoly(2) * m * (app(maps[0], x) * x) -
             ScalarPoly(2) * n * (x * app(maps[1], x));
    case Law::difference:
      return app(maps[0], x) - app(maps[1], x) + app(maps[2], x);
  }
  return {};
}

std::optional<std::vector<ScalarPoly>> decompose_factor(const ScalarPoly& factor, const std::vector<ScalarPoly>& budget) {
  if (factor.is_zero()) return std::nullopt;
  std::vector<ScalarPoly> parts;
  ScalarPoly rest = factor;
  bool progress = true;
  while (!rest.is_unit() && progress) {
    progress = false;
    for (const ScalarPoly& b : budget) {
      if (auto q = rest.divide_exact(b)) {
        parts.push_back(b);
        rest = *q;
        progress = true;
        break;
      }
    }
  }
  if (!rest.is_unit()) return std::nullopt;
  return parts;
}

Identity check_step(Env& env, const Step& s) {
  if (env.has(s.label)) throw StepError("label '" + s.label + "' is already defined");
  StepRecord rec;
  NCPoly claimed = env.normal(s.claimed);
  NCPoly computed;
  bool assumed = false;
  RewriteRules next_rules = env.rules_;
  std::vector<MapSym> newly_defined;

  const Generator g0 = kX;
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, steps::Define>) {
          if (a.law == Law::difference) {
            MapSym fresh = a.maps[0];
            if (env.map_defined(fresh)) throw StepError("map " + std::string(name_of(fresh)) + " is not fresh");
            for (const auto& label : env.order_)
              if (mentions(env.identities_.at(label).body, fresh))
                throw StepError("map " + std::string(name_of(fresh)) + " already occurs in " + label);
            if (a.maps[1] == fresh || a.maps[2] == fresh)
              throw StepError("a difference map cannot be defined in terms of itself");
          } else if (env.map_defined(a.maps[0])) {
            throw StepError("map " + std::string(name_of(a.maps[0])) + " already has a defining law");
          }
          newly_defined.push_back(a.maps[0]);
          rec.axioms.insert("definition:" + std::string(name_of(a.law)));
          computed = env.normal(law_body(a.law, a.maps, g0));
        } else if constexpr (std::is_same_v<A, steps::Substitute>) {
          computed = env.normal(substitute(env.body(a.use), a.sigma));
        } else if constexpr (std::is_same_v<A, steps::PolarizeEven>) {
          spend(ScalarPoly(2), env.budget(), rec);
          computed = env.normal(polarize_even(env.body(a.use), a.on));
        } else if constexpr (std::is_same_v<A, steps::Multiply>) {
          NCPoly body = env.body(a.use);
          computed = env.normal(s.kind == StepKind::MulLeft ? a.by * body : body * a.by);
        } else if constexpr (std::is_same_v<A, steps::Combine>) {
          CitationResolver resolve = [&env](const std::string& label, const Substitution& sigma) {
            return env.normal(substitute(env.body(label), sigma));
          };
          Value v;
          try {
            v = evaluate(a.certificate, resolve);
          } catch (const EvalError& e) {
            throw StepError(std::string("bad certificate: ") + e.what());
          }
          if (v.kind != Value::Kind::ideal) throw StepError("certificate cites no identity");
          computed = env.normal(v.poly);
        } else if constexpr (std::is_same_v<A, steps::Cancel>) {
          spend(a.factor, env.budget(), rec);
          NCPoly body = env.body(a.use);
          try {
            computed = env.normal(exact_divide(body, a.factor));
          } catch (const DivisionError& e) {
            throw StepError("cannot cancel " + a.factor.to_string() + ": coefficient of " +
                            monomial_to_string(e.failing_monomial()) + " is not divisible");
          }
        } else if constexpr (std::is_same_v<A, steps::PatternABC>) {
          require_no(a.a, a.on, "a");
          require_no(a.b, a.on, "b");
          require_no(a.c, a.on, "c");
          NCPoly g = NCPoly::generator(a.on);
          NCPoly shape = env.normal(a.a * g * a.b + a.b * g * a.c);
          NCPoly body = env.body(a.use);
          if (body != shape)
            throw StepError("cited identity is not a*g*b + b*g*c for the given witnesses; " +
                                difference_message(body - shape),
                            body - shape);
          rec.axioms.insert("semiprime");
          computed = env.normal((a.a + a.c) * g * a.b);
        } else if constexpr (std::is_same_v<A, steps::SemiprimeSquash>) {
          require_no(a.witness, a.on, "W");
          NCPoly g = NCPoly::generator(a.on);
          NCPoly shape = env.normal(a.witness * g * a.witness);
          NCPoly body = env.body(a.use);
          if (body != shape)
            throw StepError("cited identity is not W*g*W for the given witness; " + difference_message(body - shape),
                            body - shape);
          rec.axioms.insert("semiprime");
          computed = env.normal(a.witness);
        } else if constexpr (std::is_same_v<A, steps::ExternalTheorem>) {
          NCPoly body = env.body(a.use);
          NCPoly x = NCPoly::generator(g0);
          rec.axioms.insert("external:" + std::string(name_of(a.result)));
          rec.axioms.insert("semiprime");
          switch (a.result) {
            case ExternalResult::commuting: {
              NCPoly inner = commutator(app(a.map, x), x);
              if (!equal_up_to_sign(body, env.normal(commutator(inner, x))))
                throw StepError("commuting theorem needs [[M(x), x], x] = 0");
              spend(ScalarPoly(2), env.budget(), rec);
              computed = env.normal(inner);
              break;
            }
            case ExternalResult::t0_two_sided: {
              if (kind_of(a.map) != MapKind::two_sided_centralizer)
                throw StepError("map " + std::string(name_of(a.map)) + " cannot carry the two-sided license");
              if (!equal_up_to_sign(body, env.normal(law_body(Law::centralizer, {a.map}, g0))))
                throw StepError("two-sided theorem needs the centralizer law of " + std::string(name_of(a.map)));
              for (const ScalarPoly& f : {ScalarPoly::m(), ScalarPoly::n(), ScalarPoly::m() + ScalarPoly::n()})
                spend(f, env.budget(), rec);
              next_rules.two_sided_t0 = true;
              computed = NCPoly();
              break;
            }
            case ExternalResult::d_central_derivation: {
              if (kind_of(a.map) != MapKind::central_derivation)
                throw StepError("map " + std::string(name_of(a.map)) + " cannot carry the central-derivation license");
              if (!equal_up_to_sign(body, env.normal(law_body(Law::derivation, {a.map}, g0))))
                throw StepError("central-derivation theorem needs the derivation law of " +
                                std::string(name_of(a.map)));
              ScalarPoly m = ScalarPoly::m(), n = ScalarPoly::n();
              for (const ScalarPoly& f : {m, n, m + n, m - n}) spend(f, env.budget(), rec);
              next_rules.central_d = true;
              // D(xy) is central; the rewrite rules alone do not see [D(xy), x] = 0.
              NCPoly dxy = app(a.map, x * NCPoly::generator(kY));
              computed = normalize(dxy * x - x * dxy, next_rules);
              break;
            }
          }
        } else if constexpr (std::is_same_v<A, steps::Assume>) {
          assumed = true;
          computed = claimed;
        }
      },
      s.args);

  if (!assumed) {
    // Under a newly licensed rule the claimed form is compared in the new normal form.
    if (!(next_rules == env.rules_)) claimed = normalize(s.claimed, next_rules);
    expect_equal(claimed, normalize(computed, next_rules));
  }

  Identity id{s.label, claimed, assumed ? "axiom" : s.label, rec.axioms, rec.factors, assumed};
  if (std::holds_alternative<steps::Define>(s.args)) id.provenance = "axiom";
  env.rules_ = next_rules;
  for (MapSym m : newly_defined) env.defined_maps_.insert(m);
  env.identities_[s.label] = id;
  env.order_.push_back(s.label);
  return id;
}

AuditReport replay(const ProofScript& script) {
  AuditReport report;
  report.theorem = script.theorem;
  for (const auto& b : script.budget) report.budget.push_back(b.to_string());
  Env env(script.budget);

  for (const Step& s : script.steps) {
    StepReport row;
    row.label = s.label;
    row.kind = std::string(name_of(s.kind));
    row.line = s.line;
    try {
      Identity id = check_step(env, s);
      row.verdict = id.assumed ? "assumed" : "verified";
      row.body = id.body.to_string();
      for (const auto& f : id.factors) {
        row.factors.push_back(f.to_string());
        ++report.factor_totals[f.to_string()];
      }
      row.axioms.assign(id.axioms.begin(), id.axioms.end());
      for (const auto& ax : id.axioms)
        if (ax.rfind("external:", 0) == 0) report.external_theorems.push_back(ax.substr(9) + " (" + s.label + ")");
      if (id.assumed) report.assumptions.push_back(s.label + ": " + row.body + " = 0");
      report.steps.push_back(std::move(row));
    } catch (const StepError& e) {
      row.verdict = "failed";
      row.error = e.what();
      for (const auto& [w, c] : e.difference().terms())
        row.difference.push_back("(" + c.to_string() + ") * " + monomial_to_string(w));
      report.steps.push_back(std::move(row));
      report.failed_step = s.label;
      report.verdict = "FAILED(" + s.label + ")";
      return report;
    } catch (const std::exception& e) {
      row.verdict = "failed";
      row.error = e.what();
      report.steps.push_back(std::move(row));
      report.failed_step = s.label;
      report.verdict = "FAILED(" + s.label + ")";
      return report;
    }
  }

  bool all_goals = !script.goals.empty();
  for (const Goal& goal : script.goals) {
    GoalReport gr;
    NCPoly target = env.normal(goal.body);
    gr.goal = target.to_string();
    for (const auto& label : env.order()) {
      if (!target.is_zero() && equal_up_to_sign(env.body(label), target)) {
        gr.met = true;
        gr.by = label;
        break;
      }
    }
    all_goals = all_goals && gr.met;
    report.goals.push_back(gr);
  }
  if (!all_goals) {
    report.verdict = "FAILED(goal)";
    report.failed_step = "goal";
  } else {
    report.verdict = report.assumptions.empty() ? "VERIFIED" : "VERIFIED-WITH-ASSUMPTIONS";
  }
  return report;
}

std::string to_text(const AuditReport& r) {
  std::ostringstream out;
  out << "theorem: " << (r.theorem.empty() ? "(unnamed)" : r.theorem) << "\n";
  out << "budget:";
  for (std::size_t i = 0; i < r.budget.size(); ++i) out << (i ? ", " : " ") << r.budget[i];
  out << "\n\n";
  for (const auto& s : r.steps) {
    out << "  [" << s.verdict << "] " << s.label << " (" << s.kind << ", line " << s.line << ")";
    if (!s.factors.empty()) {
      out << " cancels";
      for (const auto& f : s.factors) out << " " << f;
    }
    if (!s.axioms.empty()) {
      out << " uses";
      for (const auto& a : s.axioms) out << " " << a;
    }
    out << "\n";
    if (!s.error.empty()) out << "      error: " << s.error << "\n";
  }
  out << "\nfactors consumed:";
  if (r.factor_totals.empty()) out << " none";
  for (const auto& [f, k] : r.factor_totals) out << " " << f << " x" << k << ";";
  out << "\nexternal theorems:";
  if (r.external_theorems.empty()) out << " none";
  for (const auto& e : r.external_theorems) out << " " << e << ";";
  out << "\nassumptions:";
  if (r.assumptions.empty()) out << " none";
  out << "\n";
  for (const auto& a : r.assumptions) out << "  " << a << "\n";
  out << "goals:\n";
  if (r.goals.empty()) out << "  (none)\n";
  for (const auto& g : r.goals)
    out << "  " << g.goal << " = 0  " << (g.met ? "derived in " + g.by : std::string("NOT DERIVED")) << "\n";
  out << "verdict: " << r.verdict << "\n";
  return out.str();
}

std::string to_json(const AuditReport& r, int indent) {
  using nlohmann::json;
  json steps = json::array();
  for (const auto& s : r.steps) {
    json row{{"step", s.label},   {"kind", s.kind}, {"verdict", s.verdict}, {"factors", s.factors},
             {"axioms", s.axioms}, {"line", s.line}};
    if (!s.body.empty()) row["identity"] = s.body;
    if (!s.error.empty()) row["error"] = s.error;
    if (!s.difference.empty()) row["difference"] = s.difference;
    steps.push_back(std::move(row));
  }
  json goals = json::array();
  for (const auto& g : r.goals) goals.push_back({{"goal", g.goal}, {"met", g.met}, {"by", g.by}});
  json doc{{"theorem", r.theorem},
           {"verdict", r.verdict},
           {"budget", r.budget},
           {"steps", steps},
           {"factor_totals", r.factor_totals},
           {"external_theorems", r.external_theorems},
           {"assumptions", r.assumptions},
           {"goals", goals}};
  return doc.dump(indent);
}

}  // namespace jordan
