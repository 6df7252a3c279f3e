#include "doctest.h"

#include "jordan/checker.hpp"
#include "jordan/expr.hpp"

#include <string>

using namespace jordan;

namespace {

const std::string kHeader =
    "theorem demo\n"
    "generators x y\n"
    "budget 2, m, n, m+n\n"
    "step law Define centralizer T => (m+n) T[x^2] = m T[x] x + n x T[x]\n";

AuditReport run(const std::string& body) { return replay(parse_script(kHeader + body)); }

const StepReport& step(const AuditReport& r, const std::string& label) {
  for (const auto& s : r.steps)
    if (s.label == label) return s;
  FAIL("no step " << label);
  return r.steps.front();
}

}  // namespace

TEST_CASE("law bodies") {
  CHECK(law_body(Law::centralizer, {MapSym::T}) == parse_polynomial("(m+n) T[x^2] - m T[x] x - n x T[x]"));
  CHECK(law_body(Law::gen_centralizer, {MapSym::T, MapSym::T0}) ==
        parse_polynomial("(m+n) T[x^2] - m T[x] x - n x T0[x]"));
  CHECK(law_body(Law::derivation, {MapSym::D}) == parse_polynomial("(m+n) D[x^2] - 2m D[x] x - 2n x D[x]"));
  CHECK(law_body(Law::gen_derivation, {MapSym::F, MapSym::D}) ==
        parse_polynomial("(m+n) F[x^2] - 2m F[x] x - 2n x D[x]"));
  CHECK(law_body(Law::centralizer, {MapSym::T}, kY) == parse_polynomial("(m+n) T[y^2] - m T[y] y - n y T[y]"));
}

TEST_CASE("torsion factors split over the budget") {
  const std::vector<ScalarPoly> budget{2, parse_scalar("m"), parse_scalar("n"), parse_scalar("m+n")};
  auto parts = decompose_factor(parse_scalar("2 m n (m+n)"), budget);
  REQUIRE(parts.has_value());
  CHECK(parts->size() == 4);
  CHECK(decompose_factor(parse_scalar("-m n"), budget).has_value());
  CHECK_FALSE(decompose_factor(parse_scalar("m+2n"), budget).has_value());
  CHECK_FALSE(decompose_factor(3, budget).has_value());
}

TEST_CASE("linearization replays") {
  auto r = run(
      "step lin Combine @law{x -> x+y} - @law - @law{x -> y} \\\n"
      "  => (m+n) T[x y + y x] = m T[x] y + m T[y] x + n x T[y] + n y T[x]\n"
      "goal (m+n) T[x y + y x] - m T[x] y - m T[y] x - n x T[y] - n y T[x]\n");
  CHECK(r.verdict == "VERIFIED");
  CHECK(r.goals.at(0).met);
  CHECK(r.goals.at(0).by == "lin");
}

TEST_CASE("mismatched claim fails at that step with the difference") {
  auto r = run(
      "step lin Combine @law{x -> x+y} - @law - @law{x -> y} \\\n"
      "  => (m+n) T[x y + y x] = m T[x] y + m T[y] x + n x T[y] + 2n y T[x]\n"
      "goal T[x]\n");
  CHECK(r.verdict == "FAILED(lin)");
  CHECK(r.failed_step == "lin");
  const auto& s = step(r, "lin");
  CHECK(s.verdict == "failed");
  REQUIRE(s.difference.size() == 1);
  CHECK(s.difference[0].find("y*T[x]") != std::string::npos);
}

TEST_CASE("substitution and one-sided multiplication") {
  auto r = run(
      "step s Substitute use law x -> 2 y => 4(m+n) T[y^2] = 4m T[y] y + 4n y T[y]\n"
      "step l MulLeft use law by y => (m+n) y T[x^2] = m y T[x] x + n y x T[x]\n"
      "step r MulRight use law by x => (m+n) T[x^2] x = m T[x] x^2 + n x T[x] x\n"
      "goal y T[x^2] (m+n) - m y T[x] x - n y x T[x]\n");
  CHECK(r.verdict == "VERIFIED");
}

TEST_CASE("cancellation is limited to the budget") {
  const std::string twice = "step tw Combine 2 (m+n) @law => 2(m+n)^2 T[x^2] = 2m(m+n) T[x] x + 2n(m+n) x T[x]\n";
  auto ok = run(twice + "step c Cancel use tw by 2(m+n) => (m+n) T[x^2] = m T[x] x + n x T[x]\ngoal T[x]\n");
  CHECK(step(ok, "c").verdict == "verified");
  CHECK(step(ok, "c").factors.size() == 2);
  CHECK(ok.factor_totals.at("2") == 1);

  auto bad = run("step t3 Combine 3 @law => 3(m+n) T[x^2] = 3m T[x] x + 3n x T[x]\n"
                 "step c Cancel use t3 by 3 => (m+n) T[x^2] = m T[x] x + n x T[x]\ngoal T[x]\n");
  CHECK(bad.verdict == "FAILED(c)");

  auto indivisible = run("step c Cancel use law by m => T[x^2] = T[x] x\ngoal T[x]\n");
  CHECK(indivisible.verdict == "FAILED(c)");
}

TEST_CASE("pattern a g b + b g c") {
  auto r = run(
      "step h Assume => x y T[x] + T[x] y x\n"
      "step p PatternABC use h on y a = x ; b = T[x] ; c = x => 2 x y T[x]\n"
      "goal 2 x y T[x]\n");
  CHECK(r.verdict == "VERIFIED-WITH-ASSUMPTIONS");
  CHECK(step(r, "p").axioms == std::vector<std::string>{"semiprime"});
  REQUIRE(r.assumptions.size() == 1);
  CHECK(r.assumptions[0].rfind("h:", 0) == 0);

  auto wrong = run(
      "step h Assume => x y T[x] + T[x] y x\n"
      "step p PatternABC use h on y a = y ; b = T[x] ; c = x => 0\n"
      "goal T[x]\n");
  CHECK(wrong.verdict == "FAILED(p)");
}

TEST_CASE("semiprime squash") {
  auto r = run(
      "step h Assume => [T[x], x] y [T[x], x]\n"
      "step s SemiprimeSquash use h on y W = [T[x], x] => [T[x], x]\n"
      "goal T[x] x - x T[x]\n");
  CHECK(r.verdict == "VERIFIED-WITH-ASSUMPTIONS");
  auto wrong = run(
      "step h Assume => [T[x], x] y [T[x], x]\n"
      "step s SemiprimeSquash use h on y W = T[x] => T[x]\n"
      "goal T[x]\n");
  CHECK(wrong.verdict == "FAILED(s)");
}

TEST_CASE("external theorems") {
  auto r = run(
      "step h Assume => [[T[x], x], x]\n"
      "step c ExternalTheorem commuting use h map T => [T[x], x]\n"
      "goal [T[x], x]\n");
  CHECK(r.verdict == "VERIFIED-WITH-ASSUMPTIONS");
  CHECK(r.external_theorems.size() == 1);
  CHECK(step(r, "c").factors == std::vector<std::string>{"2"});

  auto wrong_map = run("step c ExternalTheorem t0-two-sided use law map T => 0\ngoal T[x]\n");
  CHECK(wrong_map.verdict == "FAILED(c)");
}

TEST_CASE("goals") {
  auto unmet = run("goal T[x]\n");
  CHECK(unmet.verdict == "FAILED(goal)");
  CHECK_FALSE(unmet.goals.at(0).met);
  // a goal matches up to sign
  auto neg = run("goal m T[x] x + n x T[x] - (m+n) T[x^2]\n");
  CHECK(neg.verdict == "VERIFIED");
}

TEST_CASE("script parse errors") {
  CHECK_THROWS_AS(parse_script(kHeader + "step a Combine @nope => 0\n"), ParseError);
  CHECK_THROWS_AS(parse_script(kHeader + "step law Assume => x\n"), ParseError);
  CHECK_THROWS_AS(parse_script(kHeader + "step a Frobnicate => 0\n"), ParseError);
  CHECK_THROWS_AS(parse_script("budget 1\n"), ParseError);
  CHECK_THROWS_AS(load_script("/nonexistent/file.steps"), std::exception);
}

TEST_CASE("shipped certificates") {
  const std::string dir = std::string(JORDAN_SOURCE_DIR) + "/proofs/";
  for (const char* name : {"theorem_centralizer.steps", "theorem_derivation.steps"}) {
    CAPTURE(name);
    auto r = replay(load_script(dir + name));
    CHECK(r.verdict == "VERIFIED-WITH-ASSUMPTIONS");
    CHECK(r.assumptions.size() == 1);
    for (const auto& g : r.goals) CHECK(g.met);
    for (const auto& s : r.steps) CHECK(s.verdict != "failed");
  }
}

TEST_CASE("report serialization") {
  auto r = run("goal T[x]\n");
  CHECK(to_text(r).find("FAILED(goal)") != std::string::npos);
  CHECK(to_json(r).find("\"verdict\": \"FAILED(goal)\"") != std::string::npos);
}
