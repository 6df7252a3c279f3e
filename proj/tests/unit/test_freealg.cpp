#include "doctest.h"

#include "jordan/expr.hpp"
#include "jordan/ncpoly.hpp"

using namespace jordan;

namespace {

NCPoly P(const char* s) { return parse_polynomial(s); }
const ScalarPoly m = ScalarPoly::m();
const ScalarPoly n = ScalarPoly::n();

}  // namespace

TEST_CASE("scalar polynomials") {
  CHECK((m + n).pow(2) == m * m + ScalarPoly(2) * m * n + n * n);
  CHECK(((m + n) * (ScalarPoly(2) * m + n)).divide_exact(m + n) == ScalarPoly(2) * m + n);
  CHECK_FALSE((m * m + n).divide_exact(m).has_value());
  CHECK((m - n).evaluate(3, 5) == -2);
  CHECK(ScalarPoly(-1).is_unit());
  CHECK_FALSE(ScalarPoly(2).is_unit());
  CHECK(parse_scalar("m(2m+n)") == ScalarPoly(2) * m * m + m * n);
}

TEST_CASE("commutators and map application") {
  CHECK(P("[x, y]") == P("x y - y x"));
  CHECK(P("[x, [x, y]]") == P("x^2 y - 2 x y x + y x^2"));
  // additivity and homogeneity of T
  CHECK(P("T[(x + y)^2]") == P("T[x^2] + T[x y] + T[y x] + T[y^2]"));
  CHECK(P("T[3 m x]") == P("3 m T[x]"));
  CHECK(P("T[x - x]").is_zero());
}

TEST_CASE("substitution") {
  CHECK(substitute(P("x^2"), kX, P("x + y")) == P("x^2 + x y + y x + y^2"));
  CHECK(substitute(P("T[x] y"), kY, P("x y")) == P("T[x] x y"));
  Substitution swap{{kX, P("y")}, {kY, P("x")}};
  CHECK(substitute(P("x T[y]"), swap) == P("y T[x]"));
  CHECK(substitute(P("T[x^2]"), kX, P("2 x")) == P("4 T[x^2]"));
}

TEST_CASE("even part in a generator") {
  CHECK(polarize_even(P("(x + y)^2"), kX) == P("x^2 + y^2"));
  CHECK(polarize_even(P("T[x] y + T[x^2] y"), kX) == P("T[x^2] y"));
  CHECK(degree_in(P("x y x").terms().begin()->first, kX) == 2);
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("6 x y - 3 m y x"), 3) == P("2 x y - m y x"));
  CHECK(exact_divide(P("(m^2 - n^2) T[x]"), m - n) == P("(m + n) T[x]"));
  CHECK_THROWS_AS(exact_divide(P("5 x y"), 2), DivisionError);
  CHECK_THROWS_AS(exact_divide(P("m x + y"), m), DivisionError);
}

TEST_CASE("two-sided rule for T0") {
  RewriteRules r;
  r.two_sided_t0 = true;
  CHECK(normalize(P("x T0[y]"), r) == normalize(P("T0[x] y"), r));
  CHECK(normalize(P("x T0[y]"), r) == normalize(P("T0[x y]"), r));
  CHECK(normalize(P("T0[x y] - x T0[y]"), r).is_zero());
  // without the rule the atoms stay apart
  CHECK_FALSE(normalize(P("T0[x y] - x T0[y]"), RewriteRules{}).is_zero());
}

TEST_CASE("central derivation rules") {
  RewriteRules r;
  r.central_d = true;
  CHECK(normalize(P("D[x] y - y D[x]"), r).is_zero());
  CHECK(normalize(P("D[x y] - D[x] y - x D[y]"), r).is_zero());
  CHECK(normalize(P("D[x^2] - 2 x D[x]"), r).is_zero());
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("Q[x]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[x, y"), ParseError);
}
