#include "doctest.h"

#include "jordan/functional.hpp"
#include "oracle/brute_force.hpp"

#include <set>

using namespace jordan;
using namespace jordan::oracle;

namespace {

const std::string kRings = std::string(JORDAN_SOURCE_DIR) + "/data/rings/";

/// Solution count over a ring whose moduli all equal the prime p, from the
/// rank of the constraint matrix over F_p.
std::uint64_t field_count(const FinRing& r, const LawSpec& s, std::int64_t p) {
  const int k = r.rank();
  const int slots = is_generalized(s.law) ? 2 : 1;
  const int n = slots * k * k;
  auto unit = [&](int c) {
    Solution sol{AddMap::zero(r), slots == 2 ? AddMap::zero(r) : AddMap{}};
    (c < k * k ? sol.map : sol.base).m[(c % (k * k)) / k][c % k] = 1;
    return sol;
  };
  std::vector<std::vector<std::int64_t>> basis;  // reduced rows, pivot = first nonzero
  std::vector<int> pivots;
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    for (a = md(a, p); e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  std::vector<Solution> units;
  for (int c = 0; c < n; ++c) units.push_back(unit(c));
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    const auto x = r.element(i);
    std::vector<RingElem> cols;
    for (const auto& u : units) cols.push_back(law_residual(r, s, u, x));
    for (std::size_t comp = 0; comp < cols[0].size(); ++comp) {
      std::vector<std::int64_t> row(n);
      for (int c = 0; c < n; ++c) row[c] = cols[c][comp];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::int64_t f = row[pivots[b]];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) row[c] = md(row[c] - f * basis[b][c], p);
      }
      int piv = -1;
      for (int c = 0; c < n && piv < 0; ++c)
        if (row[c] != 0) piv = c;
      if (piv < 0) continue;
      const std::int64_t iv = inv(row[piv]);
      for (auto& e : row) e = e * iv % p;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::int64_t f = basis[b][piv];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) basis[b][c] = md(basis[b][c] - f * row[c], p);
      }
      basis.push_back(row);
      pivots.push_back(piv);
    }
  }
  std::uint64_t count = 1;
  for (std::size_t i = basis.size(); i < static_cast<std::size_t>(n); ++i) count *= static_cast<std::uint64_t>(p);
  return count;
}

std::set<Solution> as_set(const SolutionSet& s) { return {s.solutions.begin(), s.solutions.end()}; }

const std::vector<Law> kLaws{Law::centralizer, Law::gen_centralizer, Law::derivation, Law::gen_derivation};

}  // namespace

TEST_CASE("Z5 centralizers are the scalar multiples") {
  auto r = FinRing::Zn(5);
  auto s = solve_identity(r, {Law::centralizer, 1, 1});
  CHECK(s.count == "5");
  CHECK(s.complete);
  std::set<Solution> expected;
  for (std::int64_t c = 0; c < 5; ++c) expected.insert({AddMap::from_function(r, {{c}}), {}});
  CHECK(as_set(s) == expected);
}

TEST_CASE("solver agrees with brute force on small rings") {
  std::vector<FinRing> rings{FinRing::Zn(4), FinRing::Zn(9), FinRing::Zn(6),
                             FinRing::FromTable({4}, {{{0}}}, "Z4-zero"),
                             FinRing::FromTable({2, 4}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}, "Z2+Z4"),
                             FinRing::FromTable({2, 4}, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}}, "Z2+Z4-zero"),
                             FinRing::FromTable({2, 4}, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 2}}}, "Z2+Z4-twisted")};
  for (const auto& small : load_rings(kRings + "small_tables.json")) rings.push_back(small);
  for (const auto& r : rings)
    for (auto law : kLaws)
      for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
        CAPTURE(r.name());
        CAPTURE(name_of(law));
        CAPTURE(m);
        CAPTURE(n);
        const LawSpec spec{law, m, n};
        const auto s = solve_identity(r, spec);
        CHECK(as_set(s) == brute_force(r, spec));
        CHECK(std::to_string(s.solutions.size()) == s.count);
      }
}

TEST_CASE("solution sets are groups") {
  for (const auto& r : {FinRing::Zn(12), FinRing::MatRing(2, 2), FinRing::FromTable({2, 4}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}})})
    for (auto law : kLaws) {
      const LawSpec spec{law, 1, 2};
      const auto s = solve_identity(r, spec);
      const auto set = as_set(s);
      const Solution zero{AddMap::zero(r), is_generalized(law) ? AddMap::zero(r) : AddMap{}};
      CHECK(set.count(zero) == 1);
      for (const auto& a : s.solutions) {
        CHECK(a.map.is_homomorphism(r));
        CHECK(satisfies_law(r, spec, a));
        for (const auto& b : s.solutions) {
          Solution sum{a.map.plus(r, b.map), is_generalized(law) ? a.base.plus(r, b.base) : AddMap{}};
          REQUIRE(set.count(sum) == 1);
        }
      }
    }
}

TEST_CASE("counts over prime fields match an independent rank computation") {
  auto m7 = FinRing::MatRing(2, 7);
  const LawSpec gen{Law::gen_centralizer, 1, 2};
  const auto s = solve_identity(m7, gen);
  CHECK(s.count == std::to_string(field_count(m7, gen, 7)));
  CHECK(s.count == "7");
  for (const auto& sol : s.solutions) {
    CHECK(sol.map == sol.base);
    CHECK(verify_two_sided(m7, sol.map));
  }

  auto m5 = FinRing::MatRing(2, 5);
  for (auto law : kLaws)
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
      CAPTURE(name_of(law));
      CAPTURE(m);
      CAPTURE(n);
      const LawSpec spec{law, m, n};
      CHECK(solve_identity(m5, spec).count == std::to_string(field_count(m5, spec, 5)));
    }
}

TEST_CASE("elementary divisors of the solution group") {
  auto r = FinRing::FromTable({2, 4}, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  const auto s = solve_identity(r, {Law::centralizer, 1, 1});
  CHECK(s.count == "32");
  CHECK(s.elementary_divisors == std::vector<std::string>{"2", "2", "2", "4"});
  CHECK(solve_identity(FinRing::Zn(5), {Law::centralizer, 1, 1}).elementary_divisors ==
        std::vector<std::string>{"5"});
}

TEST_CASE("enumeration cutoff returns generators and count") {
  Bounds b;
  b.max_solutions = 10;
  auto r = FinRing::FromTable({2, 4}, {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  const auto s = solve_identity(r, {Law::centralizer, 1, 1}, b);
  CHECK_FALSE(s.complete);
  CHECK(s.count == "32");
  CHECK(s.solutions.empty());
  CHECK(s.generators.size() == 4);
  b.element_scan = 4;
  CHECK_THROWS_AS(solve_identity(r, {Law::centralizer, 1, 1}, b), BoundsError);
  CHECK_THROWS_AS(solve_identity(r, {Law::centralizer, 0, 1}), std::invalid_argument);
}

TEST_CASE("theorem checks") {
  auto z4 = check_theorem(FinRing::Zn(4), {Law::gen_centralizer, 1, 1});
  CHECK(z4.verdict == "NOT-CLAIMED");
  CHECK_FALSE(z4.hypotheses.at("semiprime"));

  auto m7 = check_theorem(FinRing::MatRing(2, 7), {Law::gen_centralizer, 1, 2});
  CHECK(m7.verdict == "VERIFIED");
  CHECK(m7.torsion == 24);
  CHECK(m7.count == "7");

  auto der = check_theorem(FinRing::MatRing(2, 5), {Law::derivation, 1, 2});
  CHECK(der.verdict == "VERIFIED");
  CHECK(der.count == "1");

  // m + n = 5: the hypothesis fails and non-two-sided solutions exist
  auto m5 = check_theorem(FinRing::MatRing(2, 5), {Law::gen_centralizer, 2, 3});
  CHECK(m5.verdict == "NOT-CLAIMED");
  CHECK_FALSE(m5.conclusion);
  CHECK_FALSE(m5.witnesses.empty());
  CHECK(to_json(m5).find("\"witnesses\"") != std::string::npos);

  auto equal = check_theorem(FinRing::Zn(5), {Law::gen_derivation, 2, 2});
  CHECK(equal.torsion == 0);
  CHECK(equal.verdict == "NOT-CLAIMED");
}

TEST_CASE("hypothesis torsion factors") {
  CHECK(hypothesis_torsion({Law::gen_centralizer, 1, 2}) == 24);
  CHECK(hypothesis_torsion({Law::centralizer, 1, 2}) == 6);
  CHECK(hypothesis_torsion({Law::derivation, 3, 1}) == 24);
  CHECK(hypothesis_torsion({Law::gen_derivation, 1, 3}) == 24);
}

TEST_CASE("lemma cross-check") {
  auto z5 = FinRing::Zn(5);
  const LawSpec c11{Law::centralizer, 1, 1};
  CHECK(cross_check_lemma(z5, c11, {AddMap::from_function(z5, {{2}}), {}}));
  CHECK(cross_check_lemma(z5, c11, {AddMap::zero(z5), {}}));
  auto m5 = FinRing::MatRing(2, 5);
  AddMap junk = AddMap::zero(m5);
  junk.m[0][1] = 1;
  CHECK_THROWS_AS(cross_check_lemma(m5, c11, {junk, {}}), std::invalid_argument);

  // (1,1)-Jordan derivations on upper triangular matrices include the inner ones
  auto t = load_ring(kRings + "upper_triangular_Z3.json");
  const LawSpec d11{Law::gen_derivation, 1, 1};
  const auto s = solve_identity(t, d11);
  CHECK(s.solutions.size() > 1);
  for (const auto& sol : s.solutions) CHECK(cross_check_lemma(t, d11, sol));
}

TEST_CASE("family search") {
  auto zn = search_family({Family::Kind::Zn, 12, {}}, {Law::gen_centralizer, 1, 1});
  CHECK(zn.size() == 11);
  auto mat = search_family({Family::Kind::Mat2, 0, {3, 5, 7}}, {Law::gen_centralizer, 1, 2});
  REQUIRE(mat.size() == 3);
  CHECK_FALSE(mat[0].hypotheses.at("torsion-free"));
  CHECK(mat[1].hypotheses.at("torsion-free"));
  CHECK(search_family({Family::Kind::Zn, 1, {}}, {Law::centralizer, 1, 1}).empty());

  const Family prods{Family::Kind::Products, 3, {}};
  CHECK(family_members(prods).size() == 3 + 4);
  const LawSpec spec{Law::gen_derivation, 1, 2};
  CHECK(to_json(search_family(prods, spec, {}, 1)) == to_json(search_family(prods, spec, {}, 4)));
}
