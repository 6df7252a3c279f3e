#pragma once

// Randomized algebraic properties of the free-algebra layer, shared by the
// property test and the acceptance binary.

#include "jordan/ncpoly.hpp"

#include <random>
#include <string>
#include <vector>

namespace jordan::props {

struct Tally {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

class RandomPoly {
 public:
  explicit RandomPoly(std::uint32_t seed) : rng_(seed) {}

  int below(int k) { return static_cast<int>(rng_() % static_cast<std::uint32_t>(k)); }

  ScalarPoly scalar() {
    const ScalarPoly m = ScalarPoly::m(), n = ScalarPoly::n();
    switch (below(6)) {
      case 0: return ScalarPoly(below(7) - 3);
      case 1: return m;
      case 2: return n;
      case 3: return m + n;
      case 4: return ScalarPoly(2) * m - n;
      default: return ScalarPoly(below(5) + 1) * m * n;
    }
  }

  // Plain words in x and y.
  NCPoly word(int len) {
    NCPoly w = NCPoly::generator(below(2) ? kX : kY);
    for (int i = 1; i < len; ++i) w = w * NCPoly::generator(below(2) ? kX : kY);
    return w;
  }

  NCPoly atomish(bool maps) {
    if (!maps || below(3)) return NCPoly::generator(below(2) ? kX : kY);
    static constexpr MapSym syms[] = {MapSym::T, MapSym::T0, MapSym::D, MapSym::F};
    return NCPoly::apply(syms[below(4)], word(1 + below(3)));
  }

  NCPoly poly(bool maps = true) {
    NCPoly p;
    const int terms = 1 + below(4);
    for (int t = 0; t < terms; ++t) {
      NCPoly mono = atomish(maps);
      const int len = 1 + below(3);
      for (int i = 1; i < len; ++i) mono = mono * atomish(maps);
      p += scalar() * mono;
    }
    return p;
  }

 private:
  std::mt19937 rng_;
};

inline void record(Tally& t, bool ok, const std::string& detail) {
  ++t.cases;
  if (!ok && t.failures++ == 0) t.first_failure = detail;
}

inline std::vector<Tally> run_properties(std::uint32_t seed, int cases) {
  RandomPoly gen(seed);
  std::vector<Tally> out;

  Tally idem{"normalize idempotent"};
  const RewriteRules combos[] = {{false, false}, {true, false}, {false, true}, {true, true}};
  for (int i = 0; i < cases; ++i) {
    const auto& rules = combos[i % 4];
    const NCPoly p = gen.poly();
    const NCPoly once = normalize(p, rules);
    record(idem, normalize(once, rules) == once, p.to_string());
  }
  out.push_back(idem);

  Tally additive{"substitution additive"};
  for (int i = 0; i < cases; ++i) {
    const NCPoly p = gen.poly(), q = gen.poly();
    Substitution sigma{{kX, gen.poly(false)}, {kY, gen.poly(false)}};
    record(additive, substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma),
           p.to_string() + " ; " + q.to_string());
  }
  out.push_back(additive);

  Tally divide{"exact_divide inverts scaling"};
  for (int i = 0; i < cases; ++i) {
    const NCPoly p = gen.poly();
    ScalarPoly c = gen.scalar();
    if (c.is_zero()) c = ScalarPoly(2);
    bool ok = false;
    try {
      ok = exact_divide(c * p, c) == p;
    } catch (const DivisionError&) {
    }
    record(divide, ok, c.to_string() + " ; " + p.to_string());
  }
  out.push_back(divide);

  Tally even{"polarize_even is the even part"};
  for (int i = 0; i < cases; ++i) {
    const NCPoly p = gen.poly();
    const NCPoly e = polarize_even(p, kX);
    bool ok = exact_divide(p + substitute(p, kX, -NCPoly::generator(kX)), 2) == e;
    for (const auto& [w, c] : e.terms()) ok = ok && degree_in(w, kX) % 2 == 0;
    record(even, ok, p.to_string());
  }
  out.push_back(even);
  return out;
}

}  // namespace jordan::props
