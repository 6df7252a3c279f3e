#pragma once

// Brute-force solutions of the defining laws, straight from the definitions.

#include "jordan/functional.hpp"

#include <functional>
#include <set>

namespace jordan::oracle {

inline std::int64_t md(std::int64_t a, std::int64_t d) { return ((a % d) + d) % d; }

/// Every homomorphism of the additive group, by brute force.
inline std::vector<AddMap> all_hom_maps(const FinRing& r) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j) cells.emplace_back(i, j);
  std::vector<AddMap> out;
  AddMap f = AddMap::zero(r);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      out.push_back(f);
      return;
    }
    const auto [i, j] = cells[c];
    for (std::int64_t v = 0; v < r.modulus(i); ++v) {
      if (md(v * r.modulus(j), r.modulus(i)) != 0) continue;
      f.m[i][j] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

/// (m+n) U(x^2) - b U(x) x - c x V(x) == 0 for all x, evaluated directly.
inline bool law_everywhere(const FinRing& r, const AddMap& u, const AddMap& v, std::int64_t a, std::int64_t b,
                    std::int64_t c) {
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    const auto x = r.element(i);
    auto lhs = r.scale(a, u.apply(r, r.mul(x, x)));
    auto rhs = r.add(r.scale(b, r.mul(u.apply(r, x), x)), r.scale(c, r.mul(x, v.apply(r, x))));
    if (lhs != rhs) return false;
  }
  return true;
}

inline std::set<Solution> brute_force(const FinRing& r, const LawSpec& s) {
  const bool der = s.law == Law::derivation || s.law == Law::gen_derivation;
  const std::int64_t a = s.m + s.n, b = der ? 2 * s.m : s.m, c = der ? 2 * s.n : s.n;
  const auto maps = all_hom_maps(r);
  std::set<Solution> out;
  if (!is_generalized(s.law)) {
    for (const auto& f : maps)
      if (law_everywhere(r, f, f, a, b, c)) out.insert({f, {}});
    return out;
  }
  std::vector<AddMap> bases;
  for (const auto& g : maps)
    if (law_everywhere(r, g, g, a, b, c)) bases.push_back(g);
  for (const auto& g : bases)
    for (const auto& f : maps)
      if (law_everywhere(r, f, g, a, b, c)) out.insert({f, g});
  return out;
}

}  // namespace jordan::oracle
