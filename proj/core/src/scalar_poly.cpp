#include "jordan/scalar_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace jordan {

ScalarPoly::ScalarPoly(long long c) {
  if (c != 0) terms_.emplace(Exponent{}, BigInt(c));
}

ScalarPoly::ScalarPoly(BigInt c) {
  if (c != 0) terms_.emplace(Exponent{}, std::move(c));
}

ScalarPoly ScalarPoly::m() { return monomial(1, {1, 0}); }
ScalarPoly ScalarPoly::n() { return monomial(1, {0, 1}); }

ScalarPoly ScalarPoly::monomial(BigInt c, Exponent e) {
  ScalarPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

bool ScalarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

BigInt ScalarPoly::constant_value() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool ScalarPoly::is_unit() const {
  if (!is_constant() || is_zero()) return false;
  const BigInt& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

std::uint32_t ScalarPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.m + e.n);
  return d;
}

std::pair<Exponent, BigInt> ScalarPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  const auto& [e, c] = *terms_.rbegin();
  return {e, c};
}

void ScalarPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.m + eb.m, ea.n + eb.n}, ca * cb);
  return r;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) { return *this = *this * o; }

ScalarPoly ScalarPoly::pow(std::uint32_t k) const {
  ScalarPoly result(1);
  ScalarPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<ScalarPoly> ScalarPoly::divide_exact(const ScalarPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  ScalarPoly remainder = *this;
  ScalarPoly quotient;
  const auto [de, dc] = divisor.leading();
  // Lex long division; in Z[m,n] an exact divisor's leading term always
  // divides the remainder's leading term.
  while (!remainder.is_zero()) {
    const auto [re, rc] = remainder.leading();
    if (re.m < de.m || re.n < de.n) return std::nullopt;
    if (rc % dc != 0) return std::nullopt;
    ScalarPoly q = monomial(rc / dc, {re.m - de.m, re.n - de.n});
    remainder -= q * divisor;
    quotient += q;
  }
  return quotient;
}

BigInt ScalarPoly::evaluate(const BigInt& m, const BigInt& n) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt t = c;
    for (std::uint32_t i = 0; i < e.m; ++i) t *= m;
    for (std::uint32_t i = 0; i < e.n; ++i) t *= n;
    total += t;
  }
  return total;
}

std::string ScalarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.m > 0 || e.n > 0;
    bool wrote = false;
    if (mag != 1 || !has_var) {
      os << mag;
      wrote = true;
    }
    auto var = [&](char name, std::uint32_t k) {
      if (k == 0) return;
      if (wrote) os << "*";
      os << name;
      if (k > 1) os << "^" << k;
      wrote = true;
    };
    var('m', e.m);
    var('n', e.n);
  }
  return os.str();
}

std::strong_ordering ScalarPoly::compare(const ScalarPoly& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    if (a->second != b->second) return a->second < b->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a == terms_.end() && b == o.terms_.end()) return std::strong_ordering::equal;
  return a == terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace jordan
