#pragma once

// Exact bivariate integer polynomials in the symbolic parameters m and n.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace jordan {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (power of m, power of n).
struct Exponent {
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;
};

/// Element of Z[m, n]. Zero coefficients are never stored.
class ScalarPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  ScalarPoly() = default;
  ScalarPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit ScalarPoly(BigInt c);

  static ScalarPoly m();
  static ScalarPoly n();
  static ScalarPoly monomial(BigInt c, Exponent e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is an integer constant (including zero).
  bool is_constant() const;
  /// The constant value; only meaningful when is_constant().
  BigInt constant_value() const;
  bool is_unit() const;  // +1 or -1

  std::uint32_t total_degree() const;
  /// Lex-leading term (m before n); requires !is_zero().
  std::pair<Exponent, BigInt> leading() const;

  ScalarPoly operator-() const;
  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(const ScalarPoly& o);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

  ScalarPoly pow(std::uint32_t k) const;

  /// Exact quotient if `divisor` divides *this in Z[m, n], otherwise nullopt.
  std::optional<ScalarPoly> divide_exact(const ScalarPoly& divisor) const;

  BigInt evaluate(const BigInt& m, const BigInt& n) const;

  /// Human/parser-readable form, e.g. "2*m^2 + m*n - 3".
  std::string to_string() const;

  bool operator==(const ScalarPoly&) const = default;
  auto operator<=>(const ScalarPoly& o) const { return compare(o); }

 private:
  std::strong_ordering compare(const ScalarPoly& o) const;
  void add_term(const Exponent& e, const BigInt& c);

  Terms terms_;
};

}  // namespace jordan
