#pragma once

// Noncommutative polynomials over Z[m,n] whose monomials mix ring generators
// with applications of additive maps.

#include "jordan/scalar_poly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jordan {

/// A universally quantified ring element, named by a single lowercase letter.
struct Generator {
  char name = 'x';

  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;
};

inline constexpr Generator kX{'x'};
inline constexpr Generator kY{'y'};

enum class MapSym : std::uint8_t { T, T0, D, F, Fc };

enum class MapKind : std::uint8_t { opaque, two_sided_centralizer, central_derivation };

MapKind kind_of(MapSym s);
std::string_view name_of(MapSym s);
std::optional<MapSym> map_from_name(std::string_view name);

class Atom;
using Monomial = std::vector<Atom>;

/// Length-lexicographic order on atom sequences.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) < 0; }
};

/// Either a generator or a map applied to a nonempty monomial.
/// Generators order before applications; applications order by (symbol, argument).
class Atom {
 public:
  static Atom gen(Generator g);
  static Atom app(MapSym s, Monomial argument);

  bool is_gen() const { return !sym_.has_value(); }
  bool is_app() const { return sym_.has_value(); }
  Generator generator() const { return gen_; }
  MapSym map() const { return *sym_; }
  const Monomial& argument() const { return arg_; }

  std::strong_ordering operator<=>(const Atom& o) const;
  bool operator==(const Atom& o) const { return (*this <=> o) == 0; }

 private:
  Generator gen_{};
  std::optional<MapSym> sym_;
  Monomial arg_;
};

/// Raised when an operation meets a nested map application it has no rule for.
class NestingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by exact_divide; carries the first monomial whose coefficient fails.
class DivisionError : public std::runtime_error {
 public:
  DivisionError(const std::string& what, Monomial failing) : std::runtime_error(what), failing_(std::move(failing)) {}
  const Monomial& failing_monomial() const { return failing_; }

 private:
  Monomial failing_;
};

class NCPoly {
 public:
  using Terms = std::map<Monomial, ScalarPoly, MonomialLess>;

  NCPoly() = default;

  static NCPoly generator(Generator g);
  static NCPoly from_monomial(Monomial w, ScalarPoly c = ScalarPoly(1));
  /// Applies `s` to every monomial of `arg`, expanding by additivity and homogeneity.
  static NCPoly apply(MapSym s, const NCPoly& arg);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of `w` (zero when absent).
  ScalarPoly coefficient(const Monomial& w) const;

  void add_term(const Monomial& w, const ScalarPoly& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const ScalarPoly& c, const NCPoly& p);

  NCPoly pow(std::uint32_t k) const;

  bool operator==(const NCPoly&) const = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Free-algebra operations.
inline NCPoly add(const NCPoly& p, const NCPoly& q) { return p + q; }
inline NCPoly scale(const ScalarPoly& c, const NCPoly& p) { return c * p; }
inline NCPoly mul(const NCPoly& p, const NCPoly& q) { return p * q; }
NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// Simultaneous generator replacement.
using Substitution = std::map<Generator, NCPoly>;

/// Replaces every occurrence of the substituted generators, including those
/// inside map arguments. Throws NestingError when a replacement contains a map
/// application whose own argument mentions the generator being replaced.
NCPoly substitute(const NCPoly& p, const Substitution& sigma);
NCPoly substitute(const NCPoly& p, Generator g, const NCPoly& r);

/// Occurrences of `g` in `w`, counting occurrences inside map arguments.
std::uint32_t degree_in(const Monomial& w, Generator g);

/// Keeps the monomials of even g-degree: (p + p|g->-g) / 2.
NCPoly polarize_even(const NCPoly& p, Generator g);

/// Divides every coefficient exactly by `c`; throws DivisionError otherwise.
NCPoly exact_divide(const NCPoly& p, const ScalarPoly& c);

/// Which structural rewrite rules are in force.
struct RewriteRules {
  /// u*T0(w)*v -> T0(u w v)
  bool two_sided_t0 = false;
  /// Leibniz expansion of D and centrality of D atoms.
  bool central_d = false;

  bool operator==(const RewriteRules&) const = default;
};

/// Rewrites to normal form under the enabled rules. With central_d the
/// result can depend on rewrite order; see the d-central-derivation license.
NCPoly normalize(const NCPoly& p, const RewriteRules& rules);

std::string monomial_to_string(const Monomial& w);

}  // namespace jordan
