#include "jordan/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace jordan {

MapKind kind_of(MapSym s) {
  switch (s) {
    case MapSym::T0:
      return MapKind::two_sided_centralizer;
    case MapSym::D:
      return MapKind::central_derivation;
    default:
      return MapKind::opaque;
  }
}

std::string_view name_of(MapSym s) {
  switch (s) {
    case MapSym::T:
      return "T";
    case MapSym::T0:
      return "T0";
    case MapSym::D:
      return "D";
    case MapSym::F:
      return "F";
    case MapSym::Fc:
      return "Fc";
  }
  return "?";
}

std::optional<MapSym> map_from_name(std::string_view name) {
  for (MapSym s : {MapSym::T, MapSym::T0, MapSym::D, MapSym::F, MapSym::Fc})
    if (name_of(s) == name) return s;
  return std::nullopt;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Atom Atom::gen(Generator g) {
  Atom a;
  a.gen_ = g;
  return a;
}

Atom Atom::app(MapSym s, Monomial argument) {
  if (argument.empty()) throw std::invalid_argument("map argument must be a nonempty monomial");
  Atom a;
  a.sym_ = s;
  a.arg_ = std::move(argument);
  return a;
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (is_gen() != o.is_gen()) return is_gen() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_gen()) return gen_ <=> o.gen_;
  if (auto c = *sym_ <=> *o.sym_; c != 0) return c;
  return compare_monomials(arg_, o.arg_);
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::generator(Generator g) { return from_monomial({Atom::gen(g)}); }

NCPoly NCPoly::from_monomial(Monomial w, ScalarPoly c) {
  if (w.empty()) throw std::invalid_argument("monomials are nonempty: there is no unit element");
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

NCPoly NCPoly::apply(MapSym s, const NCPoly& arg) {
  NCPoly r;
  for (const auto& [w, c] : arg.terms_) r.add_term({Atom::app(s, w)}, c);
  return r;
}

ScalarPoly NCPoly::coefficient(const Monomial& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ScalarPoly() : it->second;
}

void NCPoly::add_term(const Monomial& w, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Monomial w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly operator*(const ScalarPoly& c, const NCPoly& p) {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : p.terms_) r.add_term(w, c * k);
  return r;
}

NCPoly NCPoly::pow(std::uint32_t k) const {
  if (k == 0) throw std::invalid_argument("zeroth power needs a unit element");
  NCPoly r = *this;
  for (std::uint32_t i = 1; i < k; ++i) r = r * *this;
  return r;
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

// ---------------------------------------------------------------------------
// Substitution

namespace {

bool mentions(const Monomial& w, Generator g) {
  for (const Atom& a : w) {
    if (a.is_gen() ? a.generator() == g : mentions(a.argument(), g)) return true;
  }
  return false;
}

void check_nesting(Generator g, const NCPoly& r) {
  for (const auto& [w, c] : r.terms()) {
    for (const Atom& a : w) {
      if (a.is_app() && mentions(a.argument(), g)) {
        throw NestingError("substituting " + std::string(1, g.name) + " -> ... would nest: replacement contains " +
                           monomial_to_string({a}) + ", whose argument mentions " + std::string(1, g.name));
      }
    }
  }
}

NCPoly substitute_monomial(const Monomial& w, const Substitution& sigma);

NCPoly substitute_atom(const Atom& a, const Substitution& sigma) {
  if (a.is_gen()) {
    auto it = sigma.find(a.generator());
    return it == sigma.end() ? NCPoly::from_monomial({a}) : it->second;
  }
  return NCPoly::apply(a.map(), substitute_monomial(a.argument(), sigma));
}

NCPoly substitute_monomial(const Monomial& w, const Substitution& sigma) {
  NCPoly acc = substitute_atom(w.front(), sigma);
  for (std::size_t i = 1; i < w.size(); ++i) acc = acc * substitute_atom(w[i], sigma);
  return acc;
}

}  // namespace

NCPoly substitute(const NCPoly& p, const Substitution& sigma) {
  for (const auto& [g, r] : sigma) check_nesting(g, r);
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += c * substitute_monomial(w, sigma);
  return out;
}

NCPoly substitute(const NCPoly& p, Generator g, const NCPoly& r) { return substitute(p, Substitution{{g, r}}); }

std::uint32_t degree_in(const Monomial& w, Generator g) {
  std::uint32_t d = 0;
  for (const Atom& a : w) d += a.is_gen() ? (a.generator() == g ? 1U : 0U) : degree_in(a.argument(), g);
  return d;
}

NCPoly polarize_even(const NCPoly& p, Generator g) {
  NCPoly out;
  for (const auto& [w, c] : p.terms())
    if (degree_in(w, g) % 2 == 0) out.add_term(w, c);
  return out;
}

NCPoly exact_divide(const NCPoly& p, const ScalarPoly& c) {
  if (c.is_zero()) throw std::domain_error("exact_divide by zero");
  NCPoly out;
  for (const auto& [w, k] : p.terms()) {
    auto q = k.divide_exact(c);
    if (!q) {
      throw DivisionError("coefficient " + k.to_string() + " of " + monomial_to_string(w) + " is not divisible by " +
                              c.to_string(),
                          w);
    }
    out.add_term(w, *q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

class Normalizer {
 public:
  explicit Normalizer(const RewriteRules& rules) : rules_(rules) {}

  NCPoly poly(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) out += c * monomial(w);
    return out;
  }

  NCPoly monomial(const Monomial& w) {
    // Atoms first (arguments, Leibniz), then the product, then the word rules.
    NCPoly expanded = atom(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) expanded = expanded * atom(w[i]);
    NCPoly out;
    for (const auto& [v, c] : expanded.terms()) out += c * word_rules(v);
    return out;
  }

 private:
  NCPoly atom(const Atom& a) {
    if (a.is_gen()) return NCPoly::from_monomial({a});
    NCPoly arg = poly(NCPoly::from_monomial(a.argument()));
    if (a.map() == MapSym::D && rules_.central_d) return leibniz(arg);
    return NCPoly::apply(a.map(), arg);
  }

  // D(w1...wk) = sum_i w1..w(i-1) D(wi) w(i+1)..wk; arguments are already normal.
  NCPoly leibniz(const NCPoly& arg) {
    NCPoly out;
    for (const auto& [w, c] : arg.terms()) {
      if (w.size() == 1) {
        out += c * word_rules({Atom::app(MapSym::D, w)});
        continue;
      }
      for (const Atom& a : w) {
        if (a.is_app()) {
          throw NestingError("no Leibniz rule for D over a word containing " + monomial_to_string({a}) + " in D[" +
                             monomial_to_string(w) + "]");
        }
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        Monomial piece(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        piece.push_back(Atom::app(MapSym::D, {w[i]}));
        piece.insert(piece.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        out += c * word_rules(piece);
      }
    }
    return out;
  }

  // Rules acting on a product of already-normal atoms.
  NCPoly word_rules(const Monomial& w) {
    if (rules_.two_sided_t0) {
      auto it = std::find_if(w.begin(), w.end(), [](const Atom& a) { return a.is_app() && a.map() == MapSym::T0; });
      if (it != w.end()) {
        Monomial inner(w.begin(), it);
        inner.insert(inner.end(), it->argument().begin(), it->argument().end());
        inner.insert(inner.end(), it + 1, w.end());
        if (w.size() == 1) return NCPoly::from_monomial(w);
        return NCPoly::apply(MapSym::T0, monomial(inner));
      }
    }
    if (rules_.central_d) {
      Monomial rest;
      Monomial ds;
      for (const Atom& a : w) (a.is_app() && a.map() == MapSym::D ? ds : rest).push_back(a);
      if (!ds.empty() && !rest.empty()) {
        std::sort(ds.begin(), ds.end());
        rest.insert(rest.end(), ds.begin(), ds.end());
        return NCPoly::from_monomial(std::move(rest));
      }
      std::sort(ds.begin(), ds.end());
      return NCPoly::from_monomial(ds.empty() ? w : ds);
    }
    return NCPoly::from_monomial(w);
  }

  RewriteRules rules_;
};

}  // namespace

NCPoly normalize(const NCPoly& p, const RewriteRules& rules) {
  if (!rules.two_sided_t0 && !rules.central_d) return p;
  return Normalizer(rules).poly(p);
}

// ---------------------------------------------------------------------------
// Printing

std::string monomial_to_string(const Monomial& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    if (i > 0) os << "*";
    const Atom& a = w[i];
    if (a.is_gen()) {
      std::size_t run = 1;
      while (i + run < w.size() && w[i + run] == a) ++run;
      os << a.generator().name;
      if (run > 1) os << "^" << run;
      i += run;
    } else {
      os << name_of(a.map()) << "[" << monomial_to_string(a.argument()) << "]";
      ++i;
    }
  }
  return os.str();
}

namespace {

bool looks_negative(const ScalarPoly& c) { return !c.is_zero() && c.leading().second < 0; }

std::string coefficient_prefix(const ScalarPoly& c) {
  if (c.is_unit()) return "";
  if (c.is_constant() || c.terms().size() == 1) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool neg = looks_negative(c);
    ScalarPoly mag = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    os << coefficient_prefix(mag) << monomial_to_string(w);
  }
  return os.str();
}

}  // namespace jordan
