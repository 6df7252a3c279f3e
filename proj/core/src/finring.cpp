#include "jordan/finring.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace jordan {

namespace {

constexpr std::int64_t kMaxModulus = std::numeric_limits<std::int32_t>::max();

std::int64_t mod(std::int64_t a, std::int64_t d) {
  a %= d;
  return a < 0 ? a + d : a;
}

}  // namespace

FinRing::FinRing(std::vector<std::int64_t> moduli, std::vector<std::vector<RingElem>> mult, std::string name)
    : moduli_(std::move(moduli)), mult_(std::move(mult)), name_(std::move(name)) {
  const std::size_t k = moduli_.size();
  if (k == 0) throw RingError("ring needs at least one additive generator");
  for (auto d : moduli_)
    if (d < 2 || d > kMaxModulus) throw RingError("modulus out of range: " + std::to_string(d));
  if (mult_.size() != k) throw RingError("multiplication table has wrong number of rows");
  small_ = k <= 64 && std::all_of(moduli_.begin(), moduli_.end(), [](std::int64_t d) { return d < (1 << 16); });
  for (std::size_t i = 0; i < k; ++i) {
    if (mult_[i].size() != k) throw RingError("multiplication table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      auto& e = mult_[i][j];
      if (e.size() != k)
        throw RingError("product e" + std::to_string(i) + "*e" + std::to_string(j) + " has wrong length");
      e = reduce(e);
      for (std::size_t l = 0; l < k; ++l) {
        // d_i e_i = 0 and d_j e_j = 0 must annihilate the product.
        if (e[l] * (moduli_[i] % moduli_[l]) % moduli_[l] != 0 || e[l] * (moduli_[j] % moduli_[l]) % moduli_[l] != 0)
          throw RingError("multiplication not well defined at e" + std::to_string(i) + "*e" + std::to_string(j));
        if (e[l] != 0) terms_.push_back({int(i), int(j), int(l), e[l]});
      }
    }
  }
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      for (int l = 0; l < rank(); ++l)
        if (mul(mul(basis(i), basis(j)), basis(l)) != mul(basis(i), mul(basis(j), basis(l))))
          throw RingError("multiplication not associative at basis triple (e" + std::to_string(i) + ", e" +
                          std::to_string(j) + ", e" + std::to_string(l) + ")");
  if (name_.empty()) name_ = "table";
}

FinRing FinRing::Zn(std::int64_t n) {
  return FinRing({n}, {{{1}}}, "Z" + std::to_string(n));
}

FinRing FinRing::MatRing(int k, std::int64_t n) {
  if (k < 1) throw RingError("matrix size must be positive");
  const int r = k * k;
  std::vector<std::vector<RingElem>> mult(r, std::vector<RingElem>(r, RingElem(r, 0)));
  // e_{ab} e_{cd} = [b == c] e_{ad}
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int d = 0; d < k; ++d) mult[a * k + b][b * k + d][a * k + d] = 1;
  return FinRing(std::vector<std::int64_t>(r, n), std::move(mult),
                 "M" + std::to_string(k) + "(Z" + std::to_string(n) + ")");
}

FinRing FinRing::DirectProduct(const FinRing& a, const FinRing& b) {
  const int ka = a.rank(), k = a.rank() + b.rank();
  std::vector<std::int64_t> moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  std::vector<std::vector<RingElem>> mult(k, std::vector<RingElem>(k, RingElem(k, 0)));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j)
      for (int l = 0; l < a.rank(); ++l) mult[i][j][l] = a.product_of_basis(i, j)[l];
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j)
      for (int l = 0; l < b.rank(); ++l) mult[ka + i][ka + j][ka + l] = b.product_of_basis(i, j)[l];
  return FinRing(std::move(moduli), std::move(mult), a.name() + "+" + b.name());
}

FinRing FinRing::FromTable(std::vector<std::int64_t> moduli, std::vector<std::vector<RingElem>> mult,
                           std::string name) {
  return FinRing(std::move(moduli), std::move(mult), std::move(name));
}

std::uint64_t FinRing::order() const {
  std::uint64_t n = 1;
  for (auto d : moduli_) {
    if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d))
      throw BoundsError("ring order does not fit in 64 bits");
    n *= static_cast<std::uint64_t>(d);
  }
  return n;
}

std::int64_t FinRing::characteristic() const {
  std::int64_t c = 1;
  for (auto d : moduli_) c = std::lcm(c, d);
  return c;
}

RingElem FinRing::basis(int i) const {
  RingElem e = zero();
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

RingElem FinRing::element(std::uint64_t idx) const {
  RingElem a(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    auto d = static_cast<std::uint64_t>(moduli_[i]);
    a[i] = static_cast<std::int64_t>(idx % d);
    idx /= d;
  }
  return a;
}

std::uint64_t FinRing::index_of(const RingElem& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;)
    idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(mod(a[i], moduli_[i]));
  return idx;
}

RingElem FinRing::reduce(RingElem a) const {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], moduli_[i]);
  return a;
}

RingElem FinRing::add(const RingElem& a, const RingElem& b) const {
  RingElem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod(a[i] + b[i], moduli_[i]);
  return c;
}

RingElem FinRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod(a[i] - b[i], moduli_[i]);
  return c;
}

RingElem FinRing::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem FinRing::scale(std::int64_t c, const RingElem& a) const {
  RingElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(mod(c, moduli_[i]) * a[i], moduli_[i]);
  return r;
}

void FinRing::mul_into(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
  const std::size_t k = moduli_.size();
  if (small_) {
    // Each term is below 2^48 and there are at most k^2 of them per component.
    std::fill(out, out + k, 0);
    for (const auto& t : terms_) out[t.l] += a[t.i] * b[t.j] * t.c;
    for (std::size_t l = 0; l < k; ++l) out[l] %= moduli_[l];
    return;
  }
  std::vector<unsigned __int128> acc(k, 0);
  for (const auto& t : terms_)
    acc[t.l] += static_cast<unsigned __int128>(static_cast<std::uint64_t>(a[t.i] * b[t.j])) * static_cast<std::uint64_t>(t.c);
  for (std::size_t l = 0; l < k; ++l) out[l] = static_cast<std::int64_t>(acc[l] % static_cast<std::uint64_t>(moduli_[l]));
}

RingElem FinRing::mul(const RingElem& a, const RingElem& b) const {
  RingElem c(moduli_.size());
  mul_into(a.data(), b.data(), c.data());
  return c;
}

bool FinRing::is_zero(const RingElem& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mod(a[i], moduli_[i]) != 0) return false;
  return true;
}

std::string FinRing::to_string(const RingElem& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// ---- JSON ----

namespace {

FinRing from_json_value(const nlohmann::json& j) {
  if (!j.is_object()) throw RingError("ring spec must be a JSON object");
  if (j.contains("kind")) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Zn") return FinRing::Zn(j.at("n").get<std::int64_t>());
    if (kind == "Mat") return FinRing::MatRing(j.at("k").get<int>(), j.at("p").get<std::int64_t>());
    if (kind == "product") {
      const auto& parts = j.at("of");
      if (!parts.is_array() || parts.empty()) throw RingError("product needs a non-empty \"of\" list");
      FinRing r = from_json_value(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) r = FinRing::DirectProduct(r, from_json_value(parts[i]));
      return r;
    }
    throw RingError("unknown ring kind: " + kind);
  }
  auto moduli = j.at("moduli").get<std::vector<std::int64_t>>();
  auto mult = j.at("mult").get<std::vector<std::vector<RingElem>>>();
  return FinRing::FromTable(std::move(moduli), std::move(mult), j.value("name", std::string("table")));
}

}  // namespace

namespace {

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw RingError(std::string("bad ring JSON: ") + e.what());
  }
}

FinRing named_from_json(const nlohmann::json& j) {
  try {
    FinRing r = from_json_value(j);
    return j.contains("name") && j.contains("kind") ? FinRing(r.moduli(), r.table(), j.at("name").get<std::string>())
                                                    : r;
  } catch (const nlohmann::json::exception& e) {
    throw RingError(std::string("bad ring spec: ") + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FinRing ring_from_json(const std::string& text) { return named_from_json(parse_json(text)); }

FinRing load_ring(const std::string& path) { return ring_from_json(slurp(path)); }

std::vector<FinRing> load_rings(const std::string& path) {
  const auto j = parse_json(slurp(path));
  std::vector<FinRing> rings;
  if (!j.is_array()) {
    rings.push_back(named_from_json(j));
    return rings;
  }
  for (const auto& e : j) rings.push_back(named_from_json(e));
  return rings;
}

std::string ring_to_json(const FinRing& r) {
  nlohmann::json j;
  j["name"] = r.name();
  j["moduli"] = r.moduli();
  j["mult"] = r.table();
  return j.dump();
}

// ---- predicates ----

namespace {

std::uint64_t checked_order(const FinRing& r, std::uint64_t bound, const char* what) {
  const auto n = r.order();
  if (n > bound)
    throw BoundsError(std::string(what) + ": ring of order " + std::to_string(n) + " exceeds bound " +
                      std::to_string(bound));
  return n;
}

/// Quantifier range for an additive argument: every element when the pair
/// scan fits, otherwise the additive generators.
std::vector<RingElem> additive_range(const FinRing& r, const Bounds& b) {
  std::vector<RingElem> xs;
  if (r.order() <= b.pair_scan) {
    for (std::uint64_t i = 0; i < r.order(); ++i) xs.push_back(r.element(i));
  } else {
    for (int i = 0; i < r.rank(); ++i) xs.push_back(r.basis(i));
  }
  return xs;
}

}  // namespace

bool is_semiprime(const FinRing& r, const Bounds& b) {
  const auto n = checked_order(r, b.element_scan, "is_semiprime");
  const auto xs = additive_range(r, b);
  RingElem ax(r.rank()), axa(r.rank());
  for (std::uint64_t i = 1; i < n; ++i) {
    const RingElem a = r.element(i);
    bool killed = true;
    for (const auto& x : xs) {
      r.mul_into(a.data(), x.data(), ax.data());
      r.mul_into(ax.data(), a.data(), axa.data());
      if (!r.is_zero(axa)) {
        killed = false;
        break;
      }
    }
    if (killed) return false;
  }
  return true;
}

bool is_prime(const FinRing& r, const Bounds& b) {
  const auto n = r.order();
  std::vector<RingElem> xs;
  if (n <= b.triple_scan) {
    for (std::uint64_t i = 0; i < n; ++i) xs.push_back(r.element(i));
  } else {
    checked_order(r, b.pair_scan, "is_prime");
    for (int i = 0; i < r.rank(); ++i) xs.push_back(r.basis(i));
  }
  RingElem ax(r.rank()), axb(r.rank());
  for (std::uint64_t i = 1; i < n; ++i) {
    const RingElem a = r.element(i);
    std::vector<RingElem> ar;
    for (const auto& x : xs) {
      r.mul_into(a.data(), x.data(), ax.data());
      if (!r.is_zero(ax)) ar.push_back(ax);
    }
    for (std::uint64_t j = 1; j < n; ++j) {
      const RingElem bb = r.element(j);
      bool killed = true;
      for (const auto& y : ar) {
        r.mul_into(y.data(), bb.data(), axb.data());
        if (!r.is_zero(axb)) {
          killed = false;
          break;
        }
      }
      if (killed) return false;
    }
  }
  return true;
}

bool is_torsion_free(const FinRing& r, std::int64_t t, const Bounds& b) {
  bool coprime = true;
  for (auto d : r.moduli()) coprime = coprime && std::gcd(t, d) == 1;
  if (r.order() > b.element_scan) return coprime;
  bool injective = true;
  for (std::uint64_t i = 1; i < r.order() && injective; ++i) injective = !r.is_zero(r.scale(t, r.element(i)));
  if (injective != coprime) throw std::logic_error("torsion scan disagrees with gcd test");
  return injective;
}

std::vector<RingElem> center(const FinRing& r, const Bounds& b) {
  const auto n = checked_order(r, b.element_scan, "center");
  const auto xs = additive_range(r, b);
  std::vector<RingElem> z;
  RingElem ax(r.rank()), xa(r.rank());
  for (std::uint64_t i = 0; i < n; ++i) {
    const RingElem a = r.element(i);
    bool central = true;
    for (const auto& x : xs) {
      r.mul_into(a.data(), x.data(), ax.data());
      r.mul_into(x.data(), a.data(), xa.data());
      if (ax != xa) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return z;
}

// ---- additive maps ----

AddMap AddMap::zero(const FinRing& r) {
  return {std::vector<std::vector<std::int64_t>>(r.rank(), std::vector<std::int64_t>(r.rank(), 0))};
}

AddMap AddMap::identity(const FinRing& r) {
  AddMap f = zero(r);
  for (int i = 0; i < r.rank(); ++i) f.m[i][i] = 1;
  return f;
}

AddMap AddMap::from_function(const FinRing& r, const std::vector<RingElem>& basis_images) {
  AddMap f = zero(r);
  for (int j = 0; j < r.rank(); ++j)
    for (int i = 0; i < r.rank(); ++i) f.m[i][j] = mod(basis_images[j][i], r.modulus(i));
  return f;
}

RingElem AddMap::apply(const FinRing& r, const RingElem& a) const {
  RingElem out(r.rank(), 0);
  for (int i = 0; i < r.rank(); ++i) {
    const std::int64_t d = r.modulus(i);
    std::int64_t s = 0;
    for (int j = 0; j < r.rank(); ++j) s = (s + m[i][j] % d * (a[j] % d)) % d;
    out[i] = mod(s, d);
  }
  return out;
}

bool AddMap::is_homomorphism(const FinRing& r) const {
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j)
      if (mod(m[i][j] * (r.modulus(j) % r.modulus(i)), r.modulus(i)) != 0) return false;
  return true;
}

AddMap AddMap::plus(const FinRing& r, const AddMap& o) const {
  AddMap f = *this;
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < r.rank(); ++j) f.m[i][j] = mod(m[i][j] + o.m[i][j], r.modulus(i));
  return f;
}

std::string to_string(const FinRing& r, const AddMap& f) {
  std::string s = "[";
  for (int j = 0; j < r.rank(); ++j) {
    RingElem col(r.rank());
    for (int i = 0; i < r.rank(); ++i) col[i] = f.m[i][j];
    s += (j ? " " : "") + std::string("e") + std::to_string(j) + "->" + r.to_string(col);
  }
  return s + "]";
}

namespace {

/// Elements of the quantifier range and their images under f, flattened.
struct PairScan {
  const FinRing& r;
  std::size_t k;
  std::vector<std::int64_t> xs, fx;
  /// Images of every element by index; empty when scanning generators only.
  std::vector<std::int64_t> all_images;

  PairScan(const FinRing& ring, const AddMap& f, const Bounds& b, const char* what)
      : r(ring), k(static_cast<std::size_t>(ring.rank())) {
    checked_order(r, b.element_scan, what);
    for (const auto& x : additive_range(r, b)) {
      const RingElem y = f.apply(r, x);
      xs.insert(xs.end(), x.begin(), x.end());
      fx.insert(fx.end(), y.begin(), y.end());
    }
    if (r.order() <= b.pair_scan) all_images = fx;
  }

  std::size_t size() const { return xs.size() / k; }
  const std::int64_t* x(std::size_t i) const { return xs.data() + i * k; }
  const std::int64_t* f(std::size_t i) const { return fx.data() + i * k; }

  /// f(a) by table lookup when available; `buf` holds the computed image otherwise.
  const std::int64_t* image(const AddMap& map, const RingElem& a, RingElem& buf) const {
    if (!all_images.empty()) return all_images.data() + r.index_of(a) * k;
    buf = map.apply(r, a);
    return buf.data();
  }

  bool same(const RingElem& a, const std::int64_t* b) const { return std::equal(a.begin(), a.end(), b); }
};

}  // namespace

bool verify_two_sided(const FinRing& r, const AddMap& t, const Bounds& b) {
  const PairScan s(r, t, b, "verify_two_sided");
  RingElem xy(s.k), p(s.k), buf;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      r.mul_into(s.x(i), s.x(j), xy.data());
      const std::int64_t* txy = s.image(t, xy, buf);
      r.mul_into(s.f(i), s.x(j), p.data());
      if (!s.same(p, txy)) return false;
      r.mul_into(s.x(i), s.f(j), p.data());
      if (!s.same(p, txy)) return false;
    }
  return true;
}

bool verify_derivation(const FinRing& r, const AddMap& d, const Bounds& b) {
  const PairScan s(r, d, b, "verify_derivation");
  RingElem xy(s.k), p(s.k), q(s.k), buf;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      r.mul_into(s.x(i), s.x(j), xy.data());
      r.mul_into(s.f(i), s.x(j), p.data());
      r.mul_into(s.x(i), s.f(j), q.data());
      for (std::size_t c = 0; c < s.k; ++c) p[c] = (p[c] + q[c]) % r.modulus(static_cast<int>(c));
      if (!s.same(p, s.image(d, xy, buf))) return false;
    }
  return true;
}

bool maps_into_center(const FinRing& r, const AddMap& d, const Bounds& b) {
  const PairScan s(r, d, b, "maps_into_center");
  RingElem p(s.k), q(s.k);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      r.mul_into(s.f(i), s.x(j), p.data());
      r.mul_into(s.x(j), s.f(i), q.data());
      if (p != q) return false;
    }
  return true;
}

}  // namespace jordan
