#include "jordan/functional.hpp"

#include "json.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace jordan {

using boost::multiprecision::cpp_int;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t d) {
  a %= d;
  return a < 0 ? a + d : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t d) {
  return mod(static_cast<std::int64_t>(static_cast<__int128>(a) * b % d), d);
}

/// g = a*x + b*y with g = gcd(a, b) >= 0.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

using Vec = std::vector<std::int64_t>;

/// Sublattice L of Z^N containing (d_0 Z, ..., d_{N-1} Z), kept as a lower
/// triangular basis: column c is zero above row c, entries in row r reduced
/// mod d_r.
class Lattice {
 public:
  /// Starts as all of Z^N.
  explicit Lattice(Vec moduli) : d_(std::move(moduli)) {
    reset();
    for (std::size_t c = 0; c < dim(); ++c) h_[c][c] = 1;
  }

  std::size_t dim() const { return d_.size(); }
  const Vec& moduli() const { return d_; }
  const Vec& column(std::size_t c) const { return h_[c]; }
  std::int64_t pivot(std::size_t c) const { return h_[c][c]; }

  /// Restricts to {v : a.v == 0 mod q}. The form must vanish on the moduli.
  void impose(const Vec& a, std::int64_t q) {
    const std::size_t n = dim();
    Vec s(n);
    bool trivial = true;
    for (std::size_t c = 0; c < n; ++c) {
      __int128 acc = 0;
      for (std::size_t r = c; r < n; ++r)
        if (a[r] != 0 && h_[c][r] != 0) acc = (acc + static_cast<__int128>(a[r]) * h_[c][r]) % q;
      s[c] = mod(static_cast<std::int64_t>(acc), q);
      trivial = trivial && s[c] == 0;
    }
    if (trivial) return;

    // Basis change making all but one form value zero; the kernel is spanned
    // by the zero-valued vectors and the right multiple of the last one.
    std::vector<Vec> gens;
    Vec w = h_[0];
    std::int64_t sw = s[0];
    for (std::size_t c = 1; c < n; ++c) {
      if (s[c] == 0) {
        gens.push_back(h_[c]);
        continue;
      }
      if (sw == 0) {
        gens.push_back(w);
        w = h_[c];
        sw = s[c];
        continue;
      }
      std::int64_t alpha, beta;
      const std::int64_t g = xgcd(sw, s[c], alpha, beta);
      gens.push_back(combine(s[c] / g, w, -(sw / g), h_[c]));
      w = combine(alpha, w, beta, h_[c]);
      sw = g;
    }
    gens.push_back(combine(q / std::gcd(sw, q), w, 0, w));
    reset();
    for (auto& v : gens) insert(std::move(v));
  }

 private:
  void reset() {
    const std::size_t n = dim();
    h_.assign(n, Vec(n, 0));
    for (std::size_t c = 0; c < n; ++c) h_[c][c] = d_[c];
  }

  Vec combine(std::int64_t x, const Vec& u, std::int64_t y, const Vec& v) const {
    Vec out(dim());
    for (std::size_t r = 0; r < dim(); ++r)
      out[r] = mod(mulmod(x, u[r], d_[r]) + mulmod(y, v[r], d_[r]), d_[r]);
    return out;
  }

  void insert(Vec v) {
    for (std::size_t r = 0; r < dim(); ++r) {
      v[r] = mod(v[r], d_[r]);
      if (v[r] == 0) continue;
      Vec& col = h_[r];
      std::int64_t alpha, beta;
      const std::int64_t g = xgcd(col[r], v[r], alpha, beta);
      Vec merged = combine(alpha, col, beta, v);
      v = combine(col[r] / g, v, -(v[r] / g), col);
      merged[r] = g;
      col = std::move(merged);
    }
  }

  Vec d_;
  std::vector<Vec> h_;
};

/// Diagonal of the Smith form, entries > 1 only.
std::vector<cpp_int> smith_invariants(std::vector<std::vector<cpp_int>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<cpp_int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    cpp_int p = abs(a[t][t]);
    if (p > 1) diag.push_back(p);
  }
  return diag;
}

/// One functional law U(x^2) coefficient alpha, U(x)x coefficient beta,
/// x V(x) coefficient gamma, on unknown slots u and v.
struct Clause {
  int u, v;
  std::int64_t alpha, beta, gamma;
};

std::vector<Clause> clauses(const LawSpec& spec) {
  const std::int64_t s = spec.m + spec.n;
  switch (spec.law) {
    case Law::centralizer: return {{0, 0, s, spec.m, spec.n}};
    case Law::gen_centralizer: return {{0, 1, s, spec.m, spec.n}, {1, 1, s, spec.m, spec.n}};
    case Law::derivation: return {{0, 0, s, 2 * spec.m, 2 * spec.n}};
    case Law::gen_derivation: return {{0, 1, s, 2 * spec.m, 2 * spec.n}, {1, 1, s, 2 * spec.m, 2 * spec.n}};
    case Law::difference: break;
  }
  throw std::invalid_argument("no finite-ring law for " + std::string(name_of(spec.law)));
}

void check_spec(const LawSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("m and n must be positive");
  clauses(spec);
}

const AddMap& slot(const Solution& s, int i) { return i == 0 ? s.map : s.base; }

}  // namespace

bool is_generalized(Law law) { return law == Law::gen_centralizer || law == Law::gen_derivation; }

std::int64_t hypothesis_torsion(const LawSpec& spec) {
  const std::int64_t base = spec.m * spec.n * (spec.m + spec.n);
  switch (spec.law) {
    case Law::centralizer: return base;
    case Law::gen_centralizer: return base * (2 * spec.m + spec.n);
    case Law::derivation:
    case Law::gen_derivation: return base * std::abs(spec.m - spec.n);
    case Law::difference: break;
  }
  throw std::invalid_argument("no torsion hypothesis for this law");
}

SolutionSet solve_identity(const FinRing& r, const LawSpec& spec, const Bounds& b) {
  check_spec(spec);
  const std::uint64_t order = r.order();
  if (order > b.element_scan)
    throw BoundsError("solve_identity: ring of order " + std::to_string(order) + " exceeds bound");
  const int k = r.rank();
  const int slots = is_generalized(spec.law) ? 2 : 1;
  const std::size_t n = static_cast<std::size_t>(slots * k * k);
  auto coord = [k](int s, int i, int j) { return static_cast<std::size_t>(s * k * k + i * k + j); };

  Vec moduli(n);
  for (int s = 0; s < slots; ++s)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) moduli[coord(s, i, j)] = r.modulus(i);
  Lattice lat(moduli);

  // Homomorphism conditions d_j u_ij == 0 mod d_i.
  for (int s = 0; s < slots; ++s)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Vec a(n, 0);
        a[coord(s, i, j)] = r.modulus(j);
        lat.impose(a, r.modulus(i));
      }

  const auto cls = clauses(spec);
  std::vector<RingElem> right(k), left(k);
  RingElem x2(k);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    const RingElem x = r.element(idx);
    r.mul_into(x.data(), x.data(), x2.data());
    for (int a = 0; a < k; ++a) {
      right[a] = r.mul(r.basis(a), x);
      left[a] = r.mul(x, r.basis(a));
    }
    for (const auto& c : cls)
      for (int i = 0; i < k; ++i) {
        const std::int64_t q = r.modulus(i);
        Vec row(n, 0);
        for (int j = 0; j < k; ++j) row[coord(c.u, i, j)] = mulmod(c.alpha, x2[j], q);
        for (int a = 0; a < k; ++a)
          for (int j = 0; j < k; ++j) {
            auto& ru = row[coord(c.u, a, j)];
            ru = mod(ru - mulmod(c.beta, x[j] * right[a][i] % q, q), q);
            auto& rv = row[coord(c.v, a, j)];
            rv = mod(rv - mulmod(c.gamma, x[j] * left[a][i] % q, q), q);
          }
        lat.impose(row, q);
      }
  }

  auto to_solution = [&](const Vec& v) {
    Solution s{AddMap::zero(r), slots == 2 ? AddMap::zero(r) : AddMap{}};
    for (int sl = 0; sl < slots; ++sl)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) (sl == 0 ? s.map : s.base).m[i][j] = v[coord(sl, i, j)];
    return s;
  };

  SolutionSet out;
  std::vector<std::size_t> gen_cols;
  cpp_int count = 1;
  for (std::size_t c = 0; c < n; ++c)
    if (lat.pivot(c) != moduli[c]) {
      gen_cols.push_back(c);
      count *= moduli[c] / lat.pivot(c);
    }
  out.free_rank = static_cast<int>(gen_cols.size());
  out.count = count.str();
  for (auto c : gen_cols) out.generators.push_back(to_solution(lat.column(c)));

  // Relations among the generators: (d_c / h_c) * column c rewritten in the
  // later columns.
  std::vector<std::vector<cpp_int>> rel(gen_cols.size(), std::vector<cpp_int>(gen_cols.size(), 0));
  for (std::size_t gi = 0; gi < gen_cols.size(); ++gi) {
    const std::size_t c = gen_cols[gi];
    const std::int64_t e = moduli[c] / lat.pivot(c);
    rel[gi][gi] = e;
    Vec v(n);
    for (std::size_t row = 0; row < n; ++row) v[row] = mulmod(e, lat.column(c)[row], moduli[row]);
    for (std::size_t gj = gi + 1; gj < gen_cols.size(); ++gj) {
      const std::size_t cj = gen_cols[gj];
      // Columns with full pivot between c and cj hold no residue: v is zero there.
      const std::int64_t t = v[cj] / lat.pivot(cj);
      rel[gi][gj] = -cpp_int(t);
      for (std::size_t row = 0; row < n; ++row)
        v[row] = mod(v[row] - mulmod(t, lat.column(cj)[row], moduli[row]), moduli[row]);
    }
  }
  for (const auto& d : smith_invariants(rel)) out.elementary_divisors.push_back(d.str());

  if (count > b.max_solutions) {
    out.complete = false;
    return out;
  }
  // Every solution is sum t_c * column c with 0 <= t_c < d_c / h_c.
  std::vector<std::int64_t> t(gen_cols.size(), 0);
  for (;;) {
    Vec v(n, 0);
    for (std::size_t g = 0; g < gen_cols.size(); ++g)
      if (t[g] != 0)
        for (std::size_t row = 0; row < n; ++row)
          v[row] = mod(v[row] + mulmod(t[g], lat.column(gen_cols[g])[row], moduli[row]), moduli[row]);
    out.solutions.push_back(to_solution(v));
    std::size_t g = 0;
    for (; g < gen_cols.size(); ++g) {
      if (++t[g] < moduli[gen_cols[g]] / lat.pivot(gen_cols[g])) break;
      t[g] = 0;
    }
    if (g == gen_cols.size()) break;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

RingElem law_residual(const FinRing& r, const LawSpec& spec, const Solution& s, const RingElem& x) {
  RingElem res;
  const RingElem x2 = r.mul(x, x);
  for (const auto& c : clauses(spec)) {
    const AddMap& u = slot(s, c.u);
    const AddMap& v = slot(s, c.v);
    RingElem part = r.scale(c.alpha, u.apply(r, x2));
    part = r.sub(part, r.scale(c.beta, r.mul(u.apply(r, x), x)));
    part = r.sub(part, r.scale(c.gamma, r.mul(x, v.apply(r, x))));
    res.insert(res.end(), part.begin(), part.end());
  }
  return res;
}

bool satisfies_law(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b) {
  if (r.order() > b.element_scan) throw BoundsError("satisfies_law: ring exceeds element bound");
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    const auto res = law_residual(r, spec, s, r.element(i));
    for (auto c : res)
      if (c != 0) return false;
  }
  return true;
}

bool conclusion_holds(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b) {
  switch (spec.law) {
    case Law::centralizer: return verify_two_sided(r, s.map, b);
    case Law::gen_centralizer: return s.map == s.base && verify_two_sided(r, s.map, b);
    case Law::derivation: return verify_derivation(r, s.map, b) && maps_into_center(r, s.map, b);
    case Law::gen_derivation:
      return s.map == s.base && verify_derivation(r, s.map, b) && maps_into_center(r, s.map, b);
    case Law::difference: break;
  }
  throw std::invalid_argument("no conclusion for this law");
}

TheoremReport check_theorem(const FinRing& r, const LawSpec& spec, const Bounds& b) {
  check_spec(spec);
  TheoremReport rep;
  rep.ring = r.name();
  rep.spec = spec;
  rep.order = r.order();
  rep.torsion = hypothesis_torsion(spec);
  rep.hypotheses["semiprime"] = is_semiprime(r, b);
  rep.hypotheses["torsion-free"] = rep.torsion != 0 && is_torsion_free(r, rep.torsion, b);
  rep.hypotheses_hold = rep.hypotheses["semiprime"] && rep.hypotheses["torsion-free"];

  const SolutionSet sols = solve_identity(r, spec, b);
  rep.count = sols.count;
  rep.enumerated = sols.complete;
  rep.elementary_divisors = sols.elementary_divisors;
  // The conclusion is additive in the solution, so generators decide it. Every
  // solution is still checked when the theorem claims it and the list is short.
  rep.checked_every_solution = sols.complete && rep.hypotheses_hold;
  for (const auto& s : rep.checked_every_solution ? sols.solutions : sols.generators) {
    if (conclusion_holds(r, spec, s, b)) continue;
    rep.conclusion = false;
    if (rep.witnesses.size() < 3) rep.witnesses.push_back(s);
  }
  rep.verdict = !rep.hypotheses_hold ? "NOT-CLAIMED" : rep.conclusion ? "VERIFIED" : "COUNTEREXAMPLE";
  return rep;
}

bool cross_check_lemma(const FinRing& r, const LawSpec& spec, const Solution& s, const Bounds& b) {
  check_spec(spec);
  if (!satisfies_law(r, spec, s, b)) throw std::invalid_argument("cross_check_lemma: maps do not satisfy the law");
  const std::uint64_t order = r.order();
  if (order > b.pair_scan) throw BoundsError("cross_check_lemma: ring exceeds pair bound");
  const std::int64_t m = spec.m, n = spec.n;
  const bool gen = is_generalized(spec.law);
  const AddMap& t = s.map;
  const AddMap& t0 = gen ? s.base : s.map;
  const bool centralizer = spec.law == Law::centralizer || spec.law == Law::gen_centralizer;

  std::vector<RingElem> xs, tx, t0x;
  for (std::uint64_t i = 0; i < order; ++i) {
    xs.push_back(r.element(i));
    tx.push_back(t.apply(r, xs.back()));
    t0x.push_back(t0.apply(r, xs.back()));
  }
  auto mul = [&](std::initializer_list<const RingElem*> fs) {
    auto it = fs.begin();
    RingElem p = **it;
    for (++it; it != fs.end(); ++it) p = r.mul(p, **it);
    return p;
  };
  for (std::uint64_t i = 0; i < order; ++i) {
    const RingElem& x = xs[i];
    const RingElem x2 = r.mul(x, x);
    for (std::uint64_t j = 0; j < order; ++j) {
      const RingElem& y = xs[j];
      const RingElem xyx = mul({&x, &y, &x});
      RingElem lhs, rhs = r.zero();
      auto acc = [&](std::int64_t c, const RingElem& e) { rhs = r.add(rhs, r.scale(c, e)); };
      if (centralizer) {
        lhs = r.scale(2 * (m + n) * (m + n), t.apply(r, xyx));
        acc(m * n, mul({&tx[i], &x, &y}));
        acc(m * (2 * m + n), mul({&tx[i], &y, &x}));
        acc(-m * n, mul({&tx[j], &x2}));
        acc(2 * m * n, mul({&x, &t0x[j], &x}));
        acc(-m * n, mul({&x2, &t0x[j]}));
        acc(n * (m + 2 * n), mul({&x, &y, &t0x[i]}));
        acc(m * n, mul({&y, &x, &t0x[i]}));
      } else {
        lhs = r.scale((m + n) * (m + n), t.apply(r, xyx));
        acc(m * (n - m), mul({&tx[i], &x, &y}));
        acc(m * (m - n), mul({&tx[j], &x2}));
        acc(n * (n - m), mul({&x2, &t0x[j]}));
        acc(n * (m - n), mul({&y, &x, &t0x[i]}));
        acc(m * (3 * m + n), mul({&tx[i], &y, &x}));
        acc(4 * m * n, mul({&x, &t0x[j], &x}));
        acc(n * (3 * n + m), mul({&x, &y, &t0x[i]}));
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ---- families ----

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_upto(std::int64_t bound) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime_number(p)) ps.push_back(p);
  return ps;
}

}  // namespace

std::vector<FinRing> family_members(const Family& f) {
  std::vector<FinRing> rings;
  switch (f.kind) {
    case Family::Kind::Zn:
      if (!f.members.empty())
        for (auto n : f.members) rings.push_back(FinRing::Zn(n));
      else
        for (std::int64_t n = 2; n <= f.bound; ++n) rings.push_back(FinRing::Zn(n));
      break;
    case Family::Kind::Mat2:
      for (auto p : f.members.empty() ? primes_upto(f.bound) : f.members) rings.push_back(FinRing::MatRing(2, p));
      break;
    case Family::Kind::Products: {
      const auto ps = f.members.empty() ? primes_upto(f.bound) : f.members;
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j)
          rings.push_back(FinRing::DirectProduct(FinRing::Zn(ps[i]), FinRing::Zn(ps[j])));
      for (auto p : ps)
        for (auto q : ps) rings.push_back(FinRing::DirectProduct(FinRing::Zn(p), FinRing::MatRing(2, q)));
      break;
    }
  }
  return rings;
}

std::vector<TheoremReport> search_family(const Family& f, const LawSpec& spec, const Bounds& b, int jobs) {
  const auto rings = family_members(f);
  std::vector<TheoremReport> rows(rings.size());
  std::vector<std::exception_ptr> errors(rings.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < rings.size();) {
      try {
        rows[i] = check_theorem(rings[i], spec, b);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

// ---- reports ----

namespace {

nlohmann::json report_json(const TheoremReport& r) {
  nlohmann::json j;
  j["ring"] = r.ring;
  j["law"] = std::string(name_of(r.spec.law));
  j["m"] = r.spec.m;
  j["n"] = r.spec.n;
  j["order"] = r.order;
  j["torsion"] = r.torsion;
  j["hypotheses"] = r.hypotheses;
  j["solutions"] = r.count;
  j["enumerated"] = r.enumerated;
  j["checked"] = r.checked_every_solution ? "every solution" : "generators";
  j["elementary_divisors"] = r.elementary_divisors;
  j["conclusion"] = r.conclusion;
  j["verdict"] = r.verdict;
  auto& w = j["witnesses"] = nlohmann::json::array();
  for (const auto& s : r.witnesses) {
    nlohmann::json e;
    e["map"] = s.map.m;
    if (!s.base.m.empty()) e["base"] = s.base.m;
    w.push_back(e);
  }
  return j;
}

}  // namespace

std::string to_text(const TheoremReport& r) {
  std::string s = r.ring + "  " + std::string(name_of(r.spec.law)) + " (" + std::to_string(r.spec.m) + "," +
                  std::to_string(r.spec.n) + ")  order " + std::to_string(r.order) + "  torsion " +
                  std::to_string(r.torsion);
  for (const auto& [k, v] : r.hypotheses) s += "  " + k + "=" + (v ? "yes" : "no");
  s += "  solutions " + r.count + (r.enumerated ? "" : " (generators only)");
  s += "  conclusion " + std::string(r.conclusion ? "holds" : "fails") + "  " + r.verdict + "\n";
  for (const auto& w : r.witnesses) {
    s += "  witness: " + std::string(is_generalized(r.spec.law) ? "map " : "") + "M=" + nlohmann::json(w.map.m).dump();
    if (!w.base.m.empty()) s += " base M=" + nlohmann::json(w.base.m).dump();
    s += "\n";
  }
  return s;
}

std::string to_json(const TheoremReport& r, int indent) { return report_json(r).dump(indent); }

std::string to_text(const std::vector<TheoremReport>& rows) {
  std::string s;
  for (const auto& r : rows) s += to_text(r);
  return s;
}

std::string to_json(const std::vector<TheoremReport>& rows, int indent) {
  auto a = nlohmann::json::array();
  for (const auto& r : rows) a.push_back(report_json(r));
  return a.dump(indent);
}

}  // namespace jordan
