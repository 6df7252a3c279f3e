#pragma once

// Finite rings given by structure constants over Z_{d_1} + ... + Z_{d_k}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordan {

/// A scan or enumeration would exceed the configured size bound.
class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid ring data: bad moduli, ill-defined or non-associative multiplication.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  /// Largest ring scanned over all pairs (x, y).
  std::uint64_t pair_scan = 10'000;
  /// Largest ring scanned over all triples.
  std::uint64_t triple_scan = 2'000;
  /// Largest ring whose elements are enumerated at all.
  std::uint64_t element_scan = 1'000'000;
  /// Solution groups up to this size are listed explicitly.
  std::uint64_t max_solutions = 1'000'000;
};

/// Residue tuple (a_1, ..., a_k) with 0 <= a_i < d_i.
using RingElem = std::vector<std::int64_t>;

class FinRing {
 public:
  /// mult[i][j] is e_i * e_j as a residue tuple. Validates well-definedness
  /// and associativity on basis triples.
  FinRing(std::vector<std::int64_t> moduli, std::vector<std::vector<RingElem>> mult, std::string name = "");

  static FinRing Zn(std::int64_t n);
  /// k x k matrices over Z_n, basis = matrix units in row-major order.
  static FinRing MatRing(int k, std::int64_t n);
  static FinRing DirectProduct(const FinRing& a, const FinRing& b);
  static FinRing FromTable(std::vector<std::int64_t> moduli, std::vector<std::vector<RingElem>> mult,
                           std::string name = "");

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t modulus(int i) const { return moduli_[static_cast<std::size_t>(i)]; }
  const RingElem& product_of_basis(int i, int j) const {
    return mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<RingElem>>& table() const { return mult_; }

  /// |R|; throws BoundsError if it does not fit in 64 bits.
  std::uint64_t order() const;
  /// Exponent of the additive group.
  std::int64_t characteristic() const;

  RingElem zero() const { return RingElem(moduli_.size(), 0); }
  RingElem basis(int i) const;
  /// Element with mixed-radix index `idx` (first component varies fastest).
  RingElem element(std::uint64_t idx) const;
  std::uint64_t index_of(const RingElem& a) const;
  RingElem reduce(RingElem a) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem scale(std::int64_t c, const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;

  /// Raw product into `out` (length rank()); `out` must not alias inputs.
  void mul_into(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const;

  std::string to_string(const RingElem& a) const;

 private:
  struct Term {
    int i, j, l;
    std::int64_t c;
  };
  std::vector<std::int64_t> moduli_;
  std::vector<std::vector<RingElem>> mult_;
  std::vector<Term> terms_;
  bool small_ = false;
  std::string name_;
};

/// Loads {"moduli": [...], "mult": [[[...]]]} or a shorthand
/// {"kind": "Zn", "n": 6}, {"kind": "Mat", "k": 2, "p": 7},
/// {"kind": "product", "of": [spec, spec, ...]}.
FinRing ring_from_json(const std::string& text);
FinRing load_ring(const std::string& path);
/// A single spec or a JSON array of specs.
std::vector<FinRing> load_rings(const std::string& path);
std::string ring_to_json(const FinRing& r);

// Hypothesis predicates. Rings up to the pair bound are scanned over all
// pairs; larger ones quantify over a basis wherever the condition is additive.
bool is_semiprime(const FinRing& r, const Bounds& b = {});
bool is_prime(const FinRing& r, const Bounds& b = {});
bool is_torsion_free(const FinRing& r, std::int64_t t, const Bounds& b = {});
std::vector<RingElem> center(const FinRing& r, const Bounds& b = {});

/// Additive map: image of a is M a, component i reduced mod d_i.
struct AddMap {
  std::vector<std::vector<std::int64_t>> m;  // m[i][j]

  static AddMap zero(const FinRing& r);
  static AddMap identity(const FinRing& r);
  static AddMap from_function(const FinRing& r, const std::vector<RingElem>& basis_images);

  RingElem apply(const FinRing& r, const RingElem& a) const;
  /// d_j * m[i][j] == 0 mod d_i for all i, j.
  bool is_homomorphism(const FinRing& r) const;
  AddMap plus(const FinRing& r, const AddMap& o) const;

  bool operator==(const AddMap&) const = default;
  auto operator<=>(const AddMap&) const = default;
};

std::string to_string(const FinRing& r, const AddMap& f);

bool verify_two_sided(const FinRing& r, const AddMap& t, const Bounds& b = {});
bool verify_derivation(const FinRing& r, const AddMap& d, const Bounds& b = {});
bool maps_into_center(const FinRing& r, const AddMap& d, const Bounds& b = {});

}  // namespace jordan
