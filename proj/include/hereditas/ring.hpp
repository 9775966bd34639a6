#pragma once

// Concrete computable rings. Every element is a coordinate vector of length
// width() over the base group Z (modulus 0) or Z/q (modulus q): scalar rings
// have width 1, finite-dimensional algebras over F_p have width dim.

#include "hereditas/integer.hpp"
#include "hereditas/zlinalg.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hereditas {

enum class RingKind { integers, integers_mod, prime_field, algebra };

using Elem = std::vector<Int>;

class Ring {
 public:
  /// Default-constructed ring is Z.
  Ring() : Ring(integers()) {}

  static Ring integers() {
    static const auto z = std::make_shared<const Data>(Data{RingKind::integers, 0, 1, {}, {}, {}});
    return Ring(z);
  }

  static Ring integers_mod(const Int& n) {
    if (n < 2) throw input_error("IntegersMod modulus must be >= 2, got " + n.str());
    return Ring(std::make_shared<const Data>(Data{RingKind::integers_mod, n, 1, {}, {}, {}}));
  }

  static Ring prime_field(const Int& p) {
    if (!is_prime(p)) throw input_error("PrimeField characteristic " + p.str() + " is not prime");
    return Ring(std::make_shared<const Data>(Data{RingKind::prime_field, p, 1, {}, {}, {}}));
  }

  /// Algebra over F_p with basis b_0..b_{dim-1} and b_i b_j = sum_k c[i][j][k] b_k,
  /// `constants` indexed (i*dim + j)*dim + k. `idempotents` are basis indices
  /// forming a complete orthogonal set.
  static Ring algebra(const Int& p, std::vector<std::string> basis_names,
                      std::vector<Int> constants, std::vector<std::size_t> idempotents) {
    if (!is_prime(p)) throw input_error("algebra characteristic " + p.str() + " is not prime");
    const std::size_t dim = basis_names.size();
    if (dim == 0) throw input_error("algebra must have positive dimension");
    if (constants.size() != dim * dim * dim)
      throw input_error("structure constants must have dim^3 entries");
    for (Int& c : constants) c = mod(c, p);
    Data d{RingKind::algebra, p, dim, {}, {}, {}};
    d.constants = std::move(constants);
    d.names = std::move(basis_names);
    d.idempotents = std::move(idempotents);
    Ring ring(std::make_shared<const Data>(std::move(d)));
    ring.validate_algebra();
    return ring;
  }

  RingKind kind() const { return d_->kind; }

  /// Modulus of the base group: 0 for Z, n for Z/n, p otherwise.
  const Int& modulus() const { return d_->modulus; }

  std::size_t width() const { return d_->width; }

  bool is_finite() const { return d_->kind != RingKind::integers; }

  /// True when linear problems are decided by elimination over F_p.
  bool over_prime_field() const {
    return d_->kind == RingKind::prime_field || d_->kind == RingKind::algebra;
  }

  bool is_commutative() const {
    if (d_->kind != RingKind::algebra) return true;
    const std::size_t n = width();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (c(i, j, k) != c(j, i, k)) return false;
    return true;
  }

  Ring opposite() const {
    if (is_commutative()) return *this;
    const std::size_t n = width();
    std::vector<Int> op(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) op[(i * n + j) * n + k] = c(j, i, k);
    return algebra(d_->modulus, d_->names, std::move(op), d_->idempotents);
  }

  const std::vector<std::string>& basis_names() const { return d_->names; }
  const std::vector<std::size_t>& idempotent_indices() const { return d_->idempotents; }

  const Int& c(std::size_t i, std::size_t j, std::size_t k) const {
    return d_->constants[(i * width() + j) * width() + k];
  }

  /// Complete orthogonal idempotents as elements; {1} for scalar rings.
  std::vector<Elem> idempotents() const {
    if (kind() != RingKind::algebra) return {one()};
    std::vector<Elem> out;
    for (std::size_t i : d_->idempotents) out.push_back(basis(i));
    return out;
  }

  Elem zero() const { return Elem(width()); }

  Elem one() const {
    Elem e(width());
    if (kind() != RingKind::algebra) {
      e[0] = 1;
    } else {
      for (std::size_t i : d_->idempotents) e[i] = 1;
    }
    return e;
  }

  Elem basis(std::size_t i) const {
    Elem e(width());
    e[i] = 1;
    return e;
  }

  /// Z-module generators of the ring: {1} for scalar rings, the basis otherwise.
  std::vector<Elem> additive_basis() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < width(); ++i) out.push_back(basis(i));
    return out;
  }

  Elem scalar(const Int& k) const {
    Elem e = one();
    for (Int& x : e) x *= k;
    reduce(e);
    return e;
  }

  void reduce(std::span<Int> e) const {
    if (modulus().is_zero()) return;
    for (Int& x : e) x = mod(x, modulus());
  }

  void add_to(std::span<Int> acc, std::span<const Int> a) const {
    for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i];
    reduce(acc);
  }

  /// acc += a * b
  void fma(std::span<Int> acc, std::span<const Int> a, std::span<const Int> b) const {
    if (kind() != RingKind::algebra) {
      if (a[0].is_zero() || b[0].is_zero()) return;
      acc[0] += a[0] * b[0];
      reduce(acc);
      return;
    }
    const std::size_t n = width();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        const Int ab = a[i] * b[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!c(i, j, k).is_zero()) acc[k] += ab * c(i, j, k);
      }
    }
    reduce(acc);
  }

  Elem mul(std::span<const Int> a, std::span<const Int> b) const {
    Elem out(width());
    fma(out, a, b);
    return out;
  }

  bool is_zero(std::span<const Int> a) const {
    for (const Int& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Matrix L with coords(a * y) = coords(y) L.
  zlinalg::IntMatrix left_mult_matrix(std::span<const Int> a) const {
    const std::size_t n = width();
    zlinalg::IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Elem prod = mul(a, basis(j));
      for (std::size_t k = 0; k < n; ++k) m(j, k) = prod[k];
    }
    return m;
  }

  /// Matrix R with coords(y * a) = coords(y) R.
  zlinalg::IntMatrix right_mult_matrix(std::span<const Int> a) const {
    const std::size_t n = width();
    zlinalg::IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Elem prod = mul(basis(j), a);
      for (std::size_t k = 0; k < n; ++k) m(j, k) = prod[k];
    }
    return m;
  }

  /// Number of elements for finite rings.
  Int size() const {
    if (!is_finite()) throw unsupported_error("Z has infinitely many elements");
    return pow(modulus(), static_cast<unsigned>(width()));
  }

  /// Element with index `idx` in the canonical enumeration of a finite ring.
  Elem element_at(Int idx) const {
    Elem e(width());
    for (std::size_t i = 0; i < width(); ++i) {
      e[i] = idx % modulus();
      idx /= modulus();
    }
    return e;
  }

  std::string name() const {
    switch (kind()) {
      case RingKind::integers: return "Z";
      case RingKind::integers_mod: return "Z/" + modulus().str();
      case RingKind::prime_field: return "F_" + modulus().str();
      case RingKind::algebra: return "algebra(F_" + modulus().str() + ", dim " + std::to_string(width()) + ")";
    }
    return "?";
  }

  std::string format(std::span<const Int> e) const {
    if (kind() != RingKind::algebra) return e[0].str();
    std::string out;
    for (std::size_t i = 0; i < width(); ++i) {
      if (e[i].is_zero()) continue;
      if (!out.empty()) out += "+";
      if (e[i] != 1) out += e[i].str() + "*";
      out += d_->names[i];
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->kind == b.d_->kind && a.d_->modulus == b.d_->modulus &&
           a.d_->width == b.d_->width && a.d_->constants == b.d_->constants &&
           a.d_->idempotents == b.d_->idempotents;
  }

 private:
  struct Data {
    RingKind kind;
    Int modulus;
    std::size_t width;
    std::vector<Int> constants;
    std::vector<std::string> names;
    std::vector<std::size_t> idempotents;
  };

  explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  void validate_algebra() const {
    const std::size_t n = width();
    // associativity on basis triples
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Elem lhs = mul(mul(basis(i), basis(j)), basis(k));
          Elem rhs = mul(basis(i), mul(basis(j), basis(k)));
          if (lhs != rhs)
            throw input_error("algebra multiplication is not associative on (" +
                              d_->names[i] + ", " + d_->names[j] + ", " + d_->names[k] + ")");
        }
    if (d_->idempotents.empty()) throw input_error("algebra needs a complete set of idempotents");
    for (std::size_t a : d_->idempotents)
      if (a >= n) throw input_error("idempotent index out of range");
    for (std::size_t a : d_->idempotents)
      for (std::size_t b : d_->idempotents) {
        Elem prod = mul(basis(a), basis(b));
        Elem want = a == b ? basis(a) : zero();
        if (prod != want)
          throw input_error("idempotents " + d_->names[a] + ", " + d_->names[b] +
                            " are not orthogonal idempotents");
      }
    const Elem u = one();
    for (std::size_t i = 0; i < n; ++i) {
      if (mul(u, basis(i)) != basis(i) || mul(basis(i), u) != basis(i))
        throw input_error("idempotents do not sum to the identity");
    }
  }

  std::shared_ptr<const Data> d_;
};

}  // namespace hereditas
