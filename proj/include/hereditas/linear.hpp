#pragma once

// Ring-level linear algebra. Every problem is flattened to a linear system
// over the base group (Z, Z/n or F_p) and decided there:
//   Z      -> Hermite normal form
//   Z/n    -> Hermite normal form on the lift with congruence rows adjoined
//   F_p    -> reduced echelon form (also for algebras, coordinate-wise)

#include "hereditas/matrix.hpp"
#include "hereditas/zlinalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hereditas {

using zlinalg::IntMatrix;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

/// Solves x m = b over the base group of `ring`.
inline std::optional<std::vector<Int>> base_solve(const Ring& ring, const IntMatrix& m,
                                                  const std::vector<Int>& b) {
  switch (ring.kind()) {
    case RingKind::integers: return zlinalg::solve(m, b);
    case RingKind::integers_mod: return zlinalg::solve_mod(m, b, ring.modulus());
    default: return zlinalg::solve_mod_p(m, b, ring.modulus());
  }
}

inline Mat rows_from_coords(const Ring& ring, const IntMatrix& coords, std::size_t cols) {
  const std::size_t w = ring.width();
  Mat out(ring, coords.rows(), cols);
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto e = out.entry(i, j);
      for (std::size_t t = 0; t < w; ++t) e[t] = coords(i, j * w + t);
      ring.reduce(e);
    }
  return out;
}

inline std::vector<Int> coords_of(const Mat& m) { return m.data(); }

}  // namespace detail

/// Z-linear matrix of x -> x * s on coordinates, for x in R^{1 x s.rows()}:
/// row (i, t) holds coords(b_t * s_i) where b_t runs over the additive basis.
inline IntMatrix coordinate_map(const Mat& s) {
  const Ring& ring = s.ring();
  const std::size_t w = ring.width();
  IntMatrix out(s.rows() * w, s.cols() * w);
  const auto basis = ring.additive_basis();
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t t = 0; t < w; ++t)
      for (std::size_t j = 0; j < s.cols(); ++j) {
        auto src = s.entry(i, j);
        if (ring.is_zero(src)) continue;
        const Elem prod = w == 1 ? Elem(src.begin(), src.end()) : ring.mul(basis[t], src);
        for (std::size_t u = 0; u < w; ++u) out(i * w + t, j * w + u) = prod[u];
      }
  return out;
}

/// Returns x with x * a = b, or nullopt when b is outside the row space.
inline std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  a.check_ring(b);
  detail::require(b.rows() == 1, "solve_left expects a row vector, got " + b.shape());
  detail::require(b.cols() == a.cols(), "solve_left dimension mismatch: " + a.shape() + " vs " + b.shape());
  auto x = detail::base_solve(a.ring(), coordinate_map(a), detail::coords_of(b));
  if (!x) return std::nullopt;
  IntMatrix row(1, x->size());
  for (std::size_t t = 0; t < x->size(); ++t) row(0, t) = (*x)[t];
  return detail::rows_from_coords(a.ring(), row, a.rows());
}

/// Canonical generators of the left span {y * a} of the rows of a.
inline Mat row_space_normal_form(const Mat& a) {
  const Ring& ring = a.ring();
  const std::size_t m = a.cols();
  switch (ring.kind()) {
    case RingKind::integers: {
      IntMatrix z(a.rows(), m);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) z(i, j) = a.at(i, j);
      return detail::rows_from_coords(ring, zlinalg::hnf(std::move(z)), m);
    }
    case RingKind::integers_mod: {
      IntMatrix z(a.rows(), m);
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) z(i, j) = a.at(i, j);
      return detail::rows_from_coords(ring, zlinalg::submodule_normal_form_mod(z, ring.modulus()), m);
    }
    default:
      return detail::rows_from_coords(ring, zlinalg::rref_mod(coordinate_map(a), ring.modulus()), m);
  }
}

/// Rows generating {x : x a = 0}, in the ring's canonical normal form;
/// may have zero rows.
inline Mat left_kernel(const Mat& a) {
  const Ring& ring = a.ring();
  const IntMatrix map = coordinate_map(a);
  switch (ring.kind()) {
    case RingKind::integers:
      return detail::rows_from_coords(ring, zlinalg::kernel(map), a.rows());
    case RingKind::integers_mod: {
      IntMatrix lattice = zlinalg::kernel_lattice_mod(map, ring.modulus());
      return detail::rows_from_coords(
          ring, zlinalg::submodule_normal_form_mod(lattice, ring.modulus()), a.rows());
    }
    default:
      return detail::rows_from_coords(
          ring, zlinalg::triangulate_mod_p(map, ring.modulus()).kernel, a.rows());
  }
}

struct SmithResult {
  Mat u, d, v;
};

/// u * a * v = d with u, v unimodular and d diagonal, d_1 | d_2 | ...
inline SmithResult smith_normal_form(const Mat& a) {
  if (a.ring().kind() != RingKind::integers)
    throw unsupported_error("smith_normal_form requires a matrix over Z, got " + a.ring().name());
  IntMatrix z(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) z(i, j) = a.at(i, j);
  auto s = zlinalg::smith(z);
  const Ring& ring = a.ring();
  return {detail::rows_from_coords(ring, s.u, a.rows()), detail::rows_from_coords(ring, s.d, a.cols()),
          detail::rows_from_coords(ring, s.v, a.cols())};
}

/// One matrix equation left * U * right = target in an unknown matrix U.
struct MatrixEquation {
  Mat left, right, target;
};

/// Conjunction of equations left_i * U * right_i = target_i in one unknown U,
/// decided as a single flattened system over the base group.
class LinearSystem {
 public:
  LinearSystem(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {}

  LinearSystem& add(const Mat& left, const Mat& right, const Mat& target) {
    left.check_ring(right);
    left.check_ring(target);
    detail::require(left.ring() == ring_, "equation ring differs from system ring");
    detail::require(left.cols() == rows_ && right.rows() == cols_ &&
                        target.rows() == left.rows() && target.cols() == right.cols(),
                    "equation shapes " + left.shape() + " * U(" + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + ") * " + right.shape() + " = " + target.shape() +
                        " do not compose");
    eqs_.push_back({left, right, target});
    return *this;
  }

  const std::vector<MatrixEquation>& equations() const { return eqs_; }
  const Ring& ring() const { return ring_; }
  std::size_t unknown_rows() const { return rows_; }
  std::size_t unknown_cols() const { return cols_; }

  /// Flattened coefficient matrix: one row per unknown coordinate, one column
  /// per target coordinate; the system is x * flattened() = rhs().
  IntMatrix flattened() const {
    const std::size_t w = ring_.width();
    std::size_t total = 0;
    for (const auto& e : eqs_) total += e.target.rows() * e.target.cols() * w;
    IntMatrix m(rows_ * cols_ * w, total);
    const auto basis = ring_.additive_basis();
    std::size_t off = 0;
    for (const auto& e : eqs_) {
      const std::size_t a = e.left.rows(), d = e.right.cols();
      for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k)
          for (std::size_t s = 0; s < w; ++s) {
            const std::size_t unknown = (j * cols_ + k) * w + s;
            for (std::size_t i = 0; i < a; ++i) {
              auto lij = e.left.entry(i, j);
              if (ring_.is_zero(lij)) continue;
              const Elem ls = ring_.mul(lij, basis[s]);
              if (ring_.is_zero(ls)) continue;
              for (std::size_t l = 0; l < d; ++l) {
                auto rkl = e.right.entry(k, l);
                if (ring_.is_zero(rkl)) continue;
                const Elem prod = ring_.mul(ls, rkl);
                const std::size_t col = off + (i * d + l) * w;
                for (std::size_t t = 0; t < w; ++t)
                  if (!prod[t].is_zero()) m(unknown, col + t) += prod[t];
              }
            }
          }
      off += a * d * w;
    }
    return m;
  }

  std::vector<Int> rhs() const {
    std::vector<Int> b;
    for (const auto& e : eqs_) b.insert(b.end(), e.target.data().begin(), e.target.data().end());
    return b;
  }

  std::optional<Mat> solve() const {
    if (rows_ * cols_ == 0) {
      // U is empty; the system holds iff every target is zero.
      for (const auto& e : eqs_)
        if (!e.target.is_zero()) return std::nullopt;
      return Mat(ring_, rows_, cols_);
    }
    auto x = detail::base_solve(ring_, flattened(), rhs());
    if (!x) return std::nullopt;
    IntMatrix coords(rows_, cols_ * ring_.width());
    for (std::size_t t = 0; t < x->size(); ++t) coords(t / coords.cols(), t % coords.cols()) = (*x)[t];
    return detail::rows_from_coords(ring_, coords, cols_);
  }

  /// True when u satisfies every equation exactly (multiplication only).
  bool check(const Mat& u) const {
    for (const auto& e : eqs_)
      if (!(e.left * u * e.right == e.target)) return false;
    return true;
  }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<MatrixEquation> eqs_;
};

/// Returns U with a * U * c = target, or nullopt.
inline std::optional<Mat> solve_middle_linear(const Mat& a, const Mat& c, const Mat& target) {
  a.check_ring(c);
  a.check_ring(target);
  detail::require(target.rows() == a.rows() && target.cols() == c.cols(),
                  "solve_middle_linear dimension mismatch");
  LinearSystem sys(a.ring(), a.cols(), c.rows());
  sys.add(a, c, target);
  return sys.solve();
}

}  // namespace hereditas
