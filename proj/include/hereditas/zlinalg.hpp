#pragma once

// Dense integer and prime-field linear algebra: Hermite and Smith normal
// forms, lattice kernels and solving, reduced echelon form mod p.
//
// Everything works on row vectors: a matrix M (r x c) is the map x -> x M.

#include "hereditas/integer.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace hereditas::zlinalg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Int& x) { return x.is_zero(); });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row_dst -= factor * row_src
  void sub_row(std::size_t dst, std::size_t src, const Int& factor,
               std::size_t from_col = 0) {
    if (factor.is_zero()) return;
    for (std::size_t j = from_col; j < cols_; ++j) {
      const Int& s = (*this)(src, j);
      if (!s.is_zero()) (*this)(dst, j) -= factor * s;
    }
  }

  /// col_dst -= factor * col_src
  void sub_col(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Int& s = (*this)(i, src);
      if (!s.is_zero()) (*this)(i, dst) -= factor * s;
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  IntMatrix row_block(std::size_t r0, std::size_t nr) const {
    return block(r0, 0, nr, cols_);
  }

  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const {
    IntMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  std::vector<Int> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void append_row(const std::vector<Int>& r) {
    assert(rows_ == 0 || r.size() == cols_);
    if (rows_ == 0) cols_ = r.size();
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  /// Stacks `below` under this matrix; column counts must agree.
  IntMatrix vstack(const IntMatrix& below) const {
    if (rows_ == 0 && cols_ == 0) return below;
    assert(below.rows_ == 0 || below.cols_ == cols_);
    IntMatrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  IntMatrix hstack(const IntMatrix& right) const {
    assert(right.rows_ == rows_);
    IntMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
  }

  void reduce_mod(const Int& n) {
    for (Int& x : data_) x = mod(x, n);
  }

  void check_growth() const {
    for (const Int& x : data_) hereditas::check_growth(x);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    assert(a.cols_ == b.rows_);
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Int& y = b(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m) {
  assert(x.size() == m.rows());
  std::vector<Int> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += x[i] * m(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`:
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a basis.
inline IntMatrix hnf(IntMatrix m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    for (;;) {
      std::size_t best = r;
      for (std::size_t i = row; i < r; ++i) {
        if (m(i, col).is_zero()) continue;
        if (best == r || abs(m(i, col)) < abs(m(best, col))) best = i;
      }
      if (best == r) break;
      m.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < r; ++i) {
        if (m(i, col).is_zero()) continue;
        m.sub_row(i, row, m(i, col) / m(row, col), col);
        if (!m(i, col).is_zero()) done = false;
      }
      if (done) break;
    }
    if (m(row, col).is_zero()) continue;
    if (m(row, col).sign() < 0) m.negate_row(row);
    for (std::size_t i = 0; i < row; ++i)
      m.sub_row(i, row, floor_div(m(i, col), m(row, col)), col);
    ++row;
    m.check_growth();
  }
  return m.row_block(0, row);
}

/// Pivot column of each row of an echelon matrix.
inline std::vector<std::size_t> pivots(const IntMatrix& echelon) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t j = 0;
    while (j < echelon.cols() && echelon(i, j).is_zero()) ++j;
    out.push_back(j);
  }
  return out;
}

/// Echelon data for solving and kernels: hnf of [m | I].
struct Triangulation {
  IntMatrix image;      // rank x c, Hermite basis of the row lattice of m
  IntMatrix transform;  // rank x r, image = transform * m
  IntMatrix kernel;     // (r - rank) x r, Hermite basis of {x : x m = 0}
};

inline Triangulation triangulate(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix h = hnf(m.hstack(IntMatrix::identity(r)));
  std::size_t rank = 0;
  while (rank < h.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < c; ++j)
      if (!h(rank, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) break;
    ++rank;
  }
  Triangulation t;
  t.image = h.block(0, 0, rank, c);
  t.transform = h.block(0, c, rank, r);
  t.kernel = h.block(rank, c, h.rows() - rank, r);
  return t;
}

/// Hermite basis of the integer left kernel {x in Z^r : x m = 0}.
inline IntMatrix kernel(const IntMatrix& m) { return triangulate(m).kernel; }

/// Solves y * echelon = b for an echelon matrix with nonzero rows.
inline std::optional<std::vector<Int>> solve_echelon(const IntMatrix& echelon,
                                                     std::vector<Int> b) {
  const auto piv = pivots(echelon);
  std::vector<Int> y(echelon.rows());
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    const std::size_t p = piv[i];
    for (std::size_t j = 0; j < p; ++j)
      if (!b[j].is_zero()) return std::nullopt;
    if (b[p].is_zero()) continue;
    if (b[p] % echelon(i, p) != 0) return std::nullopt;
    y[i] = b[p] / echelon(i, p);
    for (std::size_t j = p; j < echelon.cols(); ++j)
      if (!echelon(i, j).is_zero()) b[j] -= y[i] * echelon(i, j);
  }
  for (const Int& v : b)
    if (!v.is_zero()) return std::nullopt;
  return y;
}

/// Integer solution of x m = b, or nullopt.
inline std::optional<std::vector<Int>> solve(const Triangulation& t,
                                             const std::vector<Int>& b) {
  auto y = solve_echelon(t.image, b);
  if (!y) return std::nullopt;
  return row_times(*y, t.transform);
}

inline std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                             const std::vector<Int>& b) {
  return solve(triangulate(m), b);
}

// ---------------------------------------------------------------------------
// Systems modulo n by lifting: x m = b (mod n) iff [x, z] [m; n I] = b over Z.

inline IntMatrix with_congruences(const IntMatrix& m, const Int& n) {
  IntMatrix cong(m.cols(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cong(j, j) = n;
  if (m.rows() == 0) return cong;
  return m.vstack(cong);
}

/// Hermite basis (over Z) of the lattice {x in Z^r : x m = 0 mod n}; it always
/// contains n Z^r and so has full rank r.
inline IntMatrix kernel_lattice_mod(const IntMatrix& m, const Int& n) {
  const std::size_t r = m.rows();
  IntMatrix k = kernel(with_congruences(m, n));
  IntMatrix proj(k.rows(), r);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) proj(i, j) = k(i, j);
  return hnf(std::move(proj));
}

inline std::optional<std::vector<Int>> solve_mod(const IntMatrix& m,
                                                 const std::vector<Int>& b,
                                                 const Int& n) {
  auto full = solve(with_congruences(m, n), b);
  if (!full) return std::nullopt;
  std::vector<Int> x(full->begin(), full->begin() + static_cast<std::ptrdiff_t>(m.rows()));
  for (Int& v : x) v = mod(v, n);
  return x;
}

/// Canonical generators of the Z/n-submodule of (Z/n)^c spanned by the rows
/// of m: Hermite basis of rows + n Z^c, rows with pivot n dropped, reduced.
inline IntMatrix submodule_normal_form_mod(const IntMatrix& m, const Int& n) {
  const std::size_t c = m.cols();
  IntMatrix cong(c, c);
  for (std::size_t j = 0; j < c; ++j) cong(j, j) = n;
  IntMatrix h = hnf(m.rows() == 0 ? cong : m.vstack(cong));
  const auto piv = pivots(h);
  IntMatrix out(0, c);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, piv[i]) == n) continue;
    std::vector<Int> r = h.row(i);
    for (Int& v : r) v = mod(v, n);
    out.append_row(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduced row echelon form over F_p

inline Int inverse_mod(const Int& a, const Int& p) {
  // extended Euclid
  Int r0 = mod(a, p), r1 = p, s0 = 1, s1 = 0;
  while (!r1.is_zero()) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw input_error("element is not invertible modulo " + p.str());
  return mod(s0, p);
}

/// Reduced row echelon form mod p with zero rows dropped.
inline IntMatrix rref_mod(IntMatrix m, const Int& p) {
  m.reduce_mod(p);
  const std::size_t r = m.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < r; ++col) {
    std::size_t sel = row;
    while (sel < r && m(sel, col).is_zero()) ++sel;
    if (sel == r) continue;
    m.swap_rows(row, sel);
    const Int inv = inverse_mod(m(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = mod(m(row, j) * inv, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Int f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) = mod(m(i, j) - f * m(row, j), p);
    }
    ++row;
  }
  return m.row_block(0, row);
}

struct TriangulationModP {
  IntMatrix image;      // rank x c, reduced echelon
  IntMatrix transform;  // rank x r
  IntMatrix kernel;     // reduced echelon basis of {x : x m = 0}
};

inline TriangulationModP triangulate_mod_p(const IntMatrix& m, const Int& p) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntMatrix h = rref_mod(m.hstack(IntMatrix::identity(r)), p);
  std::size_t rank = 0;
  while (rank < h.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < c; ++j)
      if (!h(rank, j).is_zero()) {
        zero = false;
        break;
      }
    if (zero) break;
    ++rank;
  }
  TriangulationModP t;
  t.image = h.block(0, 0, rank, c);
  t.transform = h.block(0, c, rank, r);
  t.kernel = h.block(rank, c, h.rows() - rank, r);
  return t;
}

inline std::optional<std::vector<Int>> solve_mod_p(const IntMatrix& m,
                                                   std::vector<Int> b,
                                                   const Int& p) {
  const auto t = triangulate_mod_p(m, p);
  for (Int& v : b) v = mod(v, p);
  const auto piv = pivots(t.image);
  std::vector<Int> y(t.image.rows());
  for (std::size_t i = 0; i < t.image.rows(); ++i) {
    y[i] = b[piv[i]];
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.image.cols(); ++j)
      if (!t.image(i, j).is_zero()) b[j] = mod(b[j] - y[i] * t.image(i, j), p);
  }
  for (const Int& v : b)
    if (!v.is_zero()) return std::nullopt;
  auto x = row_times(y, t.transform);
  for (Int& v : x) v = mod(v, p);
  return x;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct Smith {
  IntMatrix u;      // r x r unimodular
  IntMatrix d;      // r x c diagonal, d_1 | d_2 | ..., all >= 0
  IntMatrix v;      // c x c unimodular, u * m * v = d
  IntMatrix v_inv;  // inverse of v
};

inline Smith smith(const IntMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  Smith s{IntMatrix::identity(r), m, IntMatrix::identity(c), IntMatrix::identity(c)};
  IntMatrix& d = s.d;
  // Row op on d mirrors onto u; column op col_a -= q col_b mirrors onto v, and
  // its inverse (row_b += q row_a) onto v_inv.
  auto row_sub = [&](std::size_t a, std::size_t b, const Int& q) {
    d.sub_row(a, b, q);
    s.u.sub_row(a, b, q);
  };
  auto col_sub = [&](std::size_t a, std::size_t b, const Int& q) {
    d.sub_col(a, b, q);
    s.v.sub_col(a, b, q);
    s.v_inv.sub_row(b, a, -q);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    s.v.swap_cols(a, b);
    s.v_inv.swap_rows(a, b);
  };

  const std::size_t diag = std::min(r, c);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j).is_zero()) continue;
          if (bi == r || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == r) break;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t).is_zero()) continue;
        row_sub(i, t, d(i, t) / d(t, t));
        if (!d(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j).is_zero()) continue;
        col_sub(j, t, d(t, j) / d(t, t));
        if (!d(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_sub(t, bad, Int(-1));
    }
    if (d(t, t).sign() < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    d.check_growth();
  }
  return s;
}

/// Nonzero diagonal of the Smith form (d_1 | d_2 | ...) and the rank.
inline std::vector<Int> smith_diagonal(const IntMatrix& m) {
  const Smith s = smith(m);
  std::vector<Int> out;
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
    if (!s.d(t, t).is_zero()) out.push_back(s.d(t, t));
  return out;
}

}  // namespace hereditas::zlinalg
