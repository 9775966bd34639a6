#pragma once

// Exact matrices over a Ring. A k x m matrix is a morphism m -> k in the
// matrix category, so composition is the ordinary product.

#include "hereditas/ring.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hereditas {

class Mat {
 public:
  Mat() = default;
  Mat(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols * ring_.width()) {}

  /// Scalar-ring convenience: row-major integer entries.
  Mat(Ring ring, std::size_t rows, std::size_t cols, std::initializer_list<long long> entries)
      : Mat(std::move(ring), rows, cols) {
    if (ring_.width() != 1) throw input_error("integer literal matrix needs a scalar ring");
    if (entries.size() != rows * cols) throw input_error("entry count does not match shape");
    std::size_t i = 0;
    for (long long v : entries) data_[i++] = Int(v);
    ring_.reduce(data_);
  }

  static Mat identity(const Ring& ring, std::size_t n) {
    Mat m(ring, n, n);
    const Elem one = ring.one();
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

  static Mat zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Mat(ring, rows, cols);
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t width() const { return ring_.width(); }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::span<const Int> entry(std::size_t i, std::size_t j) const {
    return {data_.data() + offset(i, j), ring_.width()};
  }
  std::span<Int> entry(std::size_t i, std::size_t j) {
    return {data_.data() + offset(i, j), ring_.width()};
  }

  /// Scalar value of entry (i, j); only for width-1 rings.
  const Int& at(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }

  void set(std::size_t i, std::size_t j, std::span<const Int> value) {
    auto dst = entry(i, j);
    for (std::size_t t = 0; t < value.size(); ++t) dst[t] = value[t];
    ring_.reduce(dst);
  }

  void set(std::size_t i, std::size_t j, const Int& scalar) { set(i, j, ring_.scalar(scalar)); }

  const std::vector<Int>& data() const { return data_; }

  bool is_zero() const {
    for (const Int& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ensure(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Mat out(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out.set(i, j, entry(r0 + i, c0 + j));
    return out;
  }

  Mat vstack(const Mat& below) const {
    check_ring(below);
    ensure(cols_ == below.cols_, "vstack column mismatch");
    Mat out(ring_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  Mat hstack(const Mat& right) const {
    check_ring(right);
    ensure(rows_ == right.rows_, "hstack row mismatch");
    Mat out(ring_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, entry(i, j));
      for (std::size_t j = 0; j < right.cols_; ++j) out.set(i, cols_ + j, right.entry(i, j));
    }
    return out;
  }

  /// Same entries viewed over another ring of equal width (e.g. the opposite).
  Mat over(const Ring& other) const {
    ensure(other.width() == ring_.width() && other.modulus() == ring_.modulus(),
           "cannot reinterpret matrix over a ring with different elements");
    Mat out = *this;
    out.ring_ = other;
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    a.check_ring(b);
    ensure(a.cols_ == b.rows_, "product shape mismatch: " + a.shape() + " * " + b.shape());
    Mat out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        auto x = a.entry(i, k);
        if (a.ring_.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) a.ring_.fma(out.entry(i, j), x, b.entry(k, j));
      }
    return out;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.check_ring(b);
    ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "sum shape mismatch");
    Mat out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] += b.data_[t];
    out.ring_.reduce(out.data_);
    return out;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.check_ring(b);
    ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "difference shape mismatch");
    Mat out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] -= b.data_[t];
    out.ring_.reduce(out.data_);
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += ring_.format(entry(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  void check_ring(const Mat& other) const {
    if (!(ring_ == other.ring_))
      throw input_error("ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }

 private:
  static void ensure(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
  }

  std::size_t offset(std::size_t i, std::size_t j) const {
    return (i * cols_ + j) * ring_.width();
  }

  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Block diagonal sum diag(a, b).
inline Mat direct_sum(const Mat& a, const Mat& b) {
  a.check_ring(b);
  Mat out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.entry(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.entry(i, j));
  return out;
}

}  // namespace hereditas
