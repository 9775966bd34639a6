#pragma once

#include "hereditas/hereditas.hpp"
#include "oracle.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace support {

using namespace hereditas;

inline Ring zmod(long long n) { return Ring::integers_mod(Int(n)); }

inline Mat mat(const Ring& r, std::size_t rows, std::size_t cols, std::initializer_list<long long> e) {
  return Mat(r, rows, cols, e);
}

/// Path algebra of 1 -> 2 over F_2 with basis e1, e2, a; paths compose left
/// to right, so a = e2 a = a e1.
inline Ring path_a2() {
  std::vector<Int> c(27);
  auto put = [&](int i, int j, int k) { c[(i * 3 + j) * 3 + k] = 1; };
  put(0, 0, 0);
  put(1, 1, 1);
  put(1, 2, 2);
  put(2, 0, 2);
  return Ring::algebra(Int(2), {"e1", "e2", "a"}, c, {0, 1});
}

inline Mat algebra_scalar(const Ring& r, const std::string& name) {
  Mat m(r, 1, 1);
  for (std::size_t i = 0; i < r.basis_names().size(); ++i)
    if (r.basis_names()[i] == name) m.set(0, 0, r.basis(i));
  return m;
}

inline FgAbGroup group(std::size_t free_rank, std::vector<long long> inv) {
  FgAbGroup g;
  g.free_rank = free_rank;
  for (long long d : inv) g.invariant_factors.push_back(Int(d));
  return g;
}

inline oracle::M64 to64(const Mat& m) {
  oracle::M64 out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).convert_to<std::int64_t>();
  return out;
}

inline Mat from64(const Ring& r, const oracle::M64& m) {
  Mat out(r, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.set(i, j, Int(m(i, j)));
  return out;
}

inline Mat row_vector(const Ring& r, const oracle::Vec& v) {
  Mat out(r, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out.set(0, j, Int(v[j]));
  return out;
}

/// Every matrix over Z/n with the given shape, as int64 data.
inline std::vector<oracle::M64> all_matrices(std::size_t r, std::size_t c, std::int64_t n) {
  std::vector<oracle::M64> out;
  oracle::any_matrix(r, c, n, [&](const oracle::M64& m) {
    out.push_back(m);
    return false;
  });
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> small_shapes() { return {{1, 1}, {1, 2}, {2, 1}, {2, 2}}; }

inline Mat random_int_matrix(std::size_t rows, std::size_t cols, long long bound, Rng& rng) {
  Mat m(Ring::integers(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Int(rng.between(-bound, bound)));
  return m;
}

inline oracle::M64 random64(std::size_t rows, std::size_t cols, std::int64_t n, Rng& rng) {
  oracle::M64 m = oracle::zeros(rows, cols);
  for (auto& v : m.a) v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
  return m;
}

inline oracle::Module to_oracle(const FpModule& m) { return {m.generators(), to64(m.relations())}; }

/// Determinant over Z by cofactor expansion (small matrices only).
inline Int det(const Mat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor(m.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor.set(i - 1, c++, m.at(i, k));
    const Int term = m.at(0, j) * det(minor);
    total += (j % 2 ? -term : term);
  }
  return total;
}

}  // namespace support
