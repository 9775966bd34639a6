#pragma once

// Brute-force references over Z/n with plain 64-bit arithmetic. Nothing here
// calls into the library: every answer comes from enumerating all candidates.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

struct M64 {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> a;
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  friend bool operator==(const M64&, const M64&) = default;
};

inline M64 zeros(std::size_t r, std::size_t c) { return {r, c, std::vector<std::int64_t>(r * c, 0)}; }

inline M64 identity(std::size_t n) {
  M64 m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline M64 mul(const M64& x, const M64& y, std::int64_t n) {
  M64 out = zeros(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k)
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) = (out(i, j) + x(i, k) * y(k, j)) % n;
  return out;
}

inline bool is_zero(const M64& m) {
  for (auto v : m.a)
    if (v) return false;
  return true;
}

/// Calls fn on every vector in (Z/n)^len; stops early when fn returns true.
inline bool any_vector(std::size_t len, std::int64_t n, const std::function<bool(const Vec&)>& fn) {
  Vec v(len, 0);
  for (;;) {
    if (fn(v)) return true;
    std::size_t i = 0;
    while (i < len && ++v[i] == n) v[i++] = 0;
    if (i == len) return false;
  }
}

inline bool any_matrix(std::size_t r, std::size_t c, std::int64_t n, const std::function<bool(const M64&)>& fn) {
  M64 m = zeros(r, c);
  return any_vector(r * c, n, [&](const Vec& v) {
    m.a = v;
    return fn(m);
  });
}

inline Vec row_times(const Vec& x, const M64& a, std::int64_t n) {
  Vec out(a.cols, 0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out[j] = (out[j] + x[i] * a(i, j)) % n;
  return out;
}

/// {x A : x in (Z/n)^rows}.
inline std::set<Vec> row_space(const M64& a, std::int64_t n) {
  std::set<Vec> out;
  if (a.rows == 0) {
    out.insert(Vec(a.cols, 0));
    return out;
  }
  any_vector(a.rows, n, [&](const Vec& x) {
    out.insert(row_times(x, a, n));
    return false;
  });
  return out;
}

/// {x : x A = 0}.
inline std::set<Vec> left_kernel(const M64& a, std::int64_t n) {
  std::set<Vec> out;
  any_vector(a.rows, n, [&](const Vec& x) {
    const Vec y = row_times(x, a, n);
    bool zero = true;
    for (auto v : y) zero = zero && v == 0;
    if (zero) out.insert(x);
    return false;
  });
  return out;
}

/// Some U with A U C = T.
inline bool exists_middle(const M64& a, const M64& c, const M64& t, std::int64_t n) {
  return any_matrix(a.cols, c.rows, n, [&](const M64& u) { return mul(mul(a, u, n), c, n) == t; });
}

/// Some C with x C = 0 for every x in the kernel of A, and C A = A.
inline bool exists_semi_hereditary(const M64& a, std::int64_t n) {
  const auto ker = left_kernel(a, n);
  return any_matrix(a.rows, a.rows, n, [&](const M64& c) {
    if (!(mul(c, a, n) == a)) return false;
    for (const auto& x : ker)
      for (auto v : row_times(x, c, n))
        if (v) return false;
    return true;
  });
}

/// Some alpha with f alpha = 0 and alpha g = g, where f is given only through
/// its row space (brute-forced from the rows of fn).
inline bool exists_alpha(const M64& fn, const M64& g, std::int64_t n) {
  const auto rows = row_space(fn, n);
  return any_matrix(g.rows, g.rows, n, [&](const M64& al) {
    if (!(mul(al, g, n) == g)) return false;
    for (const auto& x : rows)
      for (auto v : row_times(x, al, n))
        if (v) return false;
    return true;
  });
}

/// Some P with G P = I.
inline bool exists_right_inverse(const M64& g, std::int64_t n) {
  const M64 id = identity(g.rows);
  return any_matrix(g.cols, g.rows, n, [&](const M64& p) { return mul(g, p, n) == id; });
}

// ---------------------------------------------------------------------------
// Module counts over Z/n: M = (Z/n)^k / rowspace(R)

struct Module {
  std::size_t gens;
  M64 rel;  // r x gens
};

/// Number of module maps M -> N, by enumerating images of generators.
inline std::size_t hom_count(const Module& m, const Module& n_mod, std::int64_t n) {
  const auto sub = row_space(n_mod.rel, n);
  // Representatives of N: vectors in (Z/n)^g; count tuples, divide by |sub|^k.
  std::size_t tuples = 0;
  const std::size_t g = n_mod.gens, k = m.gens;
  any_vector(k * g, n, [&](const Vec& images) {
    for (std::size_t i = 0; i < m.rel.rows; ++i) {
      Vec sum(g, 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < g; ++t) sum[t] = (sum[t] + m.rel(i, j) * images[j * g + t]) % n;
      if (!sub.count(sum)) return false;
    }
    ++tuples;
    return false;
  });
  std::size_t denom = 1;
  for (std::size_t j = 0; j < k; ++j) denom *= sub.size();
  return tuples / denom;
}

inline std::size_t order(const Module& m, std::int64_t n) {
  std::size_t total = 1;
  for (std::size_t j = 0; j < m.gens; ++j) total *= static_cast<std::size_t>(n);
  return total / row_space(m.rel, n).size();
}

/// |Ext^1(M, N)| from 0 -> Hom(M,N) -> Hom(F,N) -> Hom(K,N) -> Ext^1 -> 0 with
/// F free on M's generators and K the relation submodule; Hom(K, N) counts
/// assignments on relation rows respecting every linear dependency.
inline std::size_t ext1_order(const Module& m, const Module& n_mod, std::int64_t n) {
  const auto sub = row_space(n_mod.rel, n);
  const std::size_t g = n_mod.gens, r = m.rel.rows;
  M64 rel_t = m.rel;
  const auto deps = left_kernel(rel_t, n);  // c with sum c_i r_i = 0
  std::size_t hom_k = 0;
  any_vector(r * g, n, [&](const Vec& images) {
    for (const auto& c : deps) {
      Vec sum(g, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < g; ++t) sum[t] = (sum[t] + c[i] * images[i * g + t]) % n;
      if (!sub.count(sum)) return false;
    }
    ++hom_k;
    return false;
  });
  // The assignments above are tuples of representatives; K is generated by r
  // rows, so divide by |sub|^r.
  std::size_t denom = 1;
  for (std::size_t i = 0; i < r; ++i) denom *= sub.size();
  hom_k /= denom;
  std::size_t hom_f = 1;
  for (std::size_t j = 0; j < m.gens; ++j) hom_f *= order(n_mod, n);
  return hom_k * hom_count(m, n_mod, n) / hom_f;
}

}  // namespace oracle
