#pragma once

// The matrix category of a ring: objects are natural numbers, a morphism
// m -> k is a k x m matrix, composition is the matrix product. Pseudo
// cokernels, the hereditary criteria and their certificates.

#include "hereditas/linear.hpp"
#include "hereditas/parallel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hereditas {

// ---------------------------------------------------------------------------
// Search bounds and candidate matrices

/// Shapes up to rows x cols; |entries| <= entry over Z; samples = 0 means
/// exhaustive enumeration (finite rings only).
struct Bound {
  std::size_t rows = 2, cols = 2;
  Int entry = 10;
  std::size_t samples = 0;

  /// "RxC[:entry[:samples]]"
  static Bound parse(const std::string& text) {
    Bound b;
    const auto bad = [&] { return input_error("bound '" + text + "' is not RxC[:entry[:samples]]"); };
    const auto x = text.find('x');
    if (x == std::string::npos) throw bad();
    const auto c1 = text.find(':', x);
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    auto number = [&](std::size_t from, std::size_t to) {
      const std::string part = text.substr(from, to == std::string::npos ? std::string::npos : to - from);
      try {
        return parse_int(part);
      } catch (const input_error&) {
        throw bad();
      }
    };
    const Int r = number(0, x), c = number(x + 1, c1);
    if (r < 1 || c < 1 || r > 64 || c > 64) throw bad();
    b.rows = static_cast<std::size_t>(r);
    b.cols = static_cast<std::size_t>(c);
    if (c1 != std::string::npos) {
      b.entry = number(c1 + 1, c2);
      if (b.entry < 0) throw bad();
    }
    if (c2 != std::string::npos) {
      const Int s = number(c2 + 1, std::string::npos);
      if (s < 0 || s > Int(100000000)) throw bad();
      b.samples = static_cast<std::size_t>(s);
    }
    return b;
  }

  std::string str() const {
    return std::to_string(rows) + "x" + std::to_string(cols) + ":" + entry.str() + ":" + std::to_string(samples);
  }

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Independent stream per (seed, index), so sampled candidates do not depend
/// on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Int matrix_count(const Ring& ring, std::size_t rows, std::size_t cols) {
  return pow(ring.size(), static_cast<unsigned>(rows * cols));
}

/// The idx-th rows x cols matrix over a finite ring; entry (0,0) varies slowest.
inline Mat matrix_at(const Ring& ring, std::size_t rows, std::size_t cols, Int idx) {
  Mat m(ring, rows, cols);
  const Int size = ring.size();
  for (std::size_t t = rows * cols; t-- > 0;) {
    m.set(t / cols, t % cols, ring.element_at(idx % size));
    idx /= size;
  }
  return m;
}

inline Mat random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, const Int& entry, Rng& rng) {
  Mat m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (ring.is_finite()) {
        m.set(i, j, ring.element_at(rng.below(ring.size())));
      } else {
        m.set(i, j, rng.below(2 * entry + 1) - entry);
      }
    }
  return m;
}

/// Candidate matrices within a bound: every shape 1..rows x 1..cols in order
/// when exhaustive, otherwise `samples` seeded draws of random shape.
class MatrixCandidates {
 public:
  static constexpr unsigned long long exhaustive_limit = 4000000;

  MatrixCandidates(Ring ring, Bound bound, std::uint64_t seed)
      : ring_(std::move(ring)), bound_(bound), seed_(seed) {
    exhaustive_ = bound_.samples == 0;
    if (exhaustive_) {
      if (!ring_.is_finite())
        throw input_error("exhaustive search needs a finite ring; give a sample count in the bound");
      Int total = 0;
      for (std::size_t r = 1; r <= bound_.rows; ++r)
        for (std::size_t c = 1; c <= bound_.cols; ++c) {
          const Int n = matrix_count(ring_, r, c);
          shapes_.push_back({r, c, total, n});
          total += n;
          if (total > Int(exhaustive_limit))
            throw input_error("exhaustive bound " + bound_.str() + " exceeds " +
                              std::to_string(exhaustive_limit) + " matrices; give a sample count");
        }
      count_ = static_cast<std::size_t>(total);
    } else {
      count_ = bound_.samples;
    }
  }

  bool exhaustive() const { return exhaustive_; }
  std::size_t size() const { return count_; }

  Mat operator[](std::size_t i) const {
    if (exhaustive_) {
      for (const auto& s : shapes_)
        if (Int(i) < s.start + s.count) return matrix_at(ring_, s.rows, s.cols, Int(i) - s.start);
      throw error("candidate index out of range");
    }
    Rng rng(derive_seed(seed_, i));
    const std::size_t r = 1 + static_cast<std::size_t>(rng.below(std::uint64_t{bound_.rows}));
    const std::size_t c = 1 + static_cast<std::size_t>(rng.below(std::uint64_t{bound_.cols}));
    return random_matrix(ring_, r, c, bound_.entry, rng);
  }

 private:
  struct Shape {
    std::size_t rows, cols;
    Int start, count;
  };
  Ring ring_;
  Bound bound_;
  std::uint64_t seed_;
  bool exhaustive_ = true;
  std::size_t count_ = 0;
  std::vector<Shape> shapes_;
};

// ---------------------------------------------------------------------------
// Pseudo cokernels

/// Pseudo 1-cokernel: rows generating {x : x a = 0}.
inline Mat pseudo_cokernel(const Mat& a) { return left_kernel(a); }

struct PseudoCokChain {
  Ring ring;
  Mat f;                       // seed A, k x m
  std::vector<Mat> chain;      // f_1 (t_1 x k), f_2 (t_2 x t_1), ...
  std::vector<Mat> witnesses;  // witnesses[i] * chain[i] = left_kernel(previous)

  std::size_t length() const { return chain.size(); }

  /// f_0 := f, f_i := chain[i-1].
  const Mat& at(std::size_t i) const { return i == 0 ? f : chain[i - 1]; }

  /// Consecutive products vanish (multiplication only).
  bool composites_vanish() const {
    for (std::size_t i = 1; i <= chain.size(); ++i)
      if (!(at(i) * at(i - 1)).is_zero()) return false;
    return true;
  }

  /// Composites vanish and every kernel row is generated by the next map.
  bool verify() const {
    if (!composites_vanish()) return false;
    for (std::size_t i = 1; i <= chain.size(); ++i)
      if (!(witnesses[i - 1] * at(i) == left_kernel(at(i - 1)))) return false;
    return true;
  }
};

inline PseudoCokChain pseudo_n_cokernel(const Mat& a, std::size_t n) {
  if (n == 0) throw input_error("pseudo n-cokernel needs n >= 1");
  PseudoCokChain c{a.ring(), a, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Mat next = pseudo_cokernel(c.at(i));
    c.witnesses.push_back(Mat::identity(a.ring(), next.rows()));
    c.chain.push_back(std::move(next));
  }
  return c;
}

/// The unsolvable system behind a failure certificate.
struct Refutation {
  std::string description;
  std::size_t unknown_rows = 0, unknown_cols = 0;
  std::vector<MatrixEquation> system;
};

inline Refutation make_refutation(const LinearSystem& sys, std::string description) {
  return {std::move(description), sys.unknown_rows(), sys.unknown_cols(), sys.equations()};
}

/// alpha with f_n alpha = 0 and alpha f_{n-1} = f_{n-1}.
inline LinearSystem alpha_system(const PseudoCokChain& c) {
  if (c.length() == 0) throw input_error("alpha_solve needs a chain of length >= 1");
  const Mat& fn = c.at(c.length());
  const Mat& fp = c.at(c.length() - 1);
  if (fn.cols() != fp.rows()) throw input_error("chain shapes " + fn.shape() + " and " + fp.shape() + " do not compose");
  const std::size_t s = fp.rows();
  LinearSystem sys(c.ring, s, s);
  sys.add(fn, Mat::identity(c.ring, s), Mat(c.ring, fn.rows(), s));
  sys.add(Mat::identity(c.ring, s), fp, fp);
  return sys;
}

inline std::optional<Mat> alpha_solve(const PseudoCokChain& c) { return alpha_system(c).solve(); }

/// P with g P = I.
inline std::optional<Mat> split_cokernel_test(const Mat& g) {
  return solve_middle_linear(g, Mat::identity(g.ring(), g.rows()), Mat::identity(g.ring(), g.rows()));
}

// ---------------------------------------------------------------------------
// Hereditary certificates

struct HereditaryCertificate {
  bool success = false;
  std::size_t n = 1;
  Mat a;
  Mat b;                 // pseudo cokernel f_1
  std::optional<Mat> c;  // B C = 0, C A = A
  std::optional<Mat> h;  // h B = I - C, so alpha = I - h B
  std::optional<Mat> alpha;
  std::optional<PseudoCokChain> chain;
  std::optional<Refutation> refutation;
  bool cross_checked = true;  // n = 1: both certificate routes agree

  /// Re-checks every stored certificate by multiplication.
  bool verify() const {
    const Ring& r = a.ring();
    if (chain && !chain->composites_vanish()) return false;
    if (success == refutation.has_value()) return false;
    if (c) {
      if (!(b * *c).is_zero() || !(*c * a == a)) return false;
    }
    if (alpha) {
      if (!chain) return false;
      const Mat& fn = chain->at(chain->length());
      const Mat& fp = chain->at(chain->length() - 1);
      if (!(fn * *alpha).is_zero() || !(*alpha * fp == fp)) return false;
    }
    if (h && c) {
      const Mat id = Mat::identity(r, a.rows());
      const Mat rebuilt = id - *h * b;
      if (!(rebuilt == *c) || !(b * rebuilt).is_zero() || !(rebuilt * a == a)) return false;
    }
    return cross_checked;
  }
};

/// B C = 0 and C A = A with B the pseudo cokernel of A.
inline LinearSystem semi_hereditary_system(const Mat& a, const Mat& b) {
  const Ring& r = a.ring();
  const std::size_t k = a.rows();
  LinearSystem sys(r, k, k);
  sys.add(b, Mat::identity(r, k), Mat(r, b.rows(), k));
  sys.add(Mat::identity(r, k), a, a);
  return sys;
}

inline HereditaryCertificate semi_hereditary_witness(const Mat& a) {
  HereditaryCertificate cert;
  cert.n = 1;
  cert.a = a;
  cert.b = pseudo_cokernel(a);
  const LinearSystem sys = semi_hereditary_system(a, cert.b);
  cert.c = sys.solve();
  cert.success = cert.c.has_value();
  if (!cert.success) cert.refutation = make_refutation(sys, "B C = 0 and C A = A");
  return cert;
}

/// h with h B = I - C; exists because the rows of I - C lie in the kernel of A.
inline std::optional<Mat> alpha_factor(const Mat& b, const Mat& c) {
  const Ring& r = c.ring();
  const std::size_t k = c.rows();
  LinearSystem sys(r, k, b.rows());
  sys.add(Mat::identity(r, k), b, Mat::identity(r, k) - c);
  return sys.solve();
}

inline HereditaryCertificate n_hereditary_witness(const Mat& a, std::size_t n) {
  HereditaryCertificate cert;
  cert.n = n;
  cert.a = a;
  cert.chain = pseudo_n_cokernel(a, n);
  cert.b = cert.chain->at(1);
  const LinearSystem sys = alpha_system(*cert.chain);
  cert.alpha = sys.solve();
  cert.success = cert.alpha.has_value();
  if (!cert.success) cert.refutation = make_refutation(sys, "f_n alpha = 0 and alpha f_{n-1} = f_{n-1}");
  if (n == 1) {
    const HereditaryCertificate route = semi_hereditary_witness(a);
    cert.c = route.c;
    if (route.c) {
      cert.h = alpha_factor(cert.b, *route.c);
      cert.cross_checked = cert.h.has_value() && cert.success;
    } else {
      cert.cross_checked = !cert.success;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Ring-level bounded report

struct HereditaryReport {
  Ring ring;
  std::size_t n = 1;
  Bound bound;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t tested = 0;
  std::optional<std::size_t> counterexample_index;
  std::optional<HereditaryCertificate> counterexample;

  bool verified() const { return !counterexample.has_value(); }
};

/// Searches the bound for a matrix without an n-hereditary certificate. Every
/// success certificate found on the way is re-verified.
inline HereditaryReport ring_hereditary_report(const Ring& ring, std::size_t n, const Bound& bound,
                                               std::uint64_t seed, std::size_t jobs = 1) {
  const MatrixCandidates cand(ring, bound, seed);
  HereditaryReport rep{ring, n, bound, seed, cand.exhaustive(), cand.size(), std::nullopt, std::nullopt};
  const auto first = parallel_find_first(cand.size(), jobs, [&](std::size_t i) {
    const HereditaryCertificate cert = n_hereditary_witness(cand[i], n);
    if (!cert.verify()) throw error("certificate for " + cand[i].str() + " failed re-verification");
    return !cert.success;
  });
  if (first) {
    rep.counterexample_index = *first;
    rep.tested = *first + 1;
    rep.counterexample = n_hereditary_witness(cand[*first], n);
  }
  return rep;
}

}  // namespace hereditas
