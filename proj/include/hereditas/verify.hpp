#pragma once

// Report verifier. It re-checks every certificate in a report using only
// matrix products and comparisons, with its own product routine on the raw
// structure constants, so nothing here depends on the solvers.

#include "hereditas/io.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hereditas::verify {

using io::json;

/// A ring reduced to what multiplication needs.
struct Arith {
  Int modulus;  // 0 for Z
  std::size_t dim = 1;
  std::vector<Int> constants;  // empty for scalar rings
  std::vector<std::string> names;

  static Arith from_json(const json& j, bool opposite) {
    const Ring r = io::ring_from_json(j);
    Arith a{r.modulus(), r.width(), {}, r.basis_names()};
    if (r.kind() == RingKind::algebra) {
      const std::size_t n = a.dim;
      a.constants.resize(n * n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            a.constants[(i * n + k) * n + l] = opposite ? r.c(k, i, l) : r.c(i, k, l);
    }
    return a;
  }

  bool finite() const { return !modulus.is_zero(); }

  void reduce(std::vector<Int>& v) const {
    if (!finite()) return;
    for (Int& x : v) {
      x %= modulus;
      if (x < 0) x += modulus;
    }
  }
};

/// Row-major matrix of coordinate vectors.
struct VMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> data;  // rows * cols * dim
};

inline VMat parse(const Arith& a, const json& j) {
  VMat m;
  const json* entries = j.is_object() ? &j.at("entries") : &j;
  if (j.is_object() && j.contains("shape")) {
    m.rows = j.at("shape")[0].get<std::size_t>();
    m.cols = j.at("shape")[1].get<std::size_t>();
  } else {
    m.rows = entries->size();
    m.cols = m.rows ? (*entries)[0].size() : 0;
  }
  m.data.assign(m.rows * m.cols * a.dim, Int(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t c = 0; c < m.cols; ++c) {
      const json& e = (*entries)[i][c];
      std::vector<Int> v(a.dim);
      if (a.constants.empty()) {
        v[0] = io::int_from_json(e, "entry");
      } else if (e.is_array()) {
        for (std::size_t t = 0; t < a.dim; ++t) v[t] = io::int_from_json(e[t], "coordinate");
      } else {
        v = io::parse_expression(a.names, a.modulus, e.get<std::string>());
      }
      a.reduce(v);
      for (std::size_t t = 0; t < a.dim; ++t) m.data[(i * m.cols + c) * a.dim + t] = v[t];
    }
  return m;
}

inline VMat product(const Arith& a, const VMat& x, const VMat& y) {
  if (x.cols != y.rows) throw input_error("certificate matrices do not compose");
  const std::size_t d = a.dim;
  VMat out{x.rows, y.cols, std::vector<Int>(x.rows * y.cols * d)};
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k)
      for (std::size_t j = 0; j < y.cols; ++j) {
        const Int* u = &x.data[(i * x.cols + k) * d];
        const Int* v = &y.data[(k * y.cols + j) * d];
        Int* w = &out.data[(i * out.cols + j) * d];
        if (a.constants.empty()) {
          w[0] += u[0] * v[0];
          continue;
        }
        for (std::size_t p = 0; p < d; ++p) {
          if (u[p].is_zero()) continue;
          for (std::size_t q = 0; q < d; ++q) {
            if (v[q].is_zero()) continue;
            for (std::size_t l = 0; l < d; ++l) {
              const Int& c = a.constants[(p * d + q) * d + l];
              if (!c.is_zero()) w[l] += u[p] * v[q] * c;
            }
          }
        }
      }
  a.reduce(out.data);
  return out;
}

inline VMat identity(const Arith& a, std::size_t n, const std::vector<Int>& one) {
  VMat m{n, n, std::vector<Int>(n * n * a.dim)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < a.dim; ++t) m.data[(i * n + i) * a.dim + t] = one[t];
  return m;
}

inline bool equal(const VMat& x, const VMat& y) { return x.rows == y.rows && x.cols == y.cols && x.data == y.data; }

inline bool is_zero(const VMat& x) {
  for (const Int& v : x.data)
    if (!v.is_zero()) return false;
  return true;
}

inline VMat minus(const Arith& a, VMat x, const VMat& y) {
  for (std::size_t t = 0; t < x.data.size(); ++t) x.data[t] -= y.data[t];
  a.reduce(x.data);
  return x;
}

struct Outcome {
  std::size_t checked = 0, passed = 0, skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Exhaustive search bound for re-checking refutations over finite rings.
inline constexpr unsigned long long refutation_search_limit = 1ULL << 16;

/// Checks one certificate object; returns false on failure, nullopt when the
/// certificate kind cannot be checked by multiplication at this size.
inline std::optional<bool> check_certificate(const json& cert) {
  const std::string kind = cert.at("kind").get<std::string>();
  const Arith a = Arith::from_json(cert.at("ring"), cert.value("opposite", false));
  const json& one_j = cert.at("one");
  std::vector<Int> one(a.dim);
  for (std::size_t t = 0; t < a.dim; ++t) one[t] = io::int_from_json(one_j[t], "one");
  auto m = [&](const char* key) { return parse(a, cert.at(key)); };
  auto id = [&](std::size_t n) { return identity(a, n, one); };

  if (kind == "semi-hereditary") {
    const VMat A = m("A"), B = m("B"), C = m("C");
    return is_zero(product(a, B, A)) && is_zero(product(a, B, C)) && equal(product(a, C, A), A);
  }
  if (kind == "chain" || kind == "n-hereditary") {
    std::vector<VMat> f;
    for (const auto& x : cert.at("maps")) f.push_back(parse(a, x));
    for (std::size_t i = 1; i < f.size(); ++i)
      if (!is_zero(product(a, f[i], f[i - 1]))) return false;
    if (kind == "chain") return true;
    const VMat al = m("alpha");
    const VMat& fn = f.back();
    const VMat& fp = f[f.size() - 2];
    if (!is_zero(product(a, fn, al)) || !equal(product(a, al, fp), fp)) return false;
    if (cert.contains("C") && !cert.at("C").is_null()) {
      const VMat C = m("C"), h = m("h");
      const VMat& A = f[0];
      const VMat& B = f[1];
      const VMat rebuilt = minus(a, id(C.rows), product(a, h, B));
      if (!equal(rebuilt, C) || !is_zero(product(a, B, C)) || !equal(product(a, C, A), A)) return false;
    }
    return true;
  }
  if (kind == "split") {
    const VMat G = m("G"), P = m("P");
    return equal(product(a, G, P), id(G.rows));
  }
  if (kind == "projective") {
    const VMat A = m("A"), U = m("U");
    return equal(product(a, product(a, A, U), A), A);
  }
  if (kind == "morphism") {
    const VMat rs = m("source_relations"), g = m("gen_matrix"), w = m("rel_witness"), rt = m("target_relations");
    return equal(product(a, rs, g), product(a, w, rt));
  }
  if (kind == "refutation") {
    // No U solves the system: enumerate U when the search space is small.
    if (!a.finite()) return std::nullopt;
    const std::size_t r = cert.at("unknown")[0].get<std::size_t>(), c = cert.at("unknown")[1].get<std::size_t>();
    const Int ring_size = pow(a.modulus, static_cast<unsigned>(a.dim));
    const Int total = pow(ring_size, static_cast<unsigned>(r * c));
    if (total > Int(refutation_search_limit)) return std::nullopt;
    std::vector<std::array<VMat, 3>> eqs;
    for (const auto& e : cert.at("equations")) eqs.push_back({parse(a, e.at("left")), parse(a, e.at("right")), parse(a, e.at("target"))});
    for (Int idx = 0; idx < total; ++idx) {
      VMat u{r, c, std::vector<Int>(r * c * a.dim)};
      Int rest = idx;
      for (std::size_t t = 0; t < u.data.size(); ++t) {
        u.data[t] = rest % a.modulus;
        rest /= a.modulus;
      }
      bool all = true;
      for (const auto& e : eqs)
        if (!equal(product(a, product(a, e[0], u), e[1]), e[2])) {
          all = false;
          break;
        }
      if (all) return false;
    }
    return true;
  }
  throw input_error("unknown certificate kind '" + kind + "'");
}

inline void walk(const json& j, const std::string& path, Outcome& out) {
  if (j.is_object()) {
    if (j.contains("certificate") && j.at("certificate").is_object() && j.at("certificate").contains("kind")) {
      ++out.checked;
      const auto r = check_certificate(j.at("certificate"));
      const std::string where = path + "/certificate (" + j.at("certificate").at("kind").get<std::string>() + ")";
      if (!r) {
        ++out.skipped;
        out.notes.push_back(where + ": too large to re-check by enumeration");
      } else if (*r) {
        ++out.passed;
      } else {
        out.failures.push_back(where);
      }
    }
    for (const auto& [k, v] : j.items())
      if (k != "certificate") walk(v, path + "/" + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], path + "/" + std::to_string(i), out);
  }
}

inline Outcome verify_report(const json& report) {
  if (!report.is_object() || !report.contains("results")) throw input_error("not a hereditas report");
  Outcome out;
  walk(report.at("results"), "results", out);
  return out;
}

}  // namespace hereditas::verify
