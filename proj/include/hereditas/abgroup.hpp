#pragma once

// Finitely generated abelian groups Z^g / L, their invariant factors, and
// subquotients (kernel of a map modulo an image), computed with integer
// normal forms.

#include "hereditas/zlinalg.hpp"

#include <string>
#include <vector>

namespace hereditas {

/// Free rank plus invariant factors d_1 | d_2 | ..., each d_i >= 2. The
/// representation is unique, so == decides isomorphism.
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int order() const {
    if (!is_finite()) throw unsupported_error("infinite group has no finite order");
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
  }

  Int exponent() const {
    if (!is_finite()) throw unsupported_error("infinite group has no exponent");
    return invariant_factors.empty() ? Int(1) : invariant_factors.back();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const Int& d : invariant_factors) {
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    if (free_rank > 0) {
      if (!out.empty()) out += " + ";
      out += free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank);
    }
    return out;
  }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

/// Z^gens / (row lattice of relations).
struct GroupPresentation {
  std::size_t gens = 0;
  zlinalg::IntMatrix relations{0, 0};
};

/// Adapted coordinates from the Smith form: the group is the direct sum of
/// cyclic factors of the given orders (0 = infinite cyclic).
struct SmithCoordinates {
  std::vector<Int> orders;        // nontrivial factors only, torsion first
  zlinalg::IntMatrix to_coords;   // gens x s, x -> x * to_coords
  zlinalg::IntMatrix basis;       // s x gens, generator i in original coordinates

  std::size_t size() const { return orders.size(); }

  /// Canonical coordinates of x (torsion entries reduced).
  std::vector<Int> coordinates(const std::vector<Int>& x) const {
    auto c = zlinalg::row_times(x, to_coords);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!orders[i].is_zero()) c[i] = mod(c[i], orders[i]);
    return c;
  }

  bool is_zero_element(const std::vector<Int>& x) const {
    for (const Int& v : coordinates(x))
      if (!v.is_zero()) return false;
    return true;
  }
};

inline SmithCoordinates smith_coordinates(const GroupPresentation& g) {
  const std::size_t n = g.gens;
  zlinalg::IntMatrix rel = g.relations.rows() == 0 ? zlinalg::IntMatrix(0, n) : g.relations;
  const auto s = zlinalg::smith(rel);
  // Column t of v gives coordinate t; rows of v_inv are the new generators.
  std::vector<std::size_t> torsion, free;
  for (std::size_t t = 0; t < n; ++t) {
    const Int d = t < rel.rows() ? s.d(t, t) : Int(0);
    if (d == 1) continue;
    (d.is_zero() ? free : torsion).push_back(t);
  }
  SmithCoordinates sc;
  std::vector<std::size_t> keep = torsion;
  keep.insert(keep.end(), free.begin(), free.end());
  sc.to_coords = zlinalg::IntMatrix(n, keep.size());
  sc.basis = zlinalg::IntMatrix(keep.size(), n);
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const std::size_t t = keep[c];
    sc.orders.push_back(t < rel.rows() ? s.d(t, t) : Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      sc.to_coords(i, c) = s.v(i, t);
      sc.basis(c, i) = s.v_inv(t, i);
    }
  }
  return sc;
}

inline FgAbGroup structure(const GroupPresentation& g) {
  FgAbGroup out;
  for (const Int& d : smith_coordinates(g).orders) {
    if (d.is_zero()) {
      ++out.free_rank;
    } else {
      out.invariant_factors.push_back(d);
    }
  }
  return out;
}

inline FgAbGroup cyclic_sum(const std::vector<Int>& orders) {
  GroupPresentation g{orders.size(), zlinalg::IntMatrix(orders.size(), orders.size())};
  for (std::size_t i = 0; i < orders.size(); ++i) g.relations(i, i) = orders[i];
  return structure(g);
}

/// ker(phi: mid -> next) / (span(incoming) + L_mid), with phi given on
/// generators (mid.gens x next.gens) and incoming rows in Z^{mid.gens}.
struct Subquotient {
  zlinalg::IntMatrix basis;     // s x mid.gens, Hermite basis of the kernel lattice
  GroupPresentation quotient;   // Z^s modulo incoming + L_mid in kernel coordinates
  FgAbGroup group;
};

inline Subquotient subquotient(const GroupPresentation& mid, const zlinalg::IntMatrix& phi,
                               const GroupPresentation& next, const zlinalg::IntMatrix& incoming) {
  const std::size_t g1 = mid.gens;
  // x phi in L_next  <=>  [x, y] [phi; R_next] = 0
  zlinalg::IntMatrix stacked = phi;
  if (next.relations.rows() > 0) stacked = phi.vstack(next.relations);
  zlinalg::IntMatrix k = zlinalg::kernel(stacked);
  zlinalg::IntMatrix proj(k.rows(), g1);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < g1; ++j) proj(i, j) = k(i, j);
  Subquotient sq;
  sq.basis = zlinalg::hnf(std::move(proj));
  const std::size_t s = sq.basis.rows();
  sq.quotient.gens = s;
  sq.quotient.relations = zlinalg::IntMatrix(0, s);
  auto add_relations = [&](const zlinalg::IntMatrix& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      auto c = zlinalg::solve_echelon(sq.basis, rows.row(i));
      if (!c) throw error("subquotient: relation outside the kernel lattice (map not well defined)");
      sq.quotient.relations.append_row(*c);
    }
  };
  add_relations(incoming);
  add_relations(mid.relations);
  if (sq.quotient.relations.rows() == 0) sq.quotient.relations = zlinalg::IntMatrix(0, s);
  sq.group = structure(sq.quotient);
  return sq;
}

/// Image of a map src -> dst as a subgroup of dst, returned as an abelian group.
inline FgAbGroup image_group(const GroupPresentation& src, const zlinalg::IntMatrix& phi,
                             const GroupPresentation& dst) {
  // im = (phi rows + L_dst) / L_dst
  zlinalg::IntMatrix gen = phi.rows() == 0 ? zlinalg::IntMatrix(0, dst.gens) : phi;
  (void)src;
  zlinalg::IntMatrix lattice = gen;
  if (dst.relations.rows() > 0) lattice = gen.rows() ? gen.vstack(dst.relations) : dst.relations;
  zlinalg::IntMatrix basis = zlinalg::hnf(lattice);
  GroupPresentation q{basis.rows(), zlinalg::IntMatrix(0, basis.rows())};
  for (std::size_t i = 0; i < dst.relations.rows(); ++i) {
    auto c = zlinalg::solve_echelon(basis, dst.relations.row(i));
    q.relations.append_row(*c);
  }
  if (q.relations.rows() == 0) q.relations = zlinalg::IntMatrix(0, basis.rows());
  return structure(q);
}

}  // namespace hereditas
