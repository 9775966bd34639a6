#pragma once

// Ext^1, Tor_1 and tensor products on underlying abelian groups, the
// character module M+ = Hom_Z(M, Q/Z) for finite M, and executable checks of
// the idempotent (co)Yoneda isomorphisms and the Ext-Tor dualities.
//
// Q/Z is never represented: a finite module of exponent e dualizes into Z/e.

#include "hereditas/fpmod.hpp"

#include <string>
#include <vector>

namespace hereditas {

namespace detail {

inline FpModule side_for(const FpModule& m, Side s, const char* role) {
  if (m.side() == s) return m;
  if (m.ring().is_commutative()) return m.with_side(s);
  throw input_error(std::string(role) + " must be a " + to_string(s) + " module");
}

inline GroupPresentation trivial_group() { return {0, IntMatrix(0, 0)}; }

}  // namespace detail

/// Ext^1(F, N) from Hom(-, N) applied to F_2 -> F_1 -> F_0.
inline FgAbGroup ext1(const FpModule& f, const FpModule& n) {
  require_same_ring(f, n);
  if (f.side() != n.side()) throw input_error("Ext needs modules on the same side");
  const auto pres = build_n_presentation(f, 2);
  const Mat& d1 = pres.maps[0];
  const Mat& d2 = pres.maps[1];
  const GroupPresentation gn = underlying_group(n);
  return subquotient(group_power(gn, d1.rows()), hom_induced_map(n, d2), group_power(gn, d2.rows()),
                     hom_induced_map(n, d1))
      .group;
}

/// Tor_1(N, F) for modules on opposite sides, from a presentation of N
/// tensored with F.
inline FgAbGroup tor1(const FpModule& n, const FpModule& f) {
  require_same_ring(n, f);
  if (n.side() == f.side()) throw input_error("Tor needs modules on opposite sides");
  const auto pres = build_n_presentation(n, 2);
  const Mat& d1 = pres.maps[0];
  const Mat& d2 = pres.maps[1];
  const GroupPresentation gf = underlying_group(f);
  return subquotient(group_power(gf, d1.rows()), tensor_induced_map(d1, f), group_power(gf, d1.cols()),
                     tensor_induced_map(d2, f))
      .group;
}

/// N (x) F for modules on opposite sides.
inline FgAbGroup tensor_product(const FpModule& n, const FpModule& f) {
  require_same_ring(n, f);
  if (n.side() == f.side()) throw input_error("tensor product needs modules on opposite sides");
  const GroupPresentation gf = underlying_group(f);
  const std::size_t k0 = n.generators();
  return subquotient(group_power(gf, k0), IntMatrix(k0 * gf.gens, 0), detail::trivial_group(),
                     tensor_induced_map(n.relations(), f))
      .group;
}

inline FgAbGroup hom_group(const FpModule& m, const FpModule& n) { return hom_module(m, n).group; }

/// Hom_Z(G, Q/Z) for finite G, which is isomorphic to G.
inline FgAbGroup pontryagin_dual(const FgAbGroup& g) {
  if (!g.is_finite()) throw unsupported_error("dual of an infinite group is not finitely generated");
  return g;
}

// ---------------------------------------------------------------------------
// Character modules

/// M+ on the opposite side, realized inside Z/e for e = exponent(M).
struct CharModule {
  FpModule source;
  FpModule dual;
  SmithCoordinates source_coords;  // cyclic decomposition u_1..u_s of M
  Int exponent;

  const std::vector<Int>& orders() const { return source_coords.orders; }

  /// chi_i(x) in Z/e for dual generator i and x in source coordinates.
  Int pair(std::size_t i, const std::vector<Int>& x) const {
    const auto c = source_coords.coordinates(x);
    return mod(c[i] * (exponent / orders()[i]), exponent);
  }

  /// <y, x> for y in the dual's underlying coordinates: generator (i, t) of the
  /// dual is chi_i . b_t, evaluated as chi_i(b_t x).
  Int evaluate(const std::vector<Int>& y, const std::vector<Int>& x) const {
    const Ring& r = source.acting_ring();
    const auto basis = r.additive_basis();
    const std::size_t w = r.width();
    Int total = 0;
    for (std::size_t i = 0; i < orders().size(); ++i)
      for (std::size_t t = 0; t < w; ++t) {
        const Int& coef = y[i * w + t];
        if (coef.is_zero()) continue;
        const auto bx = zlinalg::row_times(x, action_matrix(source, basis[t]));
        total += coef * pair(i, bx);
      }
    return mod(total, exponent);
  }

  /// Relations of the dual presentation pair to zero with every source
  /// generator, and |M+| = |M|.
  bool verify() const {
    const GroupPresentation gd = underlying_group(dual);
    const GroupPresentation gs = underlying_group(source);
    for (std::size_t r = 0; r < gd.relations.rows(); ++r) {
      const auto y = gd.relations.row(r);
      for (std::size_t j = 0; j < gs.gens; ++j) {
        std::vector<Int> x(gs.gens);
        x[j] = 1;
        if (!evaluate(y, x).is_zero()) return false;
      }
    }
    return structure(gd).order() == structure(gs).order();
  }
};

inline CharModule character(const FpModule& m) {
  const GroupPresentation g = underlying_group(m);
  CharModule c{m, {}, smith_coordinates(g), 1};
  for (const Int& d : c.orders()) {
    if (d.is_zero()) throw unsupported_error("character module needs a finite module");
    c.exponent = lcm(c.exponent, d);
  }
  const std::size_t s = c.orders().size();
  const Ring& r = m.acting_ring();
  const std::size_t w = r.width();
  const auto basis = r.additive_basis();
  // Row (i, t): coefficients of chi_i . b_t in the dual basis, where
  // (chi_i . b)(u_j) = chi_i(b u_j).
  IntMatrix images(s * w, s);
  for (std::size_t t = 0; t < w; ++t) {
    const IntMatrix act = c.source_coords.basis * action_matrix(m, basis[t]) * c.source_coords.to_coords;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        // coefficient on chi_j: d_j * act[j][i] / d_i  (mod d_j)
        const Int& di = c.orders()[i];
        const Int& dj = c.orders()[j];
        const Int num = mod(act(j, i), di) * dj;
        images(i * w + t, j) = mod(num / di, dj);
      }
  }
  IntMatrix orders_diag(s, s);
  for (std::size_t j = 0; j < s; ++j) orders_diag(j, j) = c.orders()[j];
  IntMatrix stacked = s ? images.vstack(orders_diag) : IntMatrix(0, 0);
  IntMatrix ker = zlinalg::kernel(stacked);
  IntMatrix rel(ker.rows(), s * w);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < s * w; ++j) rel(i, j) = ker(i, j);
  const Ring dual_ring = m.acting_ring().opposite();
  const Mat rel_mat = row_space_normal_form(detail::rows_from_coords(dual_ring, rel, s));
  c.dual = FpModule(m.ring(), opposite(m.side()), s, rel_mat);
  return c;
}

/// Coordinates in the dual's underlying group of sum_i coef_i chi_i.
inline std::vector<Int> dual_element(const CharModule& c, const std::vector<Int>& coef) {
  const Ring& r = c.dual.acting_ring();
  const Elem one = r.one();
  const std::size_t w = r.width();
  std::vector<Int> y(coef.size() * w);
  for (std::size_t i = 0; i < coef.size(); ++i)
    for (std::size_t t = 0; t < w; ++t) y[i * w + t] = coef[i] * one[t];
  return y;
}

/// phi+ : N+ -> M+ for phi : M -> N, as a morphism of the dual modules.
inline ModMorphism dual_morphism(const ModMorphism& phi, const CharModule& cm, const CharModule& cn) {
  const IntMatrix p = coordinate_map(phi.gen_matrix);
  const std::size_t sm = cm.orders().size(), sn = cn.orders().size();
  Mat s(cn.dual.acting_ring(), sn, sm);
  for (std::size_t j = 0; j < sm; ++j) {
    const auto image = cn.source_coords.coordinates(zlinalg::row_times(cm.source_coords.basis.row(j), p));
    for (std::size_t i = 0; i < sn; ++i) {
      // (chi'_i o phi)(u_j) = image_i / d'_i = a / d_j
      const Int a = mod(image[i] * cm.orders()[j] / cn.orders()[i], cm.orders()[j]);
      s.set(i, j, a);
    }
  }
  auto out = make_morphism(cn.dual, cm.dual, s);
  if (!out) throw error("dual_morphism: induced map is not well defined");
  return *out;
}

/// Orders of kernel and image of a morphism between finite modules.
struct MapOrders {
  Int kernel, image;
};

inline MapOrders map_orders(const ModMorphism& f) {
  const GroupPresentation gs = underlying_group(f.source);
  const GroupPresentation gt = underlying_group(f.target);
  const IntMatrix p = coordinate_map(f.gen_matrix);
  const auto ker = subquotient(gs, p, gt, IntMatrix(0, gs.gens)).group;
  return {ker.order(), image_group(gs, p, gt).order()};
}

/// Exactness of A -f-> B -g-> C at B, by order counts and g f = 0.
inline bool exact_at_middle(const ModMorphism& f, const ModMorphism& g) {
  const auto comp = make_morphism(f.source, g.target, f.gen_matrix * g.gen_matrix);
  if (!comp || map_orders(*comp).image != 1) return false;
  return map_orders(g).kernel == map_orders(f).image;
}

// ---------------------------------------------------------------------------
// Idempotents (algebras with a complete finite set)

struct UnitalComponent {
  std::size_t idempotent;  // basis index
  FgAbGroup group;         // e_i M
};

struct UnitalDecomposition {
  std::vector<UnitalComponent> components;
  FgAbGroup whole;
  bool reconstructs = false;  // components span M and their orders multiply to |M|
};

inline IntMatrix idempotent_image_rows(const FpModule& m, const Elem& e) { return action_matrix(m, e); }

inline UnitalDecomposition unital_decomposition(const FpModule& m) {
  if (m.ring().kind() != RingKind::algebra)
    throw unsupported_error("unital decomposition needs an algebra with idempotents");
  const GroupPresentation g = underlying_group(m);
  UnitalDecomposition out;
  out.whole = structure(g);
  IntMatrix all(0, g.gens);
  Int product = 1;
  const auto& idx = m.acting_ring().idempotent_indices();
  const auto elems = m.acting_ring().idempotents();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const IntMatrix img = idempotent_image_rows(m, elems[k]);
    FgAbGroup part = image_group(g, img, g);
    product *= part.order();
    out.components.push_back({idx[k], part});
    all = all.rows() ? all.vstack(img) : img;
  }
  out.reconstructs = product == out.whole.order() && image_group(g, all, g) == out.whole;
  return out;
}

struct YonedaRecord {
  std::size_t idempotent = 0;
  FgAbGroup hom;       // Hom(A e_i, M)
  FgAbGroup e_m;       // e_i M
  FgAbGroup tensor;    // e_i A (x) M
  bool hom_map_bijective = false;     // f -> f(e_i)
  bool tensor_map_bijective = false;  // e_i (x) m -> e_i m
  bool equal() const { return hom == e_m && tensor == e_m && hom_map_bijective && tensor_map_bijective; }
};

/// Checks Hom(A e_i, M) = e_i M and e_i A (x) M = e_i M through the explicit maps.
inline YonedaRecord yoneda_check(std::size_t which, const FpModule& m_in) {
  if (m_in.ring().kind() != RingKind::algebra)
    throw unsupported_error("Yoneda check needs an algebra with idempotents");
  const FpModule m = detail::side_for(m_in, Side::left, "M");
  const Ring& a = m.ring();
  const auto& idx = a.idempotent_indices();
  if (which >= idx.size()) throw input_error("idempotent index out of range");
  const Elem e = a.basis(idx[which]);
  Elem complement = a.one();
  for (std::size_t t = 0; t < complement.size(); ++t) complement[t] -= e[t];
  a.reduce(complement);

  YonedaRecord rec;
  rec.idempotent = idx[which];
  const GroupPresentation g = underlying_group(m);
  const IntMatrix act_e = action_matrix(m, e);
  rec.e_m = image_group(g, act_e, g);

  // A e_i = A / A (1 - e_i)
  Mat rel(a, 1, 1);
  rel.set(0, 0, complement);
  const FpModule ae(a, Side::left, 1, rel);
  const HomModule hom = hom_module(ae, m);
  rec.hom = hom.group;
  IntMatrix phi_images(0, g.gens);
  for (const auto& f : hom.generators) {
    // f(e_i) = e_i . f(1)
    const auto x = zlinalg::row_times(f.gen_matrix.data(), act_e);
    phi_images.append_row(x);
  }
  if (phi_images.rows() == 0) phi_images = IntMatrix(0, g.gens);
  const FgAbGroup phi_span = image_group(g, phi_images, g);
  rec.hom_map_bijective = phi_span == rec.e_m && rec.hom.is_finite() && rec.hom.order() == rec.e_m.order();

  // e_i A = A / (1 - e_i) A as a right module
  Mat rel_r(a.opposite(), 1, 1);
  rel_r.set(0, 0, complement);
  const FpModule ea(a, Side::right, 1, rel_r);
  rec.tensor = tensor_product(ea, m);
  // e_i (x) m -> e_i m kills (1 - e_i) M and is onto e_i M
  const IntMatrix incoming = tensor_induced_map(ea.relations(), m);
  bool kills = true;
  const auto sc = smith_coordinates(g);
  for (std::size_t r = 0; r < incoming.rows() && kills; ++r)
    kills = sc.is_zero_element(zlinalg::row_times(incoming.row(r), act_e));
  rec.tensor_map_bijective = kills && rec.tensor.is_finite() && rec.tensor.order() == rec.e_m.order();
  return rec;
}

// ---------------------------------------------------------------------------
// Dualities

enum class DualityPart { ext_tor, tensor_hom, tor_ext };

struct DualityRecord {
  DualityPart part;
  FgAbGroup lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// (i)   Ext^1(F, N+)  vs  Hom_Z(Tor_1(N, F), Q/Z)   F left, N right
/// (ii)  F (x) N+      vs  Hom_Z(Hom(F, N), Q/Z)     F, N right
/// (iii) Tor_1(F, N+)  vs  Hom_Z(Ext^1(F, N), Q/Z)   F, N right
inline DualityRecord verify_ext_tor_duality(const FpModule& f_in, const FpModule& n_in, DualityPart part) {
  require_same_ring(f_in, n_in);
  DualityRecord rec{part, {}, {}};
  const FpModule n = detail::side_for(n_in, Side::right, "N");
  if (part == DualityPart::ext_tor) {
    const FpModule f = detail::side_for(f_in, Side::left, "F");
    rec.lhs = ext1(f, character(n).dual);
    rec.rhs = pontryagin_dual(tor1(n, f));
  } else {
    const FpModule f = detail::side_for(f_in, Side::right, "F");
    const FpModule np = character(n).dual;
    if (part == DualityPart::tensor_hom) {
      rec.lhs = tensor_product(f, np);
      rec.rhs = pontryagin_dual(hom_group(f, n));
    } else {
      rec.lhs = tor1(f, np);
      rec.rhs = pontryagin_dual(ext1(f, n));
    }
  }
  return rec;
}

struct FlatInjectiveCase {
  FpModule test;
  bool tor_vanishes = false;  // Tor_1(N, F) = 0
  bool ext_vanishes = false;  // Ext^1(F, N+) = 0
  bool agrees() const { return tor_vanishes == ext_vanishes; }
};

struct FlatInjectiveRecord {
  std::vector<FlatInjectiveCase> cases;
  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& c : cases) v += c.agrees() ? 0 : 1;
    return v;
  }
};

/// For each F: Tor_1(N, F) = 0 iff Ext^1(F, N+) = 0.
inline FlatInjectiveRecord verify_flat_injective_duality(const FpModule& n_in, const std::vector<FpModule>& testset) {
  const FpModule n = detail::side_for(n_in, Side::right, "N");
  const FpModule np = character(n).dual;
  FlatInjectiveRecord rec;
  for (const auto& f_in : testset) {
    const FpModule f = detail::side_for(f_in, Side::left, "F");
    rec.cases.push_back({f, tor1(n, f).is_zero(), ext1(f, np).is_zero()});
  }
  return rec;
}

}  // namespace hereditas
