#pragma once

// Finitely presented modules. Elements are row vectors, relations are rows,
// and module maps act by right multiplication on rows. A right module over
// A is handled as a left module over the opposite ring, so every
// computation below runs over `acting_ring()`.

#include "hereditas/abgroup.hpp"
#include "hereditas/linear.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hereditas {

enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// The module R^k / (left span of the rows of `relations`).
class FpModule {
 public:
  FpModule() = default;

  FpModule(Ring ring, Side side, std::size_t generators, const Mat& relations)
      : ring_(std::move(ring)), side_(side), generators_(generators) {
    acting_ = side_ == Side::left ? ring_ : ring_.opposite();
    if (relations.cols() != generators_)
      throw input_error("relations have " + std::to_string(relations.cols()) +
                        " columns but the module has " + std::to_string(generators_) + " generators");
    if (!(relations.ring() == ring_) && !(relations.ring() == acting_))
      throw input_error("relations are over " + relations.ring().name() + ", module over " + ring_.name());
    relations_ = relations.over(acting_);
  }

  static FpModule free(const Ring& ring, std::size_t rank, Side side = Side::left) {
    return FpModule(ring, side, rank, Mat(ring, 0, rank));
  }

  static FpModule zero(const Ring& ring, Side side = Side::left) { return free(ring, 0, side); }

  /// Cyclic module R / R a for a scalar-ring integer a.
  static FpModule cyclic(const Ring& ring, long long a, Side side = Side::left) {
    return FpModule(ring, side, 1, Mat(ring, 1, 1, {a}));
  }

  const Ring& ring() const { return ring_; }
  const Ring& acting_ring() const { return acting_; }
  Side side() const { return side_; }
  std::size_t generators() const { return generators_; }
  const Mat& relations() const { return relations_; }

  /// Same module with the side tag flipped; only meaningful for commutative rings.
  FpModule with_side(Side s) const {
    if (s != side_ && !ring_.is_commutative())
      throw input_error("cannot move a module to the other side over a noncommutative ring");
    return FpModule(ring_, s, generators_, relations_.over(ring_));
  }

  /// Same module presented by the canonical generators of its relation span.
  FpModule normalized() const {
    return FpModule(ring_, side_, generators_, row_space_normal_form(relations_));
  }

  /// Relations span nothing: free on the given generators.
  bool is_evidently_free() const { return row_space_normal_form(relations_).rows() == 0; }

  friend bool operator==(const FpModule& a, const FpModule& b) {
    return a.side_ == b.side_ && a.generators_ == b.generators_ && a.ring_ == b.ring_ &&
           a.relations_ == b.relations_;
  }

  std::string str() const {
    return to_string(side_) + " module over " + ring_.name() + ", " + std::to_string(generators_) +
           " generators, relations " + relations_.str();
  }

 private:
  Ring ring_;
  Ring acting_;
  Side side_ = Side::left;
  std::size_t generators_ = 0;
  Mat relations_;
};

inline void require_same_ring(const FpModule& a, const FpModule& b) {
  if (!(a.ring() == b.ring()))
    throw input_error("modules over different rings: " + a.ring().name() + " vs " + b.ring().name());
}

// ---------------------------------------------------------------------------
// Underlying abelian group

/// Coordinates: generator j, additive basis element t -> index j * width + t.
inline GroupPresentation underlying_group(const FpModule& m) {
  const Ring& r = m.acting_ring();
  const std::size_t g = m.generators() * r.width();
  IntMatrix rel = coordinate_map(m.relations());
  if (!r.modulus().is_zero()) {
    IntMatrix cong(g, g);
    for (std::size_t i = 0; i < g; ++i) cong(i, i) = r.modulus();
    rel = rel.rows() ? rel.vstack(cong) : cong;
  }
  if (rel.rows() == 0) rel = IntMatrix(0, g);
  return {g, rel};
}

inline FgAbGroup underlying_structure(const FpModule& m) { return structure(underlying_group(m)); }

/// Integer matrix of x -> a * x on coordinates of m (a over the acting ring).
inline IntMatrix action_matrix(const FpModule& m, std::span<const Int> a) {
  const Ring& r = m.acting_ring();
  const std::size_t w = r.width();
  const IntMatrix block = r.left_mult_matrix(a);
  IntMatrix out(m.generators() * w, m.generators() * w);
  for (std::size_t j = 0; j < m.generators(); ++j)
    for (std::size_t s = 0; s < w; ++s)
      for (std::size_t t = 0; t < w; ++t) out(j * w + s, j * w + t) = block(s, t);
  return out;
}

/// Direct power m^copies of a group presentation.
inline GroupPresentation group_power(const GroupPresentation& g, std::size_t copies) {
  GroupPresentation out{g.gens * copies, IntMatrix(g.relations.rows() * copies, g.gens * copies)};
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < g.relations.rows(); ++i)
      for (std::size_t j = 0; j < g.gens; ++j)
        out.relations(c * g.relations.rows() + i, c * g.gens + j) = g.relations(i, j);
  return out;
}

/// Cochain map N^q -> N^p of Hom(-, N) applied to d (p x q):
/// (n_j) -> (sum_j d_ij n_j)_i.
inline IntMatrix hom_induced_map(const FpModule& n, const Mat& d) {
  const std::size_t g = n.generators() * n.acting_ring().width();
  IntMatrix out(d.cols() * g, d.rows() * g);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.ring().is_zero(d.entry(i, j))) continue;
      const IntMatrix act = action_matrix(n, d.entry(i, j));
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) out(j * g + a, i * g + b) = act(a, b);
    }
  return out;
}

/// Chain map F^p -> F^q of (-) (x) F applied to d (p x q) over the opposite
/// side: (f_i) -> (sum_i d_ij f_i)_j.
inline IntMatrix tensor_induced_map(const Mat& d, const FpModule& f) {
  const std::size_t g = f.generators() * f.acting_ring().width();
  IntMatrix out(d.rows() * g, d.cols() * g);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.ring().is_zero(d.entry(i, j))) continue;
      const IntMatrix act = action_matrix(f, d.entry(i, j));
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) out(i * g + a, j * g + b) = act(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

/// Map source -> target sending generator i to row i of gen_matrix.
struct ModMorphism {
  FpModule source, target;
  Mat gen_matrix;   // source.generators x target.generators
  Mat rel_witness;  // source.relations * gen_matrix = rel_witness * target.relations

  bool verify() const {
    return source.relations() * gen_matrix == rel_witness * target.relations();
  }
};

/// Builds the morphism with the given generator images, or nullopt if the
/// source relations do not map into the target relations.
inline std::optional<ModMorphism> make_morphism(const FpModule& source, const FpModule& target,
                                                const Mat& gen_matrix) {
  require_same_ring(source, target);
  if (source.side() != target.side()) throw input_error("morphism between modules on different sides");
  const Mat s = gen_matrix.over(source.acting_ring());
  if (s.rows() != source.generators() || s.cols() != target.generators())
    throw input_error("generator matrix has shape " + s.shape());
  const Mat images = source.relations() * s;
  Mat witness(source.acting_ring(), images.rows(), target.relations().rows());
  for (std::size_t i = 0; i < images.rows(); ++i) {
    auto y = solve_left(target.relations(), images.row(i));
    if (!y) return std::nullopt;
    for (std::size_t j = 0; j < y->cols(); ++j) witness.set(i, j, y->entry(0, j));
  }
  return ModMorphism{source, target, s, witness};
}

// ---------------------------------------------------------------------------
// Syzygies and presentations

/// Kernel of R^k -> M presented on the relation rows.
inline FpModule syzygy(const FpModule& m) {
  return FpModule(m.ring(), m.side(), m.relations().rows(), left_kernel(m.relations()));
}

/// F_n -> ... -> F_1 -> F_0 -> M -> 0 by finite free modules.
struct NPresentation {
  FpModule module;
  std::size_t length = 0;
  std::vector<Mat> maps;       // maps[i] = d_{i+1}; maps[0] = module relations
  std::vector<Mat> witnesses;  // witnesses[i] * maps[i+1] = generators of left_kernel(maps[i])

  /// Consecutive composites vanish and each witness multiplies out.
  bool verify() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
      const Mat prod = maps[i + 1] * maps[i];
      if (!prod.is_zero()) return false;
      if (!(witnesses[i] * maps[i + 1] == left_kernel(maps[i]))) return false;
    }
    return true;
  }
};

inline NPresentation build_n_presentation(const FpModule& m, std::size_t n) {
  NPresentation p{m, n, {}, {}};
  if (n == 0) return p;
  p.maps.push_back(m.relations());
  while (p.maps.size() < n) {
    Mat next = left_kernel(p.maps.back());
    p.witnesses.push_back(Mat::identity(next.ring(), next.rows()));
    p.maps.push_back(std::move(next));
  }
  return p;
}

/// U with A U A = A for A = relations, iff the module is projective; then
/// I - U A is the matrix of a section.
inline std::optional<Mat> is_projective(const FpModule& m) {
  const Mat& a = m.relations();
  return solve_middle_linear(a, a, a);
}

struct PdCertificate {
  bool holds = false;
  FpModule syzygy;
  std::optional<Mat> splitting;  // A U A = A for A = syzygy relations
};

/// pd(M) <= 1 iff the first syzygy is projective.
inline PdCertificate pd_le_1(const FpModule& m) {
  PdCertificate c;
  c.syzygy = syzygy(m);
  c.splitting = is_projective(c.syzygy);
  c.holds = c.splitting.has_value();
  return c;
}

struct ProjectiveDimension {
  std::size_t value = 0;   // exact when bounded
  bool bounded = true;     // false: pd >= cap + 1
};

/// Smallest i such that the i-th syzygy is projective, up to `cap`.
inline ProjectiveDimension projective_dimension(const FpModule& m, std::size_t cap = 16) {
  FpModule cur = m;
  for (std::size_t i = 0; i <= cap; ++i) {
    if (is_projective(cur)) return {i, true};
    cur = syzygy(cur);
  }
  return {cap + 1, false};
}

// ---------------------------------------------------------------------------
// Constructions

inline FpModule quotient(const FpModule& m, const Mat& extra) {
  return FpModule(m.ring(), m.side(), m.generators(), m.relations().vstack(extra.over(m.acting_ring())));
}

/// Submodule of m generated by the rows of `elements`, presented on them.
inline FpModule submodule(const FpModule& m, const Mat& elements) {
  const Mat s = elements.over(m.acting_ring());
  const Mat k = left_kernel(s.vstack(m.relations()));
  const Mat rel = k.block(0, 0, k.rows(), s.rows());
  return FpModule(m.ring(), m.side(), s.rows(), row_space_normal_form(rel));
}

inline FpModule direct_sum(const FpModule& a, const FpModule& b) {
  require_same_ring(a, b);
  if (a.side() != b.side()) throw input_error("direct sum of modules on different sides");
  return FpModule(a.ring(), a.side(), a.generators() + b.generators(),
                  direct_sum(a.relations(), b.relations()));
}

// ---------------------------------------------------------------------------
// Hom

struct HomModule {
  FgAbGroup group;
  std::vector<ModMorphism> generators;  // one per cyclic factor
};

/// Hom(M, N) as the kernel of N^{k0} -> N^{k1} induced by M's relations.
inline HomModule hom_module(const FpModule& m, const FpModule& n) {
  require_same_ring(m, n);
  if (m.side() != n.side()) throw input_error("Hom needs modules on the same side");
  const GroupPresentation gn = underlying_group(n);
  const std::size_t k0 = m.generators();
  const IntMatrix phi = hom_induced_map(n, m.relations());
  const auto sq = subquotient(group_power(gn, k0), phi, group_power(gn, m.relations().rows()),
                              IntMatrix(0, k0 * gn.gens));
  HomModule out{sq.group, {}};
  const auto sc = smith_coordinates(sq.quotient);
  const Ring& r = m.acting_ring();
  const std::size_t w = r.width();
  for (std::size_t c = 0; c < sc.size(); ++c) {
    const auto coords = zlinalg::row_times(sc.basis.row(c), sq.basis);
    Mat s(r, k0, n.generators());
    for (std::size_t j = 0; j < k0; ++j)
      for (std::size_t l = 0; l < n.generators(); ++l) {
        Elem e(w);
        for (std::size_t t = 0; t < w; ++t) e[t] = coords[j * gn.gens + l * w + t];
        s.set(j, l, e);
      }
    auto f = make_morphism(m, n, s);
    if (!f) throw error("hom_module: kernel element is not a morphism");
    out.generators.push_back(*f);
  }
  return out;
}

}  // namespace hereditas
