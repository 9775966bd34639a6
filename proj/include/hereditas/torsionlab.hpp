#pragma once

// Bounded, seeded verification of FP_n-injective / FP_n-flat membership and
// of the closure properties that decide torsion classes.

#include "hereditas/homdual.hpp"
#include "hereditas/matcat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hereditas {

enum class ModuleClass { injective, flat };  // I_n, F_n

inline std::string to_string(ModuleClass c) { return c == ModuleClass::injective ? "I_n" : "F_n"; }

// ---------------------------------------------------------------------------
// Module corpora

inline std::string module_key(const FpModule& m) {
  return std::to_string(m.generators()) + "|" + m.normalized().relations().str();
}

/// Every module with <= bound.cols generators and <= bound.rows relations
/// over a finite ring, deduplicated by normalized presentation. Order: by
/// generator count, then relation count, then matrix index.
inline std::vector<FpModule> enumerate_modules(const Ring& ring, Side side, const Bound& bound) {
  if (!ring.is_finite()) throw input_error("module enumeration needs a finite ring");
  const Ring acting = side == Side::left ? ring : ring.opposite();
  std::vector<FpModule> out;
  std::map<std::string, bool> seen;
  auto keep = [&](FpModule m) {
    m = m.normalized();
    if (seen.emplace(module_key(m), true).second) out.push_back(std::move(m));
  };
  keep(FpModule::zero(ring, side));
  for (std::size_t g = 1; g <= bound.cols; ++g)
    for (std::size_t r = 0; r <= bound.rows; ++r) {
      const Int count = matrix_count(ring, r, g);
      if (count > Int(MatrixCandidates::exhaustive_limit))
        throw input_error("module bound " + bound.str() + " is too large to enumerate");
      for (Int i = 0; i < count; ++i) keep(FpModule(ring, side, g, matrix_at(acting, r, g, i)));
    }
  return out;
}

/// bound.samples seeded random presentations, deduplicated.
inline std::vector<FpModule> sample_modules(const Ring& ring, Side side, const Bound& bound, std::uint64_t seed) {
  const Ring acting = side == Side::left ? ring : ring.opposite();
  std::vector<FpModule> out;
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < bound.samples; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t g = 1 + static_cast<std::size_t>(rng.below(std::uint64_t{bound.cols}));
    const std::size_t r = static_cast<std::size_t>(rng.below(std::uint64_t{bound.rows + 1}));
    FpModule m = FpModule(ring, side, g, random_matrix(acting, r, g, bound.entry, rng)).normalized();
    if (seen.emplace(module_key(m), true).second) out.push_back(std::move(m));
  }
  return out;
}

/// Exhaustive for finite rings unless the bound asks for samples.
inline std::vector<FpModule> module_test_set(const Ring& ring, Side side, const Bound& bound, std::uint64_t seed) {
  if (bound.samples > 0) return sample_modules(ring, side, bound, seed);
  if (!ring.is_finite()) throw input_error("infinite ring needs an explicit test set or a sample count");
  return enumerate_modules(ring, side, bound);
}

inline std::string test_set_description(const Ring& ring, const Bound& bound, std::size_t size) {
  const bool sampled = bound.samples > 0 || !ring.is_finite();
  std::string d = sampled ? std::to_string(bound.samples) + " sampled" : "all";
  d += " f.p. modules with <= " + std::to_string(bound.cols) + " generators and <= " +
       std::to_string(bound.rows) + " relations";
  if (sampled && !ring.is_finite()) d += ", entries |a| <= " + bound.entry.str();
  return d + " (" + std::to_string(size) + " after deduplication)";
}

// ---------------------------------------------------------------------------
// Semisimplicity

/// A finite ring is semisimple iff it is von Neumann regular: every a has u
/// with a u a = a.
inline bool is_semisimple(const Ring& ring) {
  if (!ring.is_finite()) return false;
  const Int size = ring.size();
  for (Int i = 0; i < size; ++i) {
    Mat a(ring, 1, 1);
    a.set(0, 0, ring.element_at(i));
    if (!solve_middle_linear(a, a, a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Membership

enum class Verdict { in, out, in_up_to_bound };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::in: return "in";
    case Verdict::out: return "out";
    default: return "in-up-to-bound";
  }
}

struct MembershipWitness {
  FpModule test;
  FgAbGroup value;  // nonzero Ext^1(test, M) or Tor_1(M, test)
};

struct MembershipVerdict {
  FpModule module;
  ModuleClass cls = ModuleClass::injective;
  std::size_t n = 1;
  Verdict verdict = Verdict::in_up_to_bound;
  std::string bound;   // test set description
  std::string reason;  // completeness argument behind an unqualified "in"
  std::size_t tested = 0;
  std::optional<MembershipWitness> witness;
};

/// The homological value tested for membership of m in cls against f.
inline FgAbGroup membership_value(ModuleClass cls, const FpModule& m, const FpModule& f) {
  return cls == ModuleClass::injective ? ext1(f, m) : tor1(m, f);
}

/// Side the test modules must live on.
inline Side test_side(ModuleClass cls, const FpModule& m) {
  return cls == ModuleClass::injective ? m.side() : opposite(m.side());
}

inline MembershipVerdict membership(const FpModule& m, ModuleClass cls, std::size_t n,
                                    const std::vector<FpModule>& testset, const std::string& description,
                                    std::optional<bool> semisimple = std::nullopt) {
  if (n == 0) throw input_error("membership needs n >= 1");
  MembershipVerdict v{m, cls, n, Verdict::in_up_to_bound, description, "", 0, std::nullopt};
  const Side side = test_side(cls, m);
  for (const auto& f_in : testset) {
    const FpModule f = detail::side_for(f_in, side, "test module");
    ++v.tested;
    FgAbGroup value = membership_value(cls, m, f);
    if (!value.is_zero()) {
      v.verdict = Verdict::out;
      v.witness = MembershipWitness{f, std::move(value)};
      return v;
    }
  }
  if (!semisimple) semisimple = is_semisimple(m.ring());
  if (*semisimple) {
    v.verdict = Verdict::in;
    v.reason = "semisimple ring: every module is injective and flat";
  } else if (underlying_structure(m).is_zero()) {
    v.verdict = Verdict::in;
    v.reason = "zero module";
  } else if (cls == ModuleClass::flat && m.is_evidently_free()) {
    v.verdict = Verdict::in;
    v.reason = "free modules are flat";
  }
  return v;
}

/// Membership against the standard test set of the bound.
inline MembershipVerdict membership(const FpModule& m, ModuleClass cls, std::size_t n, const Bound& bound,
                                    std::uint64_t seed = 0) {
  const auto tests = module_test_set(m.ring(), test_side(cls, m), bound, seed);
  return membership(m, cls, n, tests, test_set_description(m.ring(), bound, tests.size()));
}

// ---------------------------------------------------------------------------
// Closure properties

enum class ClosureProperty { quotients, extensions, finite_coproducts, subobjects, finite_products };

inline std::string to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::quotients: return "quotients";
    case ClosureProperty::extensions: return "extensions";
    case ClosureProperty::finite_coproducts: return "finite-coproducts";
    case ClosureProperty::subobjects: return "subobjects";
    default: return "finite-products";
  }
}

inline ClosureProperty parse_closure_property(const std::string& s) {
  for (auto p : {ClosureProperty::quotients, ClosureProperty::extensions, ClosureProperty::finite_coproducts,
                 ClosureProperty::subobjects, ClosureProperty::finite_products})
    if (to_string(p) == s) return p;
  throw input_error("unknown closure property '" + s + "'");
}

/// Middle term of 0 -> N -> E -> M -> 0 presented by [[R_N, 0], [phi, R_M]];
/// phi must send left_kernel(R_M) into the row span of R_N.
inline bool is_cocycle(const FpModule& m, const FpModule& n, const Mat& phi) {
  const Mat k = left_kernel(m.relations());
  const Mat image = k * phi;
  for (std::size_t i = 0; i < image.rows(); ++i)
    if (!solve_left(n.relations(), image.row(i))) return false;
  return true;
}

inline FpModule extension_module(const FpModule& m, const FpModule& n, const Mat& phi) {
  require_same_ring(m, n);
  const Ring& r = m.acting_ring();
  const std::size_t kn = n.generators(), km = m.generators();
  const Mat top = n.relations().hstack(Mat(r, n.relations().rows(), km));
  const Mat bottom = phi.over(r).hstack(m.relations());
  return FpModule(m.ring(), m.side(), kn + km, top.vstack(bottom));
}

struct ClosureCounterexample {
  std::vector<FpModule> inputs;  // members the operation was applied to
  Mat data;                      // extra relations, submodule generators or cocycle
  FpModule result;
  MembershipWitness witness;
};

/// Rebuilds the result of a closure operation from its inputs.
inline FpModule apply_closure(ClosureProperty p, const std::vector<FpModule>& in, const Mat& data) {
  switch (p) {
    case ClosureProperty::quotients: return quotient(in.at(0), data);
    case ClosureProperty::subobjects: return submodule(in.at(0), data);
    case ClosureProperty::extensions: return extension_module(in.at(0), in.at(1), data);
    default: return direct_sum(in.at(0), in.at(1));
  }
}

struct ClosureReport {
  ModuleClass cls = ModuleClass::injective;
  std::size_t n = 1;
  Ring ring;
  ClosureProperty property = ClosureProperty::quotients;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string bound;
  std::size_t members = 0;  // size of the sampled member pool
  std::size_t tested = 0;
  std::optional<ClosureCounterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }

  /// The counterexample rebuilds from its inputs and its witness is nonzero.
  bool verify() const {
    if (!counterexample) return true;
    const auto& c = *counterexample;
    if (!(apply_closure(property, c.inputs, c.data).normalized() == c.result)) return false;
    const FgAbGroup value = membership_value(cls, c.result, c.witness.test);
    return !value.is_zero() && value == c.witness.value;
  }
};

inline ClosureReport closure_check(ModuleClass cls, std::size_t n, const Ring& ring, ClosureProperty property,
                                   std::size_t trials, std::uint64_t seed, const Bound& bound,
                                   std::size_t jobs = 1) {
  ClosureReport rep;
  rep.cls = cls;
  rep.n = n;
  rep.ring = ring;
  rep.property = property;
  rep.trials = trials;
  rep.seed = seed;
  const Side member_side = cls == ModuleClass::injective ? Side::left : Side::right;
  const auto tests = module_test_set(ring, Side::left, bound, seed);
  rep.bound = test_set_description(ring, bound, tests.size());
  const bool semisimple = is_semisimple(ring);

  // Members: candidates from the same corpus that pass the bounded test.
  std::vector<FpModule> candidates;
  if (member_side == Side::left || ring.is_commutative()) {
    for (const auto& t : tests) candidates.push_back(t.with_side(member_side));
  } else {
    candidates = module_test_set(ring, member_side, bound, seed);
  }
  const auto verdicts = parallel_map<char>(candidates.size(), jobs, [&](std::size_t i) -> char {
    return membership(candidates[i], cls, n, tests, rep.bound, semisimple).verdict != Verdict::out;
  });
  std::vector<FpModule> pool;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (verdicts[i]) pool.push_back(candidates[i]);
  rep.members = pool.size();
  if (pool.empty()) {
    rep.tested = 0;
    return rep;
  }

  const Ring acting = member_side == Side::left ? ring : ring.opposite();
  auto build = [&](std::size_t trial, std::vector<FpModule>& in, Mat& data) {
    Rng rng(derive_seed(seed, trial));
    const FpModule& a = pool[static_cast<std::size_t>(rng.below(std::uint64_t{pool.size()}))];
    in = {a};
    switch (property) {
      case ClosureProperty::quotients: data = random_matrix(acting, 1, a.generators(), bound.entry, rng); break;
      case ClosureProperty::subobjects: {
        const std::size_t s = 1 + static_cast<std::size_t>(rng.below(std::uint64_t{2}));
        data = random_matrix(acting, s, a.generators(), bound.entry, rng);
        break;
      }
      case ClosureProperty::extensions: {
        const FpModule& b = pool[static_cast<std::size_t>(rng.below(std::uint64_t{pool.size()}))];
        in.push_back(b);
        data = random_matrix(acting, a.relations().rows(), b.generators(), bound.entry, rng);
        if (!is_cocycle(a, b, data)) data = Mat(acting, a.relations().rows(), b.generators());
        break;
      }
      default: {
        in.push_back(pool[static_cast<std::size_t>(rng.below(std::uint64_t{pool.size()}))]);
        data = Mat(acting, 0, 0);
      }
    }
  };
  const auto first = parallel_find_first(trials, jobs, [&](std::size_t trial) {
    std::vector<FpModule> in;
    Mat data;
    build(trial, in, data);
    const FpModule result = apply_closure(property, in, data);
    return membership(result, cls, n, tests, rep.bound, semisimple).verdict == Verdict::out;
  });
  rep.tested = first ? *first + 1 : trials;
  if (first) {
    ClosureCounterexample c;
    build(*first, c.inputs, c.data);
    c.result = apply_closure(property, c.inputs, c.data).normalized();
    c.witness = *membership(c.result, cls, n, tests, rep.bound, semisimple).witness;
    rep.counterexample = std::move(c);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Projective dimension search

struct PdSearchReport {
  Ring ring;
  std::size_t n = 1;
  std::string bound;
  std::uint64_t seed = 0;
  std::size_t tested = 0;
  std::optional<FpModule> counterexample;  // pd > 1
  std::optional<PdCertificate> certificate;

  bool verified() const { return !counterexample.has_value(); }
};

inline PdSearchReport pd_fpn_search(const Ring& ring, std::size_t n, const Bound& bound, std::uint64_t seed,
                                    std::size_t jobs = 1) {
  const auto mods = module_test_set(ring, Side::left, bound, seed);
  PdSearchReport rep{ring, n, test_set_description(ring, bound, mods.size()), seed, mods.size(), std::nullopt,
                     std::nullopt};
  const auto first = parallel_find_first(mods.size(), jobs, [&](std::size_t i) { return !pd_le_1(mods[i]).holds; });
  if (first) {
    rep.tested = *first + 1;
    rep.counterexample = mods[*first];
    rep.certificate = pd_le_1(mods[*first]);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tri-consistency

struct ConsistencyReport {
  Ring ring;
  std::size_t n = 1;
  Bound bound;
  std::uint64_t seed = 0;
  PdSearchReport pd;
  HereditaryReport matrices;
  ClosureReport closure;

  bool pd_pass() const { return pd.verified(); }
  bool matrices_pass() const { return matrices.verified(); }
  bool closure_pass() const { return closure.passed(); }

  bool agree() const { return pd_pass() == matrices_pass() && matrices_pass() == closure_pass(); }
  bool all_pass() const { return agree() && pd_pass(); }

  /// All three witnesses trace to one presentation: the matrix without a
  /// certificate presents the module of pd > 1, which also detects the
  /// failing quotient.
  bool cross_referenced() const {
    if (!agree() || pd_pass()) return agree();
    const Mat a = row_space_normal_form(matrices.counterexample->a);
    const Mat p = pd.counterexample->relations();
    const Mat w = closure.counterexample->witness.test.relations();
    return a == p.over(a.ring()) && p == w;
  }
};

inline ConsistencyReport hereditary_consistency_report(const Ring& ring, std::size_t n, const Bound& bound,
                                                       std::uint64_t seed, std::size_t trials = 100,
                                                       std::size_t jobs = 1) {
  ConsistencyReport rep{ring, n, bound, seed, {}, {}, {}};
  rep.pd = pd_fpn_search(ring, n, bound, seed, jobs);
  rep.matrices = ring_hereditary_report(ring, n, bound, seed, jobs);
  rep.closure = closure_check(ModuleClass::injective, n, ring, ClosureProperty::quotients, trials, seed, bound, jobs);
  return rep;
}

}  // namespace hereditas
