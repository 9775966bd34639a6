#include "support.hpp"

#include <gtest/gtest.h>

using namespace hereditas;
using namespace support;

namespace {

const Ring Z = Ring::integers();

}  // namespace

// ---------------------------------------------------------------------------
// syzygy

TEST(Syzygy, OverIntegersIsFree) {
  const FpModule s = syzygy(FpModule::cyclic(Z, 2));
  EXPECT_EQ(s.generators(), 1u);
  EXPECT_EQ(s.relations().rows(), 0u);
}

TEST(Syzygy, TwoModFourIsPeriodic) {
  const Ring r = zmod(4);
  const FpModule s = syzygy(FpModule::cyclic(r, 2));
  EXPECT_EQ(s.generators(), 1u);
  EXPECT_EQ(s.relations(), mat(r, 1, 1, {2}));
}

TEST(Syzygy, OfFreeIsZero) {
  const FpModule s = syzygy(FpModule::free(Z, 3));
  EXPECT_EQ(s.generators(), 0u);
  EXPECT_TRUE(underlying_structure(s).is_zero());
}

// ---------------------------------------------------------------------------
// build_n_presentation

TEST(NPresentation, SixOverIntegers) {
  const auto p = build_n_presentation(FpModule::cyclic(Z, 6), 3);
  ASSERT_EQ(p.maps.size(), 3u);
  EXPECT_EQ(p.maps[0], mat(Z, 1, 1, {6}));
  EXPECT_EQ(p.maps[1].rows(), 0u);
  EXPECT_EQ(p.maps[2].rows(), 0u);
  EXPECT_TRUE(p.verify());
}

TEST(NPresentation, PeriodicModFour) {
  const Ring r = zmod(4);
  const auto p = build_n_presentation(FpModule::cyclic(r, 2), 3);
  ASSERT_EQ(p.maps.size(), 3u);
  for (const Mat& m : p.maps) EXPECT_EQ(m, mat(r, 1, 1, {2}));
  EXPECT_TRUE(p.verify());
}

TEST(NPresentation, ZeroModule) {
  const auto p = build_n_presentation(FpModule::zero(zmod(6)), 4);
  for (const Mat& m : p.maps) EXPECT_TRUE(m.empty());
  EXPECT_TRUE(p.verify());
}

TEST(NPresentation, ExtendsEarlierMapsAndVerifies) {
  Rng rng(21);
  for (std::int64_t n : {4, 6, 8}) {
    const Ring r = zmod(n);
    for (int t = 0; t < 30; ++t) {
      const std::size_t g = 1 + rng.below(std::uint64_t{3}), rels = rng.below(std::uint64_t{4});
      const FpModule mod(r, Side::left, g, from64(r, random64(rels, g, n, rng)));
      const auto short_p = build_n_presentation(mod, 2);
      const auto long_p = build_n_presentation(mod, 5);
      ASSERT_TRUE(long_p.verify());
      for (std::size_t i = 0; i < short_p.maps.size(); ++i) EXPECT_EQ(short_p.maps[i], long_p.maps[i]);
      // exactness: row space of each map equals the brute-force kernel of the previous one
      for (std::size_t i = 0; i + 1 < long_p.maps.size(); ++i)
        EXPECT_EQ(oracle::row_space(to64(long_p.maps[i + 1]), n), oracle::left_kernel(to64(long_p.maps[i]), n));
    }
  }
}

// ---------------------------------------------------------------------------
// is_projective and pd

TEST(Projective, TwoModFourIsNot) { EXPECT_FALSE(is_projective(FpModule::cyclic(zmod(4), 2))); }

TEST(Projective, ThreeModSix) {
  const Ring r = zmod(6);
  const auto u = is_projective(FpModule::cyclic(r, 2));
  ASSERT_TRUE(u);
  const Mat a = mat(r, 1, 1, {2});
  EXPECT_EQ(a * *u * a, a);
}

TEST(Projective, FreeModules) {
  for (const Ring& r : {Z, zmod(4), Ring::prime_field(Int(2))}) EXPECT_TRUE(is_projective(FpModule::free(r, 2)));
}

TEST(Projective, AgreesWithSplittingSearch) {
  // rings of size <= 8; exhaustive up to 2 generators / 2 relations, sampled up to 3 / 3
  Rng rng(31);
  for (std::int64_t n = 2; n <= 8; ++n) {
    const Ring r = zmod(n);
    std::vector<oracle::M64> cases;
    for (auto [rows, cols] : small_shapes())
      for (auto& a : all_matrices(rows, cols, n)) cases.push_back(a);
    for (int t = 0; t < 25; ++t)
      for (auto [rows, cols] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {1, 3}, {3, 2}, {2, 3}})
        cases.push_back(random64(rows, cols, n, rng));
    for (int t = 0; t < (n <= 4 ? 6 : 0); ++t) cases.push_back(random64(3, 3, n, rng));
    for (const auto& a : cases) {
      const FpModule m(r, Side::left, a.cols, from64(r, a));
      const auto u = is_projective(m);
      EXPECT_EQ(u.has_value(), oracle::exists_middle(a, a, a, n)) << "n=" << n << " " << m.str();
      if (u) { EXPECT_EQ(m.relations() * *u * m.relations(), m.relations()); }
    }
  }
}

TEST(Pd, AlwaysAtMostOneOverIntegers) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t g = 1 + rng.below(std::uint64_t{4}), rels = rng.below(std::uint64_t{5});
    const FpModule m(Z, Side::left, g, random_int_matrix(rels, g, 10, rng));
    const auto c = pd_le_1(m);
    EXPECT_TRUE(c.holds) << m.str();
    ASSERT_TRUE(c.splitting);
    const Mat& a = c.syzygy.relations();
    EXPECT_EQ(a * *c.splitting * a, a);
  }
}

TEST(Pd, TwoModFourFails) {
  const auto c = pd_le_1(FpModule::cyclic(zmod(4), 2));
  EXPECT_FALSE(c.holds);
  EXPECT_FALSE(oracle::exists_middle(to64(c.syzygy.relations()), to64(c.syzygy.relations()),
                                     to64(c.syzygy.relations()), 4));
  const auto pd = projective_dimension(FpModule::cyclic(zmod(4), 2), 6);
  EXPECT_FALSE(pd.bounded);
  EXPECT_EQ(pd.value, 7u);
}

TEST(Pd, FieldsAlwaysHold) {
  Rng rng(43);
  for (std::int64_t p : {2, 3, 5}) {
    const Ring f = Ring::prime_field(Int(p));
    for (int t = 0; t < 40; ++t) {
      const std::size_t g = 1 + rng.below(std::uint64_t{3}), rels = rng.below(std::uint64_t{4});
      EXPECT_TRUE(pd_le_1(FpModule(f, Side::left, g, from64(f, random64(rels, g, p, rng)))).holds);
    }
  }
}

TEST(Pd, ExactValues) {
  EXPECT_EQ(projective_dimension(FpModule::cyclic(Z, 6)).value, 1u);
  EXPECT_EQ(projective_dimension(FpModule::free(Z, 2)).value, 0u);
  EXPECT_EQ(projective_dimension(FpModule::cyclic(zmod(6), 2)).value, 0u);
}

// ---------------------------------------------------------------------------
// Hom

TEST(Hom, TwoIntoFourModFour) {
  const Ring r = zmod(4);
  const auto h = hom_module(FpModule::cyclic(r, 2), FpModule::free(r, 1));
  EXPECT_EQ(h.group, group(0, {2}));
  ASSERT_EQ(h.generators.size(), 1u);
  EXPECT_TRUE(h.generators[0].verify());
  EXPECT_EQ(h.generators[0].gen_matrix, mat(r, 1, 1, {2}));
}

TEST(Hom, FreeRankOneIsUnderlyingGroup) {
  Rng rng(51);
  for (const Ring& r : {Z, zmod(4), zmod(6), Ring::prime_field(Int(3))}) {
    for (int t = 0; t < 25; ++t) {
      const std::size_t g = 1 + rng.below(std::uint64_t{3}), rels = rng.below(std::uint64_t{3});
      Mat rel(r, rels, g);
      for (std::size_t i = 0; i < rels; ++i)
        for (std::size_t j = 0; j < g; ++j)
          rel.set(i, j, r.is_finite() ? r.element_at(rng.below(r.size())) : r.scalar(Int(rng.between(-9, 9))));
      const FpModule n(r, Side::left, g, rel);
      EXPECT_EQ(hom_module(FpModule::free(r, 1), n).group, underlying_structure(n)) << n.str();
    }
  }
}

TEST(Hom, CoprimeTorsionOverIntegers) {
  EXPECT_TRUE(hom_module(FpModule::cyclic(Z, 2), FpModule::cyclic(Z, 3)).group.is_zero());
}

TEST(Hom, OrdersMatchEnumeration) {
  for (std::int64_t n : {4, 6}) {
    const Ring r = zmod(n);
    const auto mods = enumerate_modules(r, Side::left, Bound::parse("1x2"));
    for (const auto& a : mods)
      for (const auto& b : mods) {
        const auto h = hom_module(a, b);
        EXPECT_EQ(h.group.order(), Int(oracle::hom_count(to_oracle(a), to_oracle(b), n))) << a.str() << " -> " << b.str();
        for (const auto& f : h.generators) EXPECT_TRUE(f.verify());
      }
  }
}

TEST(Morphisms, WitnessInvariant) {
  const Ring r = zmod(4);
  const auto f = make_morphism(FpModule::cyclic(r, 2), FpModule::free(r, 1), mat(r, 1, 1, {2}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->source.relations() * f->gen_matrix, f->rel_witness * f->target.relations());
  EXPECT_FALSE(make_morphism(FpModule::cyclic(r, 2), FpModule::free(r, 1), mat(r, 1, 1, {1})));
}

// ---------------------------------------------------------------------------
// constructions

TEST(Constructions, QuotientSubmoduleSum) {
  const Ring r = zmod(4);
  const FpModule a = FpModule::free(r, 1);
  EXPECT_EQ(underlying_structure(quotient(a, mat(r, 1, 1, {2}))), group(0, {2}));
  EXPECT_EQ(underlying_structure(submodule(a, mat(r, 1, 1, {2}))), group(0, {2}));
  EXPECT_EQ(underlying_structure(direct_sum(a, FpModule::cyclic(r, 2))), group(0, {2, 4}));
  EXPECT_EQ(underlying_structure(FpModule::cyclic(Z, 6)), group(0, {6}));
  EXPECT_EQ(underlying_structure(FpModule::free(Z, 2)), group(2, {}));
}

TEST(Constructions, ModuleValidation) {
  EXPECT_THROW(FpModule(Z, Side::left, 2, mat(Z, 1, 1, {1})), input_error);
  EXPECT_THROW(FpModule(Z, Side::left, 1, mat(zmod(4), 1, 1, {1})), input_error);
}
