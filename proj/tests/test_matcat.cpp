#include "support.hpp"

#include <gtest/gtest.h>

using namespace hereditas;
using namespace support;

namespace {

const Ring Z = Ring::integers();

bool sound(const HereditaryCertificate& c) {
  if (!c.verify()) return false;
  if (c.success && c.n == 1 && c.c) return (c.b * *c.c).is_zero() && *c.c * c.a == c.a;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// pseudo cokernels

TEST(PseudoCok, TwoModFour) { EXPECT_EQ(pseudo_cokernel(mat(zmod(4), 1, 1, {2})), mat(zmod(4), 1, 1, {2})); }

TEST(PseudoCok, IdentityHasNone) { EXPECT_EQ(pseudo_cokernel(Mat::identity(zmod(6), 2)).rows(), 0u); }

TEST(PseudoCok, TwoModSix) { EXPECT_EQ(pseudo_cokernel(mat(zmod(6), 1, 1, {2})), mat(zmod(6), 1, 1, {3})); }

TEST(PseudoCok, ExactOnRepresentables) {
  // every 1 x k row killed by A factors through the pseudo cokernel
  for (std::int64_t n : {4, 6, 8}) {
    const Ring r = zmod(n);
    for (auto [rows, cols] : small_shapes())
      for (const auto& a : all_matrices(rows, cols, n)) {
        const Mat b = pseudo_cokernel(from64(r, a));
        for (const auto& x : oracle::left_kernel(a, n))
          EXPECT_TRUE(b.rows() ? solve_left(b, row_vector(r, x)).has_value() : std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; }));
      }
  }
}

TEST(PseudoNCok, PeriodicModFour) {
  const Ring r = zmod(4);
  const auto c = pseudo_n_cokernel(mat(r, 1, 1, {2}), 3);
  ASSERT_EQ(c.length(), 3u);
  for (const Mat& f : c.chain) EXPECT_EQ(f, mat(r, 1, 1, {2}));
  EXPECT_TRUE(c.verify());
}

TEST(PseudoNCok, UnitGivesEmptyChain) {
  const auto c = pseudo_n_cokernel(mat(Z, 1, 1, {1}), 2);
  ASSERT_EQ(c.length(), 2u);
  EXPECT_EQ(c.chain[0].rows(), 0u);
  EXPECT_EQ(c.chain[1].rows(), 0u);
  EXPECT_TRUE(c.verify());
}

TEST(PseudoNCok, IntegerColumn) {
  const auto c = pseudo_n_cokernel(mat(Z, 2, 1, {2, 3}), 2);
  EXPECT_EQ(c.chain[0], mat(Z, 1, 2, {3, -2}));
  EXPECT_EQ(c.chain[1].rows(), 0u);
  EXPECT_EQ(c.chain[1].cols(), 1u);
  EXPECT_TRUE(c.verify());
}

TEST(PseudoNCok, RejectsZeroLength) { EXPECT_THROW(pseudo_n_cokernel(mat(Z, 1, 1, {2}), 0), input_error); }

TEST(PseudoNCok, ChainsVerifyEverywhere) {
  Rng rng(61);
  for (const Ring& r : {Z, zmod(4), zmod(6), zmod(8), Ring::prime_field(Int(3))}) {
    for (int t = 0; t < 30; ++t) {
      Mat a(r, 1 + rng.below(std::uint64_t{3}), 1 + rng.below(std::uint64_t{3}));
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          a.set(i, j, r.is_finite() ? r.element_at(rng.below(r.size())) : r.scalar(Int(rng.between(-10, 10))));
      const auto c = pseudo_n_cokernel(a, 4);
      EXPECT_TRUE(c.verify()) << a.str();
    }
  }
}

// ---------------------------------------------------------------------------
// alpha

TEST(Alpha, EmptyPseudoCokernel) {
  const auto c = pseudo_n_cokernel(mat(Z, 1, 1, {2}), 1);
  const auto al = alpha_solve(c);
  ASSERT_TRUE(al);
  EXPECT_EQ(*al, mat(Z, 1, 1, {1}));
}

TEST(Alpha, AbsentModFour) { EXPECT_FALSE(alpha_solve(pseudo_n_cokernel(mat(zmod(4), 1, 1, {2}), 1))); }

TEST(Alpha, FourModSix) {
  const Ring r = zmod(6);
  const auto al = alpha_solve(pseudo_n_cokernel(mat(r, 1, 1, {2}), 1));
  ASSERT_TRUE(al);
  EXPECT_EQ(*al, mat(r, 1, 1, {4}));
}

TEST(Alpha, AgreesWithExhaustiveSearch) {
  for (std::int64_t n : {2, 3, 4, 6, 8})
    for (std::size_t len : {1, 2}) {
      const Ring r = zmod(n);
      for (auto [rows, cols] : small_shapes())
        for (const auto& a : all_matrices(rows, cols, n)) {
          const auto c = pseudo_n_cokernel(from64(r, a), len);
          const auto al = alpha_solve(c);
          const bool expect = oracle::exists_alpha(to64(c.at(len)), to64(c.at(len - 1)), n);
          ASSERT_EQ(al.has_value(), expect) << "n=" << n << " len=" << len << " A=" << c.f.str();
          if (al) {
            EXPECT_TRUE((c.at(len) * *al).is_zero());
            EXPECT_EQ(*al * c.at(len - 1), c.at(len - 1));
          }
        }
    }
}

// ---------------------------------------------------------------------------
// semi-hereditary

TEST(SemiHereditary, IntegersTwo) {
  const auto c = semi_hereditary_witness(mat(Z, 1, 1, {2}));
  ASSERT_TRUE(c.success);
  EXPECT_EQ(c.b.rows(), 0u);
  EXPECT_EQ(*c.c, mat(Z, 1, 1, {1}));
  EXPECT_TRUE(sound(c));
}

TEST(SemiHereditary, FailsModFour) {
  const auto c = semi_hereditary_witness(mat(zmod(4), 1, 1, {2}));
  EXPECT_FALSE(c.success);
  ASSERT_TRUE(c.refutation);
  EXPECT_EQ(c.refutation->unknown_rows, 1u);
  EXPECT_TRUE(c.verify());
}

TEST(SemiHereditary, ModSix) {
  const Ring r = zmod(6);
  const auto c = semi_hereditary_witness(mat(r, 1, 1, {2}));
  ASSERT_TRUE(c.success);
  EXPECT_EQ(c.b, mat(r, 1, 1, {3}));
  EXPECT_EQ(*c.c, mat(r, 1, 1, {4}));
}

TEST(SemiHereditary, AgreesWithExhaustiveSearch) {
  for (std::int64_t n : {2, 3, 4, 5, 6, 8}) {
    const Ring r = zmod(n);
    for (auto [rows, cols] : small_shapes())
      for (const auto& a : all_matrices(rows, cols, n)) {
        const auto c = semi_hereditary_witness(from64(r, a));
        ASSERT_EQ(c.success, oracle::exists_semi_hereditary(a, n)) << "n=" << n << " A=" << c.a.str();
        EXPECT_TRUE(sound(c));
      }
  }
}

TEST(SemiHereditary, IntegersAlwaysSucceed) {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const Mat a = random_int_matrix(1 + rng.below(std::uint64_t{4}), 1 + rng.below(std::uint64_t{4}), 10, rng);
    const auto c = semi_hereditary_witness(a);
    ASSERT_TRUE(c.success) << a.str();
    EXPECT_TRUE(sound(c));
  }
}

// ---------------------------------------------------------------------------
// n-hereditary

TEST(NHereditary, CrossValidatesAtOne) {
  const Ring r = zmod(6);
  Rng rng(81);
  for (int t = 0; t < 20; ++t) {
    const Mat a = from64(r, random64(2, 2, 6, rng));
    const auto c = n_hereditary_witness(a, 1);
    EXPECT_EQ(c.success, semi_hereditary_witness(a).success);
    EXPECT_TRUE(c.cross_checked);
    ASSERT_TRUE(c.h && c.c && c.alpha);
    const Mat rebuilt = Mat::identity(r, 2) - *c.h * c.b;
    EXPECT_EQ(rebuilt, *c.c);
    EXPECT_TRUE((c.b * rebuilt).is_zero());
    EXPECT_EQ(rebuilt * a, a);
    EXPECT_TRUE(c.verify());
  }
}

TEST(NHereditary, FailsModFourAtTwo) {
  const Ring r = zmod(4);
  const auto c = n_hereditary_witness(mat(r, 1, 1, {2}), 2);
  EXPECT_FALSE(c.success);
  ASSERT_TRUE(c.chain);
  EXPECT_EQ(c.chain->chain[0], mat(r, 1, 1, {2}));
  EXPECT_EQ(c.chain->chain[1], mat(r, 1, 1, {2}));
  EXPECT_TRUE(c.refutation);
}

TEST(NHereditary, FieldsAlwaysSucceed) {
  Rng rng(91);
  for (std::int64_t p : {2, 3, 5}) {
    const Ring f = Ring::prime_field(Int(p));
    for (std::size_t n = 1; n <= 3; ++n)
      for (int t = 0; t < 20; ++t) {
        const auto c = n_hereditary_witness(from64(f, random64(1 + rng.below(std::uint64_t{3}), 1 + rng.below(std::uint64_t{3}), p, rng)), n);
        EXPECT_TRUE(c.success);
        EXPECT_TRUE(c.verify());
      }
  }
}

// ---------------------------------------------------------------------------
// split cokernels

TEST(SplitCokernel, Identity) {
  const auto p = split_cokernel_test(Mat::identity(zmod(6), 2));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, Mat::identity(zmod(6), 2));
}

TEST(SplitCokernel, TwoModFour) { EXPECT_FALSE(split_cokernel_test(mat(zmod(4), 1, 1, {2}))); }

TEST(SplitCokernel, ThreeModSix) { EXPECT_FALSE(split_cokernel_test(mat(zmod(6), 1, 1, {3}))); }

TEST(SplitCokernel, AgreesWithExhaustiveSearch) {
  for (std::int64_t n : {2, 3, 4, 5, 6, 8}) {
    const Ring r = zmod(n);
    for (auto [rows, cols] : small_shapes())
      for (const auto& g : all_matrices(rows, cols, n)) {
        const auto p = split_cokernel_test(from64(r, g));
        EXPECT_EQ(p.has_value(), oracle::exists_right_inverse(g, n));
        if (p) { EXPECT_EQ(from64(r, g) * *p, Mat::identity(r, rows)); }
      }
  }
}

// ---------------------------------------------------------------------------
// ring-level reports

TEST(HereditaryReport, ModFourCounterexample) {
  const auto rep = ring_hereditary_report(zmod(4), 1, Bound::parse("1x1"), 0);
  ASSERT_FALSE(rep.verified());
  EXPECT_EQ(rep.counterexample->a, mat(zmod(4), 1, 1, {2}));
  EXPECT_TRUE(rep.counterexample->verify());
}

TEST(HereditaryReport, FieldExhaustive) {
  const auto rep = ring_hereditary_report(Ring::prime_field(Int(2)), 1, Bound::parse("3x3"), 0, 4);
  EXPECT_TRUE(rep.verified());
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_EQ(rep.tested, 2u + 4 + 8 + 4 + 16 + 64 + 8 + 64 + 512);
}

TEST(HereditaryReport, IntegersSampled) {
  const auto rep = ring_hereditary_report(Z, 1, Bound::parse("4x4:10:200"), 2024, 4);
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.tested, 200u);
}

TEST(HereditaryReport, IndependentOfThreads) {
  for (std::size_t jobs : {1, 2, 5}) {
    const auto rep = ring_hereditary_report(zmod(8), 1, Bound::parse("2x2"), 3, jobs);
    ASSERT_FALSE(rep.verified());
    // [2]: the kernel is (4), and 4C = 0 forces C even, so 2C = 2 fails
    EXPECT_EQ(*rep.counterexample_index, 2u);
    EXPECT_EQ(rep.counterexample->a, mat(zmod(8), 1, 1, {2}));
  }
}

TEST(HereditaryReport, ExhaustiveNeedsFiniteRing) {
  EXPECT_THROW(ring_hereditary_report(Z, 1, Bound::parse("2x2"), 0), input_error);
}

// Semi-hereditary on every matrix in the bound iff pd <= 1 on every module in
// the matching presentation bound.
TEST(Bridge, MatricesAgreeWithProjectiveDimension) {
  for (std::int64_t n : {2, 3, 4, 5, 6, 8, 9}) {
    const Ring r = zmod(n);
    const Bound b = Bound::parse("2x2");
    const bool matrices = ring_hereditary_report(r, 1, b, 0).verified();
    bool modules = true;
    for (const auto& m : enumerate_modules(r, Side::left, b)) modules = modules && pd_le_1(m).holds;
    EXPECT_EQ(matrices, modules) << "Z/" << n;
    // Z/n is semi-hereditary exactly when n is squarefree
    EXPECT_EQ(matrices, n % 4 != 0 && n % 9 != 0) << "Z/" << n;
  }
}

TEST(Bound, ParseAndPrint) {
  const Bound b = Bound::parse("4x3:10:200");
  EXPECT_EQ(b.rows, 4u);
  EXPECT_EQ(b.cols, 3u);
  EXPECT_EQ(b.entry, 10);
  EXPECT_EQ(b.samples, 200u);
  EXPECT_EQ(Bound::parse(b.str()), b);
  for (const char* bad : {"", "x", "3", "0x2", "2x", "2x2:", "2x2:-1", "axb", "2x2:3:q"})
    EXPECT_THROW(Bound::parse(bad), input_error) << bad;
}

TEST(Candidates, ExhaustiveOrder) {
  const MatrixCandidates c(zmod(3), Bound::parse("1x2"), 0);
  ASSERT_EQ(c.size(), 3u + 9);
  EXPECT_EQ(c[0], mat(zmod(3), 1, 1, {0}));
  EXPECT_EQ(c[2], mat(zmod(3), 1, 1, {2}));
  EXPECT_EQ(c[3], mat(zmod(3), 1, 2, {0, 0}));
  EXPECT_EQ(c[4], mat(zmod(3), 1, 2, {0, 1}));
}
