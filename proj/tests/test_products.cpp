#include <gtest/gtest.h>

#include "eplab/classify.hpp"
#include "eplab/generators.hpp"
#include "eplab/products.hpp"
#include "test_support.hpp"

using namespace eplab;
using namespace eplab::testing;

namespace {

const CMatrix kG = mat({{1.0, 1.0}, {0.0, 1.0}});
const CMatrix kP = mat({{1.0, 0.0}, {0.0, 0.0}});
const CMatrix kJ = mat({{0.0, 1.0}, {0.0, 0.0}});

CMatrix shift3() {
  CMatrix j = CMatrix::Zero(3, 3);
  j(0, 1) = 1.0;
  j(1, 2) = 1.0;
  return j;
}

}  // namespace

TEST(HartwigKatz, GTimesP) {
  const auto r = hartwig_katz(kG, kP);
  EXPECT_TRUE(r.a_ep && r.b_ep);
  EXPECT_TRUE(r.ab_ep);
  EXPECT_TRUE(r.cond_i);
  EXPECT_TRUE(r.cond_ii);
  EXPECT_TRUE(r.range_identity);
  EXPECT_TRUE(r.kernel_identity);
  EXPECT_TRUE(r.hartwig_katz_consistent());
}

TEST(HartwigKatz, PTimesG) {
  const auto r = hartwig_katz(kP, kG);
  EXPECT_FALSE(r.ab_ep);
  EXPECT_TRUE(r.cond_i);
  EXPECT_FALSE(r.cond_ii);
  EXPECT_TRUE(r.hartwig_katz_consistent());
  EXPECT_TRUE(r.djordjevic_consistent());
}

TEST(HartwigKatz, IdentityFactor) {
  Rng rng(41);
  const CMatrix a = random_ep(5, 3, rng);
  const auto r = hartwig_katz(a, CMatrix::Identity(5, 5));
  EXPECT_TRUE(r.ab_ep && r.cond_i && r.cond_ii && r.range_identity && r.kernel_identity);
}

TEST(HartwigKatz, ProductVanishingExactly) {
  // AB = 0 in exact arithmetic; roundoff must not create rank.
  Rng rng(42);
  const CMatrix u = random_unitary(6, rng);
  const CMatrix a = u.leftCols(3) * random_invertible(3, rng) * u.leftCols(3).adjoint();
  const CMatrix b = u.rightCols(3) * random_invertible(3, rng) * u.rightCols(3).adjoint();
  const auto r = hartwig_katz(a, b);
  EXPECT_TRUE(r.ab_ep);
  EXPECT_TRUE(r.cond_i && r.cond_ii);
}

TEST(HartwigKatz, RandomEpPairs) {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const Index n = rng.uniform_index(2, 8);
    const auto r = hartwig_katz(random_ep(n, rng.uniform_index(0, n), rng),
                                random_ep(n, rng.uniform_index(0, n), rng));
    EXPECT_TRUE(r.hartwig_katz_consistent());
    EXPECT_TRUE(r.djordjevic_consistent());
  }
}

TEST(Djordjevic, RequiresEpFactors) {
  EXPECT_THROW(djordjevic_check(kP, kJ), InapplicableError);
  EXPECT_THROW(djordjevic_check(kJ, kP), InapplicableError);
  EXPECT_NO_THROW(djordjevic_check(kG, kP));
}

TEST(Thm53, JordanBlockFailsAll) {
  const auto r = thm53_check(kJ);
  EXPECT_FALSE(r.cond_a);
  EXPECT_FALSE(r.cond_c);
  EXPECT_FALSE(r.cond_d);
  EXPECT_EQ(r.rank_a, 1);
  EXPECT_EQ(r.rank_a2, 0);
}

TEST(Thm53, IndexOneNonEpHoldsAll) {
  const CMatrix pg = kP * kG;
  EXPECT_FALSE(classify(pg).ep);
  const auto r = thm53_check(pg);
  EXPECT_TRUE(r.cond_a && r.cond_c && r.cond_d);
}

TEST(Thm53, NilpotentRangeIdentityWitness) {
  // R(B) = span{e0, e1} is invariant under the shift but A has index 3.
  const CMatrix a = shift3();
  CMatrix b = CMatrix::Zero(3, 3);
  b(0, 0) = 1.0;
  b(1, 1) = 1.0;
  const auto r = thm53_range_identity(a, b);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_FALSE(r.conclusion);
  EXPECT_FALSE(thm53_check(a).cond_a);
}

TEST(Thm53, InvariantRangeRandom) {
  Rng rng(44);
  for (int t = 0; t < 100; ++t) {
    const Index n = rng.uniform_index(1, 7);
    const CMatrix a = random_ep(n, rng.uniform_index(0, n), rng);
    const CMatrix b = random_invariant_range_b(a, rng.engine()());
    const auto r = thm53_range_identity(a, b);
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.conclusion);
  }
}

TEST(Jv, HypothesesAndConclusion) {
  Rng rng(45);
  for (int t = 0; t < 50; ++t) {
    const Index n = rng.uniform_index(1, 7);
    const CMatrix a = random_ep(n, rng.uniform_index(0, n), rng);
    const CMatrix b = random_jv_pair(a, rng.engine()());
    const auto r = jv_check(a, b);
    EXPECT_TRUE(r.hyp_range);
    EXPECT_TRUE(r.hyp_kernel);
    EXPECT_TRUE(r.ab_hypo_ep);
  }
  EXPECT_THROW(random_jv_pair(kJ, 1), InapplicableError);
}

TEST(PowerEp, Examples) {
  EXPECT_EQ(power_ep(shift3(), 3), (std::vector<bool>{false, false, true}));
  EXPECT_EQ(power_ep(CMatrix(kP * kG), 3), (std::vector<bool>{false, false, false}));
  Rng rng(46);
  const auto ep = power_ep(random_ep(6, 4, rng, 10.0), 5);
  EXPECT_EQ(ep, std::vector<bool>(5, true));
  EXPECT_THROW(power_ep(kP, 0), InputError);
}
