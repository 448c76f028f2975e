#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eplab/generators.hpp"
#include "eplab/structure.hpp"
#include "test_support.hpp"

using namespace eplab;
using namespace eplab::testing;

namespace {

CMatrix block_diag(const CMatrix& top, const CMatrix& bottom) {
  const Index n = top.rows() + bottom.rows();
  CMatrix out = CMatrix::Zero(n, n);
  out.topLeftCorner(top.rows(), top.cols()) = top;
  out.bottomRightCorner(bottom.rows(), bottom.cols()) = bottom;
  return out;
}

const CMatrix kJ = mat({{0.0, 1.0}, {0.0, 0.0}});

}  // namespace

TEST(Decompose, ProjectionAndShearBlocks) {
  const CMatrix p = mat({{1.0, 0.0}, {0.0, 0.0}});
  const CMatrix g = mat({{1.0, 1.0}, {0.0, 1.0}});
  const auto dec = decompose_pair(p, g);
  EXPECT_EQ(dec.rank, 1);
  EXPECT_NEAR(std::abs(dec.block_x(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(dec.block_y(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dec.block_z(0, 0)), 1.0, 1e-15);
  // ||PG - GP|| = 1 and ||G|| is the golden ratio.
  EXPECT_NEAR(dec.commutation_residual, 1.0 / std::numbers::phi, 1e-14);
  EXPECT_NEAR(dec.reducing_residual, 0.0, 1e-15);
  EXPECT_THROW(lemma41_check(dec), InapplicableError);
}

TEST(Decompose, ZeroA) {
  const CMatrix b = mat({{1.0, 2.0}, {3.0, 4.0}});
  const auto dec = decompose_pair(CMatrix::Zero(2, 2), b);
  EXPECT_EQ(dec.rank, 0);
  EXPECT_EQ(dec.block_a_prime.size(), 0);
  EXPECT_LT(norm2(dec.basis_u * dec.block_z * dec.basis_u.adjoint() - b), 1e-14);
  EXPECT_EQ(dec.commutation_residual, 0.0);
}

TEST(Decompose, ReconstructsB) {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const Index n = rng.uniform_index(1, 8);
    const CMatrix a = random_ep(n, rng.uniform_index(0, n), rng);
    const CMatrix b = complex_gaussian(n, n, rng);
    const auto dec = decompose_pair(a, b);
    EXPECT_LT(norm2(dec.basis_u * dec.b_local() * dec.basis_u.adjoint() - b), 1e-10 * (1 + norm2(b)));
    EXPECT_LT(norm2(dec.basis_u.adjoint() * dec.basis_u - CMatrix::Identity(n, n)), 1e-12);
    EXPECT_LT(norm2(embed_a_prime(dec, dec.block_a_prime) - a), 1e-10 * (1 + norm2(a)));
    EXPECT_LT(dec.reducing_residual, 1e-10);
  }
}

TEST(Decompose, MismatchedSizes) {
  EXPECT_THROW(decompose_pair(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)), DimensionError);
}

TEST(Lemma41, CommutingEpPair) {
  const CMatrix a = block_diag(mat({{2.0}}), CMatrix::Zero(2, 2));
  const CMatrix b = block_diag(mat({{3.0}}), mat({{1.0, 0.0}, {0.0, 0.0}}));
  const auto rep = lemma41_check(decompose_pair(a, b));
  EXPECT_TRUE(rep.nz_in_nzstar_and_nystar.holds);
  EXPECT_TRUE(rep.nbprime_cap_ny_in_nbprimestar.holds);
  ASSERT_TRUE(rep.equalities_checked);
  EXPECT_TRUE(rep.nz_equals.holds);
  EXPECT_TRUE(rep.nbprime_equals.holds);
}

TEST(Lemma41, BNotQuasiposinormal) {
  const CMatrix a = block_diag(mat({{1.0}}), CMatrix::Zero(2, 2));
  const CMatrix b = block_diag(mat({{1.0}}), kJ);
  EXPECT_THROW(lemma41_check(decompose_pair(a, b)), InapplicableError);
}

TEST(Lemma41, RandomCommutingPairs) {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const Index n = rng.uniform_index(1, 8);
    const auto p = random_commuting_ep_pair(n, rng.uniform_index(1, n), rng);
    const auto rep = lemma41_check(decompose_pair(p.a, p.b));
    EXPECT_TRUE(rep.nz_in_nzstar_and_nystar.holds);
    EXPECT_TRUE(rep.nbprime_cap_ny_in_nbprimestar.holds);
    EXPECT_TRUE(rep.equalities_checked);
  }
}

TEST(Thm42, JordanBlockInKernelCorner) {
  const CMatrix a = block_diag(mat({{1.0, 0.0}, {0.0, 2.0}}), CMatrix::Zero(2, 2));
  const CMatrix b = block_diag(mat({{1.0, 1.0}, {0.0, 1.0}}), kJ);
  const auto dec = decompose_pair(a, b);
  ASSERT_EQ(dec.rank, 2);
  const auto c = thm42_conditions(dec);
  EXPECT_TRUE(c.b_prime_posinormal);
  EXPECT_FALSE(c.z_coposinormal);
  EXPECT_TRUE(c.y_zero);
  EXPECT_LT(norm2(dec.basis_u * dec.b_local() * dec.basis_u.adjoint() - b), 1e-14);
}

TEST(Thm42, NonzeroY) {
  CMatrix b = CMatrix::Identity(2, 2);
  b(1, 0) = 0.5;
  const auto c = thm42_conditions(decompose_pair(mat({{1.0, 0.0}, {0.0, 0.0}}), b));
  EXPECT_FALSE(c.y_zero);
  EXPECT_NEAR(c.y_norm, 0.5 / norm2(b), 1e-14);
}
