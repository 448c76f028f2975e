#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "eplab/generators.hpp"
#include "eplab/linalg.hpp"
#include "eplab/subspace.hpp"
#include "test_support.hpp"

using namespace eplab;
using namespace eplab::testing;

namespace {

struct PenroseResiduals {
  double r1, r2, r3, r4;
};

PenroseResiduals penrose(const CMatrix& a, const CMatrix& x) {
  const double na = std::max(norm2(a), 1e-300);
  const double nx = std::max(norm2(x), 1e-300);
  return {norm2(a * x * a - a) / na, norm2(x * a * x - x) / nx,
          norm2(CMatrix(a * x) - CMatrix(a * x).adjoint()),
          norm2(CMatrix(x * a) - CMatrix(x * a).adjoint())};
}

}  // namespace

TEST(Rank, TwoByTwoSingularByDeterminant) {
  // det = -1 - i^2 = 0 and the matrix is nonzero, so rank 1.
  const CMatrix m = mat({{1.0, 1i}, {1i, -1.0}});
  EXPECT_LT(std::abs(m.determinant()), 1e-15);
  EXPECT_EQ(numerical_rank(m).rank, 1);
}

TEST(Rank, IdentityAndZero) {
  EXPECT_EQ(numerical_rank(CMatrix::Identity(5, 5)).rank, 5);
  const auto z = numerical_rank(CMatrix::Zero(3, 4));
  EXPECT_EQ(z.rank, 0);
  EXPECT_EQ(z.threshold, 0.0);
}

TEST(Rank, EmptyMatrix) {
  EXPECT_EQ(numerical_rank(CMatrix(0, 0)).rank, 0);
  const auto s = full_svd(CMatrix(0, 3), ToleranceConfig{});
  EXPECT_EQ(s.r(), 0);
  EXPECT_EQ(s.v.rows(), 3);
}

TEST(Rank, ThresholdFormula) {
  CMatrix m = CMatrix::Zero(3, 2);
  m(0, 0) = 4.0;
  m(1, 1) = 1e-20;
  const auto d = numerical_rank(m);
  EXPECT_DOUBLE_EQ(d.threshold, 50.0 * std::numeric_limits<double>::epsilon() * 3 * 4.0);
  EXPECT_EQ(d.rank, 1);
}

TEST(Rank, ReferenceNormRaisesThreshold) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1e-14;
  EXPECT_EQ(numerical_rank(m).rank, 1);
  EXPECT_EQ(numerical_rank(m, ToleranceConfig{}, 1.0).rank, 0);
}

TEST(Rank, AdjointAndPinvPreserveRank) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Index rows = rng.uniform_index(1, 9), cols = rng.uniform_index(1, 9);
    const Index r = rng.uniform_index(0, std::min(rows, cols));
    const CMatrix m = random_low_rank(rows, cols, r, rng);
    const Index rk = numerical_rank(m).rank;
    EXPECT_EQ(rk, r);
    EXPECT_EQ(numerical_rank(CMatrix(m.adjoint())).rank, rk);
    EXPECT_EQ(numerical_rank(pinv(m)).rank, rk);
    EXPECT_EQ(rk, qr_rank(m));
    EXPECT_EQ(kernel_basis(m).dim(), cols - rk);
  }
}

TEST(Rank, NonFiniteRejected) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(numerical_rank(m), InputError);
  m(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(pinv(m), InputError);
}

TEST(Pinv, FullColumnRankNormalEquations) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const CMatrix a = complex_gaussian(7, 4, rng);
    const CMatrix oracle = (a.adjoint() * a).inverse() * a.adjoint();
    EXPECT_LT(norm2(pinv(a) - oracle) / norm2(oracle), 1e-10);
  }
}

TEST(Pinv, RankOneOuterProduct) {
  // (x y^*)^+ = y x^* / (|x|^2 |y|^2)
  const CVector x = (CVector(3) << 1.0, 2i, -1.0).finished();
  const CVector y = (CVector(2) << 1i, 3.0).finished();
  const CMatrix m = x * y.adjoint();
  const CMatrix oracle = y * x.adjoint() / (x.squaredNorm() * y.squaredNorm());
  EXPECT_LT(norm2(pinv(m) - oracle), 1e-14);
}

TEST(Pinv, ZeroMapsToZeroTransposed) {
  const CMatrix p = pinv(CMatrix::Zero(2, 3));
  EXPECT_EQ(p.rows(), 3);
  EXPECT_EQ(p.cols(), 2);
  EXPECT_EQ(norm2(p), 0.0);
}

TEST(Pinv, JordanBlock) {
  const CMatrix j = mat({{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_LT(norm2(pinv(j) - j.adjoint()), 1e-15);
}

TEST(Pinv, PenroseAndProjectorIdentitiesRandom) {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    const Index rows = rng.uniform_index(1, 16), cols = rng.uniform_index(1, 16);
    const Index r = rng.uniform_index(0, std::min(rows, cols));
    const CMatrix a = random_low_rank(rows, cols, r, rng);
    const CMatrix x = pinv(a);
    const auto p = penrose(a, x);
    EXPECT_LE(p.r1, 1e-9);
    EXPECT_LE(p.r2, 1e-9);
    EXPECT_LE(p.r3, 1e-9);
    EXPECT_LE(p.r4, 1e-9);
    const CMatrix p_corange = projector(range_basis(CMatrix(a.adjoint())));
    const CMatrix p_range = projector(range_basis(a));
    EXPECT_LE(norm2(x * a - p_corange), 1e-8);
    EXPECT_LE(norm2(a * x - p_range), 1e-8);
  }
}

TEST(Pinv, RealScalarInstantiation) {
  Eigen::MatrixXd a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  const Eigen::MatrixXd oracle = (a.transpose() * a).inverse() * a.transpose();
  EXPECT_LT((pinv(a) - oracle).norm(), 1e-14);
  EXPECT_EQ(numerical_rank(a).rank, 2);
}

TEST(Hermitian, EigenvaluesOfTwoByTwo) {
  // Characteristic polynomial of [[2,1],[1,2]] is (x-1)(x-3).
  const CMatrix h = mat({{2.0, 1.0}, {1.0, 2.0}});
  EXPECT_NEAR(min_hermitian_eigenvalue(h), 1.0, 1e-14);
  EXPECT_TRUE(psd_check(h));
  EXPECT_FALSE(psd_check(CMatrix(h - 2.0 * CMatrix::Identity(2, 2))));
}

TEST(Hermitian, PsdBoundaryAndErrors) {
  EXPECT_TRUE(psd_check(CMatrix::Zero(3, 3)));
  CMatrix almost = CMatrix::Zero(2, 2);
  almost(1, 1) = -1e-12;
  EXPECT_TRUE(psd_check(almost));
  EXPECT_THROW(psd_check(mat({{0.0, 1.0}, {0.0, 0.0}})), InputError);
  EXPECT_THROW(psd_check(CMatrix::Zero(2, 3)), InputError);
}

TEST(Tolerances, Validation) {
  ToleranceConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.subspace_tol = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = {};
  cfg.rank_multiplier = -1;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(Dimensions, MismatchedOperands) {
  EXPECT_THROW(require_same_square(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)), DimensionError);
  EXPECT_THROW(require_same_square(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), InputError);
}
