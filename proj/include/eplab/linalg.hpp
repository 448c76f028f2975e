#pragma once

// Dense-matrix primitives shared by every other module: numerical rank,
// Moore-Penrose pseudoinverse and a Hermitian positive-semidefinite test.
//
// Everything here is templated on the Eigen scalar so that real and complex
// operands go through the same code path.  The rank threshold is
//
//     rank_multiplier * eps * max(rows, cols) * sigma_max
//
// and the SVD that produced it is kept around (see Svd) so that ranges,
// kernels and pseudoinverses derived from one matrix all agree on its rank.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <limits>
#include <string>

#include "eplab/errors.hpp"

namespace eplab {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = MatrixX<Complex>;
using CVector = VectorX<Complex>;

struct ToleranceConfig {
  double rank_multiplier = 50.0;
  double subspace_tol = 1e-8;
  double psd_tol = 1e-10;

  void validate() const {
    if (!(rank_multiplier > 0) || !(subspace_tol > 0) || !(psd_tol > 0)) {
      throw InputError("tolerances must be strictly positive");
    }
  }
};

template <typename Real>
struct BasicRankDecision {
  Index rank = 0;
  VectorX<Real> singular_values;  // nonincreasing
  Real threshold = 0;
};
using RankDecision = BasicRankDecision<double>;

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const std::string& what = "matrix") {
  if (!m.allFinite()) throw InputError(what + " has non-finite entries");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const std::string& what = "matrix") {
  if (m.rows() != m.cols()) {
    throw InputError(what + " must be square, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

template <typename DerivedA, typename DerivedB>
void require_same_square(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  require_square(a, "A");
  require_square(b, "B");
  if (a.rows() != b.rows()) {
    throw DimensionError("operands differ in size: " + std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()));
  }
}

template <typename Real>
Real rank_threshold(Real sigma_max, Index rows, Index cols, const ToleranceConfig& cfg) {
  if (sigma_max == Real(0)) return Real(0);
  return static_cast<Real>(cfg.rank_multiplier) * std::numeric_limits<Real>::epsilon() *
         static_cast<Real>(std::max(rows, cols)) * sigma_max;
}

/// `reference_norm` raises the scale the threshold is measured against.  A
/// computed product AB carries roundoff of order eps * ||A|| * ||B||, which
/// can dwarf sigma_max(AB) itself when AB vanishes in exact arithmetic; pass
/// ||A|| * ||B|| so such products decide rank 0.
template <typename Real>
BasicRankDecision<Real> decide_rank(const VectorX<Real>& singular_values, Index rows, Index cols,
                                    const ToleranceConfig& cfg, Real reference_norm = Real(0)) {
  BasicRankDecision<Real> d;
  d.singular_values = singular_values;
  const Real smax = singular_values.size() ? singular_values(0) : Real(0);
  d.threshold = rank_threshold(std::max(smax, reference_norm), rows, cols, cfg);
  d.rank = 0;
  for (Index i = 0; i < singular_values.size(); ++i) {
    if (singular_values(i) > d.threshold) ++d.rank;
  }
  return d;
}

/// Full singular value decomposition M = U * diag(s) * V^* together with the
/// rank decision derived from it.  U is rows x rows, V is cols x cols.
template <typename Scalar>
struct Svd {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  MatrixX<Scalar> u;
  MatrixX<Scalar> v;
  BasicRankDecision<Real> rank;

  Index r() const { return rank.rank; }
  auto range_cols() const { return u.leftCols(rank.rank); }
  auto corange_cols() const { return v.leftCols(rank.rank); }
  auto kernel_cols() const { return v.rightCols(v.cols() - rank.rank); }
  auto cokernel_cols() const { return u.rightCols(u.cols() - rank.rank); }
};

template <typename Derived>
Svd<typename Derived::Scalar> full_svd(const Eigen::MatrixBase<Derived>& m, const ToleranceConfig& cfg,
                                       typename Derived::RealScalar reference_norm = 0) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  require_finite(m);
  Svd<Scalar> out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u = MatrixX<Scalar>::Identity(m.rows(), m.rows());
    out.v = MatrixX<Scalar>::Identity(m.cols(), m.cols());
    out.rank = decide_rank<Real>(VectorX<Real>(0), m.rows(), m.cols(), cfg, reference_norm);
    return out;
  }
  Eigen::JacobiSVD<MatrixX<Scalar>> svd(m.derived(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.u = svd.matrixU();
  out.v = svd.matrixV();
  out.rank = decide_rank<Real>(svd.singularValues(), m.rows(), m.cols(), cfg, reference_norm);
  return out;
}

template <typename Derived>
auto singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  if (m.rows() == 0 || m.cols() == 0) return VectorX<Real>(0);
  Eigen::JacobiSVD<MatrixX<typename Derived::Scalar>> svd(m.derived());
  return VectorX<Real>(svd.singularValues());
}

/// Spectral (operator 2-) norm; 0 for empty matrices.
template <typename Derived>
typename Derived::RealScalar operator_norm(const Eigen::MatrixBase<Derived>& m) {
  const auto s = singular_values(m);
  return s.size() ? s(0) : typename Derived::RealScalar(0);
}

template <typename Derived>
BasicRankDecision<typename Derived::RealScalar> numerical_rank(const Eigen::MatrixBase<Derived>& m,
                                                               const ToleranceConfig& cfg = {},
                                                               typename Derived::RealScalar reference_norm = 0) {
  require_finite(m);
  return decide_rank(singular_values(m), m.rows(), m.cols(), cfg, reference_norm);
}

/// Moore-Penrose pseudoinverse with sub-threshold singular values dropped.
/// The zero matrix maps to the zero matrix of transposed shape.
template <typename Scalar>
MatrixX<Scalar> pinv(const Svd<Scalar>& svd) {
  const Index r = svd.r();
  MatrixX<Scalar> scaled = svd.v.leftCols(r);
  for (Index j = 0; j < r; ++j) scaled.col(j) /= svd.rank.singular_values(j);
  return scaled * svd.u.leftCols(r).adjoint();
}

template <typename Derived>
MatrixX<typename Derived::Scalar> pinv(const Eigen::MatrixBase<Derived>& m, const ToleranceConfig& cfg = {}) {
  return pinv(full_svd(m, cfg));
}

/// Smallest eigenvalue of the Hermitian part (H + H^*)/2.
template <typename Derived>
typename Derived::RealScalar min_hermitian_eigenvalue(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  require_square(h, "H");
  if (h.rows() == 0) return 0;
  const MatrixX<Scalar> sym = (h + h.adjoint()) / typename Derived::RealScalar(2);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// True iff H is positive semidefinite up to psd_tol * (1 + ||H||).
/// Throws InputError when H is not Hermitian within the same tolerance.
template <typename Derived>
bool psd_check(const Eigen::MatrixBase<Derived>& h, const ToleranceConfig& cfg = {}) {
  require_square(h, "H");
  require_finite(h, "H");
  const auto scale = cfg.psd_tol * (1 + operator_norm(h));
  if (operator_norm(h - h.adjoint()) > scale) throw InputError("psd_check: matrix is not Hermitian");
  return min_hermitian_eigenvalue(h) >= -scale;
}

}  // namespace eplab
