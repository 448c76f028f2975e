#pragma once

// Subspaces of K^n stored as orthonormal column bases, plus the lattice
// operations (inclusion, intersection, sum) and minimal angles.
//
// Inclusion is decided by the one-sided residual ||(I - P_2) Q_1||, i.e. the
// sine of the largest principal angle from S1 into S2.  Intersection and sum
// drop singular values of [Q1 | -Q2] (resp. [Q1 | Q2]) below
// subspace_tol / sqrt(2); since those singular values are sqrt(1 -/+ cos t)
// for principal angles t, both operations use the same angular cut-off as
// includes() and dim(S1 + S2) + dim(S1 n S2) = dim S1 + dim S2 holds exactly.

#include <cmath>
#include <numbers>
#include <optional>

#include "eplab/linalg.hpp"

namespace eplab {

template <typename Scalar>
class BasicSubspace {
 public:
  using Matrix = MatrixX<Scalar>;

  /// {0} inside K^0.
  BasicSubspace() = default;

  /// Wraps an orthonormal basis; throws InputError when
  /// ||Q^*Q - I|| exceeds tol.
  explicit BasicSubspace(Matrix basis, double tol = ToleranceConfig{}.subspace_tol)
      : basis_(std::move(basis)) {
    require_finite(basis_, "subspace basis");
    const Index k = basis_.cols();
    if (k > basis_.rows()) throw InputError("subspace basis has more columns than rows");
    if (k > 0) {
      const Matrix gram = basis_.adjoint() * basis_ - Matrix::Identity(k, k);
      if (operator_norm(gram) > tol) throw InputError("subspace basis is not orthonormal");
    }
  }

  static BasicSubspace trivial(Index ambient_dim) { return BasicSubspace(Matrix(ambient_dim, 0)); }
  static BasicSubspace whole(Index ambient_dim) {
    return BasicSubspace(Matrix::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return basis_.rows(); }
  Index dim() const { return basis_.cols(); }
  bool is_trivial() const { return basis_.cols() == 0; }
  const Matrix& basis() const { return basis_; }

 private:
  Matrix basis_;
};

using Subspace = BasicSubspace<Complex>;

struct BouldinComponents {
  Index deflated_dim = 0;   // dim(N(S) n R(T))
  Index remainder_dim = 0;  // dim of N(S) n (N(S) n R(T))^perp
};

struct AngleReport {
  double cos_min_angle = 0;
  double angle_radians = std::numbers::pi / 2;
  std::optional<BouldinComponents> bouldin_components;
};

/// Orthogonal projector Q Q^*.
template <typename Scalar>
MatrixX<Scalar> projector(const BasicSubspace<Scalar>& s) {
  return s.basis() * s.basis().adjoint();
}

template <typename Derived>
BasicSubspace<typename Derived::Scalar> range_basis(const Eigen::MatrixBase<Derived>& m,
                                                    const ToleranceConfig& cfg = {}) {
  const auto svd = full_svd(m, cfg);
  return BasicSubspace<typename Derived::Scalar>(svd.range_cols());
}

template <typename Derived>
BasicSubspace<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m,
                                                     const ToleranceConfig& cfg = {}) {
  const auto svd = full_svd(m, cfg);
  return BasicSubspace<typename Derived::Scalar>(svd.kernel_cols());
}

/// Range and kernel from an already-decided SVD.
template <typename Scalar>
BasicSubspace<Scalar> range_basis(const Svd<Scalar>& svd) {
  return BasicSubspace<Scalar>(svd.range_cols());
}
template <typename Scalar>
BasicSubspace<Scalar> kernel_basis(const Svd<Scalar>& svd) {
  return BasicSubspace<Scalar>(svd.kernel_cols());
}

namespace detail {

template <typename Scalar>
void require_same_ambient(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subspaces live in different ambient spaces: " +
                         std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
  }
}

inline double angular_cutoff(const ToleranceConfig& cfg) { return cfg.subspace_tol / std::numbers::sqrt2; }

}  // namespace detail

/// ||(I - P_{S2}) Q_{S1}||; zero iff S1 is contained in S2.
template <typename Scalar>
double inclusion_residual(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2) {
  detail::require_same_ambient(s1, s2);
  if (s1.is_trivial()) return 0.0;
  const MatrixX<Scalar> outside = s1.basis() - s2.basis() * (s2.basis().adjoint() * s1.basis());
  return static_cast<double>(operator_norm(outside));
}

/// S1 is contained in S2.
template <typename Scalar>
bool includes(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2,
              const ToleranceConfig& cfg = {}) {
  return inclusion_residual(s1, s2) <= cfg.subspace_tol;
}

template <typename Scalar>
double equality_residual(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2) {
  return std::max(inclusion_residual(s1, s2), inclusion_residual(s2, s1));
}

template <typename Scalar>
bool equals(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2, const ToleranceConfig& cfg = {}) {
  return includes(s1, s2, cfg) && includes(s2, s1, cfg);
}

template <typename Scalar>
BasicSubspace<Scalar> intersect(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2,
                                const ToleranceConfig& cfg = {}) {
  using Matrix = MatrixX<Scalar>;
  detail::require_same_ambient(s1, s2);
  const Index n = s1.ambient_dim();
  if (s1.is_trivial() || s2.is_trivial()) return BasicSubspace<Scalar>::trivial(n);

  const Index k1 = s1.dim();
  const Index k2 = s2.dim();
  Matrix stacked(n, k1 + k2);
  stacked << s1.basis(), -s2.basis();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index null_start = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > detail::angular_cutoff(cfg)) null_start = i + 1;
  }
  const Index nullity = k1 + k2 - null_start;
  if (nullity == 0) return BasicSubspace<Scalar>::trivial(n);

  // Each null vector (a, b) satisfies Q1 a = Q2 b; map back through Q1.
  const Matrix mapped = s1.basis() * svd.matrixV().bottomRightCorner(k1 + k2, nullity).topRows(k1);
  Eigen::JacobiSVD<Matrix> ortho(mapped, Eigen::ComputeThinU);
  return BasicSubspace<Scalar>(ortho.matrixU().leftCols(nullity));
}

template <typename Scalar>
BasicSubspace<Scalar> sum(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2,
                          const ToleranceConfig& cfg = {}) {
  using Matrix = MatrixX<Scalar>;
  detail::require_same_ambient(s1, s2);
  if (s1.is_trivial()) return s2;
  if (s2.is_trivial()) return s1;

  Matrix joined(s1.ambient_dim(), s1.dim() + s2.dim());
  joined << s1.basis(), s2.basis();
  Eigen::JacobiSVD<Matrix> svd(joined, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index keep = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > detail::angular_cutoff(cfg)) keep = i + 1;
  }
  return BasicSubspace<Scalar>(svd.matrixU().leftCols(keep));
}

/// Orthogonal complement of `inner` inside `outer`.  Assumes inner is
/// contained in outer; the complement is computed in outer's coordinates.
template <typename Scalar>
BasicSubspace<Scalar> relative_complement(const BasicSubspace<Scalar>& outer, const BasicSubspace<Scalar>& inner,
                                          const ToleranceConfig& cfg = {}) {
  detail::require_same_ambient(outer, inner);
  if (inner.is_trivial()) return outer;
  const MatrixX<Scalar> coords = outer.basis().adjoint() * inner.basis();
  const auto svd = full_svd(MatrixX<Scalar>(coords.adjoint()), cfg);
  return BasicSubspace<Scalar>(outer.basis() * svd.kernel_cols());
}

inline AngleReport angle_from_cosine(double c) {
  AngleReport r;
  r.cos_min_angle = std::clamp(c, 0.0, 1.0);
  r.angle_radians = std::acos(r.cos_min_angle);
  return r;
}

/// Minimal angle: arccos of the largest singular value of Q1^* Q2.
template <typename Scalar>
AngleReport minimal_angle(const BasicSubspace<Scalar>& s1, const BasicSubspace<Scalar>& s2) {
  detail::require_same_ambient(s1, s2);
  if (s1.is_trivial() || s2.is_trivial()) {
    throw UndefinedAngleError("minimal angle is undefined for the trivial subspace");
  }
  const MatrixX<Scalar> cross = s1.basis().adjoint() * s2.basis();
  return angle_from_cosine(static_cast<double>(operator_norm(cross)));
}

/// Angle between R(T) and N(S) n (N(S) n R(T))^perp.  Reports cos 0
/// (angle pi/2) when either side is trivial.
template <typename DerivedS, typename DerivedT>
AngleReport bouldin_angle(const Eigen::MatrixBase<DerivedS>& s, const Eigen::MatrixBase<DerivedT>& t,
                          const ToleranceConfig& cfg = {}) {
  require_same_square(s, t);
  const auto kernel_s = kernel_basis(s, cfg);
  const auto range_t = range_basis(t, cfg);
  const auto deflated = intersect(kernel_s, range_t, cfg);
  const auto remainder = relative_complement(kernel_s, deflated, cfg);

  AngleReport r = (remainder.is_trivial() || range_t.is_trivial()) ? angle_from_cosine(0.0)
                                                                    : minimal_angle(range_t, remainder);
  r.bouldin_components = BouldinComponents{deflated.dim(), remainder.dim()};
  return r;
}

}  // namespace eplab
