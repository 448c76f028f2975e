#include "eplab/classify.hpp"

#include <algorithm>

namespace eplab {
namespace {

// Projectors onto R(M^*) and R(M) taken straight from the SVD, so that they
// are Hermitian by construction and share the rank decision of M.
struct ProjectorPair {
  CMatrix corange;  // M^dagger M
  CMatrix range;    // M M^dagger
};

ProjectorPair projectors(const Svd<Complex>& svd) {
  const CMatrix v = svd.corange_cols();
  const CMatrix u = svd.range_cols();
  return {v * v.adjoint(), u * u.adjoint()};
}

}  // namespace

ProjectorTest is_posinormal(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m);
  const auto svd = full_svd(m, cfg);
  const double res = inclusion_residual(range_basis(svd), Subspace(svd.corange_cols()));
  return {res <= cfg.subspace_tol, res};
}

ProjectorTest is_coposinormal(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m);
  const auto svd = full_svd(m, cfg);
  const double res = inclusion_residual(Subspace(svd.corange_cols()), range_basis(svd));
  return {res <= cfg.subspace_tol, res};
}

ProjectorTest is_ep(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m);
  const auto svd = full_svd(m, cfg);
  const double res = equality_residual(range_basis(svd), Subspace(svd.corange_cols()));
  return {res <= cfg.subspace_tol, res};
}

ProjectorTest ep_via_projectors(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m);
  const CMatrix mp = pinv(m, cfg);
  const double res = operator_norm(CMatrix(mp * m - m * mp));
  return {res <= cfg.subspace_tol, res};
}

bool hypo_ep_check(const CMatrix& m, const ToleranceConfig& cfg) {
  require_square(m);
  const auto p = projectors(full_svd(m, cfg));
  return psd_check(CMatrix(p.corange - p.range), cfg);
}

ClassificationReport classify(const CMatrix& m, const ToleranceConfig& cfg, double reference_norm) {
  require_square(m);
  require_finite(m);
  cfg.validate();

  ClassificationReport rep;
  const auto svd = full_svd(m, cfg, reference_norm);
  rep.rank = svd.rank;
  const double norm = svd.rank.singular_values.size() ? svd.rank.singular_values(0) : 0.0;

  // Normal / hyponormal on M / ||M|| so that the verdict is scale-free.
  const CMatrix unit = norm > 0 ? CMatrix(m / norm) : m;
  CMatrix self_comm = unit.adjoint() * unit - unit * unit.adjoint();
  self_comm = (self_comm + self_comm.adjoint()) / 2.0;
  const double comm = operator_norm(self_comm);
  rep.residuals["commutator"] = comm;
  rep.normal = comm <= cfg.subspace_tol;
  rep.residuals["hyponormal_min_eig"] = min_hermitian_eigenvalue(self_comm);
  rep.hyponormal = psd_check(self_comm, cfg);

  const auto range = range_basis(svd);
  const auto kernel = kernel_basis(svd);
  const Subspace corange(svd.corange_cols());
  const Subspace cokernel(svd.cokernel_cols());

  const double qpos = inclusion_residual(kernel, cokernel);
  const double pos = inclusion_residual(range, corange);
  const double copos = inclusion_residual(corange, range);
  rep.residuals["quasiposinormal"] = qpos;
  rep.residuals["posinormal"] = pos;
  rep.residuals["coposinormal"] = copos;
  rep.quasiposinormal = qpos <= cfg.subspace_tol;
  rep.posinormal = pos <= cfg.subspace_tol;
  rep.coposinormal = copos <= cfg.subspace_tol;
  rep.ep = std::max(pos, copos) <= cfg.subspace_tol;

  // Projector route.
  const auto p = projectors(svd);
  const CMatrix diff = p.corange - p.range;
  const double proj_res = operator_norm(diff);
  rep.residuals["ep_projector"] = proj_res;
  const bool ep_proj = proj_res <= cfg.subspace_tol;
  rep.residuals["hypo_ep_min_eig"] = min_hermitian_eigenvalue(diff);
  rep.hypo_ep = psd_check(diff, cfg);

  if (ep_proj != rep.ep) rep.conflicts.emplace_back("ep: subspace route vs projector route");
  if (rep.hypo_ep != ep_proj) rep.conflicts.emplace_back("hypo_ep: psd route vs projector route");

  const CMatrix transposed = m.transpose();
  const auto kernel_t = kernel_basis(full_svd(transposed, cfg, reference_norm));
  const double epr = equality_residual(kernel, kernel_t);
  rep.residuals["ep_r"] = epr;
  rep.ep_r = epr <= cfg.subspace_tol;
  return rep;
}

}  // namespace eplab
