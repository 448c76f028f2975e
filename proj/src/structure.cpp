#include "eplab/structure.hpp"

#include "eplab/classify.hpp"
#include "eplab/subspace.hpp"

namespace eplab {
namespace {

double safe_ratio(double num, double den) { return den > 0 ? num / den : num; }

CMatrix vstack(const CMatrix& top, const CMatrix& bottom) {
  CMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

}  // namespace

CMatrix BlockDecomposition::b_local() const {
  const Index n = basis_u.rows();
  CMatrix out(n, n);
  out << block_b_prime, block_x, block_y, block_z;
  return out;
}

CMatrix embed_a_prime(const BlockDecomposition& dec, const CMatrix& block) {
  const Index n = dec.basis_u.rows();
  CMatrix local = CMatrix::Zero(n, n);
  local.topLeftCorner(dec.rank, dec.rank) = block;
  return dec.basis_u * local * dec.basis_u.adjoint();
}

BlockDecomposition decompose_pair(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg) {
  require_same_square(a, b);
  require_finite(a, "A");
  require_finite(b, "B");

  BlockDecomposition dec;
  const auto svd = full_svd(a, cfg);
  dec.rank = svd.r();
  dec.basis_u = svd.v;
  const CMatrix q = dec.q();
  const CMatrix k = dec.k();

  dec.block_a_prime = q.adjoint() * a * q;
  dec.block_b_prime = q.adjoint() * b * q;
  dec.block_x = q.adjoint() * b * k;
  dec.block_y = k.adjoint() * b * q;
  dec.block_z = k.adjoint() * b * k;

  dec.norm_a = svd.rank.singular_values.size() ? svd.rank.singular_values(0) : 0.0;
  dec.norm_b = operator_norm(b);
  const double off = operator_norm(CMatrix(k.adjoint() * a * q)) + operator_norm(CMatrix(q.adjoint() * a * k)) +
                     operator_norm(CMatrix(k.adjoint() * a * k));
  dec.reducing_residual = safe_ratio(off, dec.norm_a);
  dec.commutation_residual = safe_ratio(operator_norm(CMatrix(a * b - b * a)), dec.norm_a * dec.norm_b);
  dec.ya_residual = safe_ratio(operator_norm(CMatrix(dec.block_y * dec.block_a_prime)), dec.norm_a * dec.norm_b);
  return dec;
}

InclusionReport lemma41_check(const BlockDecomposition& dec, const ToleranceConfig& cfg) {
  if (dec.commutation_residual > cfg.subspace_tol) {
    throw InapplicableError("lemma41_check: A and B do not commute");
  }
  if (dec.reducing_residual > cfg.subspace_tol) {
    throw InapplicableError("lemma41_check: N(A) does not reduce A (A not quasiposinormal)");
  }
  const CMatrix b = dec.b_local();
  const auto svd_b = full_svd(b, cfg);
  const Subspace ker_b = kernel_basis(svd_b);
  const Subspace ker_b_star(svd_b.cokernel_cols());
  if (!includes(ker_b, ker_b_star, cfg)) {
    throw InapplicableError("lemma41_check: B is not quasiposinormal");
  }

  const CMatrix& bp = dec.block_b_prime;
  const CMatrix& y = dec.block_y;
  const CMatrix& z = dec.block_z;

  InclusionReport rep;
  const auto nz = kernel_basis(z, cfg);
  const auto nzstar_nystar = kernel_basis(vstack(z.adjoint(), y.adjoint()), cfg);
  const auto nbp_ny = kernel_basis(vstack(bp, y), cfg);
  const auto nbpstar = kernel_basis(CMatrix(bp.adjoint()), cfg);

  const double ra = inclusion_residual(nz, nzstar_nystar);
  const double rb = inclusion_residual(nbp_ny, nbpstar);
  rep.nz_in_nzstar_and_nystar = {ra <= cfg.subspace_tol, ra};
  rep.nbprime_cap_ny_in_nbprimestar = {rb <= cfg.subspace_tol, rb};

  if (includes(ker_b_star, ker_b, cfg)) {
    rep.equalities_checked = true;
    const double ea = equality_residual(nz, nzstar_nystar);
    const double eb = equality_residual(nbp_ny, nbpstar);
    rep.nz_equals = {ea <= cfg.subspace_tol, ea};
    rep.nbprime_equals = {eb <= cfg.subspace_tol, eb};
  }
  return rep;
}

Thm42Conditions thm42_conditions(const BlockDecomposition& dec, const ToleranceConfig& cfg) {
  Thm42Conditions out;
  out.b_prime_posinormal = dec.block_b_prime.size() == 0 || is_posinormal(dec.block_b_prime, cfg).holds;
  out.z_coposinormal = dec.block_z.size() == 0 || is_coposinormal(dec.block_z, cfg).holds;
  out.y_norm = safe_ratio(operator_norm(dec.block_y), dec.norm_b);
  out.y_zero = out.y_norm <= cfg.subspace_tol;
  return out;
}

}  // namespace eplab
