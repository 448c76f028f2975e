#include "eplab/products.hpp"

#include "eplab/classify.hpp"
#include "eplab/subspace.hpp"

namespace eplab {
namespace {

double sigma_max(const Svd<Complex>& svd) {
  return svd.rank.singular_values.size() ? svd.rank.singular_values(0) : 0.0;
}

double product_scale(const Svd<Complex>& a, const Svd<Complex>& b) { return sigma_max(a) * sigma_max(b); }

}  // namespace

ProductReport hartwig_katz(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg) {
  require_same_square(a, b);
  require_finite(a, "A");
  require_finite(b, "B");

  const CMatrix ab = a * b;
  const auto svd_a = full_svd(a, cfg);
  const auto svd_b = full_svd(b, cfg);
  const auto svd_ab = full_svd(ab, cfg, product_scale(svd_a, svd_b));

  const Subspace range_a = range_basis(svd_a);
  const Subspace range_b = range_basis(svd_b);
  const Subspace range_ab = range_basis(svd_ab);
  const Subspace kernel_a = kernel_basis(svd_a);
  const Subspace kernel_b = kernel_basis(svd_b);
  const Subspace kernel_ab = kernel_basis(svd_ab);

  ProductReport rep;
  auto& res = rep.residuals;
  res["cond_i"] = inclusion_residual(range_ab, range_b);
  res["cond_ii"] = inclusion_residual(kernel_a, kernel_ab);
  res["a_ep"] = equality_residual(range_a, Subspace(svd_a.corange_cols()));
  res["b_ep"] = equality_residual(range_b, Subspace(svd_b.corange_cols()));
  res["ab_ep"] = equality_residual(range_ab, Subspace(svd_ab.corange_cols()));
  res["range_identity"] = equality_residual(range_ab, intersect(range_a, range_b, cfg));
  res["kernel_identity"] = equality_residual(kernel_ab, sum(kernel_a, kernel_b, cfg));

  const double tol = cfg.subspace_tol;
  rep.cond_i = res["cond_i"] <= tol;
  rep.cond_ii = res["cond_ii"] <= tol;
  rep.a_ep = res["a_ep"] <= tol;
  rep.b_ep = res["b_ep"] <= tol;
  rep.ab_ep = res["ab_ep"] <= tol;
  rep.range_identity = res["range_identity"] <= tol;
  rep.kernel_identity = res["kernel_identity"] <= tol;
  return rep;
}

ProductReport djordjevic_check(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg) {
  auto rep = hartwig_katz(a, b, cfg);
  if (!rep.a_ep) throw InapplicableError("djordjevic_check: A is not EP");
  if (!rep.b_ep) throw InapplicableError("djordjevic_check: B is not EP");
  return rep;
}

Thm53Report thm53_check(const CMatrix& a, const ToleranceConfig& cfg) {
  require_square(a);
  const CMatrix a2 = a * a;
  const auto svd_a = full_svd(a, cfg);
  const auto svd_a2 = full_svd(a2, cfg, product_scale(svd_a, svd_a));

  Thm53Report rep;
  rep.rank_a = svd_a.r();
  rep.rank_a2 = svd_a2.r();
  rep.kernel_residual = equality_residual(kernel_basis(svd_a2), kernel_basis(svd_a));
  rep.range_residual = equality_residual(range_basis(svd_a2), range_basis(svd_a));
  rep.cond_a = rep.kernel_residual <= cfg.subspace_tol;
  rep.cond_c = rep.range_residual <= cfg.subspace_tol;
  rep.cond_d = rep.rank_a == rep.rank_a2;
  return rep;
}

RangeIdentityReport thm53_range_identity(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg) {
  require_same_square(a, b);
  const auto svd_a = full_svd(a, cfg);
  const auto svd_b = full_svd(b, cfg);
  const auto range_a = range_basis(svd_a);
  const auto range_b = range_basis(svd_b);
  const auto range_ab = range_basis(full_svd(CMatrix(a * b), cfg, product_scale(svd_a, svd_b)));

  RangeIdentityReport rep;
  rep.hypothesis_residual = inclusion_residual(range_ab, range_b);
  rep.conclusion_residual = equality_residual(range_ab, intersect(range_a, range_b, cfg));
  rep.hypothesis = rep.hypothesis_residual <= cfg.subspace_tol;
  rep.conclusion = rep.conclusion_residual <= cfg.subspace_tol;
  return rep;
}

JvReport jv_check(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg) {
  require_same_square(a, b);
  const auto svd_a = full_svd(a, cfg);
  const auto svd_b = full_svd(b, cfg);
  JvReport rep;
  rep.hyp_range = includes(range_basis(svd_b), range_basis(svd_a), cfg);
  rep.hyp_kernel = includes(kernel_basis(svd_b), kernel_basis(svd_a), cfg);
  rep.ab_hypo_ep = classify(CMatrix(a * b), cfg, product_scale(svd_a, svd_b)).hypo_ep;
  return rep;
}

std::vector<bool> power_ep(const CMatrix& a, int n, const ToleranceConfig& cfg) {
  require_square(a);
  if (n < 1) throw InputError("power_ep: n must be positive");
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(n));
  const double norm = operator_norm(a);
  CMatrix power = a;
  double scale = norm;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      power = power * a;
      scale *= norm;
    }
    out.push_back(classify(power, cfg, scale).ep);
  }
  return out;
}

}  // namespace eplab
