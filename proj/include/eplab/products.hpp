#pragma once

#include <map>
#include <string>
#include <vector>

#include "eplab/linalg.hpp"

namespace eplab {

/// Range/kernel facts about a product AB of two square matrices.
struct ProductReport {
  bool cond_i = false;           // R(AB) in R(B)
  bool cond_ii = false;          // N(A) in N(AB)
  bool ab_ep = false;
  bool a_ep = false;
  bool b_ep = false;
  bool range_identity = false;   // R(AB) = R(A) n R(B)
  bool kernel_identity = false;  // N(AB) = N(A) + N(B)
  std::map<std::string, double> residuals;

  /// ab_ep == (cond_i && cond_ii) whenever both factors are EP.
  bool hartwig_katz_consistent() const { return !(a_ep && b_ep) || ab_ep == (cond_i && cond_ii); }
  /// ab_ep == (range_identity && kernel_identity) whenever both factors are EP.
  bool djordjevic_consistent() const {
    return !(a_ep && b_ep) || ab_ep == (range_identity && kernel_identity);
  }
};

struct Thm53Report {
  bool cond_a = false;  // N(A^2) = N(A)
  bool cond_c = false;  // R(A^2) = R(A)
  bool cond_d = false;  // rank A^2 = rank A
  Index rank_a = 0;
  Index rank_a2 = 0;
  double kernel_residual = 0;
  double range_residual = 0;

  bool consistent() const { return cond_a == cond_c && cond_c == cond_d; }
};

struct RangeIdentityReport {
  bool hypothesis = false;  // R(AB) in R(B)
  bool conclusion = false;  // R(AB) = R(A) n R(B)
  double hypothesis_residual = 0;
  double conclusion_residual = 0;
};

struct JvReport {
  bool hyp_range = false;   // R(B) in R(A)
  bool hyp_kernel = false;  // N(B) in N(A)
  bool ab_hypo_ep = false;
};

ProductReport hartwig_katz(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg = {});

/// Same fields as hartwig_katz; throws InapplicableError unless A and B are EP.
ProductReport djordjevic_check(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg = {});

Thm53Report thm53_check(const CMatrix& a, const ToleranceConfig& cfg = {});

RangeIdentityReport thm53_range_identity(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg = {});

JvReport jv_check(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg = {});

/// EP-ness of A, A^2, ..., A^n.
std::vector<bool> power_ep(const CMatrix& a, int n, const ToleranceConfig& cfg = {});

}  // namespace eplab
