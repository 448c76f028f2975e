#pragma once

#include <map>
#include <string>
#include <vector>

#include "eplab/linalg.hpp"
#include "eplab/subspace.hpp"

namespace eplab {

/// Normality-family predicates for one square matrix.
///
/// Subspace-route flags come from range/kernel inclusions; ep and hypo_ep are
/// additionally computed through the projectors M^dagger M and M M^dagger.
/// When the two routes disagree the report keeps the subspace-route flag and
/// names the disagreement in `conflicts`.
struct ClassificationReport {
  bool normal = false;
  bool hyponormal = false;
  bool quasiposinormal = false;
  bool posinormal = false;
  bool coposinormal = false;
  bool ep = false;
  bool hypo_ep = false;
  bool ep_r = false;
  std::map<std::string, double> residuals;
  RankDecision rank;
  std::vector<std::string> conflicts;
};

struct ProjectorTest {
  bool holds = false;
  double residual = 0;
};

/// `reference_norm` is forwarded to the rank decision; pass ||A|| ||B|| when
/// M is a computed product AB.
ClassificationReport classify(const CMatrix& m, const ToleranceConfig& cfg = {}, double reference_norm = 0);

/// ||M^dagger M - M M^dagger|| <= subspace_tol.
ProjectorTest ep_via_projectors(const CMatrix& m, const ToleranceConfig& cfg = {});

/// M^dagger M - M M^dagger is positive semidefinite.
bool hypo_ep_check(const CMatrix& m, const ToleranceConfig& cfg = {});

/// R(M) == R(M^*) by one-sided inclusion residuals; the light-weight test
/// used wherever only EP-ness is needed.
ProjectorTest is_ep(const CMatrix& m, const ToleranceConfig& cfg = {});

/// R(M) is contained in R(M^*).
ProjectorTest is_posinormal(const CMatrix& m, const ToleranceConfig& cfg = {});

/// R(M^*) is contained in R(M).
ProjectorTest is_coposinormal(const CMatrix& m, const ToleranceConfig& cfg = {});

}  // namespace eplab
