#include <cmath>
#include <limits>

#include "eplab/classify.hpp"
#include "eplab/generators.hpp"
#include "eplab/products.hpp"

namespace eplab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

TruncationMetrics te_metrics(Index n, const ToleranceConfig& cfg) {
  const auto te = te_truncation(n);
  const CMatrix ab = te.a * te.b;
  TruncationMetrics m;
  m.size = n;
  m.cos_min_angle = minimal_angle(te.m1, te.m2).cos_min_angle;
  const auto bouldin = bouldin_angle(te.a, te.b, cfg);
  m.bouldin_cos = bouldin.cos_min_angle;
  m.sigma_min_plus = sigma_min_plus(ab, cfg);
  const auto rep = classify(ab, cfg, operator_norm(te.a) * operator_norm(te.b));
  m.ab_ep = rep.ep;
  m.flags["ab_normal"] = rep.normal;
  m.values["bouldin_deflated_dim"] = static_cast<double>(bouldin.bouldin_components->deflated_dim);
  m.values["bouldin_remainder_dim"] = static_cast<double>(bouldin.bouldin_components->remainder_dim);
  return m;
}

TruncationMetrics prop52_metrics(Index size, const ToleranceConfig& cfg) {
  const auto ex = prop52_truncation(size);
  const CMatrix ab = ex.a * ex.b;
  const auto hk = hartwig_katz(ex.a, ex.b, cfg);
  TruncationMetrics m;
  m.size = size;
  m.cos_min_angle = kNaN;
  m.bouldin_cos = bouldin_angle(ex.a, ex.b, cfg).cos_min_angle;
  m.sigma_min_plus = sigma_min_plus(ab, cfg);
  m.ab_ep = hk.ab_ep;
  m.flags["a_ep"] = hk.a_ep;
  m.flags["b_ep"] = hk.b_ep;
  m.flags["cond_i"] = hk.cond_i;
  m.flags["cond_ii"] = hk.cond_ii;
  const Index dim = ex.b.rows();
  m.values["bb_star_defect"] = operator_norm(CMatrix(ex.b * ex.b.adjoint() - CMatrix::Identity(dim, dim)));
  return m;
}

TruncationMetrics weighted_shift_metrics(Index size, const ToleranceConfig& cfg) {
  const CMatrix t = weighted_shift_truncation(size);
  const auto rep = classify(t, cfg);
  TruncationMetrics m;
  m.size = size;
  m.cos_min_angle = kNaN;
  m.bouldin_cos = kNaN;
  m.sigma_min_plus = sigma_min_plus(t, cfg);
  m.ab_ep = rep.ep;
  m.flags["posinormal"] = rep.posinormal;
  m.values["rank"] = static_cast<double>(rep.rank.rank);
  return m;
}

}  // namespace

TeTruncation te_truncation(Index n) {
  if (n < 0) throw InputError("te_truncation: n must be nonnegative");
  const Index dim = 2 * n + 2;
  CMatrix m1 = CMatrix::Zero(dim, n + 1);
  CMatrix m2 = CMatrix::Zero(dim, n + 1);
  for (Index k = 0; k <= n; ++k) {
    const double w = 1.0 / static_cast<double>(2 * k + 1);
    const double len = std::sqrt(1.0 + w * w);
    m1(2 * k, k) = 1.0;
    m2(2 * k, k) = 1.0 / len;
    m2(2 * k + 1, k) = w / len;
  }
  TeTruncation te{CMatrix(), CMatrix(), Subspace(m1), Subspace(m2)};
  te.a = CMatrix::Identity(dim, dim) - projector(te.m1);
  te.b = projector(te.m2);
  return te;
}

ExamplePair prop52_truncation(Index m) {
  if (m < 2) throw InputError("prop52_truncation: m must be at least 2");
  CMatrix f = CMatrix::Zero(m, m);
  for (Index j = 0; j + 1 < m; ++j) f(j + 1, j) = 1.0;
  CMatrix p = CMatrix::Zero(m, m);
  p(0, 0) = 1.0;

  ExamplePair ex;
  ex.name = "prop52_m" + std::to_string(m);
  ex.a = CMatrix::Zero(2 * m, 2 * m);
  ex.a.bottomRightCorner(m, m) = CMatrix::Identity(m, m);
  ex.b = CMatrix::Zero(2 * m, 2 * m);
  ex.b.topLeftCorner(m, m) = f;
  ex.b.topRightCorner(m, m) = p;
  ex.b.bottomRightCorner(m, m) = f.adjoint();
  ex.expected = {
      {"A", "ep", true, "Hermitian projection"},
      {"B", "ep", false, "N(B) = span (e_{m-1}, 0) but N(B^*) = span (0, e_{m-1})"},
      {"AB", "ep", false, "AB = [[0, 0], [0, F^*]]"},
      {"AB", "cond_i", true, "R(AB) in R(B)"},
      {"AB", "cond_ii", true, "N(A) in N(AB)"},
  };
  return ex;
}

CMatrix weighted_shift_truncation(Index m) {
  if (m < 2) throw InputError("weighted_shift_truncation: m must be at least 2");
  CMatrix t = CMatrix::Zero(m, m);
  for (Index k = 1; k < m; ++k) t(k, k - 1) = 1.0 / static_cast<double>(k);
  return t;
}

Family parse_family(const std::string& name) {
  if (name == "te") return Family::te;
  if (name == "prop52") return Family::prop52;
  if (name == "weighted_shift") return Family::weighted_shift;
  throw InputError("unknown truncation family '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::te: return "te";
    case Family::prop52: return "prop52";
    case Family::weighted_shift: return "weighted_shift";
  }
  return "?";
}

double sigma_min_plus(const CMatrix& m, const ToleranceConfig& cfg) {
  const auto d = numerical_rank(m, cfg);
  return d.rank > 0 ? d.singular_values(d.rank - 1) : 0.0;
}

TruncationSeries sweep(Family family, const std::vector<Index>& sizes, const ToleranceConfig& cfg) {
  cfg.validate();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw InputError("sweep: sizes must be strictly increasing");
  }
  TruncationSeries series;
  series.family = family;
  series.sizes = sizes;
  for (const Index s : sizes) {
    switch (family) {
      case Family::te: series.metrics.push_back(te_metrics(s, cfg)); break;
      case Family::prop52: series.metrics.push_back(prop52_metrics(s, cfg)); break;
      case Family::weighted_shift: series.metrics.push_back(weighted_shift_metrics(s, cfg)); break;
    }
  }
  return series;
}

}  // namespace eplab
