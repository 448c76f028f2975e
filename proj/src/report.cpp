#include "eplab/report.hpp"

#include <cmath>
#include <sstream>

#include "eplab/cmat_io.hpp"

namespace eplab {
namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json residual_map(const std::map<std::string, double>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = number(v);
  return j;
}

Json check(const InclusionCheck& c) { return {{"holds", c.holds}, {"residual", number(c.residual)}}; }

}  // namespace

std::string version_string() {
#ifdef EPLAB_VERSION
  return EPLAB_VERSION;
#else
  return "unknown";
#endif
}

Json to_json(const ToleranceConfig& cfg) {
  return {{"rank_multiplier", cfg.rank_multiplier}, {"subspace_tol", cfg.subspace_tol}, {"psd_tol", cfg.psd_tol}};
}

ToleranceConfig tolerances_from_json(const Json& j) {
  ToleranceConfig cfg;
  cfg.rank_multiplier = j.at("rank_multiplier").get<double>();
  cfg.subspace_tol = j.at("subspace_tol").get<double>();
  cfg.psd_tol = j.at("psd_tol").get<double>();
  return cfg;
}

Json to_json(const ReportEnvelope& env) {
  return {{"command", env.command},     {"inputs", env.inputs},         {"tolerances", to_json(env.tolerances)},
          {"result", env.result},       {"violations", env.violations}, {"version", env.version}};
}

ReportEnvelope envelope_from_json(const Json& j) {
  ReportEnvelope env;
  env.command = j.at("command").get<std::string>();
  env.inputs = j.at("inputs");
  env.tolerances = tolerances_from_json(j.at("tolerances"));
  env.result = j.at("result");
  env.violations = j.at("violations");
  env.version = j.at("version").get<std::string>();
  return env;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const RankDecision& d) {
  Json sv = Json::array();
  for (Index i = 0; i < d.singular_values.size(); ++i) sv.push_back(d.singular_values(i));
  return {{"rank", d.rank}, {"threshold", d.threshold}, {"singular_values", std::move(sv)}};
}

Json to_json(const ClassificationReport& r) {
  return {{"normal", r.normal},
          {"hyponormal", r.hyponormal},
          {"quasiposinormal", r.quasiposinormal},
          {"posinormal", r.posinormal},
          {"coposinormal", r.coposinormal},
          {"ep", r.ep},
          {"hypo_ep", r.hypo_ep},
          {"ep_r", r.ep_r},
          {"residuals", residual_map(r.residuals)},
          {"rank", to_json(r.rank)},
          {"conflicts", r.conflicts}};
}

Json to_json(const BlockDecomposition& d) {
  return {{"rank", d.rank},
          {"basis_u", to_json(d.basis_u)},
          {"block_a_prime", to_json(d.block_a_prime)},
          {"block_b_prime", to_json(d.block_b_prime)},
          {"block_x", to_json(d.block_x)},
          {"block_y", to_json(d.block_y)},
          {"block_z", to_json(d.block_z)},
          {"residuals",
           {{"reducing", number(d.reducing_residual)},
            {"commutation", number(d.commutation_residual)},
            {"ya", number(d.ya_residual)}}}};
}

Json to_json(const InclusionReport& r) {
  Json j{{"nz_in_nzstar_and_nystar", check(r.nz_in_nzstar_and_nystar)},
         {"nbprime_cap_ny_in_nbprimestar", check(r.nbprime_cap_ny_in_nbprimestar)},
         {"equalities_checked", r.equalities_checked}};
  if (r.equalities_checked) {
    j["nz_equals"] = check(r.nz_equals);
    j["nbprime_equals"] = check(r.nbprime_equals);
  }
  return j;
}

Json to_json(const Thm42Conditions& c) {
  return {{"b_prime_posinormal", c.b_prime_posinormal},
          {"z_coposinormal", c.z_coposinormal},
          {"y_zero", c.y_zero},
          {"y_norm", number(c.y_norm)}};
}

Json to_json(const ProductReport& r) {
  return {{"cond_i", r.cond_i},
          {"cond_ii", r.cond_ii},
          {"ab_ep", r.ab_ep},
          {"a_ep", r.a_ep},
          {"b_ep", r.b_ep},
          {"range_identity", r.range_identity},
          {"kernel_identity", r.kernel_identity},
          {"residuals", residual_map(r.residuals)}};
}

Json to_json(const Thm53Report& r) {
  return {{"cond_a", r.cond_a},       {"cond_c", r.cond_c},
          {"cond_d", r.cond_d},       {"rank_a", r.rank_a},
          {"rank_a2", r.rank_a2},     {"kernel_residual", number(r.kernel_residual)},
          {"range_residual", number(r.range_residual)}};
}

Json to_json(const RangeIdentityReport& r) {
  return {{"hypothesis", r.hypothesis},
          {"conclusion", r.conclusion},
          {"hypothesis_residual", number(r.hypothesis_residual)},
          {"conclusion_residual", number(r.conclusion_residual)}};
}

Json to_json(const JvReport& r) {
  return {{"hyp_range", r.hyp_range}, {"hyp_kernel", r.hyp_kernel}, {"ab_hypo_ep", r.ab_hypo_ep}};
}

Json to_json(const AngleReport& r) {
  Json j{{"cos_min_angle", number(r.cos_min_angle)}, {"angle_radians", number(r.angle_radians)}};
  if (r.bouldin_components) {
    j["bouldin_components"] = {{"deflated_dim", r.bouldin_components->deflated_dim},
                               {"remainder_dim", r.bouldin_components->remainder_dim}};
  }
  return j;
}

Json to_json(const ExamplePair& ex) {
  Json facts = Json::array();
  for (const auto& f : ex.expected) {
    facts.push_back({{"subject", f.subject}, {"property", f.property}, {"value", f.value}, {"note", f.note}});
  }
  return {{"name", ex.name}, {"a", to_json(ex.a)}, {"b", to_json(ex.b)}, {"expected", std::move(facts)}};
}

Json to_json(const TruncationSeries& s) {
  Json rows = Json::array();
  for (const auto& m : s.metrics) {
    Json row{{"size", m.size},
             {"cos_min_angle", number(m.cos_min_angle)},
             {"bouldin_cos", number(m.bouldin_cos)},
             {"sigma_min_plus", number(m.sigma_min_plus)},
             {"ab_ep", m.ab_ep}};
    for (const auto& [k, v] : m.flags) row[k] = v;
    for (const auto& [k, v] : m.values) row[k] = number(v);
    rows.push_back(std::move(row));
  }
  return {{"family", to_string(s.family)}, {"sizes", s.sizes}, {"metrics", std::move(rows)}};
}

Json to_json(const Violation& v) {
  return {{"trial", v.trial},
          {"seed", v.seed},
          {"dim", v.dim},
          {"message", v.message},
          {"residuals", residual_map(v.residuals)}};
}

Json to_json(const FuzzResult& r) {
  Json tags = Json::object();
  for (const auto& [k, v] : r.tag_counts) tags[k] = v;
  return {{"suite", to_string(r.config.suite)},
          {"trials", r.trials_run},
          {"violation_count", r.violations.size()},
          {"passed", r.violations.empty()},
          {"coverage", std::move(tags)}};
}

std::string to_csv(const TruncationSeries& s) {
  std::ostringstream out;
  out << "size,cos_min_angle,bouldin_cos,sigma_min_plus,ab_ep\n";
  for (const auto& m : s.metrics) {
    out << m.size << ',' << format_double(m.cos_min_angle) << ',' << format_double(m.bouldin_cos) << ','
        << format_double(m.sigma_min_plus) << ',' << (m.ab_ep ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace eplab
