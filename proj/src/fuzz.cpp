#include "eplab/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "eplab/classify.hpp"
#include "eplab/generators.hpp"
#include "eplab/products.hpp"
#include "eplab/random.hpp"
#include "eplab/structure.hpp"

namespace eplab {
namespace {

// Cond cap for bases whose fifth power is classified.
constexpr double kPowerCondCap = 10.0;

class Trial {
 public:
  Trial(std::uint64_t seed, Index dim) : seed_(seed) { out_.dim = dim; }

  void tag(std::string t) { out_.tags.push_back(std::move(t)); }
  void tag_if(bool cond, const std::string& yes, const std::string& no) { tag(cond ? yes : no); }

  void fail(std::string message, std::map<std::string, double> residuals = {}) {
    if (out_.violation) return;
    out_.violation = Violation{0, seed_, out_.dim, std::move(message), std::move(residuals)};
  }
  void expect(bool cond, const std::string& message, const std::map<std::string, double>& residuals = {}) {
    if (!cond) fail(message, residuals);
  }

  TrialOutcome take() { return std::move(out_); }

 private:
  std::uint64_t seed_;
  TrialOutcome out_;
};

Index random_rank(Rng& rng, Index n, Index lo = 0) { return rng.uniform_index(lo, n); }

ClassificationReport classify_product(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
  return classify(CMatrix(a * b), tol, operator_norm(a) * operator_norm(b));
}

// Mix of EP, index-one non-EP, higher-index, generic low-rank and normal
// matrices.
CMatrix mixed_square(Rng& rng, Index n, Trial& t) {
  const int kind = static_cast<int>(rng.uniform_index(0, n >= 2 ? 5 : 4));
  switch (kind) {
    case 0:
      t.tag("kind_ep");
      return random_ep(n, random_rank(rng, n), rng);
    case 1: {
      t.tag("kind_index_one");
      const Index r = random_rank(rng, n);
      return random_core_nilpotent(n, r, std::min<Index>(1, n - r), true, rng);
    }
    case 2:
      t.tag("kind_low_rank");
      return random_low_rank(n, n, random_rank(rng, n), rng);
    case 3:
      t.tag("kind_normal");
      return random_normal(n, random_rank(rng, n), rng);
    case 4:
      t.tag("kind_gaussian");
      return complex_gaussian(n, n, rng);
    default: {
      t.tag("kind_nilpotent");
      const Index r = rng.uniform_index(0, n - 2);
      const Index nu = rng.uniform_index(2, n - r);
      return random_core_nilpotent(n, r, nu, rng.coin(), rng);
    }
  }
}

MatrixPair random_ep_pair(Rng& rng, Index n, Trial& t) {
  switch (rng.uniform_index(0, 5)) {
    case 0: {
      t.tag("pair_independent");
      CMatrix a = random_ep(n, random_rank(rng, n), rng);
      CMatrix b = random_ep(n, random_rank(rng, n), rng);
      return {std::move(a), std::move(b)};
    }
    case 1:
      t.tag("pair_commuting");
      return random_commuting_ep_pair(n, random_rank(rng, n, 1), rng);
    case 2:
      t.tag("pair_same_kernel");
      return random_same_kernel_pair(n, random_rank(rng, n), rng);
    case 3: {
      t.tag("pair_nested_ranges");
      const CMatrix u = random_unitary(n, rng);
      const Index rb = random_rank(rng, n);
      const Index ra = random_rank(rng, rb);
      const CMatrix ca = random_invertible(ra, rng);
      const CMatrix cb = random_invertible(rb, rng);
      return {u.leftCols(ra) * ca * u.leftCols(ra).adjoint(), u.leftCols(rb) * cb * u.leftCols(rb).adjoint()};
    }
    case 4: {
      t.tag("pair_adjoint");
      CMatrix a = random_ep(n, random_rank(rng, n), rng);
      CMatrix b = a.adjoint();
      return {std::move(a), std::move(b)};
    }
    default: {
      t.tag("pair_unitary_factor");
      CMatrix a = random_ep(n, random_rank(rng, n), rng);
      return {std::move(a), random_unitary(n, rng)};
    }
  }
}

void suite_hartwig_katz(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const auto p = random_ep_pair(rng, n, t);
  const auto rep = hartwig_katz(p.a, p.b, tol);
  t.expect(rep.a_ep && rep.b_ep, "generator produced a non-EP factor", rep.residuals);
  t.tag_if(rep.ab_ep, "ab_ep", "ab_not_ep");
  t.expect(rep.hartwig_katz_consistent(), "ab_ep != (cond_i && cond_ii)", rep.residuals);
  t.expect(rep.djordjevic_consistent(), "ab_ep != (range_identity && kernel_identity)", rep.residuals);
}

void suite_thm53_equiv(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const CMatrix a = mixed_square(rng, n, t);
  const auto rep = thm53_check(a, tol);
  t.tag_if(rep.cond_a, "cond_a_true", "cond_a_false");
  t.expect(rep.consistent(), "conditions (a), (c), (d) disagree",
           {{"kernel_residual", rep.kernel_residual},
            {"range_residual", rep.range_residual},
            {"rank_a", static_cast<double>(rep.rank_a)},
            {"rank_a2", static_cast<double>(rep.rank_a2)}});
}

void suite_thm53_ab(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  CMatrix a;
  if (rng.coin()) {
    t.tag("kind_ep");
    a = random_ep(n, random_rank(rng, n), rng);
  } else {
    t.tag("kind_index_one");
    const Index r = random_rank(rng, n);
    a = random_core_nilpotent(n, r, std::min<Index>(1, n - r), true, rng);
  }
  const auto t53 = thm53_check(a, tol);
  t.expect(t53.cond_a, "generator: N(A^2) != N(A)", {{"kernel_residual", t53.kernel_residual}});
  const CMatrix b = random_invariant_range_b(a, rng.engine()(), tol);
  const auto rep = thm53_range_identity(a, b, tol);
  const std::map<std::string, double> res{{"hypothesis", rep.hypothesis_residual},
                                          {"conclusion", rep.conclusion_residual}};
  t.expect(rep.hypothesis, "R(AB) not contained in R(B) for invariant-range B", res);
  t.expect(rep.conclusion, "R(AB) != R(A) n R(B)", res);
}

void suite_prop45(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const auto p = random_same_kernel_pair(n, random_rank(rng, n), rng);
  const auto ab = classify_product(p.a, p.b, tol);
  const auto ba = classify_product(p.b, p.a, tol);
  t.expect(ab.posinormal && ab.ep, "AB not EP for a same-kernel pair", ab.residuals);
  t.expect(ba.posinormal && ba.ep, "BA not EP for a same-kernel pair", ba.residuals);
}

void suite_thm46(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const auto p = random_commuting_ep_pair(n, random_rank(rng, n, 1), rng);
  const auto ab = classify_product(p.a, p.b, tol);
  t.expect(ab.posinormal, "AB not posinormal for a commuting EP pair", ab.residuals);
  const auto dec = decompose_pair(p.a, p.b, tol);
  const double x = dec.norm_b > 0 ? operator_norm(dec.block_x) / dec.norm_b : 0.0;
  const double y = dec.norm_b > 0 ? operator_norm(dec.block_y) / dec.norm_b : 0.0;
  t.expect(x <= tol.subspace_tol && y <= tol.subspace_tol, "off-diagonal blocks X, Y nonzero",
           {{"x", x}, {"y", y}, {"commutation", dec.commutation_residual}});
}

void suite_cor47(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const auto p = random_commuting_ep_pair(n, random_rank(rng, n, 1), rng);
  const auto rep = classify_product(p.a, p.b, tol);
  t.expect(rep.posinormal && rep.coposinormal, "AB not posinormal and coposinormal", rep.residuals);
  const auto dj = djordjevic_check(p.a, p.b, tol);
  t.expect(dj.ab_ep && dj.range_identity && dj.kernel_identity, "range/kernel identities fail", dj.residuals);
  t.expect(classify_product(p.b, p.a, tol).ep == rep.ep, "AB and BA disagree on EP-ness");
}

void suite_jv(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const CMatrix a = random_ep(n, random_rank(rng, n), rng);
  const bool degenerate = rng.coin(0.1);
  const CMatrix b = degenerate ? a : random_jv_pair(a, rng.engine()(), tol);
  t.tag_if(degenerate, "b_equals_a", "b_random");
  const auto rep = jv_check(a, b, tol);
  t.expect(rep.hyp_range && rep.hyp_kernel, "generator: JV hypotheses fail");
  t.expect(rep.ab_hypo_ep, "AB not hypo-EP under JV hypotheses");
}

void suite_powers(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const CMatrix a = random_ep(n, random_rank(rng, n), rng, kPowerCondCap);
  const auto flags = power_ep(a, 5, tol);
  for (std::size_t k = 0; k < flags.size(); ++k) {
    t.expect(flags[k], "A^" + std::to_string(k + 1) + " not EP");
  }
}

void suite_lemma41(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const auto p = random_commuting_ep_pair(n, random_rank(rng, n, 1), rng);
  const auto dec = decompose_pair(p.a, p.b, tol);
  const auto rep = lemma41_check(dec, tol);
  const std::map<std::string, double> res{{"a", rep.nz_in_nzstar_and_nystar.residual},
                                          {"b", rep.nbprime_cap_ny_in_nbprimestar.residual}};
  t.expect(rep.nz_in_nzstar_and_nystar.holds, "N(Z) not in N(Z*) n N(Y*)", res);
  t.expect(rep.nbprime_cap_ny_in_nbprimestar.holds, "N(B') n N(Y) not in N(B'*)", res);
  t.expect(rep.equalities_checked, "B* should be quasiposinormal for EP B");
  if (rep.equalities_checked) {
    t.expect(rep.nz_equals.holds && rep.nbprime_equals.holds, "inclusions are not identities",
             {{"a_eq", rep.nz_equals.residual}, {"b_eq", rep.nbprime_equals.residual}});
  }
  const auto c = thm42_conditions(dec, tol);
  t.expect(c.b_prime_posinormal && c.z_coposinormal && c.y_zero, "block conditions fail", {{"y", c.y_norm}});

  const CMatrix direct = p.a * p.b;
  const CMatrix rebuilt = embed_a_prime(dec, CMatrix(dec.block_a_prime * dec.block_b_prime));
  const double scale = std::max(dec.norm_a * dec.norm_b, 1e-300);
  const double recon = operator_norm(CMatrix(direct - rebuilt)) / scale;
  t.expect(recon <= 1e-8, "AB != U diag(A'B', 0) U^*", {{"reconstruction", recon}});
}

void suite_collapse(Rng& rng, Index n, const ToleranceConfig& tol, Trial& t) {
  const CMatrix m = mixed_square(rng, n, t);
  const auto r = classify(m, tol);
  t.tag_if(r.ep, "ep", "not_ep");
  t.expect(r.quasiposinormal == r.posinormal && r.posinormal == r.hypo_ep && r.hypo_ep == r.ep,
           "quasiposinormal/posinormal/hypo_ep/ep disagree", r.residuals);
  t.expect(r.hyponormal == r.normal, "hyponormal != normal", r.residuals);
  t.expect(r.conflicts.empty(), "classification conflict: " + (r.conflicts.empty() ? "" : r.conflicts.front()),
           r.residuals);
  t.expect(hypo_ep_check(m, tol) == ep_via_projectors(m, tol).holds, "hypo_ep_check != ep_via_projectors");
}

using SuiteFn = void (*)(Rng&, Index, const ToleranceConfig&, Trial&);

SuiteFn suite_fn(Suite s) {
  switch (s) {
    case Suite::hartwig_katz: return suite_hartwig_katz;
    case Suite::thm53_equiv: return suite_thm53_equiv;
    case Suite::thm53_ab: return suite_thm53_ab;
    case Suite::prop45: return suite_prop45;
    case Suite::thm46: return suite_thm46;
    case Suite::cor47: return suite_cor47;
    case Suite::jv: return suite_jv;
    case Suite::powers: return suite_powers;
    case Suite::lemma41: return suite_lemma41;
    case Suite::collapse: return suite_collapse;
  }
  return nullptr;
}

const std::vector<std::pair<Suite, std::string>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string>> names{
      {Suite::hartwig_katz, "hartwig_katz"}, {Suite::thm53_equiv, "thm53_equiv"}, {Suite::thm53_ab, "thm53_ab"},
      {Suite::prop45, "prop45"},             {Suite::thm46, "thm46"},             {Suite::cor47, "cor47"},
      {Suite::jv, "jv"},                     {Suite::powers, "powers"},           {Suite::lemma41, "lemma41"},
      {Suite::collapse, "collapse"},
  };
  return names;
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    for (const auto& [s, _] : suite_names()) out.push_back(s);
    return out;
  }();
  return suites;
}

Suite parse_suite(const std::string& name) {
  for (const auto& [s, n] : suite_names()) {
    if (n == name) return s;
  }
  throw InputError("unknown fuzz suite '" + name + "'");
}

std::string to_string(Suite s) {
  for (const auto& [suite, n] : suite_names()) {
    if (suite == s) return n;
  }
  return "?";
}

void FuzzConfig::validate() const {
  tol.validate();
  if (dim_lo < 1 || dim_hi < dim_lo || dim_hi > 64) throw InputError("dims must satisfy 1 <= lo <= hi <= 64");
  if (jobs == 0) throw InputError("jobs must be positive");
}

TrialOutcome run_trial(Suite suite, std::uint64_t trial_seed, Index dim_lo, Index dim_hi, const ToleranceConfig& tol) {
  Rng rng(trial_seed);
  const Index n = rng.uniform_index(dim_lo, dim_hi);
  Trial t(trial_seed, n);
  try {
    suite_fn(suite)(rng, n, tol, t);
  } catch (const std::exception& e) {
    t.fail(std::string("exception: ") + e.what());
  }
  return t.take();
}

FuzzResult run_fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1)) {
      outcomes[i] = run_trial(cfg.suite, derive_seed(cfg.seed, i), cfg.dim_lo, cfg.dim_hi, cfg.tol);
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(cfg.trials, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  FuzzResult result;
  result.config = cfg;
  result.trials_run = cfg.trials;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (const auto& tag : outcomes[i].tags) ++result.tag_counts[tag];
    if (outcomes[i].violation) {
      Violation v = *outcomes[i].violation;
      v.trial = i;
      result.violations.push_back(std::move(v));
    }
  }
  return result;
}

}  // namespace eplab
