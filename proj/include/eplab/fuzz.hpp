#pragma once

// Seeded theorem-verification suites.  Each trial draws its inputs from
// derive_seed(master, trial_index) alone, so a violation can be replayed
// from the seed it records and parallel runs merge into the same result as
// sequential ones.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eplab/linalg.hpp"

namespace eplab {

enum class Suite {
  hartwig_katz,
  thm53_equiv,
  thm53_ab,
  prop45,
  thm46,
  cor47,
  jv,
  powers,
  lemma41,
  collapse,
};

const std::vector<Suite>& all_suites();
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct FuzzConfig {
  Suite suite = Suite::hartwig_katz;
  std::size_t trials = 1000;
  Index dim_lo = 2;
  Index dim_hi = 8;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  ToleranceConfig tol;

  void validate() const;
};

struct Violation {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Index dim = 0;
  std::string message;
  std::map<std::string, double> residuals;

  bool operator==(const Violation&) const = default;
};

struct TrialOutcome {
  Index dim = 0;
  std::optional<Violation> violation;
  /// Coverage labels such as "ab_ep" / "ab_not_ep", tallied per run.
  std::vector<std::string> tags;
};

struct FuzzResult {
  FuzzConfig config;
  std::size_t trials_run = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::size_t> tag_counts;
};

/// One trial, fully determined by (suite, trial_seed, dims, tolerances).
/// The returned violation's `trial` field is left at 0.
TrialOutcome run_trial(Suite suite, std::uint64_t trial_seed, Index dim_lo, Index dim_hi,
                       const ToleranceConfig& tol = {});

FuzzResult run_fuzz(const FuzzConfig& cfg);

}  // namespace eplab
