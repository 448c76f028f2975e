#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eplab/linalg.hpp"
#include "eplab/random.hpp"
#include "eplab/subspace.hpp"

namespace eplab {

inline constexpr double kDefaultCondCap = 1e4;

struct MatrixPair {
  CMatrix a;
  CMatrix b;
};

// ---- random building blocks -------------------------------------------------

CMatrix complex_gaussian(Index rows, Index cols, Rng& rng);

/// Q factor of a complex Gaussian matrix with the diagonal of R made
/// positive real.
CMatrix random_unitary(Index n, Rng& rng);

/// Complex Gaussian n x n matrix, resampled until its 2-norm condition
/// number is at most cond_cap.
CMatrix random_invertible(Index n, Rng& rng, double cond_cap = kDefaultCondCap);

/// rows x cols product of Gaussian factors, rank r.
CMatrix random_low_rank(Index rows, Index cols, Index r, Rng& rng);

/// U diag(d) U^* with r nonzero eigenvalues.
CMatrix random_normal(Index n, Index r, Rng& rng);

/// U [[C, W], [0, N]] U^* with C (r x r) invertible, N a single nilpotent
/// Jordan block of size `nilpotent_index` padded with zeros, and W either
/// Gaussian (`coupled`) or zero.  Has index <= 1 exactly when
/// nilpotent_index <= 1, and is EP exactly when additionally W = 0.
CMatrix random_core_nilpotent(Index n, Index r, Index nilpotent_index, bool coupled, Rng& rng,
                              double cond_cap = kDefaultCondCap);

// ---- EP constructions ------------------------------------------------------

/// U (C + 0) U^*, C r x r invertible with cond(C) <= cond_cap.
CMatrix random_ep(Index n, Index r, Rng& rng, double cond_cap = kDefaultCondCap);
CMatrix random_ep(Index n, Index r, std::uint64_t seed, double cond_cap = kDefaultCondCap);

/// Commuting EP pair sharing the decomposition N(A)^perp + N(A); requires r > 0.
MatrixPair random_commuting_ep_pair(Index n, Index r, Rng& rng);
MatrixPair random_commuting_ep_pair(Index n, Index r, std::uint64_t seed);

/// Independent invertible blocks on a shared N(A)^perp, zero on N(A).
MatrixPair random_same_kernel_pair(Index n, Index r, Rng& rng, double cond_cap = kDefaultCondCap);
MatrixPair random_same_kernel_pair(Index n, Index r, std::uint64_t seed, double cond_cap = kDefaultCondCap);

/// B with R(B) = R(A), N(B) = N(A) for EP A; throws InapplicableError otherwise.
CMatrix random_jv_pair(const CMatrix& a, std::uint64_t seed, const ToleranceConfig& cfg = {});

/// B whose range is a random A-invariant subspace, so R(AB) is in R(B).
CMatrix random_invariant_range_b(const CMatrix& a, std::uint64_t seed, const ToleranceConfig& cfg = {});

// ---- exact examples ----------------------------------------------------------

struct ExpectedFact {
  std::string subject;   // e.g. "GP", "A"
  std::string property;  // e.g. "posinormal"
  bool value = false;
  std::string note;
};

struct ExamplePair {
  std::string name;
  CMatrix a;
  CMatrix b;
  std::vector<ExpectedFact> expected;
};

std::vector<std::string> catalog_names();
/// Throws InputError for unknown names.
ExamplePair catalog(const std::string& name);

// ---- finite sections ----------------------------------------------------------

struct TeTruncation {
  CMatrix a;  // I - P_{M1}
  CMatrix b;  // P_{M2}
  Subspace m1;
  Subspace m2;
};

/// Ambient dimension 2n + 2; M1 = span{e_0, e_2, ..., e_2n},
/// M2 = span{e_2k + e_2k+1 / (2k+1) : k <= n}.
TeTruncation te_truncation(Index n);

/// A = [[0, 0], [0, I]], B = [[F, P], [0, F^*]] on C^m + C^m with F the
/// truncated forward shift and P the projection onto e_0.
ExamplePair prop52_truncation(Index m);

/// m x m lower shift with weights 1, 1/2, ..., 1/(m-1).
CMatrix weighted_shift_truncation(Index m);

enum class Family { te, prop52, weighted_shift };

Family parse_family(const std::string& name);
std::string to_string(Family f);

struct TruncationMetrics {
  Index size = 0;
  double cos_min_angle = 0;   // NaN where the family has no subspace pair
  double bouldin_cos = 0;     // NaN where undefined
  double sigma_min_plus = 0;  // smallest above-threshold singular value of the product
  bool ab_ep = false;
  std::map<std::string, bool> flags;
  std::map<std::string, double> values;
};

struct TruncationSeries {
  Family family = Family::te;
  std::vector<Index> sizes;
  std::vector<TruncationMetrics> metrics;
};

/// Smallest singular value above the rank threshold; 0 for rank 0.
double sigma_min_plus(const CMatrix& m, const ToleranceConfig& cfg = {});

TruncationSeries sweep(Family family, const std::vector<Index>& sizes, const ToleranceConfig& cfg = {});

}  // namespace eplab
