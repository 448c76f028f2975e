#pragma once

#include <map>
#include <string>

#include "eplab/linalg.hpp"

namespace eplab {

/// A pair (A, B) written in the orthonormal basis U = [Q | K], with Q spanning
/// N(A)^perp and K spanning N(A):
///
///   U^* A U = [A'  .]      U^* B U = [B'  X]
///             [ .  .]                [Y   Z]
///
/// The dotted A-blocks vanish exactly when N(A) reduces A; their size is
/// carried in `reducing_residual`.  Residuals are normalized by the norms
/// of the operands involved so they are scale-free.
struct BlockDecomposition {
  CMatrix basis_u;
  Index rank = 0;  // columns of Q
  CMatrix block_a_prime;
  CMatrix block_b_prime;
  CMatrix block_x;
  CMatrix block_y;
  CMatrix block_z;
  double reducing_residual = 0;    // (||K*AQ|| + ||Q*AK|| + ||K*AK||) / ||A||
  double commutation_residual = 0; // ||AB - BA|| / (||A|| ||B||)
  double ya_residual = 0;          // ||Y A'|| / (||A|| ||B||)
  double norm_a = 0;
  double norm_b = 0;

  CMatrix q() const { return basis_u.leftCols(rank); }
  CMatrix k() const { return basis_u.rightCols(basis_u.cols() - rank); }
  /// B reassembled in the U basis.
  CMatrix b_local() const;
};

struct InclusionCheck {
  bool holds = false;
  double residual = 0;
};

struct InclusionReport {
  /// N(Z) in N(Z^*) n N(Y^*)
  InclusionCheck nz_in_nzstar_and_nystar;
  /// N(B') n N(Y) in N(B'^*)
  InclusionCheck nbprime_cap_ny_in_nbprimestar;
  /// Set when B^* is also quasiposinormal; then both inclusions should be
  /// equalities.
  bool equalities_checked = false;
  InclusionCheck nz_equals;
  InclusionCheck nbprime_equals;
};

struct Thm42Conditions {
  bool b_prime_posinormal = false;
  bool z_coposinormal = false;
  bool y_zero = false;
  double y_norm = 0;  // ||Y|| / ||B||
};

/// Never fails on hypothesis violations; callers read the residuals.
BlockDecomposition decompose_pair(const CMatrix& a, const CMatrix& b, const ToleranceConfig& cfg = {});

/// Throws InapplicableError unless A and B commute, N(A) reduces A and B is
/// quasiposinormal (all to subspace_tol).
InclusionReport lemma41_check(const BlockDecomposition& dec, const ToleranceConfig& cfg = {});

Thm42Conditions thm42_conditions(const BlockDecomposition& dec, const ToleranceConfig& cfg = {});

/// A rebuilt from A' alone: U diag(A', 0) U^*.
CMatrix embed_a_prime(const BlockDecomposition& dec, const CMatrix& block);

}  // namespace eplab
