#include "eplab/generators.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "eplab/classify.hpp"

namespace eplab {
namespace {

constexpr int kMaxResample = 10000;
constexpr double kSimilarityCondLimit = 1e8;

void require_rank(Index n, Index r) {
  if (n < 0 || r < 0 || r > n) {
    throw InputError("invalid rank " + std::to_string(r) + " for dimension " + std::to_string(n));
  }
}

double condition_number(const CMatrix& m) {
  const auto s = singular_values(m);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  return smin > 0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

Complex random_nonzero(Rng& rng) {
  const double mag = rng.uniform(0.5, 2.0);
  const double phase = rng.uniform(0.0, 2 * std::numbers::pi);
  return std::polar(mag, phase);
}

CMatrix block_diag(const CMatrix& top, const CMatrix& bottom) {
  const Index n = top.rows() + bottom.rows();
  CMatrix out = CMatrix::Zero(n, n);
  out.topLeftCorner(top.rows(), top.cols()) = top;
  out.bottomRightCorner(bottom.rows(), bottom.cols()) = bottom;
  return out;
}

// Residual of A S in S, relative to ||A||.
double invariance_residual(const CMatrix& a, const CMatrix& q) {
  const double norm = operator_norm(a);
  if (norm == 0 || q.cols() == 0) return 0.0;
  const CMatrix aq = a * q;
  return operator_norm(CMatrix(aq - q * (q.adjoint() * aq))) / norm;
}

// span{v, Av, A^2 v, ...} with two passes of Gram-Schmidt per step.
CMatrix krylov_closure(const CMatrix& a, Rng& rng) {
  const Index n = a.rows();
  const double norm = operator_norm(a);
  CMatrix basis(n, 0);
  CVector w = complex_gaussian(n, 1, rng);
  while (basis.cols() < n) {
    for (int pass = 0; pass < 2; ++pass) w -= basis * (basis.adjoint() * w);
    const double len = w.norm();
    if (basis.cols() > 0 && len <= 1e-10 * std::max(norm, 1.0)) break;
    basis.conservativeResize(n, basis.cols() + 1);
    basis.col(basis.cols() - 1) = w / len;
    w = a * basis.col(basis.cols() - 1);
  }
  return basis;
}

}  // namespace

CMatrix complex_gaussian(Index rows, Index cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  }
  return m;
}

CMatrix random_unitary(Index n, Rng& rng) {
  if (n == 0) return CMatrix(0, 0);
  const CMatrix g = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

CMatrix random_invertible(Index n, Rng& rng, double cond_cap) {
  if (!(cond_cap > 1)) throw InputError("cond_cap must exceed 1");
  if (n == 0) return CMatrix(0, 0);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    CMatrix c = complex_gaussian(n, n, rng);
    if (condition_number(c) <= cond_cap) return c;
  }
  throw InputError("random_invertible: cond_cap " + std::to_string(cond_cap) + " not reachable for n = " +
                   std::to_string(n));
}

CMatrix random_low_rank(Index rows, Index cols, Index r, Rng& rng) {
  if (r < 0 || r > std::min(rows, cols)) throw InputError("random_low_rank: invalid rank");
  return complex_gaussian(rows, r, rng) * complex_gaussian(cols, r, rng).adjoint();
}

CMatrix random_normal(Index n, Index r, Rng& rng) {
  require_rank(n, r);
  const CMatrix u = random_unitary(n, rng);
  CVector d = CVector::Zero(n);
  for (Index i = 0; i < r; ++i) d(i) = random_nonzero(rng);
  return u * d.asDiagonal() * u.adjoint();
}

CMatrix random_core_nilpotent(Index n, Index r, Index nilpotent_index, bool coupled, Rng& rng, double cond_cap) {
  require_rank(n, r);
  const Index k = n - r;
  if (nilpotent_index < 0 || nilpotent_index > k) throw InputError("random_core_nilpotent: invalid index");
  CMatrix core = CMatrix::Zero(n, n);
  core.topLeftCorner(r, r) = random_invertible(r, rng, cond_cap);
  if (coupled && r > 0 && k > 0) core.topRightCorner(r, k) = complex_gaussian(r, k, rng);
  for (Index i = 0; i + 1 < nilpotent_index; ++i) core(r + i, r + i + 1) = random_nonzero(rng);
  const CMatrix u = random_unitary(n, rng);
  return u * core * u.adjoint();
}

CMatrix random_ep(Index n, Index r, Rng& rng, double cond_cap) {
  require_rank(n, r);
  const CMatrix u = random_unitary(n, rng);
  const CMatrix c = random_invertible(r, rng, cond_cap);
  return u.leftCols(r) * c * u.leftCols(r).adjoint();
}

CMatrix random_ep(Index n, Index r, std::uint64_t seed, double cond_cap) {
  Rng rng(seed);
  return random_ep(n, r, rng, cond_cap);
}

MatrixPair random_commuting_ep_pair(Index n, Index r, Rng& rng) {
  require_rank(n, r);
  if (r == 0) throw InputError("random_commuting_ep_pair: r must be positive");
  const CMatrix u = random_unitary(n, rng);
  const CMatrix w = random_unitary(r, rng);
  CVector da(r), db(r);
  for (Index i = 0; i < r; ++i) {
    da(i) = random_nonzero(rng);
    db(i) = random_nonzero(rng);
  }
  const CMatrix a_prime = w * da.asDiagonal() * w.adjoint();
  const CMatrix b_prime = w * db.asDiagonal() * w.adjoint();
  const Index k = n - r;
  const CMatrix z = random_ep(k, rng.uniform_index(0, k), rng);

  MatrixPair out;
  out.a = u * block_diag(a_prime, CMatrix::Zero(k, k)) * u.adjoint();
  out.b = u * block_diag(b_prime, z) * u.adjoint();
  return out;
}

MatrixPair random_commuting_ep_pair(Index n, Index r, std::uint64_t seed) {
  Rng rng(seed);
  return random_commuting_ep_pair(n, r, rng);
}

MatrixPair random_same_kernel_pair(Index n, Index r, Rng& rng, double cond_cap) {
  require_rank(n, r);
  const CMatrix q = random_unitary(n, rng).leftCols(r);
  const CMatrix a_prime = random_invertible(r, rng, cond_cap);
  const CMatrix b_prime = random_invertible(r, rng, cond_cap);
  return {q * a_prime * q.adjoint(), q * b_prime * q.adjoint()};
}

MatrixPair random_same_kernel_pair(Index n, Index r, std::uint64_t seed, double cond_cap) {
  Rng rng(seed);
  return random_same_kernel_pair(n, r, rng, cond_cap);
}

CMatrix random_jv_pair(const CMatrix& a, std::uint64_t seed, const ToleranceConfig& cfg) {
  require_square(a);
  if (!is_ep(a, cfg).holds) throw InapplicableError("random_jv_pair: A is not EP");
  Rng rng(seed);
  const auto svd = full_svd(a, cfg);
  const CMatrix q = svd.range_cols();
  const CMatrix b_prime = random_invertible(svd.r(), rng);
  return q * b_prime * q.adjoint();
}

CMatrix random_invariant_range_b(const CMatrix& a, std::uint64_t seed, const ToleranceConfig& cfg) {
  require_square(a);
  require_finite(a);
  Rng rng(seed);
  const Index n = a.rows();
  if (n == 0) return CMatrix(0, 0);

  // Invariant subspaces are accepted only if they pass this residual check.
  constexpr double kInvariantTol = 1e-10;
  CMatrix q;

  Eigen::ComplexEigenSolver<CMatrix> es(a);
  if (es.info() == Eigen::Success) {
    const CMatrix& v = es.eigenvectors();
    if (condition_number(v) <= kSimilarityCondLimit) {
      std::vector<Index> cols(static_cast<std::size_t>(n));
      std::iota(cols.begin(), cols.end(), Index{0});
      std::shuffle(cols.begin(), cols.end(), rng.engine());
      const Index k = rng.uniform_index(1, n);
      CMatrix chosen(n, k);
      for (Index j = 0; j < k; ++j) chosen.col(j) = v.col(cols[static_cast<std::size_t>(j)]);
      CMatrix candidate = range_basis(chosen, cfg).basis();
      if (invariance_residual(a, candidate) <= kInvariantTol) q = std::move(candidate);
    }
  }
  if (q.size() == 0) {
    CMatrix candidate = krylov_closure(a, rng);
    q = invariance_residual(a, candidate) <= kInvariantTol ? std::move(candidate) : CMatrix::Identity(n, n);
  }
  return q * complex_gaussian(q.cols(), n, rng);
}

std::vector<std::string> catalog_names() { return {"gp_pair", "epr_not_ep", "jordan2"}; }

ExamplePair catalog(const std::string& name) {
  using namespace std::complex_literals;
  ExamplePair ex;
  ex.name = name;
  if (name == "gp_pair") {
    ex.a = CMatrix(2, 2);
    ex.a << 1.0, 1.0, 0.0, 1.0;
    ex.b = CMatrix(2, 2);
    ex.b << 1.0, 0.0, 0.0, 0.0;
    ex.expected = {
        {"A", "posinormal", true, "G is invertible"},
        {"B", "posinormal", true, "P is an orthogonal projection"},
        {"AB", "posinormal", true, "GP = [[1,0],[0,0]]"},
        {"BA", "posinormal", false, "PG = [[1,1],[0,0]]: R(PG) = span e1, R((PG)^*) = span (1,1)"},
    };
  } else if (name == "epr_not_ep") {
    ex.a = CMatrix(2, 2);
    ex.a << 1.0, 1i, 1i, -1.0;
    ex.b = CMatrix::Identity(2, 2);
    ex.expected = {
        {"A", "ep_r", true, "symmetric, so N(A) = N(A^T)"},
        {"A", "ep", false, "R(A) = span (1, i) but R(A^*) = span (1, -i)"},
    };
  } else if (name == "jordan2") {
    ex.a = CMatrix(2, 2);
    ex.a << 0.0, 1.0, 0.0, 0.0;
    ex.b = ex.a;
    ex.expected = {
        {"A", "ep", false, "nilpotent Jordan block"},
        {"A", "thm53_cond_a", false, "N(A^2) = C^2 but N(A) = span e1"},
        {"A", "thm53_cond_c", false, "R(A^2) = {0} but R(A) = span e1"},
        {"A", "thm53_cond_d", false, "rank A = 1, rank A^2 = 0"},
    };
  } else {
    throw InputError("unknown catalog entry '" + name + "'");
  }
  return ex;
}

}  // namespace eplab
