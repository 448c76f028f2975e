#pragma once

#include <complex>
#include <initializer_list>

#include "eplab/linalg.hpp"
#include "eplab/random.hpp"

namespace eplab::testing {

using namespace std::complex_literals;

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  CMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline double norm2(const CMatrix& m) { return operator_norm(m); }

// Rank via column-pivoted QR, independent of the SVD path under test.
inline Index qr_rank(const CMatrix& m, double threshold = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<CMatrix> qr(m);
  qr.setThreshold(threshold);
  return qr.rank();
}

}  // namespace eplab::testing
