// Copyright 2026 The rindler-tangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent eigenvalue route for verification. For Hermitian A, the leading
// principal minors p_k(x) = det(x I_k - A_k), k = 0..n, form a Sturm sequence
// of the characteristic polynomial: the number of eigenvalues below x equals
// the number of negative pivots of the LDL^H factorization of A - x I
// (Sylvester inertia). Each eigenvalue is then isolated by bisection.
//
// Shares no code with the Jacobi solver and is never used by the measure
// pipeline.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "rindler/hermitian.hpp"

namespace rindler::oracle {

/// Number of eigenvalues of the Hermitian matrix m strictly below x.
inline int eigenvalues_below(const SquareMatrix& m, long double x) {
  using LComplex = std::complex<long double>;
  const std::size_t n = m.dim();
  std::vector<LComplex> a(n * n);
  long double scale = 0.0L;
  for (std::size_t k = 0; k < n * n; ++k) {
    a[k] = LComplex(m.entries()[k].real(), m.entries()[k].imag());
    scale = std::max(scale, std::abs(a[k]));
  }
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= x;

  // Pivots smaller than this are nudged negative, as in LAPACK's pivmin.
  const long double pivot_floor = std::max(scale, 1.0L) * 1e-30L;
  int negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    long double pivot = a[k * n + k].real();
    if (std::abs(pivot) < pivot_floor) pivot = -pivot_floor;
    if (pivot < 0.0L) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const LComplex factor = a[i * n + k] / pivot;
      if (factor == LComplex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  return negatives;
}

/// Eigenvalues in (lo, hi].
inline int eigenvalue_count(const SquareMatrix& m, double lo, double hi) {
  // below(x) counts lambda < x; nudge to make the interval half-open on the left.
  const long double eps = std::numeric_limits<long double>::epsilon();
  return eigenvalues_below(m, static_cast<long double>(hi) * (1.0L + eps) + eps) -
         eigenvalues_below(m, static_cast<long double>(lo) * (1.0L + eps) + eps);
}

/// All eigenvalues, ascending, each bisected to ~1e-16 relative to ||m||_F.
inline std::vector<double> bisection_eigenvalues(const SquareMatrix& m) {
  const long double bound = static_cast<long double>(m.frobenius_norm()) + 1.0L;
  const long double resolution = bound * 1e-17L;
  std::vector<double> out(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    long double lo = -bound;
    long double hi = bound;
    while (hi - lo > resolution) {
      const long double mid = 0.5L * (lo + hi);
      if (eigenvalues_below(m, mid) > static_cast<int>(k)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[k] = static_cast<double>(0.5L * (lo + hi));
  }
  return out;
}

/// 2 * sum |negative eigenvalues| by bisection.
inline double negativity(const SquareMatrix& transposed, double zero_threshold = kZeroEigenvalueThreshold) {
  double sum = 0.0;
  for (double lambda : bisection_eigenvalues(transposed)) {
    if (lambda < -zero_threshold) sum -= lambda;
  }
  return 2.0 * sum;
}

}  // namespace rindler::oracle
