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

// Dense Hermitian matrices and a cyclic Jacobi eigenvalue solver. Sized for
// the 2^n x 2^n density matrices of a few fermionic modes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rindler/error.hpp"

namespace rindler {

using Complex = std::complex<double>;

/// Entries below this are treated as zero when classifying eigenvalue signs.
inline constexpr double kZeroEigenvalueThreshold = 1e-12;
/// Absolute tolerance for entry(i,j) == conj(entry(j,i)).
inline constexpr double kHermitianTolerance = 1e-12;

class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw Error(ErrorCode::kDimensionMismatch, "matrix dimension must be >= 1");
  }

  SquareMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(entries_.size()));
    }
  }

  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    if (dim_ == 0) throw Error(ErrorCode::kDimensionMismatch, "matrix dimension must be >= 1");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "ragged row in matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::vector<double>& values) {
    SquareMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  Complex trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : entries_) sum += std::norm(z);
    return std::sqrt(sum);
  }

  bool is_hermitian(double tolerance = kHermitianTolerance) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i; j < dim_; ++j) {
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tolerance) return false;
      }
    }
    return true;
  }

  SquareMatrix scaled(Complex factor) const {
    SquareMatrix out = *this;
    for (auto& z : out.entries_) z *= factor;
    return out;
  }

  /// Largest |a_ij - b_ij|; dimensions must agree.
  friend double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorCode::kDimensionMismatch, "max_abs_diff on different dimensions");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) worst = std::max(worst, std::abs(a.entries_[k] - b.entries_[k]));
    return worst;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  bool converged = false;
  int iterations = 0;  // completed sweeps
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm drops below this times ||m||_F.
  double relative_tolerance = 1e-13;
  double hermitian_tolerance = kHermitianTolerance;
};

namespace detail {

inline double off_diagonal_norm(const SquareMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary U = diag-phase * real rotation acting on
// coordinates p and q, replacing a by U^H a U.
inline void jacobi_rotate(SquareMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;
  const Complex phase = apq / magnitude;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/// All eigenvalues of a Hermitian matrix by cyclic-by-row Jacobi sweeps.
/// Deterministic for a given input. Throws kNotHermitian / kNoConvergence.
inline EigenResult eigenvalues_hermitian(const SquareMatrix& m, const JacobiOptions& options = {}) {
  if (!m.is_hermitian(options.hermitian_tolerance)) {
    throw Error(ErrorCode::kNotHermitian, "input violates entry(i,j) == conj(entry(j,i))");
  }
  SquareMatrix a = m;
  const std::size_t n = a.dim();
  // Symmetrize so rounding noise below the tolerance cannot bias the result.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  const double threshold = options.relative_tolerance * a.frobenius_norm();
  EigenResult result;
  while (detail::off_diagonal_norm(a) >= threshold && threshold > 0.0) {
    if (result.iterations >= options.max_sweeps) {
      throw Error(ErrorCode::kNoConvergence,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, p, q);
    }
    ++result.iterations;
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i).real();
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  result.converged = true;
  return result;
}

/// Sum of |eigenvalue|; equals tr sqrt(m m^H) for Hermitian m.
inline double trace_norm(const SquareMatrix& m) {
  const auto spectrum = eigenvalues_hermitian(m).eigenvalues;
  return std::accumulate(spectrum.begin(), spectrum.end(), 0.0,
                         [](double acc, double lambda) { return acc + std::abs(lambda); });
}

/// Sum of |lambda| over eigenvalues below -zero_threshold.
inline double negative_eigenvalue_sum(const SquareMatrix& m, double zero_threshold = kZeroEigenvalueThreshold) {
  double sum = 0.0;
  for (double lambda : eigenvalues_hermitian(m).eigenvalues) {
    if (lambda < -zero_threshold) sum -= lambda;
  }
  return sum;
}

}  // namespace rindler
