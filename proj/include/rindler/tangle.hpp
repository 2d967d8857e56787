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

// Density matrices over fermionic modes, partial trace / transpose, and the
// negativity-based tripartite measures:
//
//   one-tangle  N_a(bc) = ||rho^{T_a}|| - 1 = 2 * sum |negative eigenvalues|
//   two-tangle  N_ab    = same, on rho_ab = Tr_c rho
//   residual    pi_a    = N_a(bc)^2 - N_ab^2 - N_ac^2
//   pi-tangle           = (pi_a + pi_b + pi_c) / 3

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rindler/channel.hpp"
#include "rindler/error.hpp"
#include "rindler/fock.hpp"
#include "rindler/hermitian.hpp"

namespace rindler {

class DensityMatrix {
 public:
  DensityMatrix(std::vector<ModeLabel> mode_order, SquareMatrix matrix)
      : mode_order_(std::move(mode_order)), matrix_(std::move(matrix)) {
    if (matrix_.dim() != (std::size_t{1} << mode_order_.size())) {
      throw Error(ErrorCode::kDimensionMismatch, "density matrix dimension must be 2^(mode count)");
    }
    if (std::set<ModeLabel>(mode_order_.begin(), mode_order_.end()).size() != mode_order_.size()) {
      throw Error(ErrorCode::kDuplicateMode, "mode list repeats a (party, wedge) pair");
    }
  }

  const std::vector<ModeLabel>& mode_order() const noexcept { return mode_order_; }
  const SquareMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  std::optional<std::size_t> position_of(const ModeLabel& mode) const {
    auto it = std::find(mode_order_.begin(), mode_order_.end(), mode);
    if (it == mode_order_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - mode_order_.begin());
  }

  /// Hermitian, unit trace and PSD (min eigenvalue >= -1e-10).
  bool satisfies_density_invariants() const {
    if (!matrix_.is_hermitian(kHermitianTolerance)) return false;
    if (std::abs(matrix_.trace() - 1.0) > 1e-12) return false;
    return eigenvalues_hermitian(matrix_).eigenvalues.front() >= -1e-10;
  }

 private:
  std::vector<ModeLabel> mode_order_;
  SquareMatrix matrix_;
};

/// |s><s| in big-endian basis order over s.mode_order().
inline DensityMatrix density_from_pure(const PureState& s) {
  const auto psi = s.dense();
  SquareMatrix rho(psi.size());
  for (const auto& [ket_i, amp_i] : s.amplitudes()) {
    for (const auto& [ket_j, amp_j] : s.amplitudes()) rho(ket_i.index(), ket_j.index()) = amp_i * std::conj(amp_j);
  }
  return DensityMatrix(s.mode_order(), std::move(rho));
}

namespace detail {

// Bit mask (big-endian over mode_order) of the given modes.
inline std::size_t mode_mask(const DensityMatrix& d, const std::vector<ModeLabel>& modes) {
  const std::size_t n = d.mode_order().size();
  std::size_t mask = 0;
  for (const auto& mode : modes) {
    auto pos = d.position_of(mode);
    if (!pos) throw Error(ErrorCode::kUnknownMode, "mode " + mode.name() + " not in density matrix");
    mask |= std::size_t{1} << (n - 1 - *pos);
  }
  return mask;
}

inline std::vector<ModeLabel> modes_of(const std::vector<ModeLabel>& order, Party p) {
  std::vector<ModeLabel> out;
  for (const auto& m : order) {
    if (m.party == p) out.push_back(m);
  }
  return out;
}

}  // namespace detail

/// Traces out every mode not in keep. The result lists keep in canonical
/// (party, wedge) order.
inline DensityMatrix partial_trace(const DensityMatrix& d, const std::vector<ModeLabel>& keep) {
  if (keep.empty()) throw Error(ErrorCode::kEmptyKeep, "partial_trace needs at least one mode to keep");
  std::vector<ModeLabel> kept(keep);
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw Error(ErrorCode::kDuplicateMode, "keep list repeats a mode");
  }

  const std::size_t n = d.mode_order().size();
  std::vector<std::size_t> kept_shift(kept.size());  // bit shift of each kept mode in the full index
  for (std::size_t k = 0; k < kept.size(); ++k) {
    auto pos = d.position_of(kept[k]);
    if (!pos) throw Error(ErrorCode::kUnknownMode, "mode " + kept[k].name() + " not in density matrix");
    kept_shift[k] = n - 1 - *pos;
  }
  std::size_t kept_mask = 0;
  for (auto shift : kept_shift) kept_mask |= std::size_t{1} << shift;

  auto reduced_index = [&](std::size_t full) {
    std::size_t out = 0;
    for (auto shift : kept_shift) out = (out << 1) | ((full >> shift) & 1U);
    return out;
  };

  SquareMatrix out(std::size_t{1} << kept.size());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) {
      if ((i & ~kept_mask) != (j & ~kept_mask)) continue;
      out(reduced_index(i), reduced_index(j)) += d(i, j);
    }
  }
  return DensityMatrix(std::move(kept), std::move(out));
}

/// Transposes the row/column indices carried by party_modes.
inline SquareMatrix partial_transpose(const DensityMatrix& d, const std::vector<ModeLabel>& party_modes) {
  const std::size_t mask = detail::mode_mask(d, party_modes);
  SquareMatrix out(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) {
      const std::size_t row = (i & ~mask) | (j & mask);
      const std::size_t col = (j & ~mask) | (i & mask);
      out(row, col) = d(i, j);
    }
  }
  return out;
}

inline SquareMatrix partial_transpose(const DensityMatrix& d, Party party) {
  return partial_transpose(d, detail::modes_of(d.mode_order(), party));
}

struct PartyPair {
  Party first;
  Party second;

  /// Same pair with the lower party first.
  PartyPair canonical() const { return first <= second ? *this : PartyPair{second, first}; }
  friend auto operator<=>(const PartyPair&, const PartyPair&) = default;
};

inline constexpr PartyPair kAllPairs[] = {
    {Party::kAlice, Party::kBob}, {Party::kAlice, Party::kCharlie}, {Party::kBob, Party::kCharlie}};

namespace detail {

inline void require_tripartite(const DensityMatrix& d) {
  std::set<Party> parties;
  for (const auto& m : d.mode_order()) parties.insert(m.party);
  if (d.mode_order().size() != 3 || parties.size() != 3) {
    throw Error(ErrorCode::kNotTripartite, "expected one mode for each of A, B, C");
  }
}

inline double negativity(const SquareMatrix& transposed) { return 2.0 * negative_eigenvalue_sum(transposed); }

}  // namespace detail

/// N_focus(rest) for a three-mode (one per party) density matrix.
inline double one_tangle(const DensityMatrix& d, Party focus) {
  detail::require_tripartite(d);
  return detail::negativity(partial_transpose(d, focus));
}

/// N_ab: trace out the third party, transpose over pair.first.
inline double two_tangle(const DensityMatrix& d, PartyPair pair) {
  detail::require_tripartite(d);
  if (pair.first == pair.second) throw Error(ErrorCode::kUnknownMode, "two_tangle needs two distinct parties");
  std::vector<ModeLabel> keep;
  for (const auto& m : d.mode_order()) {
    if (m.party == pair.first || m.party == pair.second) keep.push_back(m);
  }
  const auto reduced = partial_trace(d, keep);
  return detail::negativity(partial_transpose(reduced, pair.first));
}

struct TangleReport {
  PartyParameters r_values;
  std::map<Party, double> one_tangles;
  std::map<PartyPair, double> two_tangles;  // keyed by canonical pair
  std::map<Party, double> residuals;
  double pi_tangle = 0.0;

  double two_tangle(Party a, Party b) const { return two_tangles.at(PartyPair{a, b}.canonical()); }
};

/// All measures of a three-mode density matrix. Residuals are not clamped.
inline TangleReport tangle_report(const DensityMatrix& d, PartyParameters r_values = {}) {
  detail::require_tripartite(d);
  TangleReport report;
  report.r_values = std::move(r_values);
  for (Party p : kAllParties) report.one_tangles[p] = one_tangle(d, p);
  for (PartyPair pair : kAllPairs) report.two_tangles[pair] = two_tangle(d, pair);
  double sum = 0.0;
  for (Party p : kAllParties) {
    double residual = report.one_tangles[p] * report.one_tangles[p];
    for (Party q : kAllParties) {
      if (q == p) continue;
      const double n_pq = report.two_tangle(p, q);
      residual -= n_pq * n_pq;
    }
    report.residuals[p] = residual;
    sum += residual;
  }
  report.pi_tangle = sum / 3.0;
  return report;
}

/// Rindler-transforms s, drops the region-II modes and evaluates every measure.
inline TangleReport full_report(const PureState& s, const PartyParameters& params) {
  const auto transformed = apply_rindler(s, params);
  const auto rho = partial_trace(density_from_pure(transformed), region_one_modes());
  return tangle_report(rho, params);
}

}  // namespace rindler
