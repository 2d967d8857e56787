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

// Analytic negativities of the W state with all three parties at the same
// acceleration parameter r, and their cross-check against the eigensolver path.
// The numeric pipeline is authoritative; these curves are validators.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rindler/channel.hpp"
#include "rindler/fock.hpp"
#include "rindler/tangle.hpp"

namespace rindler {

enum class ClosedFormKind { kWOneTangle, kWTwoTangle, kWPiTangle };

/// -2 (c/2 - c^2/2 - (c/6) sqrt(17 c^2 - 18 c + 9)), c = cos^2 r.
inline double w_one_tangle_closed(RindlerParameter r) {
  const double c = std::pow(std::cos(r.value()), 2);
  return -2.0 * (0.5 * c - 0.5 * c * c - c / 6.0 * std::sqrt(17.0 * c * c - 18.0 * c + 9.0));
}

/// -2 (c^2/3 - 2c/3 - sqrt(20 c^2 - 24 c + 9)/6 + 1/2), c = cos^2 r. Goes
/// negative past the zero crossing; used for root finding.
inline double w_two_tangle_unclamped(RindlerParameter r) {
  const double c = std::pow(std::cos(r.value()), 2);
  return -2.0 * (c * c / 3.0 - 2.0 * c / 3.0 - std::sqrt(20.0 * c * c - 24.0 * c + 9.0) / 6.0 + 0.5);
}

inline double w_two_tangle_closed(RindlerParameter r) { return std::max(0.0, w_two_tangle_unclamped(r)); }

/// (3 N_one^2 - 6 N_two^2) / 3: all three one-tangles and all three two-tangles coincide.
inline double w_pi_tangle_closed(RindlerParameter r) {
  const double one = w_one_tangle_closed(r);
  const double two = w_two_tangle_closed(r);
  return (3.0 * one * one - 6.0 * two * two) / 3.0;
}

inline double evaluate(ClosedFormKind kind, RindlerParameter r) {
  switch (kind) {
    case ClosedFormKind::kWOneTangle: return w_one_tangle_closed(r);
    case ClosedFormKind::kWTwoTangle: return w_two_tangle_closed(r);
    case ClosedFormKind::kWPiTangle: return w_pi_tangle_closed(r);
  }
  return 0.0;
}

/// Root of the unclamped two-tangle on [0, pi/4] by bisection to 1e-12 in r.
/// Analytically cos^2 r* = 2 - sqrt(2).
inline RindlerParameter find_two_tangle_zero(double tolerance = 1e-12) {
  double lo = 0.0;
  double hi = kMaxRindlerParameter;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (w_two_tangle_unclamped(RindlerParameter(mid)) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RindlerParameter(0.5 * (lo + hi));
}

struct ValidationRow {
  double r = 0.0;
  double one_closed = 0.0;
  double one_numeric = 0.0;
  double two_closed = 0.0;
  double two_numeric = 0.0;
};

struct ValidationTable {
  std::vector<ValidationRow> rows;
  double max_one_discrepancy = 0.0;
  double max_two_discrepancy = 0.0;

  double max_discrepancy() const { return std::max(max_one_discrepancy, max_two_discrepancy); }
};

inline ValidationTable cross_validate(const std::vector<RindlerParameter>& grid) {
  ValidationTable table;
  const auto w = make_w_state();
  for (const auto r : grid) {
    const auto report = full_report(w, uniform_parameters(r));
    ValidationRow row{r.value(), w_one_tangle_closed(r), report.one_tangles.at(Party::kAlice), w_two_tangle_closed(r),
                      report.two_tangle(Party::kAlice, Party::kBob)};
    table.max_one_discrepancy = std::max(table.max_one_discrepancy, std::abs(row.one_closed - row.one_numeric));
    table.max_two_discrepancy = std::max(table.max_two_discrepancy, std::abs(row.two_closed - row.two_numeric));
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace rindler
