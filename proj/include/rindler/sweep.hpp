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

// Parameter sweeps written as CSV, one row per (r_a, r) grid point.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "rindler/channel.hpp"
#include "rindler/error.hpp"
#include "rindler/fock.hpp"
#include "rindler/tangle.hpp"

namespace rindler {

enum class Scenario { kW, kGhz, kCustom };

struct GridSpec {
  double min = 0.0;
  double max = kMaxRindlerParameter;
  int steps = 50;
};

struct SweepConfig {
  Scenario scenario = Scenario::kW;
  std::string custom_path;           // Scenario::kCustom only
  GridSpec r_grid;                   // shared parameter r (Bob and Charlie; everyone for W)
  std::optional<GridSpec> ra_grid;   // Alice's own parameter; GHZ / custom only
  std::string output_path;
  int digits = 10;                   // significant digits
};

inline constexpr const char* kCsvHeader = "r,r_a,N_A,N_B,N_C,N_AB,N_AC,N_BC,pi_A,pi_B,pi_C,pi_tangle";

/// Companion value for Alice when no r_a grid is given.
inline constexpr double kDefaultAliceParameter = kMaxRindlerParameter;

inline void validate_grid(const GridSpec& g, const char* name) {
  if (!(g.min >= 0.0 && g.min <= g.max && g.max <= kMaxRindlerParameter) || g.steps < 1) {
    throw Error(ErrorCode::kInvalidSpec,
                std::string(name) + " grid needs 0 <= min <= max <= pi/4 and steps >= 1");
  }
}

inline void validate(const SweepConfig& cfg) {
  validate_grid(cfg.r_grid, "r");
  if (cfg.ra_grid) {
    if (cfg.scenario == Scenario::kW) throw Error(ErrorCode::kInvalidSpec, "r_a grid applies to ghz/custom only");
    validate_grid(*cfg.ra_grid, "r_a");
  }
  if (cfg.scenario == Scenario::kCustom && cfg.custom_path.empty()) {
    throw Error(ErrorCode::kInvalidSpec, "custom scenario needs a state file");
  }
  if (cfg.digits < 1 || cfg.digits > 17) throw Error(ErrorCode::kInvalidSpec, "digits must be in [1, 17]");
}

/// Locale-independent shortest-of-fixed/scientific formatting.
inline std::string format_value(double value, int digits) {
  if (value == 0.0) value = 0.0;  // folds -0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  if (ec != std::errc{}) throw Error(ErrorCode::kIoError, "number formatting failed");
  return std::string(buf.data(), ptr);
}

inline const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kW: return "w";
    case Scenario::kGhz: return "ghz";
    case Scenario::kCustom: return "custom";
  }
  return "?";
}

struct SweepRow {
  double r = 0.0;
  double r_a = 0.0;
  TangleReport report;
};

struct SweepSummary {
  std::size_t rows = 0;
  double max_one_tangle = 0.0;
  double min_one_tangle = 0.0;
  double max_two_tangle = 0.0;
  double max_pi_tangle = 0.0;
  double min_pi_tangle = 0.0;
  bool normalization_applied = false;
};

inline PureState scenario_state(const SweepConfig& cfg, bool* normalization_applied = nullptr) {
  switch (cfg.scenario) {
    case Scenario::kW: return make_w_state();
    case Scenario::kGhz: return make_ghz_state();
    case Scenario::kCustom: {
      auto custom = make_custom_state(load_custom_state(cfg.custom_path));
      if (normalization_applied) *normalization_applied = custom.normalization_applied;
      return custom.state;
    }
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown scenario");
}

/// Evaluates every grid point in row-major order (r_a outer, r inner).
inline std::vector<SweepRow> evaluate_sweep(const SweepConfig& cfg, const PureState& state) {
  const auto r_values = uniform_grid(cfg.r_grid.min, cfg.r_grid.max, cfg.r_grid.steps);
  std::vector<SweepRow> rows;
  if (cfg.scenario == Scenario::kW) {
    for (auto r : r_values) rows.push_back({r.value(), r.value(), full_report(state, uniform_parameters(r))});
    return rows;
  }
  const auto ra_values = cfg.ra_grid ? uniform_grid(cfg.ra_grid->min, cfg.ra_grid->max, cfg.ra_grid->steps)
                                     : std::vector<RindlerParameter>{RindlerParameter(kDefaultAliceParameter)};
  for (auto ra : ra_values) {
    for (auto r : r_values) rows.push_back({r.value(), ra.value(), full_report(state, alice_split_parameters(ra, r))});
  }
  return rows;
}

inline void write_csv_row(std::ostream& out, const SweepRow& row, int digits) {
  const auto& t = row.report;
  const double values[] = {row.r,
                           row.r_a,
                           t.one_tangles.at(Party::kAlice),
                           t.one_tangles.at(Party::kBob),
                           t.one_tangles.at(Party::kCharlie),
                           t.two_tangle(Party::kAlice, Party::kBob),
                           t.two_tangle(Party::kAlice, Party::kCharlie),
                           t.two_tangle(Party::kBob, Party::kCharlie),
                           t.residuals.at(Party::kAlice),
                           t.residuals.at(Party::kBob),
                           t.residuals.at(Party::kCharlie),
                           t.pi_tangle};
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_value(v, digits);
    first = false;
  }
  out << '\n';
}

/// Writes '#' config lines, the header and all rows; returns summary statistics.
inline SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out) {
  validate(cfg);
  SweepSummary summary;
  const auto state = scenario_state(cfg, &summary.normalization_applied);
  const auto rows = evaluate_sweep(cfg, state);

  const int d = cfg.digits;
  out << "# scenario=" << scenario_name(cfg.scenario);
  if (cfg.scenario == Scenario::kCustom) out << " file=" << cfg.custom_path;
  out << '\n';
  out << "# r grid: min=" << format_value(cfg.r_grid.min, d) << " max=" << format_value(cfg.r_grid.max, d)
      << " steps=" << cfg.r_grid.steps << '\n';
  if (cfg.scenario == Scenario::kW) {
    out << "# r_a column repeats r (all three parties share r)\n";
  } else if (cfg.ra_grid) {
    out << "# r_a grid: min=" << format_value(cfg.ra_grid->min, d) << " max=" << format_value(cfg.ra_grid->max, d)
        << " steps=" << cfg.ra_grid->steps << '\n';
  } else {
    out << "# r_a fixed at " << format_value(kDefaultAliceParameter, d) << " (Bob and Charlie sweep r)\n";
  }
  if (summary.normalization_applied) out << "# custom amplitudes were renormalized\n";
  out << kCsvHeader << '\n';

  bool first = true;
  for (const auto& row : rows) {
    write_csv_row(out, row, d);
    const auto& t = row.report;
    for (const auto& [party, n] : t.one_tangles) {
      summary.max_one_tangle = first ? n : std::max(summary.max_one_tangle, n);
      summary.min_one_tangle = first ? n : std::min(summary.min_one_tangle, n);
      first = false;
    }
    for (const auto& [pair, n] : t.two_tangles) summary.max_two_tangle = std::max(summary.max_two_tangle, n);
    if (summary.rows == 0) {
      summary.max_pi_tangle = summary.min_pi_tangle = t.pi_tangle;
    } else {
      summary.max_pi_tangle = std::max(summary.max_pi_tangle, t.pi_tangle);
      summary.min_pi_tangle = std::min(summary.min_pi_tangle, t.pi_tangle);
    }
    ++summary.rows;
  }
  return summary;
}

}  // namespace rindler
