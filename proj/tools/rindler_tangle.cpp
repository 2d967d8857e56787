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

// rindler_tangle: negativity sweeps for W / GHZ / custom three-qubit states
// seen by accelerated observers.
//
//   rindler_tangle sweep --state ghz --ra-min 0 --ra-max 0.785 --ra-steps 25 --out ghz.csv
//   rindler_tangle check
//   rindler_tangle zero
//
// Exit codes: 0 success, 1 check failure, 2 bad configuration, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rindler/checks.hpp"
#include "rindler/closed_form.hpp"
#include "rindler/sweep.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;

rindler::SweepConfig parse_state(rindler::SweepConfig cfg, const std::string& state) {
  if (state == "w") {
    cfg.scenario = rindler::Scenario::kW;
  } else if (state == "ghz") {
    cfg.scenario = rindler::Scenario::kGhz;
  } else if (state.rfind("custom:", 0) == 0) {
    cfg.scenario = rindler::Scenario::kCustom;
    cfg.custom_path = state.substr(7);
  } else {
    throw rindler::Error(rindler::ErrorCode::kInvalidSpec, "--state must be w, ghz or custom:<path>");
  }
  return cfg;
}

int run_sweep_command(const rindler::SweepConfig& cfg) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output_path.empty() && cfg.output_path != "-") {
    file.open(cfg.output_path);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.output_path << " for writing\n";
      return kExitIo;
    }
    out = &file;
  }
  const auto summary = rindler::run_sweep(cfg, *out);
  out->flush();
  if (!*out) {
    std::cerr << "error: write to " << cfg.output_path << " failed\n";
    return kExitIo;
  }
  // Summary goes to stderr when the CSV itself is on stdout.
  std::ostream& log = out == &std::cout ? std::cerr : std::cout;
  log << "rows: " << summary.rows << "\n"
      << "one-tangle range: [" << rindler::format_value(summary.min_one_tangle, 6) << ", "
      << rindler::format_value(summary.max_one_tangle, 6) << "]\n"
      << "max two-tangle: " << rindler::format_value(summary.max_two_tangle, 6) << "\n"
      << "pi-tangle range: [" << rindler::format_value(summary.min_pi_tangle, 6) << ", "
      << rindler::format_value(summary.max_pi_tangle, 6) << "]\n";
  if (summary.normalization_applied) log << "note: custom amplitudes were renormalized\n";
  if (file.is_open()) log << "wrote " << cfg.output_path << "\n";
  return 0;
}

int run_check_command() {
  bool all = true;
  for (const auto& result : rindler::run_acceptance_checks()) {
    std::printf("[%s] %2d. %s\n       %s\n", result.passed ? "PASS" : "FAIL", result.id, result.title.c_str(),
                result.detail.c_str());
    all = all && result.passed;
  }
  std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
  return all ? 0 : kExitCheckFailed;
}

int run_zero_command() {
  const auto root = rindler::find_two_tangle_zero();
  const auto w = rindler::make_w_state();
  auto two_tangle_at = [&](double r) {
    return rindler::full_report(w, rindler::uniform_parameters(rindler::RindlerParameter(r)))
        .two_tangle(rindler::Party::kAlice, rindler::Party::kBob);
  };
  std::printf("r* = %.10f\n", root.value());
  std::printf("cos^2(r*) = %.10f  (2 - sqrt(2) = %.10f)\n", std::pow(std::cos(root.value()), 2), 2.0 - std::sqrt(2.0));
  std::printf("two-tangle(r* - 0.01) = %.10g\n", two_tangle_at(root.value() - 0.01));
  std::printf("two-tangle(r* + 0.01) = %.10g\n", two_tangle_at(root.value() + 0.01));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negativity-based tripartite entanglement of fermionic states under Rindler acceleration"};
  app.require_subcommand(1);

  rindler::SweepConfig cfg;
  std::string state = "w";
  std::optional<double> ra_min, ra_max;
  std::optional<int> ra_steps;

  auto* sweep = app.add_subcommand("sweep", "Evaluate all tangles over a parameter grid and write CSV");
  sweep->add_option("--state", state, "w, ghz or custom:<path>")->capture_default_str();
  sweep->add_option("--r-min", cfg.r_grid.min, "Shared parameter r: lower bound")->capture_default_str();
  sweep->add_option("--r-max", cfg.r_grid.max, "Shared parameter r: upper bound")->capture_default_str();
  sweep->add_option("--r-steps", cfg.r_grid.steps, "Shared parameter r: grid points")->capture_default_str();
  sweep->add_option("--ra-min", ra_min, "Alice's parameter r_a: lower bound (ghz/custom)");
  sweep->add_option("--ra-max", ra_max, "Alice's parameter r_a: upper bound (ghz/custom)");
  sweep->add_option("--ra-steps", ra_steps, "Alice's parameter r_a: grid points (ghz/custom)");
  sweep->add_option("--out", cfg.output_path, "CSV output path ('-' or omitted: stdout)");
  sweep->add_option("--digits", cfg.digits, "Significant digits per value")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run the regression table of reference values");
  auto* zero = app.add_subcommand("zero", "Locate the W-state two-tangle zero crossing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (*sweep) {
      cfg = parse_state(cfg, state);
      if (ra_min || ra_max || ra_steps) {
        rindler::GridSpec ra;
        ra.min = ra_min.value_or(0.0);
        ra.max = ra_max.value_or(rindler::kMaxRindlerParameter);
        ra.steps = ra_steps.value_or(50);
        cfg.ra_grid = ra;
      }
      rindler::validate(cfg);
      return run_sweep_command(cfg);
    }
    if (*check) return run_check_command();
    if (*zero) return run_zero_command();
  } catch (const rindler::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == rindler::ErrorCode::kIoError ? kExitIo : kExitBadConfig;
  }
  return kExitBadConfig;
}
