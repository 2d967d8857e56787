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

// Minkowski -> Rindler transformation of single fermionic modes:
//
//   |0>_M -> cos r |0>_I |0>_II + sin r |1>_I |1>_II
//   |1>_M -> |1>_I |0>_II
//
// with cos r = (exp(-2 pi omega c / a) + 1)^(-1/2), so r runs over [0, pi/4]
// as the proper acceleration a runs over [0, inf).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "rindler/error.hpp"
#include "rindler/fock.hpp"

namespace rindler {

inline constexpr double kMaxRindlerParameter = std::numbers::pi / 4.0;

/// Acceleration parameter r in [0, pi/4]; 0 is inertial, pi/4 the infinite-acceleration limit.
class RindlerParameter {
 public:
  constexpr RindlerParameter() = default;
  explicit RindlerParameter(double r) : r_(r) {
    if (!(r >= 0.0 && r <= kMaxRindlerParameter)) {
      throw Error(ErrorCode::kOutOfRange, "acceleration parameter " + std::to_string(r) + " outside [0, pi/4]");
    }
  }

  static RindlerParameter inertial() { return RindlerParameter(0.0); }
  static RindlerParameter infinite_acceleration() { return RindlerParameter(kMaxRindlerParameter); }

  constexpr double value() const noexcept { return r_; }
  double cos() const { return std::cos(r_); }
  double sin() const { return std::sin(r_); }

  friend constexpr auto operator<=>(const RindlerParameter&, const RindlerParameter&) = default;

 private:
  double r_ = 0.0;
};

struct AccelerationSpec {
  double omega = 1.0;  // mode frequency
  double c = 1.0;      // speed of light
  double a = 0.0;      // proper acceleration; +inf allowed
};

inline RindlerParameter acceleration_to_r(const AccelerationSpec& spec) {
  if (!(spec.omega > 0.0) || !(spec.c > 0.0) || !(spec.a >= 0.0) || std::isnan(spec.a)) {
    throw Error(ErrorCode::kInvalidSpec, "need omega > 0, c > 0, a >= 0");
  }
  if (spec.a == 0.0) return RindlerParameter::inertial();
  const double boltzmann = std::exp(-2.0 * std::numbers::pi * spec.omega * spec.c / spec.a);
  const double cos_r = 1.0 / std::sqrt(boltzmann + 1.0);
  return RindlerParameter(std::min(std::acos(cos_r), kMaxRindlerParameter));
}

using PartyParameters = std::map<Party, RindlerParameter>;

/// Same r for every party.
inline PartyParameters uniform_parameters(RindlerParameter r) {
  return {{Party::kAlice, r}, {Party::kBob, r}, {Party::kCharlie, r}};
}

/// Alice at r_a, Bob and Charlie sharing r.
inline PartyParameters alice_split_parameters(RindlerParameter r_a, RindlerParameter r) {
  return {{Party::kAlice, r_a}, {Party::kBob, r}, {Party::kCharlie, r}};
}

/// steps evenly spaced parameters from lo to hi inclusive; a single step yields lo.
inline std::vector<RindlerParameter> uniform_grid(double lo, double hi, int steps) {
  std::vector<RindlerParameter> grid;
  for (int i = 0; i < steps; ++i) {
    if (steps == 1) {
      grid.emplace_back(lo);
    } else {
      grid.emplace_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
    }
  }
  return grid;
}

/// Replaces every party's Minkowski mode by its (region I, region II) pair.
/// Output modes are ordered party by party: A_I, A_II, B_I, B_II, C_I, C_II
/// (restricted to the parties present in s).
inline PureState apply_rindler(const PureState& s, const PartyParameters& params) {
  struct Slot {
    std::size_t source;  // position of the party's Minkowski mode in s
    double cos_r;
    double sin_r;
  };
  std::vector<Slot> slots;
  std::vector<ModeLabel> out_modes;
  for (const auto& mode : s.mode_order()) {
    if (mode.wedge != Wedge::kMinkowski) {
      throw Error(ErrorCode::kNotMinkowski, "mode " + mode.name() + " is already a Rindler mode");
    }
  }
  for (Party p : kAllParties) {
    auto pos = s.position_of({p, Wedge::kMinkowski});
    if (!pos) continue;
    auto it = params.find(p);
    if (it == params.end()) {
      throw Error(ErrorCode::kMissingParty, std::string("no acceleration parameter for party ") + party_letter(p));
    }
    slots.push_back({*pos, it->second.cos(), it->second.sin()});
    out_modes.push_back({p, Wedge::kRindlerI});
    out_modes.push_back({p, Wedge::kRindlerII});
  }

  PureState::AmplitudeMap out;
  for (const auto& [ket, amp] : s.amplitudes()) {
    // Expand the product over slots; each unoccupied mode branches in two.
    std::vector<std::pair<std::vector<std::uint8_t>, Complex>> partial{{{}, amp}};
    for (const auto& slot : slots) {
      std::vector<std::pair<std::vector<std::uint8_t>, Complex>> next;
      next.reserve(partial.size() * 2);
      for (auto& [bits, coeff] : partial) {
        if (ket[slot.source] == 1) {
          auto b = bits;
          b.insert(b.end(), {1, 0});
          next.emplace_back(std::move(b), coeff);
        } else {
          auto vacuum = bits;
          vacuum.insert(vacuum.end(), {0, 0});
          next.emplace_back(std::move(vacuum), coeff * slot.cos_r);
          auto pair = bits;
          pair.insert(pair.end(), {1, 1});
          next.emplace_back(std::move(pair), coeff * slot.sin_r);
        }
      }
      partial = std::move(next);
    }
    for (auto& [bits, coeff] : partial) out[BasisKet(std::move(bits))] += coeff;
  }
  return PureState(std::move(out_modes), out);
}

}  // namespace rindler
