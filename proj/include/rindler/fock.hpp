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

// Occupation-number kets over an ordered list of fermionic modes, and sparse
// pure states built from them. Kets are plain tensor products: reordering
// modes never introduces fermionic exchange signs.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rindler/error.hpp"
#include "rindler/hermitian.hpp"

namespace rindler {

enum class Party : std::uint8_t { kAlice = 0, kBob = 1, kCharlie = 2 };
enum class Wedge : std::uint8_t { kMinkowski = 0, kRindlerI = 1, kRindlerII = 2 };

inline constexpr Party kAllParties[] = {Party::kAlice, Party::kBob, Party::kCharlie};

constexpr char party_letter(Party p) {
  switch (p) {
    case Party::kAlice: return 'A';
    case Party::kBob: return 'B';
    case Party::kCharlie: return 'C';
  }
  return '?';
}

struct ModeLabel {
  Party party;
  Wedge wedge;

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;

  std::string name() const {
    std::string out(1, party_letter(party));
    if (wedge == Wedge::kRindlerI) out += "_I";
    if (wedge == Wedge::kRindlerII) out += "_II";
    return out;
  }
};

inline std::vector<ModeLabel> minkowski_modes() {
  return {{Party::kAlice, Wedge::kMinkowski}, {Party::kBob, Wedge::kMinkowski}, {Party::kCharlie, Wedge::kMinkowski}};
}

/// A_I, A_II, B_I, B_II, C_I, C_II.
inline std::vector<ModeLabel> rindler_modes() {
  std::vector<ModeLabel> modes;
  for (Party p : kAllParties) {
    modes.push_back({p, Wedge::kRindlerI});
    modes.push_back({p, Wedge::kRindlerII});
  }
  return modes;
}

inline std::vector<ModeLabel> region_one_modes() {
  return {{Party::kAlice, Wedge::kRindlerI}, {Party::kBob, Wedge::kRindlerI}, {Party::kCharlie, Wedge::kRindlerI}};
}

/// Fermionic occupations, one bit per mode; the leftmost bit is the first mode.
class BasisKet {
 public:
  BasisKet() = default;
  explicit BasisKet(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw Error(ErrorCode::kInvalidKet, "fermionic occupations must be 0 or 1");
    }
  }
  /// From a bitstring such as "110010".
  explicit BasisKet(std::string_view bitstring) {
    bits_.reserve(bitstring.size());
    for (char ch : bitstring) {
      if (ch != '0' && ch != '1') {
        throw Error(ErrorCode::kInvalidKet, "bitstring '" + std::string(bitstring) + "' contains non-binary characters");
      }
      bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }

  static BasisKet from_index(std::size_t index, std::size_t mode_count) {
    std::vector<std::uint8_t> bits(mode_count);
    for (std::size_t i = 0; i < mode_count; ++i) bits[mode_count - 1 - i] = (index >> i) & 1U;
    return BasisKet(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Big-endian position in the 2^n computational basis.
  std::size_t index() const {
    std::size_t out = 0;
    for (auto b : bits_) out = (out << 1) | b;
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
  }

  friend auto operator<=>(const BasisKet&, const BasisKet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Amplitudes below this modulus are dropped on construction.
inline constexpr double kPruneThreshold = 1e-15;

class PureState {
 public:
  using AmplitudeMap = std::map<BasisKet, Complex>;

  PureState(std::vector<ModeLabel> mode_order, const AmplitudeMap& amplitudes) : mode_order_(std::move(mode_order)) {
    std::set<ModeLabel> seen(mode_order_.begin(), mode_order_.end());
    if (seen.size() != mode_order_.size()) throw Error(ErrorCode::kDuplicateMode, "mode list repeats a (party, wedge) pair");
    for (const auto& [ket, amp] : amplitudes) {
      if (ket.size() != mode_order_.size()) {
        throw Error(ErrorCode::kInvalidKet, "ket " + ket.to_string() + " has length " + std::to_string(ket.size()) +
                                                ", expected " + std::to_string(mode_order_.size()));
      }
      if (std::abs(amp) >= kPruneThreshold) amplitudes_.emplace(ket, amp);
    }
  }

  const std::vector<ModeLabel>& mode_order() const noexcept { return mode_order_; }
  const AmplitudeMap& amplitudes() const noexcept { return amplitudes_; }
  std::size_t mode_count() const noexcept { return mode_order_.size(); }
  std::size_t term_count() const noexcept { return amplitudes_.size(); }

  Complex amplitude(const BasisKet& ket) const {
    auto it = amplitudes_.find(ket);
    return it == amplitudes_.end() ? Complex{} : it->second;
  }
  Complex amplitude(std::string_view bitstring) const { return amplitude(BasisKet(bitstring)); }

  double norm_squared() const {
    double sum = 0.0;
    for (const auto& [ket, amp] : amplitudes_) sum += std::norm(amp);
    return sum;
  }

  std::optional<std::size_t> position_of(const ModeLabel& mode) const {
    auto it = std::find(mode_order_.begin(), mode_order_.end(), mode);
    if (it == mode_order_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - mode_order_.begin());
  }

  /// Unit-norm copy. Throws kAllZeroAmplitudes for the zero vector.
  PureState normalized() const {
    const double n2 = norm_squared();
    if (n2 == 0.0) throw Error(ErrorCode::kAllZeroAmplitudes, "cannot normalize a state with no amplitudes");
    const double inv = 1.0 / std::sqrt(n2);
    AmplitudeMap scaled;
    for (const auto& [ket, amp] : amplitudes_) scaled.emplace(ket, amp * inv);
    return PureState(mode_order_, scaled);
  }

  /// Dense 2^n amplitude vector in big-endian basis order.
  std::vector<Complex> dense() const {
    std::vector<Complex> out(std::size_t{1} << mode_order_.size());
    for (const auto& [ket, amp] : amplitudes_) out[ket.index()] = amp;
    return out;
  }

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  std::vector<ModeLabel> mode_order_;
  AmplitudeMap amplitudes_;
};

inline PureState make_w_state() {
  const double a = 1.0 / std::sqrt(3.0);
  return PureState(minkowski_modes(), {{BasisKet("001"), a}, {BasisKet("010"), a}, {BasisKet("100"), a}});
}

inline PureState make_ghz_state() {
  const double a = 1.0 / std::sqrt(2.0);
  return PureState(minkowski_modes(), {{BasisKet("000"), a}, {BasisKet("111"), a}});
}

struct CustomState {
  PureState state;
  bool normalization_applied = false;
};

/// Three-party Minkowski state from arbitrary amplitudes, renormalized if needed.
inline CustomState make_custom_state(const PureState::AmplitudeMap& amplitudes) {
  PureState raw(minkowski_modes(), amplitudes);
  if (raw.term_count() == 0) throw Error(ErrorCode::kAllZeroAmplitudes, "custom state has no nonzero amplitude");
  const bool renormalize = std::abs(raw.norm_squared() - 1.0) > 1e-12;
  return {renormalize ? raw.normalized() : raw, renormalize};
}

/// Same physical state with modes listed in new_order.
inline PureState tensor_reorder(const PureState& s, const std::vector<ModeLabel>& new_order) {
  const auto& old_order = s.mode_order();
  if (new_order.size() != old_order.size()) throw Error(ErrorCode::kNotAPermutation, "mode count differs");
  std::vector<std::size_t> source(new_order.size());
  std::set<ModeLabel> used;
  for (std::size_t i = 0; i < new_order.size(); ++i) {
    auto pos = s.position_of(new_order[i]);
    if (!pos || !used.insert(new_order[i]).second) {
      throw Error(ErrorCode::kNotAPermutation, "mode " + new_order[i].name() + " missing or repeated");
    }
    source[i] = *pos;
  }
  PureState::AmplitudeMap remapped;
  for (const auto& [ket, amp] : s.amplitudes()) {
    std::vector<std::uint8_t> bits(ket.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = ket[source[i]];
    remapped.emplace(BasisKet(std::move(bits)), amp);
  }
  return PureState(new_order, remapped);
}

// Custom-state text format:
//
//   # comment
//   001 = 0.57735
//   110 = 0.5 -0.25      (real part, optional imaginary part)
//
// Bitstrings must be exactly three characters of 0/1; each may appear once.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view token) {
  double value = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace detail

inline PureState::AmplitudeMap parse_custom_state(std::istream& in) {
  PureState::AmplitudeMap amplitudes;
  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& msg) {
    return Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;

    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw fail("expected 'bitstring = re [im]'");
    const auto key = detail::trim(view.substr(0, eq));
    if (key.size() != 3 || key.find_first_not_of("01") != std::string_view::npos) {
      throw fail("bitstring '" + std::string(key) + "' must be three characters of 0/1");
    }

    std::istringstream values{std::string(view.substr(eq + 1))};
    std::vector<std::string> tokens;
    for (std::string tok; values >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.size() > 2) throw fail("expected one or two numbers after '='");
    const auto re = detail::parse_double(tokens[0]);
    const auto im = tokens.size() == 2 ? detail::parse_double(tokens[1]) : std::optional<double>(0.0);
    if (!re || !im) throw fail("malformed number");
    if (!amplitudes.emplace(BasisKet(key), Complex(*re, *im)).second) {
      throw fail("bitstring " + std::string(key) + " given twice");
    }
  }
  return amplitudes;
}

inline PureState::AmplitudeMap load_custom_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return parse_custom_state(in);
}

}  // namespace rindler
