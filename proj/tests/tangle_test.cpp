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

#include "rindler/tangle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

#include "rindler/oracle/sturm_bisection.hpp"
#include "test_util.hpp"

namespace rindler {
namespace {

using Entries = std::vector<std::tuple<int, int, double>>;

// Real symmetric matrix from its upper-triangle nonzeros.
SquareMatrix symmetric(std::size_t dim, const Entries& upper, double scale) {
  SquareMatrix m(dim);
  for (const auto& [i, j, v] : upper) {
    m(i, j) = v * scale;
    m(j, i) = v * scale;
  }
  return m;
}

DensityMatrix w_reduced(double r) {
  const auto s = apply_rindler(make_w_state(), uniform_parameters(RindlerParameter(r)));
  return partial_trace(density_from_pure(s), region_one_modes());
}

DensityMatrix ghz_reduced(double ra, double r) {
  const auto s = apply_rindler(make_ghz_state(), alice_split_parameters(RindlerParameter(ra), RindlerParameter(r)));
  return partial_trace(density_from_pure(s), region_one_modes());
}

const std::vector<double> kSampleR{0.0, 0.2, 0.45, 0.7, std::numbers::pi / 4};

TEST(DensityFromPure, Examples) {
  const PureState vacuum(minkowski_modes(), {{BasisKet("000"), 1.0}});
  const auto d0 = density_from_pure(vacuum);
  EXPECT_EQ(d0(0, 0), Complex(1.0));
  EXPECT_EQ(d0.matrix().trace(), Complex(1.0));

  const auto w = density_from_pure(make_w_state());
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const bool block = (i == 1 || i == 2 || i == 4) && (j == 1 || j == 2 || j == 4);
      EXPECT_NEAR(w(i, j).real(), block ? 1.0 / 3.0 : 0.0, 1e-15);
    }
  }

  const auto ghz = density_from_pure(make_ghz_state());
  EXPECT_NEAR(ghz(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz(0, 7).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz(7, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(ghz(7, 7).real(), 0.5, 1e-15);
  EXPECT_EQ(ghz(3, 3), Complex{});
}

// rho(A_I B_I C_I) of W at equal r, times 3.
SquareMatrix w_reduced_expected(double r) {
  const double c4 = std::pow(std::cos(r), 4), s4 = std::pow(std::sin(r), 4);
  const double sc = std::pow(std::sin(r) * std::cos(r), 2);
  return symmetric(8,
                   {{1, 1, c4}, {1, 2, c4}, {1, 4, c4}, {2, 2, c4}, {2, 4, c4}, {4, 4, c4},
                    {3, 3, 2 * sc}, {3, 5, sc}, {3, 6, sc}, {5, 5, 2 * sc}, {5, 6, sc}, {6, 6, 2 * sc}, {7, 7, 3 * s4}},
                   1.0 / 3.0);
}

TEST(PartialTrace, WReducedStateMatchesClosedMatrix) {
  for (double r : kSampleR) {
    const auto rho = w_reduced(r);
    EXPECT_EQ(rho.mode_order(), region_one_modes());
    EXPECT_LT(max_abs_diff(rho.matrix(), w_reduced_expected(r)), 1e-15) << "r=" << r;
  }
  const double r = 0.45;
  EXPECT_NEAR(w_reduced(r)(3, 3).real(), 2 * std::pow(std::sin(r) * std::cos(r), 2) / 3, 1e-16);
  EXPECT_NEAR(w_reduced(r)(7, 7).real(), std::pow(std::sin(r), 4), 1e-16);
}

TEST(PartialTrace, KeepAllIsIdentity) {
  std::mt19937_64 rng(31);
  const auto d = density_from_pure(testing::random_three_party_state(rng));
  const auto same = partial_trace(d, d.mode_order());
  EXPECT_EQ(same.matrix(), d.matrix());
}

TEST(PartialTrace, ProductStateGivesPureMarginal) {
  const std::vector<ModeLabel> modes{{Party::kAlice, Wedge::kMinkowski}, {Party::kBob, Wedge::kMinkowski}};
  const auto d = density_from_pure(PureState(modes, {{BasisKet("00"), 1.0}}));
  const auto marginal = partial_trace(d, {modes[0]});
  EXPECT_EQ(marginal.dim(), 2u);
  EXPECT_EQ(marginal(0, 0), Complex(1.0));
  EXPECT_EQ(marginal(1, 1), Complex{});
}

TEST(PartialTrace, OutputInCanonicalOrder) {
  const auto d = density_from_pure(apply_rindler(make_ghz_state(), uniform_parameters(RindlerParameter(0.3))));
  const std::vector<ModeLabel> scrambled{{Party::kCharlie, Wedge::kRindlerI}, {Party::kAlice, Wedge::kRindlerI},
                                         {Party::kBob, Wedge::kRindlerI}};
  EXPECT_EQ(partial_trace(d, scrambled).matrix(), partial_trace(d, region_one_modes()).matrix());
  EXPECT_EQ(partial_trace(d, scrambled).mode_order(), region_one_modes());
}

TEST(PartialTrace, Errors) {
  const auto d = density_from_pure(make_w_state());
  try {
    partial_trace(d, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyKeep);
  }
  try {
    partial_trace(d, {{Party::kAlice, Wedge::kRindlerI}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMode);
  }
}

TEST(PartialTrace, PreservesDensityInvariants) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const auto s = apply_rindler(testing::random_three_party_state(rng), testing::random_parameters(rng));
    const auto full = density_from_pure(s);
    const auto reduced = partial_trace(full, region_one_modes());
    EXPECT_TRUE(reduced.satisfies_density_invariants());
    const auto pair = partial_trace(reduced, {{Party::kAlice, Wedge::kRindlerI}, {Party::kCharlie, Wedge::kRindlerI}});
    EXPECT_TRUE(pair.satisfies_density_invariants());
  }
}

TEST(PartialTranspose, WMatchesClosedMatricesForEachParty) {
  for (double r : kSampleR) {
    const double c4 = std::pow(std::cos(r), 4), s4 = std::pow(std::sin(r), 4);
    const double sc = std::pow(std::sin(r) * std::cos(r), 2);
    const auto rho = w_reduced(r);
    const auto pt_a = symmetric(8,
                                {{0, 5, c4}, {0, 6, c4}, {1, 1, c4}, {1, 2, c4}, {1, 7, sc}, {2, 2, c4}, {2, 7, sc},
                                 {3, 3, 2 * sc}, {4, 4, c4}, {5, 5, 2 * sc}, {5, 6, sc}, {6, 6, 2 * sc}, {7, 7, 3 * s4}},
                                1.0 / 3.0);
    const auto pt_b = symmetric(8,
                                {{0, 3, c4}, {0, 6, c4}, {1, 1, c4}, {1, 4, c4}, {1, 7, sc}, {2, 2, c4}, {3, 3, 2 * sc},
                                 {3, 6, sc}, {4, 4, c4}, {4, 7, sc}, {5, 5, 2 * sc}, {6, 6, 2 * sc}, {7, 7, 3 * s4}},
                                1.0 / 3.0);
    const auto pt_c = symmetric(8,
                                {{0, 3, c4}, {0, 5, c4}, {1, 1, c4}, {2, 2, c4}, {2, 4, c4}, {2, 7, sc}, {3, 3, 2 * sc},
                                 {3, 5, sc}, {4, 4, c4}, {4, 7, sc}, {5, 5, 2 * sc}, {6, 6, 2 * sc}, {7, 7, 3 * s4}},
                                1.0 / 3.0);
    EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kAlice), pt_a), 1e-15) << "r=" << r;
    EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kBob), pt_b), 1e-15) << "r=" << r;
    EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kCharlie), pt_c), 1e-15) << "r=" << r;
  }
  EXPECT_NEAR(partial_transpose(w_reduced(0.2), Party::kAlice)(0, 5).real(), std::pow(std::cos(0.2), 4) / 3, 1e-16);
}

TEST(PartialTranspose, GhzMatchesClosedMatricesForEachParty) {
  for (double ra : {0.0, 0.3, std::numbers::pi / 4}) {
    for (double r : {0.0, 0.5, std::numbers::pi / 4}) {
      const double c2 = std::pow(std::cos(r), 2), s2 = std::pow(std::sin(r), 2);
      const double ca2 = std::pow(std::cos(ra), 2), sa2 = std::pow(std::sin(ra), 2);
      const double coherence = c2 * std::cos(ra);
      const Entries diagonal{{0, 0, c2 * c2 * ca2}, {1, 1, c2 * s2 * ca2}, {2, 2, c2 * s2 * ca2},
                             {3, 3, s2 * s2 * ca2}, {4, 4, c2 * c2 * sa2}, {5, 5, s2 * c2 * sa2},
                             {6, 6, s2 * c2 * sa2}, {7, 7, 1 + s2 * s2 * sa2}};
      auto with = [&](int i, int j) {
        Entries e = diagonal;
        e.emplace_back(i, j, coherence);
        return symmetric(8, e, 0.5);
      };
      const auto rho = ghz_reduced(ra, r);
      EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kAlice), with(3, 4)), 1e-15);
      EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kBob), with(2, 5)), 1e-15);
      EXPECT_LT(max_abs_diff(partial_transpose(rho, Party::kCharlie), with(1, 6)), 1e-15);
    }
  }
}

TEST(PartialTranspose, DiagonalIsFixedAndInvolution) {
  const DensityMatrix diag(minkowski_modes(), SquareMatrix::diagonal({0.1, 0.2, 0.05, 0.05, 0.3, 0.1, 0.1, 0.1}));
  EXPECT_EQ(partial_transpose(diag, Party::kBob), diag.matrix());

  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    const auto rho = partial_trace(
        density_from_pure(apply_rindler(testing::random_three_party_state(rng), testing::random_parameters(rng))),
        region_one_modes());
    for (Party p : kAllParties) {
      const auto once = partial_transpose(rho, p);
      EXPECT_TRUE(once.is_hermitian());
      EXPECT_NEAR(std::abs(once.trace() - 1.0), 0.0, 1e-12);
      const DensityMatrix as_density(rho.mode_order(), once);
      EXPECT_EQ(partial_transpose(as_density, p), rho.matrix());
    }
  }
}

TEST(PartialTranspose, UnknownMode) {
  try {
    partial_transpose(density_from_pure(make_w_state()), {{Party::kAlice, Wedge::kRindlerII}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMode);
  }
}

TEST(TraceNorm, InertialGhzTransposeHasNormTwo) {
  const auto pt = partial_transpose(ghz_reduced(0.0, 0.0), Party::kAlice);
  EXPECT_NEAR(trace_norm(pt), 2.0, 1e-14);
  const auto spectrum = eigenvalues_hermitian(pt).eigenvalues;
  EXPECT_NEAR(spectrum.front(), -0.5, 1e-15);
  EXPECT_NEAR(spectrum.back(), 0.5, 1e-15);
}

TEST(NegativeEigenvalueSum, WTransposeAtRest) {
  EXPECT_NEAR(negative_eigenvalue_sum(partial_transpose(w_reduced(0.0), Party::kAlice)), std::sqrt(2.0) / 3.0, 1e-15);
}

TEST(OneTangle, Examples) {
  for (Party p : kAllParties) {
    EXPECT_NEAR(one_tangle(w_reduced(0.0), p), 2.0 * std::sqrt(2.0) / 3.0, 1e-14);
    EXPECT_NEAR(one_tangle(w_reduced(0.0), p), 0.9428, 5e-5);
    EXPECT_NEAR(one_tangle(ghz_reduced(0.0, 0.0), p), 1.0, 1e-14);
    const auto product = density_from_pure(PureState(region_one_modes(), {{BasisKet("000"), 1.0}}));
    EXPECT_EQ(one_tangle(product, p), 0.0);
  }
}

TEST(OneTangle, RequiresThreeParties) {
  const auto six_modes = density_from_pure(apply_rindler(make_w_state(), uniform_parameters(RindlerParameter(0.1))));
  try {
    one_tangle(six_modes, Party::kAlice);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTripartite);
  }
}

TEST(TwoTangle, Examples) {
  for (PartyPair pair : kAllPairs) {
    EXPECT_NEAR(two_tangle(w_reduced(0.0), pair), (std::sqrt(5.0) - 1.0) / 3.0, 1e-14);
    EXPECT_NEAR(two_tangle(w_reduced(0.0), pair), 0.4120, 5e-5);
    const auto product = density_from_pure(PureState(region_one_modes(), {{BasisKet("010"), 1.0}}));
    EXPECT_EQ(two_tangle(product, pair), 0.0);
  }
  for (double ra : {0.0, 0.3, 0.7}) {
    for (double r : {0.0, 0.25, std::numbers::pi / 4}) {
      for (PartyPair pair : kAllPairs) EXPECT_LT(two_tangle(ghz_reduced(ra, r), pair), 1e-10);
    }
  }
}

// rho^{T_A}_{A_I B_I}, times 3.
TEST(TwoTangle, WPairTransposeMatchesAndAllSixCoincide) {
  for (double r : kSampleR) {
    const double c4 = std::pow(std::cos(r), 4), s4 = std::pow(std::sin(r), 4);
    const double sc = std::pow(std::sin(r) * std::cos(r), 2);
    const auto expected =
        symmetric(4, {{0, 0, c4}, {0, 3, c4 + sc}, {1, 1, c4 + 2 * sc}, {2, 2, c4 + 2 * sc}, {3, 3, 3 * s4 + 2 * sc}},
                  1.0 / 3.0);
    const auto rho = w_reduced(r);
    for (Party first : kAllParties) {
      for (Party second : kAllParties) {
        if (first == second) continue;
        const auto pair = partial_trace(rho, {{first, Wedge::kRindlerI}, {second, Wedge::kRindlerI}});
        EXPECT_LT(max_abs_diff(partial_transpose(pair, first), expected), 1e-15)
            << party_letter(first) << party_letter(second) << " r=" << r;
      }
    }
  }
}

// Spectra of rho^{T_A} and rho^{T_B} coincide for two-party states.
TEST(TwoTangle, TransposeSideDoesNotMatter) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 20; ++i) {
    const auto rho = partial_trace(
        density_from_pure(apply_rindler(testing::random_three_party_state(rng), testing::random_parameters(rng))),
        region_one_modes());
    for (PartyPair pair : kAllPairs) {
      const auto reduced = partial_trace(rho, {{pair.first, Wedge::kRindlerI}, {pair.second, Wedge::kRindlerI}});
      const auto first = eigenvalues_hermitian(partial_transpose(reduced, pair.first)).eigenvalues;
      const auto second = eigenvalues_hermitian(partial_transpose(reduced, pair.second)).eigenvalues;
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(first[k], second[k], 1e-12);
      EXPECT_NEAR(two_tangle(rho, pair), two_tangle(rho, {pair.second, pair.first}), 1e-12);
    }
  }
}

TEST(FullReport, WAtRest) {
  const auto report = full_report(make_w_state(), uniform_parameters(RindlerParameter::inertial()));
  EXPECT_NEAR(report.pi_tangle, 0.549363545555462087293, 1e-13);
  const double one = 2.0 * std::sqrt(2.0) / 3.0, two = (std::sqrt(5.0) - 1.0) / 3.0;
  for (Party p : kAllParties) EXPECT_NEAR(report.residuals.at(p), one * one - 2 * two * two, 1e-13);
}

TEST(FullReport, GhzValues) {
  const auto rest = full_report(make_ghz_state(), uniform_parameters(RindlerParameter::inertial()));
  EXPECT_NEAR(rest.pi_tangle, 1.0, 1e-13);

  // N_B = N_C != N_A off the diagonal r_a = r. References from an independent
  // numpy eigvalsh pipeline.
  const auto split = full_report(make_ghz_state(), alice_split_parameters(RindlerParameter(0.3), RindlerParameter(0.5)));
  EXPECT_NEAR(split.one_tangles.at(Party::kAlice), 0.6857475407380368, 1e-12);
  EXPECT_NEAR(split.one_tangles.at(Party::kBob), 0.6508618259512874, 1e-12);
  EXPECT_NEAR(split.one_tangles.at(Party::kCharlie), 0.6508618259512874, 1e-12);

  const auto q = RindlerParameter::infinite_acceleration();
  const auto bob_charlie_fast = full_report(make_ghz_state(), alice_split_parameters(RindlerParameter(0.0), q));
  EXPECT_NEAR(bob_charlie_fast.one_tangles.at(Party::kBob), bob_charlie_fast.one_tangles.at(Party::kCharlie), 1e-14);
  EXPECT_NEAR(bob_charlie_fast.one_tangles.at(Party::kBob), 0.3903882032022076, 1e-12);
  for (const auto& [pair, n] : bob_charlie_fast.two_tangles) EXPECT_LT(n, 1e-10);

  const auto alice_fast = full_report(make_ghz_state(), alice_split_parameters(q, RindlerParameter(0.0)));
  EXPECT_NEAR(alice_fast.one_tangles.at(Party::kAlice), 0.5, 1e-14);
  EXPECT_NEAR(alice_fast.one_tangles.at(Party::kBob), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(FullReport, PiTangleIsMeanOfUnclampedResiduals) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 20; ++i) {
    const auto params = testing::random_parameters(rng);
    const auto report = full_report(testing::random_three_party_state(rng), params);
    double sum = 0.0;
    for (Party p : kAllParties) {
      double expected = std::pow(report.one_tangles.at(p), 2);
      for (Party q : kAllParties) {
        if (q != p) expected -= std::pow(report.two_tangle(p, q), 2);
      }
      EXPECT_EQ(report.residuals.at(p), expected);
      sum += report.residuals.at(p);
    }
    EXPECT_EQ(report.pi_tangle, sum / 3.0);
    EXPECT_EQ(report.r_values, params);
  }
}

TEST(FullReport, ProductStatesHaveZeroPiTangle) {
  // (a|0> + b|1>) (c|0> + d|1>) |1>
  const PureState::AmplitudeMap amps{{BasisKet("001"), 0.6 * 0.8}, {BasisKet("011"), 0.6 * 0.6},
                                     {BasisKet("101"), 0.8 * 0.8}, {BasisKet("111"), 0.8 * 0.6}};
  const auto report = full_report(make_custom_state(amps).state, uniform_parameters(RindlerParameter::inertial()));
  EXPECT_NEAR(report.pi_tangle, 0.0, 1e-10);
  for (const auto& [p, n] : report.one_tangles) EXPECT_NEAR(n, 0.0, 1e-10);
}

TEST(Scenarios, WOneTanglesCoincideOnGrid) {
  for (auto r : uniform_grid(0.0, kMaxRindlerParameter, 50)) {
    const auto report = full_report(make_w_state(), uniform_parameters(r));
    EXPECT_NEAR(report.one_tangles.at(Party::kAlice), report.one_tangles.at(Party::kBob), 1e-10);
    EXPECT_NEAR(report.one_tangles.at(Party::kAlice), report.one_tangles.at(Party::kCharlie), 1e-10);
    if (r.value() >= 0.70) {
      for (const auto& [pair, n] : report.two_tangles) EXPECT_LT(n, 1e-10) << "r=" << r.value();
    }
  }
}

TEST(Scenarios, GhzBobCharlieSymmetric) {
  const auto grid = uniform_grid(0.0, kMaxRindlerParameter, 12);
  for (auto ra : grid) {
    for (auto r : grid) {
      const auto report = full_report(make_ghz_state(), alice_split_parameters(ra, r));
      EXPECT_NEAR(report.one_tangles.at(Party::kBob), report.one_tangles.at(Party::kCharlie), 1e-10);
      for (const auto& [pair, n] : report.two_tangles) EXPECT_LT(n, 1e-10);
    }
  }
}

TEST(Scenarios, NeverVanishAtInfiniteAcceleration) {
  const auto q = RindlerParameter::infinite_acceleration();
  for (const auto& state : {make_w_state(), make_ghz_state()}) {
    const auto report = full_report(state, uniform_parameters(q));
    for (const auto& [p, n] : report.one_tangles) EXPECT_GT(n, 1e-3);
    EXPECT_GT(report.pi_tangle, 1e-3);
  }
  EXPECT_NEAR(full_report(make_w_state(), uniform_parameters(q)).pi_tangle, 0.008759487821486377, 1e-12);
  EXPECT_NEAR(full_report(make_ghz_state(), uniform_parameters(q)).one_tangles.at(Party::kAlice), 0.22855339059327387,
              1e-12);
}

// Jacobi path against Sturm bisection; a different seed from the acceptance run.
TEST(Oracle, NegativitiesAgreeOnRandomStates) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 20; ++i) {
    const auto rho = partial_trace(
        density_from_pure(apply_rindler(testing::random_three_party_state(rng), testing::random_parameters(rng))),
        region_one_modes());
    for (Party p : kAllParties) {
      EXPECT_NEAR(one_tangle(rho, p), oracle::negativity(partial_transpose(rho, p)), 1e-8);
    }
  }
}

}  // namespace
}  // namespace rindler
