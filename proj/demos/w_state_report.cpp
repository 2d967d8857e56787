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

// Prints the reduced W-state density matrix and all tangles at one r.
//
//   w_state_report 0.5

#include <cstdio>
#include <cstdlib>

#include "rindler/rindler.hpp"

int main(int argc, char** argv) {
  const double r_value = argc > 1 ? std::atof(argv[1]) : 0.0;
  const rindler::RindlerParameter r(r_value);
  const auto params = rindler::uniform_parameters(r);

  const auto transformed = rindler::apply_rindler(rindler::make_w_state(), params);
  std::printf("Rindler-transformed W state (%zu terms):\n", transformed.term_count());
  for (const auto& [ket, amp] : transformed.amplitudes()) std::printf("  |%s>  %+.6f\n", ket.to_string().c_str(), amp.real());

  const auto rho = rindler::partial_trace(rindler::density_from_pure(transformed), rindler::region_one_modes());
  std::printf("\n3 * rho(A_I B_I C_I):\n");
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) std::printf(" %8.5f", 3.0 * rho(i, j).real());
    std::printf("\n");
  }

  const auto report = rindler::tangle_report(rho, params);
  std::printf("\nN_A(BC) = %.6f   closed form %.6f\n", report.one_tangles.at(rindler::Party::kAlice),
              rindler::w_one_tangle_closed(r));
  std::printf("N_AB    = %.6f   closed form %.6f\n", report.two_tangle(rindler::Party::kAlice, rindler::Party::kBob),
              rindler::w_two_tangle_closed(r));
  std::printf("pi      = %.6f   closed form %.6f\n", report.pi_tangle, rindler::w_pi_tangle_closed(r));
  return 0;
}
