// Copyright 2026 The tripart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIPART_ANALYTIC_HPP
#define TRIPART_ANALYTIC_HPP

// Closed-form reference results for the transfer of qubit-like and Gaussian
// fields. Several published expressions violate basic invariants (unit trace,
// purity <= 1, separability of product inputs); those carry an `as_printed`
// variant next to the `corrected` one so that the discrepancy itself can be
// tested.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripart/qmath.hpp"
#include "tripart/states.hpp"

namespace tripart::analytic {

enum class Variant { as_printed, corrected };
std::string_view to_string(Variant v);

enum class KParity { even, odd };

/// Pure atomic state reached at g_tau = (2k+1) pi/2 from a psi_gsd field at
/// T = 1. Matches the pipeline up to a global phase.
ComplexVector peak_atomic_state(const GsdCoefficients& c, KParity parity);

/// Entanglement classes of the pure atomic state, by vanishing amplitudes.
enum class Subtype { star_2_2, chain_2_1, ghz_2_0, w_2_3 };
Subtype parse_subtype(std::string_view s);
std::string_view to_string(Subtype s);

/// Closed-form tripartite negativity of each subtype. Throws when an
/// amplitude that the subtype requires to vanish is nonzero.
double subtype_negativity(Subtype subtype, const GsdCoefficients& c);

/// Purity of the W-like (beta = omega = 0) family as a function of g_tau.
double mu_2_3(double g_tau, double alpha_sq, Variant v = Variant::corrected);

struct GhzLossResult {
  ComplexMatrix elements;  ///< 8x8 atomic matrix from the element list
  double purity = 0.0;
  double lambda_minus = 0.0;
  double negativity = 0.0;  ///< -2 min(lambda_minus, 0)
};

/// GHZ-like field (beta = delta = epsilon = 0) through mirrors of
/// transmittance T. Y = T sin^2(g_tau).
GhzLossResult ghz_loss_formulas(double g_tau, double transmittance, Complex alpha,
                                Complex omega, Variant v = Variant::corrected);

struct MixedResult {
  ComplexMatrix elements;     ///< atomic matrix of the GHZ/W' mixture at T = 1
  double purity_b1 = 0.0;     ///< purity expression as printed
  double lambda1 = 0.0;       ///< shared PT eigenvalues, as printed
  double lambda2 = 0.0;
  double negativity_b2 = 0.0; ///< -2 (lambda1 + lambda2) over the negative ones
};

MixedResult mixed_formulas(double g_tau, double p);

/// Atomic purity of the mixture at the odd multiples of pi/2: 2p^2 - 2p + 1.
double mixed_peak_purity(double p);

/// Tripartite negativity of the mixture at the odd multiples of pi/2.
double mixed_peak_negativity(double p);

struct PhotonStats {
  double b000_sq = 0.0;
  double b110_sq = 0.0;
  double b101_sq = 0.0;
  double sum = 0.0;
};

PhotonStats t_photon_stats(const TStateParams& params);

/// One analytic-vs-pipeline comparison.
struct FormulaCheck {
  std::string formula_id;
  Variant variant = Variant::corrected;
  std::string inputs;
  double analytic = 0.0;
  double pipeline = 0.0;
  double abs_difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

FormulaCheck make_check(std::string formula_id, Variant variant, std::string inputs,
                        double analytic, double pipeline, double tolerance);

/// The printed-formula counterexamples: each entry is expected to fail.
std::vector<FormulaCheck> errata_checks();

}  // namespace tripart::analytic

#endif  // TRIPART_ANALYTIC_HPP
