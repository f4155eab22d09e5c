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

#ifndef TRIPART_STATES_HPP
#define TRIPART_STATES_HPP

#include <array>
#include <compare>
#include <span>
#include <string_view>
#include <vector>

#include "tripart/qmath.hpp"

namespace tripart {

/// Photon numbers (mode 1, mode 2, mode 3) of a three-mode Fock ket.
using FockTriple = std::array<int, 3>;

/// Row and column ket of a density coefficient a_{pqr,p'q'r'}.
struct DensityKey {
  FockTriple row;
  FockTriple col;
  auto operator<=>(const DensityKey&) const = default;
};

/// Sparse Hermitian density operator on a truncated three-mode Fock space.
///
/// Entries are kept sorted by key; exact zeros are not stored. Construction
/// checks Hermitian symmetry, a real nonnegative diagonal, and that the trace
/// equals 1 - trace_residual.
class ThreeModeDensity {
 public:
  struct Entry {
    DensityKey key;
    Complex value;
  };

  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kDiagonalTol = 1e-14;

  ThreeModeDensity() = default;

  /// Duplicate keys are summed in input order.
  static ThreeModeDensity from_entries(std::vector<Entry> entries,
                                       double trace_residual = 0.0);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int n_max() const { return n_max_; }
  double trace_residual() const { return trace_residual_; }
  Complex trace() const;

  /// Coefficient lookup; zero for keys that are not stored.
  Complex coeff(const FockTriple& row, const FockTriple& col) const;

 private:
  std::vector<Entry> entries_;
  int n_max_ = 0;
  double trace_residual_ = 0.0;
};

struct KetAmplitude {
  FockTriple ket;
  Complex amplitude;
};

/// |psi><psi| of the normalized ket expansion. Duplicate kets add.
ThreeModeDensity pure_state_density(std::span<const KetAmplitude> kets);

ThreeModeDensity vacuum_density();

/// Five-term generalized Schmidt forms of a three-qubit-like field.
enum class GsdForm {
  psi_gsd,    // |000>,|100>,|110>,|101>,|111>  (alpha, beta, delta, epsilon, omega)
  phi_3s,     // |000>,|001>,|010>,|100>,|111>  (a, b, c, d, e)
  varphi_3s,  // |000>,|011>,|101>,|110>,|111>  (a, b, c, d, e)
};

std::string_view to_string(GsdForm form);
GsdForm parse_gsd_form(std::string_view s);

/// Five GSD amplitudes, normalized to unit norm on construction.
class GsdCoefficients {
 public:
  GsdCoefficients(GsdForm form, const std::array<Complex, 5>& amplitudes);

  /// All five amplitudes equal.
  static GsdCoefficients uniform(GsdForm form);

  GsdForm form() const { return form_; }
  const std::array<Complex, 5>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  // psi_gsd names
  Complex alpha() const { return amps_[0]; }
  Complex beta() const { return amps_[1]; }
  Complex delta() const { return amps_[2]; }
  Complex epsilon() const { return amps_[3]; }
  Complex omega() const { return amps_[4]; }

 private:
  GsdForm form_;
  std::array<Complex, 5> amps_;
};

/// Fock kets carrying the five amplitudes of each form, in amplitude order.
std::array<FockTriple, 5> gsd_kets(GsdForm form);

ThreeModeDensity gsd_state(const GsdCoefficients& c);

/// p |GHZ><GHZ| + (1-p) |W'><W'| with GHZ = (|000>+|111>)/sqrt2 and
/// W' = (|001>+|010>+|100>)/sqrt3.
ThreeModeDensity mixed_ghz_w(double p);

/// Mean photon numbers of the two-interaction Gaussian state.
struct TStateParams {
  double gamma1_sq = 0.0;
  double omega_sq = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
};

/// Below this Omega the limiting small-Omega expressions are used.
inline constexpr double kSmallOmega = 1e-6;

TStateParams t_state_params(double gamma1_sq, double omega_sq);

enum class CapPolicy { throw_on_cap, truncate_at_cap };

struct TStateOptions {
  double tail_tolerance = 1e-8;
  bool renormalize = false;
  CapPolicy cap_policy = CapPolicy::throw_on_cap;
  int max_mode1_photons = 40;
  /// Keep only entries with |n_row - n_col| <= band in every mode; -1 keeps all.
  int band = -1;
};

/// Amplitude of |p+q, p, q> in the Gaussian ket.
double t_state_amplitude(const TStateParams& params, int p, int q);

/// Smallest cutoff K on the mode-1 photon number p+q meeting the tolerance,
/// or -1 if `max_mode1_photons` is exceeded.
int t_state_cutoff(const TStateParams& params, double tail_tolerance,
                   int max_mode1_photons);

/// Kets of the Gaussian state with p+q <= cutoff (not renormalized).
std::vector<KetAmplitude> t_state_kets(const TStateParams& params, int cutoff);

ThreeModeDensity gaussian_t_state(const TStateParams& params,
                                  const TStateOptions& options = {});

}  // namespace tripart

#endif  // TRIPART_STATES_HPP
