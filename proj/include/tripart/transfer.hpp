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

#ifndef TRIPART_TRANSFER_HPP
#define TRIPART_TRANSFER_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "tripart/qmath.hpp"
#include "tripart/states.hpp"

namespace tripart {

/// Pure single-atom state amp_g |g> + amp_e |e>.
struct AtomState {
  Complex amp_g = 1.0;
  Complex amp_e = 0.0;
};

/// Product of three single-atom pure states, one per cavity.
class AtomicPreparation {
 public:
  static constexpr double kNormTol = 1e-12;

  AtomicPreparation() = default;
  explicit AtomicPreparation(const std::array<AtomState, 3>& atoms);

  /// Basis product from a label such as "ggg" or "geg".
  static AtomicPreparation from_label(std::string_view label);
  static AtomicPreparation ground() { return {}; }

  const std::array<AtomState, 3>& atoms() const { return atoms_; }
  const AtomState& operator[](std::size_t i) const { return atoms_[i]; }
  bool is_ground() const;

  /// Label for basis products ("ggg", ...) or "custom".
  std::string label() const;

 private:
  std::array<AtomState, 3> atoms_{};
};

struct TransferSettings {
  double transmittance = 1.0;  ///< T = cos^2(theta)
  double g_tau = 0.0;          ///< dimensionless interaction time
};

/// Injects each flying mode into its (initially empty) cavity through a
/// mirror of transmittance T and traces out the flying modes.
ThreeModeDensity inject(const ThreeModeDensity& field, double transmittance);

/// Keeps only entries whose row and column photon numbers differ by at most
/// `band` in every mode. Diagonal and Hermitian structure are preserved.
ThreeModeDensity band_limited(const ThreeModeDensity& field, int band);

/// Atomic density matrix for atoms prepared in |ggg>, evaluated from the
/// closed-form matrix-element table (36 independent entries).
QubitRegisterDensity jc_atomic_density_ground(const ThreeModeDensity& cavity, double g_tau);

/// Atomic density matrix for an arbitrary product preparation. Builds each
/// resonant atom-mode unitary numerically as exp(-i H g_tau) on a truncated
/// Fock space and traces out the cavities.
QubitRegisterDensity jc_atomic_density_general(const ThreeModeDensity& cavity,
                                               const AtomicPreparation& prep,
                                               double g_tau);

/// inject followed by the JC stage. Ground preparations use the closed form.
QubitRegisterDensity transfer_to_atoms(const ThreeModeDensity& field,
                                       const TransferSettings& settings,
                                       const AtomicPreparation& prep = AtomicPreparation::ground());

namespace detail {

/// One row of the ground-preparation matrix-element table: rho_{row,col}
/// (1-based indices in the |eee>..|ggg> basis) carries `prefactor` times a
/// sum over cavity coefficients whose per-mode index shifts follow from the
/// row and column atomic levels.
struct MatrixElementRule {
  int row;
  int col;
  Complex prefactor;
};

std::span<const MatrixElementRule> ground_matrix_element_table();

ComplexMatrix ground_atomic_matrix(const ThreeModeDensity& cavity, double g_tau,
                                   std::span<const MatrixElementRule> table);

/// exp(-i H g_tau) for H = sigma_+ a + sigma_- a^dagger on photon numbers
/// 0..n_photons. Basis index 2n + s with s = 0 for |e>, 1 for |g>.
ComplexMatrix jc_unitary(int n_photons, double g_tau);

}  // namespace detail

}  // namespace tripart

#endif  // TRIPART_TRANSFER_HPP
