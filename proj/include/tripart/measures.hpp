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

#ifndef TRIPART_MEASURES_HPP
#define TRIPART_MEASURES_HPP

#include <string_view>

#include "tripart/qmath.hpp"

namespace tripart {

/// Partial-transpose eigenvalues in [-eps, 0) are treated as zero.
inline constexpr double kNegativityThreshold = 1e-12;

enum class QubitPair { AB, AC, BC };

std::string_view to_string(QubitPair pair);
QubitPair parse_qubit_pair(std::string_view s);

/// -2 x (sum of eigenvalues below -eps).
double negativity_from_spectrum(const RealVector& eigenvalues,
                                double eps = kNegativityThreshold);

/// Negativity of the I vs rest cut of a 2- or 3-qubit density matrix.
double negativity(const ComplexMatrix& rho, Qubit subsystem,
                  double eps = kNegativityThreshold);

/// N_{I-JK} of a three-qubit state.
double bipartition_negativity(const QubitRegisterDensity& rho, Qubit subsystem,
                              double eps = kNegativityThreshold);

/// Cube root of the product of the three bipartition negativities, with an
/// early zero when any factor vanishes.
double tripartite_negativity(const QubitRegisterDensity& rho,
                             double eps = kNegativityThreshold);

/// Negativity of the two-qubit state left after tracing out the third qubit.
double pair_negativity(const QubitRegisterDensity& rho, QubitPair pair,
                       double eps = kNegativityThreshold);

struct EntanglementReport {
  double purity = 0.0;
  double neg_A_BC = 0.0;
  double neg_B_AC = 0.0;
  double neg_C_AB = 0.0;
  double tripartite_negativity = 0.0;
  double neg_AB = 0.0;
  double neg_AC = 0.0;
  double neg_BC = 0.0;
  double trace_residual = 0.0;
};

EntanglementReport report(const QubitRegisterDensity& rho, double trace_residual,
                          double eps = kNegativityThreshold);

inline EntanglementReport report(const QubitRegisterDensity& rho) {
  return report(rho, rho.trace_residual());
}

}  // namespace tripart

#endif  // TRIPART_MEASURES_HPP
