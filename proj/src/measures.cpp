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

#include "tripart/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tripart {

namespace {

void require_three_qubits(const QubitRegisterDensity& rho) {
  if (rho.n_qubits() != 3) throw std::invalid_argument("expected a three-qubit density matrix");
}

Qubit complement(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB: return Qubit::C;
    case QubitPair::AC: return Qubit::B;
    case QubitPair::BC: return Qubit::A;
  }
  throw std::invalid_argument("unknown qubit pair");
}

}  // namespace

std::string_view to_string(QubitPair pair) {
  switch (pair) {
    case QubitPair::AB: return "AB";
    case QubitPair::AC: return "AC";
    case QubitPair::BC: return "BC";
  }
  return "?";
}

QubitPair parse_qubit_pair(std::string_view s) {
  if (s == "AB") return QubitPair::AB;
  if (s == "AC") return QubitPair::AC;
  if (s == "BC") return QubitPair::BC;
  throw std::invalid_argument("unknown qubit pair '" + std::string(s) + "'");
}

double negativity_from_spectrum(const RealVector& eigenvalues, double eps) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues(i) < -eps) sum += eigenvalues(i);
  return sum == 0.0 ? 0.0 : -2.0 * sum;
}

double negativity(const ComplexMatrix& rho, Qubit subsystem, double eps) {
  return negativity_from_spectrum(hermitian_eigenvalues(partial_transpose(rho, subsystem)), eps);
}

double bipartition_negativity(const QubitRegisterDensity& rho, Qubit subsystem, double eps) {
  require_three_qubits(rho);
  return negativity(rho.matrix(), subsystem, eps);
}

double tripartite_negativity(const QubitRegisterDensity& rho, double eps) {
  require_three_qubits(rho);
  double product = 1.0;
  for (Qubit q : kAllQubits) {
    const double n = negativity(rho.matrix(), q, eps);
    if (n == 0.0) return 0.0;
    product *= n;
  }
  return std::cbrt(product);
}

double pair_negativity(const QubitRegisterDensity& rho, QubitPair pair, double eps) {
  require_three_qubits(rho);
  const ComplexMatrix reduced = partial_trace(rho.matrix(), complement(pair));
  return negativity(reduced, Qubit::A, eps);
}

EntanglementReport report(const QubitRegisterDensity& rho, double trace_residual, double eps) {
  require_three_qubits(rho);
  EntanglementReport r;
  r.purity = purity(rho);
  r.neg_A_BC = negativity(rho.matrix(), Qubit::A, eps);
  r.neg_B_AC = negativity(rho.matrix(), Qubit::B, eps);
  r.neg_C_AB = negativity(rho.matrix(), Qubit::C, eps);
  const double product = r.neg_A_BC * r.neg_B_AC * r.neg_C_AB;
  r.tripartite_negativity = product == 0.0 ? 0.0 : std::cbrt(product);
  r.neg_AB = pair_negativity(rho, QubitPair::AB, eps);
  r.neg_AC = pair_negativity(rho, QubitPair::AC, eps);
  r.neg_BC = pair_negativity(rho, QubitPair::BC, eps);
  r.trace_residual = trace_residual;
  return r;
}

}  // namespace tripart
