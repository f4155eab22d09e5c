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

#include <Eigen/QR>
#include <unsupported/Eigen/KroneckerProduct>

#include <random>

#include "doctest.h"
#include "tripart/measures.hpp"

using namespace tripart;

namespace {

QubitRegisterDensity pure(const ComplexVector& psi) {
  return QubitRegisterDensity(projector(psi.normalized()));
}

ComplexVector ket(std::initializer_list<std::pair<int, Complex>> amps) {
  ComplexVector v = ComplexVector::Zero(8);
  for (auto [i, a] : amps) v(i) = a;
  return v;
}

ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return Eigen::HouseholderQR<ComplexMatrix>(m).householderQ();
}

}  // namespace

TEST_CASE("GHZ state is maximally entangled across every cut") {
  const auto rho = pure(ket({{0, 1.0}, {7, 1.0}}));
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) CHECK(bipartition_negativity(rho, q) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tripartite_negativity(rho) == doctest::Approx(1.0).epsilon(1e-12));
  for (QubitPair p : {QubitPair::AB, QubitPair::AC, QubitPair::BC}) CHECK(pair_negativity(rho, p) == 0.0);
}

TEST_CASE("W state negativities") {
  // Single excitation shared by the three atoms (ground = bit 1).
  const auto rho = pure(ket({{basis_index({0, 1, 1}), 1.0}, {basis_index({1, 0, 1}), 1.0}, {basis_index({1, 1, 0}), 1.0}}));
  const double cut = 2.0 * std::sqrt(2.0) / 3.0;
  const double pair = (std::sqrt(5.0) - 1.0) / 3.0;
  const auto r = report(rho);
  CHECK(r.neg_A_BC == doctest::Approx(cut).epsilon(1e-12));
  CHECK(r.neg_B_AC == doctest::Approx(cut).epsilon(1e-12));
  CHECK(r.neg_C_AB == doctest::Approx(cut).epsilon(1e-12));
  CHECK(r.tripartite_negativity == doctest::Approx(cut).epsilon(1e-12));
  CHECK(r.neg_AB == doctest::Approx(pair).epsilon(1e-12));
  CHECK(r.neg_AC == doctest::Approx(pair).epsilon(1e-12));
  CHECK(r.neg_BC == doctest::Approx(pair).epsilon(1e-12));
  CHECK(r.purity == doctest::Approx(1.0));
}

TEST_CASE("product and biseparable states") {
  const auto prod = pure(ket({{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}}));  // |e>(|e>+|g>)(|e>+|g>)
  CHECK(tripartite_negativity(prod) == 0.0);
  CHECK(bipartition_negativity(prod, Qubit::B) == 0.0);

  // Bell pair on AB times C: the A and B cuts see 1, C sees 0, product vanishes.
  const auto bell = pure(ket({{basis_index({0, 0, 1}), 1.0}, {basis_index({1, 1, 1}), 1.0}}));
  CHECK(bipartition_negativity(bell, Qubit::A) == doctest::Approx(1.0));
  CHECK(bipartition_negativity(bell, Qubit::C) == 0.0);
  CHECK(tripartite_negativity(bell) == 0.0);
  CHECK(pair_negativity(bell, QubitPair::AB) == doctest::Approx(1.0));
  CHECK(pair_negativity(bell, QubitPair::BC) == 0.0);

  const auto mixed = QubitRegisterDensity(ComplexMatrix::Identity(8, 8) / 8.0);
  const auto r = report(mixed);
  CHECK(r.purity == doctest::Approx(0.125));
  CHECK(r.tripartite_negativity == 0.0);
}

TEST_CASE("negativities are invariant under local unitaries") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = Complex(g(rng), g(rng));
    ComplexMatrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    const ComplexMatrix u = Eigen::kroneckerProduct(
        random_unitary(rng, 2), Eigen::kroneckerProduct(random_unitary(rng, 2), random_unitary(rng, 2)).eval());
    ComplexMatrix rotated = u * rho * u.adjoint();
    rotated = (rotated + rotated.adjoint()).eval() / 2.0;
    const auto a = report(QubitRegisterDensity(rho));
    const auto b = report(QubitRegisterDensity(rotated));
    CHECK(std::abs(a.neg_A_BC - b.neg_A_BC) < 1e-12);
    CHECK(std::abs(a.neg_B_AC - b.neg_B_AC) < 1e-12);
    CHECK(std::abs(a.neg_C_AB - b.neg_C_AB) < 1e-12);
    CHECK(std::abs(a.tripartite_negativity - b.tripartite_negativity) < 1e-12);
    CHECK(std::abs(a.neg_AC - b.neg_AC) < 1e-12);
    CHECK(std::abs(a.purity - b.purity) < 1e-12);
  }
}

TEST_CASE("negativity threshold") {
  RealVector ev(4);
  ev << -0.25, -1e-13, 0.5, 0.75;
  CHECK(negativity_from_spectrum(ev) == doctest::Approx(0.5));
  CHECK(negativity_from_spectrum(ev, 0.0) == doctest::Approx(0.5 + 2e-13).epsilon(1e-15));
  CHECK(negativity_from_spectrum(ev, 0.3) == 0.0);

  const auto ghz = pure(ket({{0, 1.0}, {7, 1.0}}));
  CHECK(negativity(ghz.matrix(), Qubit::A) == doctest::Approx(1.0));
  CHECK(negativity(partial_trace(ghz, Qubit::C).matrix(), Qubit::A) == 0.0);
}

TEST_CASE("report carries the trace residual and names pairs") {
  const auto rho = QubitRegisterDensity(ComplexMatrix::Identity(8, 8) * (0.9 / 8.0), 0.1);
  CHECK(report(rho).trace_residual == doctest::Approx(0.1));
  CHECK(to_string(QubitPair::BC) == "BC");
  CHECK(parse_qubit_pair("AC") == QubitPair::AC);
  CHECK_THROWS(parse_qubit_pair("CA"));
}
