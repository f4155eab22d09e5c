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

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <random>

#include "doctest.h"
#include "tripart/qmath.hpp"

using namespace tripart;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return (m + m.adjoint()) / 2.0;
}

ComplexMatrix random_density(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = m * m.adjoint();
  return rho / rho.trace().real();
}

Eigen::VectorXd eigen_oracle(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

// Reference partial transpose built from explicit index arithmetic on bits.
ComplexMatrix naive_partial_transpose(const ComplexMatrix& m, int n_qubits, int which) {
  const int pos = n_qubits - 1 - which;
  ComplexMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const int rb = (r >> pos) & 1, cb = (c >> pos) & 1;
      const int r2 = (r & ~(1 << pos)) | (cb << pos);
      const int c2 = (c & ~(1 << pos)) | (rb << pos);
      out(r2, c2) = m(r, c);
    }
  return out;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues agree with Eigen's self-adjoint solver") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 3, 4, 5, 8, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix m = random_hermitian(n, rng);
      const Eigen::VectorXd mine = hermitian_eigenvalues(m);
      const Eigen::VectorXd ref = eigen_oracle(m);
      CHECK((mine - ref).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, m.norm()));
    }
  }
}

TEST_CASE("Jacobi eigenvalues on degenerate and diagonal spectra") {
  std::mt19937_64 rng(2);
  // U diag(1, 1, 1, -2, -2, 0, 0, 0) U^dagger with a random unitary U.
  Eigen::HouseholderQR<ComplexMatrix> qr(random_hermitian(8, rng) +
                                         ComplexMatrix::Identity(8, 8) * Complex(0, 1));
  const ComplexMatrix u = qr.householderQ();
  Eigen::VectorXd d(8);
  d << 1, 1, 1, -2, -2, 0, 0, 0;
  const ComplexMatrix m = u * d.cast<Complex>().asDiagonal() * u.adjoint();
  const Eigen::VectorXd ev = hermitian_eigenvalues(m, 1e-9);
  Eigen::VectorXd sorted = d;
  std::sort(sorted.data(), sorted.data() + 8);
  CHECK((ev - sorted).cwiseAbs().maxCoeff() < 1e-12);

  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag(0, 0) = 3.0;
  diag(1, 1) = -1.0;
  const Eigen::VectorXd dv = hermitian_eigenvalues(diag);
  CHECK(dv(0) == -1.0);
  CHECK(dv(1) == 0.0);
  CHECK(dv(2) == 3.0);
}

TEST_CASE("Jacobi eigenvalues in single precision") {
  std::mt19937_64 rng(3);
  const ComplexMatrix m = random_hermitian(6, rng);
  const Eigen::MatrixXcf mf = m.cast<std::complex<float>>();
  const Eigen::VectorXf ev = hermitian_eigenvalues(mf, 1e-5f);
  CHECK((ev.cast<double>() - eigen_oracle(m)).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("non-Hermitian and non-square input is rejected") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), std::domain_error);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("partial transpose matches explicit bit arithmetic and is an involution") {
  std::mt19937_64 rng(4);
  for (int n_qubits : {1, 2, 3}) {
    const ComplexMatrix rho = random_density(1 << n_qubits, rng);
    for (int q = 0; q < n_qubits; ++q) {
      const auto which = static_cast<Qubit>(q);
      const ComplexMatrix pt = partial_transpose(rho, which);
      CHECK((pt - naive_partial_transpose(rho, n_qubits, q)).cwiseAbs().maxCoeff() == 0.0);
      CHECK((partial_transpose(pt, which) - rho).cwiseAbs().maxCoeff() == 0.0);
      CHECK(std::abs(pt.trace() - rho.trace()) < 1e-15);
    }
  }
  // Transposing every qubit is the full transpose.
  const ComplexMatrix rho = random_density(8, rng);
  const ComplexMatrix all =
      partial_transpose(partial_transpose(partial_transpose(rho, Qubit::A), Qubit::B), Qubit::C);
  CHECK((all - rho.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial trace of a product state returns the factors") {
  std::mt19937_64 rng(5);
  const ComplexMatrix a = random_density(2, rng);
  const ComplexMatrix b = random_density(2, rng);
  const ComplexMatrix c = random_density(2, rng);
  const ComplexMatrix abc = Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval()).eval();
  CHECK((partial_trace(abc, Qubit::A) - Eigen::kroneckerProduct(b, c).eval()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((partial_trace(abc, Qubit::B) - Eigen::kroneckerProduct(a, c).eval()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((partial_trace(abc, Qubit::C) - Eigen::kroneckerProduct(a, b).eval()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((partial_trace(partial_trace(abc, Qubit::C), Qubit::B) - a).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("purity bounds") {
  std::mt19937_64 rng(6);
  const ComplexMatrix rho = random_density(8, rng);
  const double mu = purity(rho);
  CHECK(mu <= 1.0 + 1e-15);
  CHECK(mu >= 1.0 / 8 - 1e-15);
  CHECK(purity(ComplexMatrix(ComplexMatrix::Identity(8, 8) / 8.0)) == doctest::Approx(0.125));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(0) = psi(7) = std::sqrt(0.5);
  CHECK(purity(projector(psi)) == doctest::Approx(1.0));
  CHECK(pure_fidelity(projector(psi), psi) == doctest::Approx(1.0));
}

TEST_CASE("QubitRegisterDensity validation") {
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  m(7, 7) = 1.0;
  const QubitRegisterDensity ok(m);
  CHECK(ok.n_qubits() == 3);
  CHECK(ok.dim() == 8);

  CHECK_THROWS_AS(QubitRegisterDensity(ComplexMatrix::Zero(6, 6)), std::invalid_argument);
  CHECK_THROWS_AS(QubitRegisterDensity(ComplexMatrix(m * 2.0)), std::domain_error);
  ComplexMatrix lossy = m * 0.9;
  CHECK_NOTHROW(QubitRegisterDensity(lossy, 0.1));
  CHECK_THROWS(QubitRegisterDensity(lossy, -0.1));
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(QubitRegisterDensity{neg}, std::domain_error);
  ComplexMatrix skew = m;
  skew(0, 7) = 0.1;
  CHECK_THROWS_AS(QubitRegisterDensity{skew}, std::domain_error);
}

TEST_CASE("qubit labels and basis indices") {
  CHECK(parse_qubit("B") == Qubit::B);
  CHECK(to_string(Qubit::C) == "C");
  CHECK_THROWS(parse_qubit("D"));
  CHECK(basis_index({kExcited, kExcited, kExcited}) == 0);
  CHECK(basis_index({kGround, kGround, kGround}) == 7);
  CHECK(basis_index({kGround, kExcited, kGround}) == 5);
  CHECK_THROWS(partial_transpose(ComplexMatrix(ComplexMatrix::Identity(4, 4)), Qubit::C));
}
