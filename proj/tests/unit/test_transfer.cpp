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

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <random>

#include "doctest.h"
#include "tripart/numeric.hpp"
#include "tripart/transfer.hpp"

using namespace tripart;

namespace {

constexpr int kFock = 3;  // photon numbers 0..2 per mode in the oracle

ThreeModeDensity random_field(std::mt19937_64& rng, int n_max, int terms = 2) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ThreeModeDensity::Entry> entries;
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) total += (w = u(rng) + 0.1);
  for (int t = 0; t < terms; ++t) {
    std::vector<KetAmplitude> kets;
    for (int i = 0; i <= n_max; ++i)
      for (int j = 0; j <= n_max; ++j)
        for (int k = 0; k <= n_max; ++k) kets.push_back({{i, j, k}, Complex(g(rng), g(rng))});
    const auto pure = pure_state_density(kets);
    for (const auto& e : pure.entries()) entries.push_back({e.key, weights[t] / total * e.value});
  }
  return ThreeModeDensity::from_entries(std::move(entries));
}

// exp(phi (f c^dagger - f^dagger c)) on one flying/cavity pair truncated at
// kFock - 1 photons each; index f * kFock + c.
ComplexMatrix splitter(double transmittance) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(kFock, kFock);
  for (int n = 1; n < kFock; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(kFock, kFock);
  const Eigen::MatrixXd f = Eigen::kroneckerProduct(a, id);
  const Eigen::MatrixXd c = Eigen::kroneckerProduct(id, a);
  const double phi = std::asin(std::sqrt(transmittance));
  const Eigen::MatrixXd gen = phi * (f * c.transpose() - f.transpose() * c);
  return gen.exp().cast<Complex>();
}

// The splitter acts mode by mode, so the flying-mode trace factorizes:
// out[i, i'] = sum over entries v * prod_m sum_f U(f i, r_m 0) conj(U(f i', c_m 0)).
ThreeModeDensity inject_oracle(const ThreeModeDensity& field, double transmittance) {
  const ComplexMatrix u = splitter(transmittance);
  auto kraus = [&](int r, int c, int i, int ip) {
    Complex v = 0.0;
    for (int f = 0; f < kFock; ++f) v += u(f * kFock + i, r * kFock) * std::conj(u(f * kFock + ip, c * kFock));
    return v;
  };
  std::vector<ThreeModeDensity::Entry> entries;
  for (const auto& e : field.entries()) {
    for (int i0 = 0; i0 < kFock; ++i0)
      for (int i1 = 0; i1 < kFock; ++i1)
        for (int i2 = 0; i2 < kFock; ++i2)
          for (int j0 = 0; j0 < kFock; ++j0)
            for (int j1 = 0; j1 < kFock; ++j1)
              for (int j2 = 0; j2 < kFock; ++j2) {
                const Complex v = e.value * kraus(e.key.row[0], e.key.col[0], i0, j0) *
                                  kraus(e.key.row[1], e.key.col[1], i1, j1) *
                                  kraus(e.key.row[2], e.key.col[2], i2, j2);
                if (std::abs(v) > 1e-17) entries.push_back({{{i0, i1, i2}, {j0, j1, j2}}, v});
              }
  }
  return ThreeModeDensity::from_entries(std::move(entries));
}

double max_diff(const ThreeModeDensity& a, const ThreeModeDensity& b) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e.value - b.coeff(e.key.row, e.key.col)));
  for (const auto& e : b.entries()) m = std::max(m, std::abs(e.value - a.coeff(e.key.row, e.key.col)));
  return m;
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Relabels atoms: qubit k of the result is qubit perm[k] of the input.
ComplexMatrix permute_qubits(const ComplexMatrix& m, const std::array<int, 3>& perm) {
  auto map = [&](int idx) {
    int out = 0;
    for (int k = 0; k < 3; ++k) out |= ((idx >> (2 - perm[k])) & 1) << (2 - k);
    return out;
  };
  ComplexMatrix r(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r(map(i), map(j)) = m(i, j);
  return r;
}

ThreeModeDensity permute_modes(const ThreeModeDensity& f, const std::array<int, 3>& perm) {
  std::vector<ThreeModeDensity::Entry> entries;
  for (const auto& e : f.entries()) {
    FockTriple r, c;
    for (int k = 0; k < 3; ++k) {
      r[k] = e.key.row[perm[k]];
      c[k] = e.key.col[perm[k]];
    }
    entries.push_back({{r, c}, e.value});
  }
  return ThreeModeDensity::from_entries(std::move(entries), f.trace_residual());
}

}  // namespace

TEST_CASE("inject agrees with an explicit beam-splitter unitary") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    const auto field = random_field(rng, 2);
    for (double t : {0.0, 0.2, 0.5, 0.85, 1.0}) CHECK(max_diff(inject(field, t), inject_oracle(field, t)) < 1e-13);
  }
}

TEST_CASE("inject limits and validation") {
  std::mt19937_64 rng(12);
  const auto field = random_field(rng, 2);
  CHECK(max_diff(inject(field, 1.0), field) == 0.0);
  const auto vac = inject(field, 0.0);
  CHECK(vac.size() == 1);
  CHECK(std::abs(vac.coeff({0, 0, 0}, {0, 0, 0}) - 1.0) < 1e-14);
  CHECK(std::abs(inject(field, 0.37).trace() - 1.0) < 1e-14);
  CHECK_THROWS(inject(field, -0.01));
  CHECK_THROWS(inject(field, 1.01));
  CHECK_THROWS(inject(field, NAN));
}

TEST_CASE("JC unitary matches the closed-form Rabi rotation") {
  const double gt = 0.83;
  const ComplexMatrix u = detail::jc_unitary(4, gt);
  CHECK(max_diff(u * u.adjoint(), ComplexMatrix::Identity(u.rows(), u.cols())) < 1e-13);
  const Complex i(0, 1);
  for (int n = 0; n < 4; ++n) {
    const double w = gt * std::sqrt(n + 1.0);
    // |e, n> -> cos |e, n> - i sin |g, n+1>
    CHECK(std::abs(u(2 * n + kExcited, 2 * n + kExcited) - std::cos(w)) < 1e-13);
    CHECK(std::abs(u(2 * (n + 1) + kGround, 2 * n + kExcited) + i * std::sin(w)) < 1e-13);
    // |g, n+1> -> cos |g, n+1> - i sin |e, n>
    CHECK(std::abs(u(2 * n + kExcited, 2 * (n + 1) + kGround) + i * std::sin(w)) < 1e-13);
  }
  CHECK(std::abs(u(kGround, kGround) - 1.0) < 1e-13);
  CHECK_THROWS(detail::jc_unitary(-1, gt));
}

TEST_CASE("closed-form table agrees with the generic unitary path") {
  std::mt19937_64 rng(13);
  for (int n_max : {1, 2}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto field = random_field(rng, n_max, 3);
      for (auto [t, gt] : {std::pair{1.0, 0.4}, {0.8, 1.9}, {0.3, 3.3}, {1.0, kPi / 2}}) {
        const auto cav = inject(field, t);
        const auto closed = jc_atomic_density_ground(cav, gt);
        const auto generic = jc_atomic_density_general(cav, AtomicPreparation::ground(), gt);
        CHECK(max_diff(closed.matrix(), generic.matrix()) < 1e-12);
      }
    }
  }
  CHECK(detail::ground_matrix_element_table().size() == 36);
}

TEST_CASE("transfer is covariant under joint permutation of modes and atoms") {
  std::mt19937_64 rng(14);
  const auto field = random_field(rng, 2);
  const std::array<int, 3> perm{2, 0, 1};
  for (const char* prep : {"ggg", "geg"}) {
    const auto p = AtomicPreparation::from_label(prep);
    const std::string permuted_label{prep[perm[0]], prep[perm[1]], prep[perm[2]]};
    const auto rho = transfer_to_atoms(field, {0.7, 1.2}, p);
    const auto rho_perm = transfer_to_atoms(permute_modes(field, perm), {0.7, 1.2},
                                            AtomicPreparation::from_label(permuted_label));
    CHECK(max_diff(permute_qubits(rho.matrix(), perm), rho_perm.matrix()) < 1e-12);
  }
}

TEST_CASE("qubit-like fields revive with period pi in the ground preparation") {
  std::mt19937_64 rng(15);
  const auto field = random_field(rng, 1);
  for (double gt : {0.3, 1.1, 2.0}) {
    const auto a = transfer_to_atoms(field, {1.0, gt});
    const auto b = transfer_to_atoms(field, {1.0, gt + 2 * kPi});
    CHECK(max_diff(a.matrix(), b.matrix()) < 1e-12);
  }
  ComplexMatrix ggg = ComplexMatrix::Zero(8, 8);
  ggg(7, 7) = 1.0;
  CHECK(max_diff(transfer_to_atoms(field, {1.0, kPi}).matrix(), ggg) < 1e-12);
  CHECK(max_diff(transfer_to_atoms(field, {1.0, 0.0}).matrix(), ggg) < 1e-15);
}

TEST_CASE("excited atoms in empty cavities emit at g tau = pi/2") {
  const auto rho = transfer_to_atoms(vacuum_density(), {1.0, kPi / 2}, AtomicPreparation::from_label("eee"));
  CHECK(std::abs(rho(7, 7) - 1.0) < 1e-12);
  const auto back = transfer_to_atoms(vacuum_density(), {1.0, kPi}, AtomicPreparation::from_label("eee"));
  CHECK(std::abs(back(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("band-limited pipeline equals the full generic path") {
  TStateOptions opt;
  opt.tail_tolerance = 1e-3;
  const auto field = gaussian_t_state(t_state_params(0.7, 3.0), opt);
  const double h = std::sqrt(0.5);
  const AtomicPreparation superposed({AtomState{h, h}, AtomState{1.0, 0.0}, AtomState{0.6, Complex(0, 0.8)}});
  CHECK(superposed.label() == "custom");
  for (const auto& prep : {AtomicPreparation::ground(), AtomicPreparation::from_label("ege"), superposed}) {
    const auto full = jc_atomic_density_general(inject(field, 0.9), prep, 2.1);
    const auto piped = transfer_to_atoms(field, {0.9, 2.1}, prep);
    CHECK(max_diff(full.matrix(), piped.matrix()) < 1e-12);
  }
  // Band 0 would lose coherences the atoms see.
  const auto wrong = jc_atomic_density_general(inject(band_limited(field, 0), 0.9), superposed, 2.1);
  CHECK(max_diff(wrong.matrix(), transfer_to_atoms(field, {0.9, 2.1}, superposed).matrix()) > 1e-3);
  CHECK_THROWS(band_limited(field, -1));
}

TEST_CASE("atomic preparations") {
  CHECK(AtomicPreparation::from_label("ggg").is_ground());
  CHECK(AtomicPreparation::ground().label() == "ggg");
  CHECK(AtomicPreparation::from_label("geg").label() == "geg");
  CHECK_FALSE(AtomicPreparation::from_label("geg").is_ground());
  CHECK_THROWS(AtomicPreparation::from_label("gg"));
  CHECK_THROWS(AtomicPreparation::from_label("gxg"));
  CHECK_THROWS(AtomicPreparation({AtomState{1.0, 1.0}, AtomState{}, AtomState{}}));
  CHECK_THROWS(transfer_to_atoms(vacuum_density(), {1.0, NAN}));
}

TEST_CASE("Gaussian fields keep the trace residual through the transfer") {
  const auto field = gaussian_t_state(t_state_params(1.5, 0.0), TStateOptions{1e-4});
  const auto rho = transfer_to_atoms(field, {0.6, 1.0});
  CHECK(rho.trace_residual() == field.trace_residual());
  CHECK(std::abs(rho.matrix().trace().real() - (1 - rho.trace_residual())) < 1e-10);
}
