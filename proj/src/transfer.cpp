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

#include "tripart/transfer.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tripart/numeric.hpp"

namespace tripart {

namespace {

constexpr Complex kI{0.0, 1.0};

// Level of atom `mode` (0 = A) in 0-based basis index `idx`.
int level(int idx, int mode) { return (idx >> (2 - mode)) & 1; }

// Photon shift carried by an atomic level in the closed-form sums.
int shift(int lvl) { return lvl == kExcited ? 1 : 0; }

bool is_basis(const AtomState& a) {
  return (a.amp_g == Complex(1.0) && a.amp_e == Complex(0.0)) ||
         (a.amp_g == Complex(0.0) && a.amp_e == Complex(1.0));
}

}  // namespace

AtomicPreparation::AtomicPreparation(const std::array<AtomState, 3>& atoms) : atoms_(atoms) {
  for (const auto& a : atoms_) {
    const double n = std::norm(a.amp_g) + std::norm(a.amp_e);
    if (std::abs(n - 1.0) > kNormTol)
      throw std::invalid_argument("atomic preparation amplitudes must be normalized");
  }
}

AtomicPreparation AtomicPreparation::from_label(std::string_view label) {
  if (label.size() != 3)
    throw std::invalid_argument("atomic preparation label must have three letters, got '" +
                                std::string(label) + "'");
  std::array<AtomState, 3> atoms;
  for (std::size_t i = 0; i < 3; ++i) {
    if (label[i] == 'g')
      atoms[i] = {1.0, 0.0};
    else if (label[i] == 'e')
      atoms[i] = {0.0, 1.0};
    else
      throw std::invalid_argument("atomic preparation label '" + std::string(label) +
                                  "' may only contain 'g' and 'e'");
  }
  return AtomicPreparation(atoms);
}

bool AtomicPreparation::is_ground() const {
  for (const auto& a : atoms_)
    if (a.amp_g != Complex(1.0) || a.amp_e != Complex(0.0)) return false;
  return true;
}

std::string AtomicPreparation::label() const {
  std::string s;
  for (const auto& a : atoms_) {
    if (!is_basis(a)) return "custom";
    s += a.amp_g == Complex(1.0) ? 'g' : 'e';
  }
  return s;
}

ThreeModeDensity inject(const ThreeModeDensity& field, double transmittance) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0))
    throw std::invalid_argument("transmittance must lie in [0, 1]");
  if (transmittance == 1.0) return field;

  const int nmax = field.n_max();
  const double loss = 1.0 - transmittance;
  std::vector<double> amp_pow(6 * nmax + 1), loss_pow(3 * nmax + 1);
  for (std::size_t k = 0; k < amp_pow.size(); ++k)
    amp_pow[k] = std::pow(transmittance, 0.5 * static_cast<double>(k));
  for (std::size_t k = 0; k < loss_pow.size(); ++k)
    loss_pow[k] = std::pow(loss, static_cast<double>(k));
  const int stride = nmax + 1;
  std::vector<double> sqrt_binom(static_cast<std::size_t>(stride) * stride, 0.0);
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) sqrt_binom[n * stride + k] = std::sqrt(binomial(n, k));
  auto sb = [&](int n, int k) { return sqrt_binom[n * stride + k]; };

  std::vector<ThreeModeDensity::Entry> out;
  out.reserve(field.size());
  for (const auto& e : field.entries()) {
    const auto& r = e.key.row;
    const auto& c = e.key.col;
    const int total = r[0] + r[1] + r[2] + c[0] + c[1] + c[2];
    // Scatter a_{i+l,j+m,k+n,i'+l,j'+m,k'+n} onto c_{ijk,i'j'k'}.
    for (int l = 0; l <= std::min(r[0], c[0]); ++l)
      for (int m = 0; m <= std::min(r[1], c[1]); ++m)
        for (int n = 0; n <= std::min(r[2], c[2]); ++n) {
          const int lost = l + m + n;
          const double weight = amp_pow[total - 2 * lost] * loss_pow[lost] * sb(r[0], l) *
                                sb(c[0], l) * sb(r[1], m) * sb(c[1], m) * sb(r[2], n) *
                                sb(c[2], n);
          if (weight != 0.0)
            out.push_back({{FockTriple{r[0] - l, r[1] - m, r[2] - n},
                            FockTriple{c[0] - l, c[1] - m, c[2] - n}},
                           weight * e.value});
        }
  }
  return ThreeModeDensity::from_entries(std::move(out), field.trace_residual());
}

ThreeModeDensity band_limited(const ThreeModeDensity& field, int band) {
  if (band < 0) throw std::invalid_argument("band must be nonnegative");
  std::vector<ThreeModeDensity::Entry> kept;
  for (const auto& e : field.entries()) {
    bool inside = true;
    for (int mode = 0; mode < 3; ++mode)
      inside = inside && std::abs(e.key.row[mode] - e.key.col[mode]) <= band;
    if (inside) kept.push_back(e);
  }
  if (kept.size() == field.size()) return field;
  return ThreeModeDensity::from_entries(std::move(kept), field.trace_residual());
}

namespace detail {

std::span<const MatrixElementRule> ground_matrix_element_table() {
  // Transcribed prefactors of rho_{a,jk}, j <= k. rho_28 is printed with -i;
  // its two photon-exchange branches give (-i)^2 = -1, which the generic
  // unitary path confirms, so -1 is used here.
  static const MatrixElementRule table[] = {
      {1, 1, 1.0},  {2, 2, 1.0},  {3, 3, 1.0},  {4, 4, 1.0},
      {5, 5, 1.0},  {6, 6, 1.0},  {7, 7, 1.0},  {8, 8, 1.0},
      {1, 2, -kI},  {1, 3, -kI},  {1, 4, -1.0}, {1, 5, -kI},
      {1, 6, -1.0}, {1, 7, -1.0}, {1, 8, kI},   {2, 3, 1.0},
      {2, 4, -kI},  {2, 5, 1.0},  {2, 6, -kI},  {2, 7, -kI},
      {2, 8, -1.0}, {3, 4, -kI},  {3, 5, 1.0},  {3, 6, -kI},
      {3, 7, -kI},  {3, 8, -1.0}, {4, 5, kI},   {4, 6, 1.0},
      {4, 7, 1.0},  {4, 8, -kI},  {5, 6, -kI},  {5, 7, -kI},
      {5, 8, -1.0}, {6, 7, 1.0},  {6, 8, -kI},  {7, 8, -kI},
  };
  return table;
}

ComplexMatrix ground_atomic_matrix(const ThreeModeDensity& cavity, double g_tau,
                                   std::span<const MatrixElementRule> table) {
  const int nmax = cavity.n_max();
  std::vector<double> sin_n(nmax + 1), cos_n(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    sin_n[n] = std::sin(g_tau * std::sqrt(static_cast<double>(n)));
    cos_n[n] = std::cos(g_tau * std::sqrt(static_cast<double>(n)));
  }
  // |e> pairs with sin(g tau sqrt(n)), |g> with cos(g tau sqrt(n)).
  auto trig = [&](int lvl, int n) { return lvl == kExcited ? sin_n[n] : cos_n[n]; };

  ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
  for (const auto& e : cavity.entries()) {
    const auto& r = e.key.row;
    const auto& c = e.key.col;
    if (std::abs(r[0] - c[0]) > 1 || std::abs(r[1] - c[1]) > 1 || std::abs(r[2] - c[2]) > 1)
      continue;
    for (const auto& rule : table) {
      const int row = rule.row - 1;
      const int col = rule.col - 1;
      double factor = 1.0;
      bool match = true;
      for (int mode = 0; mode < 3 && match; ++mode) {
        const int lr = level(row, mode);
        const int lc = level(col, mode);
        const int i_row = r[mode] - shift(lr);
        const int i_col = c[mode] - shift(lc);
        if (i_row != i_col || i_row < 0) {
          match = false;
          break;
        }
        factor *= trig(lr, r[mode]) * trig(lc, c[mode]);
      }
      if (match) rho(row, col) += rule.prefactor * e.value * factor;
    }
  }
  for (int j = 0; j < 8; ++j)
    for (int k = j + 1; k < 8; ++k) rho(k, j) = std::conj(rho(j, k));
  for (int j = 0; j < 8; ++j) rho(j, j) = rho(j, j).real();
  return rho;
}

ComplexMatrix jc_unitary(int n_photons, double g_tau) {
  if (n_photons < 0) throw std::invalid_argument("photon cutoff must be nonnegative");
  const int dim = 2 * (n_photons + 1);
  auto index = [](int lvl, int n) { return 2 * n + lvl; };
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n <= n_photons; ++n) {
    const double g = std::sqrt(static_cast<double>(n));
    h(index(kExcited, n - 1), index(kGround, n)) = g;
    h(index(kGround, n), index(kExcited, n - 1)) = g;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("JC Hamiltonian diagonalization failed");
  const Eigen::MatrixXcd v = solver.eigenvectors().cast<Complex>();
  Eigen::VectorXcd phases(dim);
  for (int k = 0; k < dim; ++k) phases(k) = std::exp(-kI * solver.eigenvalues()(k) * g_tau);
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace detail

QubitRegisterDensity jc_atomic_density_ground(const ThreeModeDensity& cavity, double g_tau) {
  if (!std::isfinite(g_tau)) throw std::invalid_argument("g_tau must be finite");
  return QubitRegisterDensity(
      detail::ground_atomic_matrix(cavity, g_tau, detail::ground_matrix_element_table()),
      cavity.trace_residual());
}

QubitRegisterDensity jc_atomic_density_general(const ThreeModeDensity& cavity,
                                               const AtomicPreparation& prep,
                                               double g_tau) {
  if (!std::isfinite(g_tau)) throw std::invalid_argument("g_tau must be finite");
  const int nmax = cavity.n_max();
  const int stride = nmax + 1;
  // One extra photon so that |e, nmax> couples to |g, nmax+1>.
  const ComplexMatrix u = detail::jc_unitary(nmax + 1, g_tau);
  const int dim = static_cast<int>(u.rows());

  // kraus[mode][n * stride + n'](s, s') = Tr_cavity U (|psi><psi| x |n><n'|) U^dagger.
  using Block = Eigen::Matrix2cd;
  std::array<std::vector<Block>, 3> blocks;
  for (int mode = 0; mode < 3; ++mode) {
    std::vector<Eigen::VectorXcd> evolved(stride);
    for (int n = 0; n < stride; ++n) {
      Eigen::VectorXcd in = Eigen::VectorXcd::Zero(dim);
      in(2 * n + kGround) = prep[mode].amp_g;
      in(2 * n + kExcited) = prep[mode].amp_e;
      evolved[n] = u * in;
    }
    blocks[mode].assign(static_cast<std::size_t>(stride) * stride, Block::Zero());
    for (int n = 0; n < stride; ++n)
      for (int np = 0; np < stride; ++np) {
        Block b = Block::Zero();
        for (int m = 0; m < dim / 2; ++m)
          for (int s = 0; s < 2; ++s)
            for (int sp = 0; sp < 2; ++sp)
              b(s, sp) += evolved[n](2 * m + s) * std::conj(evolved[np](2 * m + sp));
        blocks[mode][n * stride + np] = b;
      }
  }

  ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
  for (const auto& e : cavity.entries()) {
    const auto& r = e.key.row;
    const auto& c = e.key.col;
    const Block& ka = blocks[0][r[0] * stride + c[0]];
    const Block& kb = blocks[1][r[1] * stride + c[1]];
    const Block& kc = blocks[2][r[2] * stride + c[2]];
    for (int a = 0; a < 8; ++a)
      for (int ap = 0; ap < 8; ++ap)
        rho(a, ap) += e.value * ka(level(a, 0), level(ap, 0)) * kb(level(a, 1), level(ap, 1)) *
                      kc(level(a, 2), level(ap, 2));
  }
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return QubitRegisterDensity(rho, cavity.trace_residual());
}

QubitRegisterDensity transfer_to_atoms(const ThreeModeDensity& field,
                                       const TransferSettings& settings,
                                       const AtomicPreparation& prep) {
  // Injection preserves row - col and the atoms only see offsets up to 1
  // (basis preparations) or 2 per mode, so the band is cut before the scatter.
  const int band = prep.label() == "custom" ? 2 : 1;
  const ThreeModeDensity cavity = inject(band_limited(field, band), settings.transmittance);
  if (prep.is_ground()) return jc_atomic_density_ground(cavity, settings.g_tau);
  return jc_atomic_density_general(cavity, prep, settings.g_tau);
}

}  // namespace tripart
