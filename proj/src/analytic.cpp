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

#include "tripart/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "tripart/measures.hpp"
#include "tripart/numeric.hpp"
#include "tripart/transfer.hpp"

namespace tripart::analytic {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kZeroAmplitude = 1e-12;

void require_psi_gsd(const GsdCoefficients& c) {
  if (c.form() != GsdForm::psi_gsd)
    throw std::invalid_argument("closed forms are derived for the psi_gsd form only");
}

void require_zero(const GsdCoefficients& c, std::initializer_list<std::size_t> idx,
                  std::string_view subtype) {
  static constexpr const char* kNames[] = {"alpha", "beta", "delta", "epsilon", "omega"};
  for (std::size_t i : idx)
    if (std::abs(c[i]) > kZeroAmplitude)
      throw std::invalid_argument("subtype " + std::string(subtype) + " requires " +
                                  kNames[i] + " = 0");
}

}  // namespace

std::string_view to_string(Variant v) {
  return v == Variant::as_printed ? "as_printed" : "corrected";
}

ComplexVector peak_atomic_state(const GsdCoefficients& c, KParity parity) {
  require_psi_gsd(c);
  const double sign = parity == KParity::even ? 1.0 : -1.0;
  ComplexVector psi = ComplexVector::Zero(8);
  psi(7) = -sign * kI * c.alpha();   // |ggg>
  psi(3) = -c.beta();                // |egg>
  psi(1) = sign * kI * c.delta();    // |eeg>
  psi(2) = sign * kI * c.epsilon();  // |ege>
  psi(0) = c.omega();                // |eee>
  return psi;
}

Subtype parse_subtype(std::string_view s) {
  if (s == "2-2") return Subtype::star_2_2;
  if (s == "2-1") return Subtype::chain_2_1;
  if (s == "2-0") return Subtype::ghz_2_0;
  if (s == "2-3") return Subtype::w_2_3;
  throw std::invalid_argument("unknown subtype '" + std::string(s) + "'");
}

std::string_view to_string(Subtype s) {
  switch (s) {
    case Subtype::star_2_2: return "2-2";
    case Subtype::chain_2_1: return "2-1";
    case Subtype::ghz_2_0: return "2-0";
    case Subtype::w_2_3: return "2-3";
  }
  return "?";
}

double subtype_negativity(Subtype subtype, const GsdCoefficients& c) {
  require_psi_gsd(c);
  const double a = std::abs(c.alpha());
  const double b = std::abs(c.beta());
  const double d = std::abs(c.delta());
  const double e = std::abs(c.epsilon());
  const double w = std::abs(c.omega());
  switch (subtype) {
    case Subtype::star_2_2:
      require_zero(c, {2}, "2-2");
      return 2.0 * std::cbrt(a * w * std::sqrt(a * a + b * b) * std::sqrt(e * e + w * w) *
                             std::sqrt(b * b * w * w + a * a * (e * e + w * w)));
    case Subtype::chain_2_1:
      require_zero(c, {2, 3}, "2-1");
      return 2.0 * w * std::cbrt(a * (1.0 - w * w));
    case Subtype::ghz_2_0:
      require_zero(c, {1, 2, 3}, "2-0");
      return 2.0 * a * w;
    case Subtype::w_2_3:
      require_zero(c, {1, 4}, "2-3");
      return 2.0 * std::cbrt(a * d * e * std::sqrt(1.0 - a * a) * std::sqrt(1.0 - d * d) *
                             std::sqrt(1.0 - e * e));
  }
  throw std::invalid_argument("unknown subtype");
}

double mu_2_3(double g_tau, double alpha_sq, Variant v) {
  if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) throw std::invalid_argument("alpha_sq must lie in [0, 1]");
  const double lead = v == Variant::corrected ? 4.0 * alpha_sq : alpha_sq;
  const double inner = lead + (1.0 - alpha_sq) * (3.0 + std::cos(4.0 * g_tau));
  return inner * inner / 16.0;
}

GhzLossResult ghz_loss_formulas(double g_tau, double transmittance, Complex alpha,
                                Complex omega, Variant v) {
  const double a2 = std::norm(alpha);
  const double w2 = std::norm(omega);
  if (std::abs(a2 + w2 - 1.0) > 1e-12)
    throw std::invalid_argument("alpha and omega must satisfy |alpha|^2 + |omega|^2 = 1");
  if (!(transmittance >= 0.0 && transmittance <= 1.0))
    throw std::invalid_argument("transmittance must lie in [0, 1]");
  const double s2 = std::pow(std::sin(g_tau), 2);
  const double y = transmittance * s2;
  const double w = std::sqrt(w2);

  GhzLossResult r;
  r.elements = ComplexMatrix::Zero(8, 8);
  const double two_excited =
      v == Variant::corrected ? w2 * y * y * (1.0 - y) : w2 * y * y;
  const double ground = v == Variant::corrected ? a2 + w2 * std::pow(1.0 - y, 3)
                                                : a2 + w2 * std::pow(1.0 - y, 2);
  r.elements(0, 0) = w2 * y * y * y;
  for (int i : {1, 2, 4}) r.elements(i, i) = two_excited;
  for (int i : {3, 5, 6}) r.elements(i, i) = w2 * y * (1.0 - y) * (1.0 - y);
  r.elements(7, 7) = ground;
  // Y^{3/2} drops the sign of sin(g tau); the coherence follows sin^3.
  const double coherence = v == Variant::corrected
                               ? std::pow(transmittance, 1.5) * std::pow(std::sin(g_tau), 3)
                               : std::pow(y, 1.5);
  r.elements(0, 7) = kI * omega * std::conj(alpha) * coherence;
  r.elements(7, 0) = std::conj(r.elements(0, 7));

  r.purity = a2 * a2 + w2 * w2 * std::pow(1.0 - 2.0 * y * (1.0 - y), 3) +
             2.0 * w2 * a2 * (1.0 - 3.0 * y * (1.0 - y));

  const double leading = v == Variant::corrected ? w * (1.0 - y) : w * (1.0 - transmittance);
  const double radicand =
      4.0 * a2 * y + w2 * (1.0 - 6.0 * y + y * y * (13.0 - 12.0 * y + 4.0 * y * y));
  r.lambda_minus = 0.5 * w * y * (leading - std::sqrt(std::max(radicand, 0.0)));
  r.negativity = -2.0 * std::min(r.lambda_minus, 0.0);
  return r;
}

MixedResult mixed_formulas(double g_tau, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  const double s = std::sin(g_tau);
  const double c = std::cos(g_tau);
  const double s2 = s * s, c2 = c * c;
  const double q = 1.0 - p;

  MixedResult r;
  r.elements = ComplexMatrix::Zero(8, 8);
  r.elements(0, 0) = p / 2.0 * std::pow(s, 6);
  for (int i : {1, 2, 4}) r.elements(i, i) = p / 2.0 * s2 * s2 * c2;
  for (int i : {3, 5, 6}) r.elements(i, i) = s2 * (q / 3.0 + p / 2.0 * c2 * c2);
  r.elements(7, 7) = p / 2.0 * (1.0 + std::pow(c, 6)) + q * c2;
  r.elements(0, 7) = kI * p / 2.0 * std::pow(s, 3);
  r.elements(7, 0) = std::conj(r.elements(0, 7));
  for (auto [i, j] : {std::pair{3, 5}, {3, 6}, {5, 6}}) {
    r.elements(i, j) = q / 3.0 * s2;
    r.elements(j, i) = r.elements(i, j);
  }

  const double c4 = c2 * c2, c6 = c4 * c2, s4 = s2 * s2, s6 = s4 * s2;
  const double first = p + 2.0 * q * c2 + p * c6;
  r.purity_b1 = 0.25 * (first * first + s4 * (4.0 * q + 3.0 * p * c4) +
                        p * p * s6 * (2.0 + 3.0 * c4 * s2 + s6));

  const double u = 2.0 * q + 3.0 * p * c2;
  r.lambda1 = s2 / 12.0 *
              (u - std::sqrt(std::max(
                       0.0, u * u + 12.0 * p * s2 * (3.0 * p * (1.0 - p * c6) - 2.0 * q * c2))));
  // Read as p cos^2(g tau) (cos^4(g tau) + sin^4(g tau)).
  const double v = p + 2.0 * q * c2 + p * c2 * (c4 + s4);
  r.lambda2 = (3.0 * v - std::sqrt(std::max(
                             0.0, 9.0 * v * v + 4.0 * s4 *
                                                    (8.0 * q * q - 9.0 * p * p * c2 * (1.0 + c6) -
                                                     18.0 * p * q * c4)))) /
              12.0;
  r.negativity_b2 = -2.0 * (std::min(r.lambda1, 0.0) + std::min(r.lambda2, 0.0));
  return r;
}

double mixed_peak_purity(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  return 2.0 * p * p - 2.0 * p + 1.0;
}

double mixed_peak_negativity(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  return (2.0 * std::sqrt(10.0 * p * p - 2.0 * p + 1.0) +
          std::sqrt(41.0 * p * p - 64.0 * p + 32.0) - p - 2.0) /
         6.0;
}

PhotonStats t_photon_stats(const TStateParams& params) {
  const double z = 1.0 + params.n2 + params.n3;
  PhotonStats s;
  s.b000_sq = 1.0 / z;
  s.b110_sq = params.n2 / (z * z);
  s.b101_sq = params.n3 / (z * z);
  s.sum = s.b000_sq + s.b110_sq + s.b101_sq;
  return s;
}

FormulaCheck make_check(std::string formula_id, Variant variant, std::string inputs,
                        double analytic, double pipeline, double tolerance) {
  FormulaCheck f;
  f.formula_id = std::move(formula_id);
  f.variant = variant;
  f.inputs = std::move(inputs);
  f.analytic = analytic;
  f.pipeline = pipeline;
  f.abs_difference = std::abs(analytic - pipeline);
  f.tolerance = tolerance;
  f.pass = f.abs_difference <= tolerance;
  return f;
}

std::vector<FormulaCheck> errata_checks() {
  constexpr double kTol = 1e-9;
  std::vector<FormulaCheck> out;
  const double sqrt_half = std::sqrt(0.5);

  {
    // Separable |000> input: the atoms stay pure.
    const double g_tau = 0.7;
    const auto rho = transfer_to_atoms(
        gsd_state(GsdCoefficients(GsdForm::psi_gsd, {1.0, 0.0, 0.0, 0.0, 0.0})), {1.0, g_tau});
    out.push_back(make_check("w_like_purity", Variant::as_printed, "alpha_sq=1, gtau=0.7",
                             mu_2_3(g_tau, 1.0, Variant::as_printed), purity(rho), kTol));
  }
  {
    const double g_tau = kPi / 2.0, t = 0.5;
    const auto printed = ghz_loss_formulas(g_tau, t, sqrt_half, sqrt_half, Variant::as_printed);
    const auto rho = transfer_to_atoms(
        gsd_state(GsdCoefficients(GsdForm::psi_gsd, {1.0, 0.0, 0.0, 0.0, 1.0})), {t, g_tau});
    out.push_back(make_check("ghz_loss_elements_trace", Variant::as_printed,
                             "GHZ, T=0.5, gtau=pi/2", printed.elements.trace().real(),
                             rho.matrix().trace().real(), kTol));
  }
  {
    const double g_tau = kPi / 6.0, t = 1.0;  // Y = 1/4
    const auto printed = ghz_loss_formulas(g_tau, t, 0.0, 1.0, Variant::as_printed);
    const auto rho = transfer_to_atoms(
        gsd_state(GsdCoefficients(GsdForm::psi_gsd, {0.0, 0.0, 0.0, 0.0, 1.0})), {t, g_tau});
    out.push_back(make_check("ghz_loss_eigenvalue", Variant::as_printed,
                             "alpha=0, omega=1, T=1, gtau=pi/6 (Y=1/4)", printed.negativity,
                             bipartition_negativity(rho, Qubit::A), kTol));
  }
  {
    const double g_tau = kPi / 2.0, p = 0.5;
    const auto rho = transfer_to_atoms(mixed_ghz_w(p), {1.0, g_tau});
    out.push_back(make_check("mixed_purity", Variant::as_printed, "p=0.5, gtau=pi/2",
                             mixed_formulas(g_tau, p).purity_b1, purity(rho), kTol));
  }
  return out;
}

}  // namespace tripart::analytic
