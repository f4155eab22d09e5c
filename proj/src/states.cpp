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

#include "tripart/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "tripart/numeric.hpp"

namespace tripart {

namespace {

bool key_less(const ThreeModeDensity::Entry& a, const ThreeModeDensity::Entry& b) {
  return a.key < b.key;
}

bool within_band(const FockTriple& r, const FockTriple& c, int band) {
  if (band < 0) return true;
  for (int mode = 0; mode < 3; ++mode)
    if (std::abs(r[mode] - c[mode]) > band) return false;
  return true;
}

// Unnormalized |psi><psi| with amplitudes scaled by `scale`.
std::vector<ThreeModeDensity::Entry> outer_product(std::span<const KetAmplitude> kets,
                                                   double scale, int band = -1) {
  std::vector<ThreeModeDensity::Entry> out;
  out.reserve(band < 0 ? kets.size() * kets.size() : kets.size() * 32);
  for (const auto& r : kets)
    for (const auto& c : kets)
      if (within_band(r.ket, c.ket, band))
        out.push_back({{r.ket, c.ket}, scale * r.amplitude * std::conj(c.amplitude)});
  return out;
}

// Merges duplicate kets in first-seen order.
std::vector<KetAmplitude> merged_kets(std::span<const KetAmplitude> kets) {
  std::map<FockTriple, std::size_t> slot;
  std::vector<KetAmplitude> out;
  for (const auto& k : kets) {
    for (int n : k.ket)
      if (n < 0) throw std::invalid_argument("negative photon number in ket");
    auto [it, inserted] = slot.emplace(k.ket, out.size());
    if (inserted)
      out.push_back(k);
    else
      out[it->second].amplitude += k.amplitude;
  }
  return out;
}

}  // namespace

ThreeModeDensity ThreeModeDensity::from_entries(std::vector<Entry> entries,
                                                double trace_residual) {
  if (!(trace_residual >= 0.0) || trace_residual > 1.0)
    throw std::invalid_argument("trace residual must lie in [0, 1]");
  std::stable_sort(entries.begin(), entries.end(), key_less);

  ThreeModeDensity d;
  d.trace_residual_ = trace_residual;
  d.entries_.reserve(entries.size());
  for (auto& e : entries) {
    for (int n : e.key.row)
      if (n < 0) throw std::invalid_argument("negative photon number in density key");
    for (int n : e.key.col)
      if (n < 0) throw std::invalid_argument("negative photon number in density key");
    if (!d.entries_.empty() && d.entries_.back().key == e.key)
      d.entries_.back().value += e.value;
    else
      d.entries_.push_back(e);
  }
  std::erase_if(d.entries_, [](const Entry& e) { return e.value == Complex(0.0); });

  double trace = 0.0;
  for (const auto& e : d.entries_) {
    for (int n : e.key.row) d.n_max_ = std::max(d.n_max_, n);
    for (int n : e.key.col) d.n_max_ = std::max(d.n_max_, n);
    const Complex mirror = d.coeff(e.key.col, e.key.row);
    if (std::abs(e.value - std::conj(mirror)) > kHermitianTol)
      throw std::domain_error("density coefficients are not Hermitian");
    if (e.key.row == e.key.col) {
      if (std::abs(e.value.imag()) > kHermitianTol || e.value.real() < -kDiagonalTol)
        throw std::domain_error("density diagonal must be real and nonnegative");
      trace += e.value.real();
    }
  }
  if (std::abs(trace - (1.0 - trace_residual)) > kTraceTol)
    throw std::domain_error("density trace " + std::to_string(trace) +
                            " does not match 1 - trace_residual");
  return d;
}

Complex ThreeModeDensity::trace() const {
  Complex t = 0.0;
  for (const auto& e : entries_)
    if (e.key.row == e.key.col) t += e.value;
  return t;
}

Complex ThreeModeDensity::coeff(const FockTriple& row, const FockTriple& col) const {
  const Entry probe{{row, col}, {}};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, key_less);
  if (it != entries_.end() && it->key == probe.key) return it->value;
  return 0.0;
}

ThreeModeDensity pure_state_density(std::span<const KetAmplitude> kets) {
  const auto merged = merged_kets(kets);
  double norm_sq = 0.0;
  for (const auto& k : merged) norm_sq += std::norm(k.amplitude);
  if (norm_sq == 0.0) throw std::invalid_argument("ket has no nonzero amplitude");
  return ThreeModeDensity::from_entries(outer_product(merged, 1.0 / norm_sq));
}

ThreeModeDensity vacuum_density() {
  const KetAmplitude vac{{0, 0, 0}, 1.0};
  return pure_state_density({&vac, 1});
}

std::string_view to_string(GsdForm form) {
  switch (form) {
    case GsdForm::psi_gsd: return "psi_gsd";
    case GsdForm::phi_3s: return "phi_3s";
    case GsdForm::varphi_3s: return "varphi_3s";
  }
  return "?";
}

GsdForm parse_gsd_form(std::string_view s) {
  if (s == "psi_gsd") return GsdForm::psi_gsd;
  if (s == "phi_3s") return GsdForm::phi_3s;
  if (s == "varphi_3s") return GsdForm::varphi_3s;
  throw std::invalid_argument("unknown GSD form '" + std::string(s) + "'");
}

GsdCoefficients::GsdCoefficients(GsdForm form, const std::array<Complex, 5>& amplitudes)
    : form_(form), amps_(amplitudes) {
  double norm_sq = 0.0;
  for (const auto& a : amps_) norm_sq += std::norm(a);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq))
    throw std::invalid_argument("GSD coefficients must have a finite nonzero norm");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps_) a *= inv;
}

GsdCoefficients GsdCoefficients::uniform(GsdForm form) {
  return GsdCoefficients(form, {1.0, 1.0, 1.0, 1.0, 1.0});
}

std::array<FockTriple, 5> gsd_kets(GsdForm form) {
  switch (form) {
    case GsdForm::psi_gsd:
      return {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}};
    case GsdForm::phi_3s:
      return {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}};
    case GsdForm::varphi_3s:
      return {{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}};
  }
  throw std::invalid_argument("unknown GSD form");
}

ThreeModeDensity gsd_state(const GsdCoefficients& c) {
  const auto kets = gsd_kets(c.form());
  std::vector<KetAmplitude> expansion;
  for (std::size_t i = 0; i < kets.size(); ++i)
    if (c[i] != Complex(0.0)) expansion.push_back({kets[i], c[i]});
  return pure_state_density(expansion);
}

ThreeModeDensity mixed_ghz_w(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("mixing weight p must lie in [0, 1]");
  const FockTriple ghz[] = {{0, 0, 0}, {1, 1, 1}};
  const FockTriple w[] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  std::vector<ThreeModeDensity::Entry> entries;
  for (const auto& r : ghz)
    for (const auto& c : ghz) entries.push_back({{r, c}, p / 2.0});
  for (const auto& r : w)
    for (const auto& c : w) entries.push_back({{r, c}, (1.0 - p) / 3.0});
  return ThreeModeDensity::from_entries(std::move(entries));
}

TStateParams t_state_params(double gamma1_sq, double omega_sq) {
  if (!(gamma1_sq >= 0.0) || !std::isfinite(gamma1_sq))
    throw std::invalid_argument("gamma1_sq must be a finite nonnegative number");
  if (!(omega_sq >= 0.0) || !std::isfinite(omega_sq))
    throw std::invalid_argument("omega_sq must be a finite nonnegative number");
  TStateParams t;
  t.gamma1_sq = gamma1_sq;
  t.omega_sq = omega_sq;
  const double gamma2_sq = gamma1_sq + omega_sq;
  const double omega = std::sqrt(omega_sq);
  if (omega < kSmallOmega) {
    t.n3 = gamma1_sq;
    t.n2 = gamma1_sq * gamma2_sq / 4.0;
  } else {
    const double s = std::sin(omega);
    const double one_minus_cos = 2.0 * std::pow(std::sin(omega / 2.0), 2);
    t.n3 = gamma1_sq / omega_sq * s * s;
    t.n2 = gamma1_sq * gamma2_sq / (omega_sq * omega_sq) * one_minus_cos * one_minus_cos;
  }
  t.n1 = t.n2 + t.n3;
  return t;
}

double t_state_amplitude(const TStateParams& params, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative photon index");
  const double denom = 1.0 + params.n1;
  return std::pow(params.n2 / denom, 0.5 * p) * std::pow(params.n3 / denom, 0.5 * q) *
         std::sqrt(binomial(p + q, p) / denom);
}

int t_state_cutoff(const TStateParams& params, double tail_tolerance, int max_mode1_photons) {
  const double x = params.n1 / (1.0 + params.n1);
  double tail = x;  // x^{K+1} for K = 0
  for (int k = 0; k <= max_mode1_photons; ++k) {
    if (tail <= tail_tolerance) return k;
    tail *= x;
  }
  return -1;
}

std::vector<KetAmplitude> t_state_kets(const TStateParams& params, int cutoff) {
  std::vector<KetAmplitude> kets;
  for (int n = 0; n <= cutoff; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const double amp = t_state_amplitude(params, p, q);
      if (amp != 0.0) kets.push_back({{p + q, p, q}, amp});
    }
  return kets;
}

ThreeModeDensity gaussian_t_state(const TStateParams& params, const TStateOptions& options) {
  if (!(options.tail_tolerance > 0.0 && options.tail_tolerance <= 1e-2))
    throw std::invalid_argument("tail_tolerance must lie in (0, 1e-2]");
  if (!(params.n2 >= 0.0 && params.n3 >= 0.0))
    throw std::invalid_argument("mean photon numbers must be nonnegative");
  int cutoff = t_state_cutoff(params, options.tail_tolerance, options.max_mode1_photons);
  if (cutoff < 0) {
    if (options.cap_policy == CapPolicy::throw_on_cap)
      throw std::runtime_error(
          "Gaussian state needs more than " + std::to_string(options.max_mode1_photons) +
          " mode-1 photons to reach the tail tolerance (N1 = " + std::to_string(params.n1) + ")");
    cutoff = options.max_mode1_photons;
  }
  const double x = params.n1 / (1.0 + params.n1);
  double residual = std::pow(x, cutoff + 1);
  const auto kets = t_state_kets(params, cutoff);
  double scale = 1.0;
  if (options.renormalize) {
    scale = 1.0 / (1.0 - residual);
    residual = 0.0;
  }
  return ThreeModeDensity::from_entries(outer_product(kets, scale, options.band), residual);
}

}  // namespace tripart
