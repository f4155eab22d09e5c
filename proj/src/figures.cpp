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

#include <string>

#include "tripart/numeric.hpp"
#include "tripart/runner.hpp"

namespace tripart::runner {

namespace {

// Line plots: g tau in [0, 3 pi] at pi/60. Surfaces: 51 parameter values by
// 61 interaction times.
constexpr const char* kLineGtau = "0:3pi:pi/60";
constexpr const char* kSurfaceGtau = "0:3pi:pi/20";
const std::vector<std::string> kPreps{"ggg", "geg", "ege", "eee"};

SweepConfig base(Family family) {
  SweepConfig c;
  c.family = family;
  c.g_tau = parse_values(kLineGtau, "gtau");
  return c;
}

}  // namespace

FigurePreset figure_preset(int id) {
  FigurePreset f{id, {}, {}};
  switch (id) {
    case 2:
      f.description = "psi_gsd, all amplitudes 1/sqrt(5), T = 1; gtau in [0, 3pi] step pi/60";
      f.config = base(Family::gsd);
      break;
    case 3:
      f.description =
          "W-like psi_gsd (beta = omega = 0, delta^2 = epsilon^2 = (1 - alpha^2)/2), T = 1; "
          "alpha_sq in [0, 1] step 0.02 by gtau in [0, 3pi] step pi/20";
      f.config = base(Family::w_like);
      f.config.alpha_sq = parse_values("0:1:0.02", "alpha_sq");
      f.config.g_tau = parse_values(kSurfaceGtau, "gtau");
      break;
    case 4:
      f.description =
          "GHZ field through lossy mirrors; T in [0, 1] step 0.02 by gtau in [0, 2pi] step pi/30";
      f.config = base(Family::ghz);
      f.config.transmittance = parse_values("0:1:0.02", "T");
      f.config.g_tau = parse_values("0:2pi:pi/30", "gtau");
      break;
    case 5:
      f.description =
          "psi_gsd, varphi_3s and phi_3s, all amplitudes 1/sqrt(5), T = 1; gtau in [0, 3pi] step "
          "pi/60";
      f.config = base(Family::gsd);
      f.config.forms = {GsdForm::psi_gsd, GsdForm::varphi_3s, GsdForm::phi_3s};
      break;
    case 6:
      f.description =
          "GHZ/W' mixture, T = 1; p in [0, 1] step 0.02 by gtau in [0, 3pi] step pi/20";
      f.config = base(Family::mixed);
      f.config.p = parse_values("0:1:0.02", "p");
      f.config.g_tau = parse_values(kSurfaceGtau, "gtau");
      break;
    case 7:
      f.description =
          "Gaussian |T> state, equal couplings (omega^2 = 0), T = 1; gamma1^2 in [0, 2] step "
          "0.04 (assumed extent) by gtau in [0, 3pi] step pi/20";
      f.config = base(Family::tstate);
      f.config.gamma1_sq = parse_values("0:2:0.04", "gamma1sq");
      f.config.omega_sq = {0.0};
      f.config.g_tau = parse_values(kSurfaceGtau, "gtau");
      break;
    case 8:
      f.description =
          "Gaussian |T> state, gamma1^2 = 0.6, T = 1; omega^2 in [0, 20] step 0.4 (assumed "
          "extent) by gtau in [0, 3pi] step pi/20";
      f.config = base(Family::tstate);
      f.config.gamma1_sq = {0.6};
      f.config.omega_sq = parse_values("0:20:0.4", "omegasq");
      f.config.g_tau = parse_values(kSurfaceGtau, "gtau");
      break;
    case 9:
    case 10:
      f.description =
          "Gaussian |T> state at gtau = pi/2, T = 1; gamma1^2 in [0, 2] step 0.04 by omega^2 in "
          "[0, 20] step 1/3 (assumed extents)";
      f.config = base(Family::tstate);
      f.config.gamma1_sq = parse_values("0:2:0.04", "gamma1sq");
      f.config.omega_sq = parse_values("0:20:1/3", "omegasq");
      f.config.g_tau = {kPi / 2.0};
      break;
    case 11:
      f.description =
          "psi_gsd, all amplitudes 1/sqrt(5), T = 1, preparations ggg, geg, ege, eee; gtau in "
          "[0, 3pi] step pi/60";
      f.config = base(Family::gsd);
      f.config.preps = kPreps;
      break;
    case 12:
      f.description =
          "Gaussian |T> state, gamma1^2 = 0.6, omega^2 = 0, T = 1, preparations ggg, geg, ege, "
          "eee; gtau in [0, 3pi] step pi/60";
      f.config = base(Family::tstate);
      f.config.gamma1_sq = {0.6};
      f.config.omega_sq = {0.0};
      f.config.preps = kPreps;
      break;
    default:
      throw UsageError("figure", "unknown figure id " + std::to_string(id) +
                                     " (expected one of 2..12)");
  }
  return f;
}

}  // namespace tripart::runner
