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

#ifndef TRIPART_RUNNER_HPP
#define TRIPART_RUNNER_HPP

// Parameter sweeps, figure presets and the validation report behind the
// command-line front end.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tripart/analytic.hpp"
#include "tripart/measures.hpp"
#include "tripart/states.hpp"

namespace tripart::runner {

/// Invalid user input. The message names the offending field.
class UsageError : public std::invalid_argument {
 public:
  UsageError(std::string_view field, std::string_view what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Family { vacuum, ghz, w, gsd, w_like, mixed, tstate };
std::string_view to_string(Family f);
Family parse_family(std::string_view s);

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// A scalar such as "0.25", "pi", "3pi/2" or "2*pi/60".
double parse_number(std::string_view text, std::string_view field);

/// A comma list of scalars, or an inclusive range "start:stop:step".
std::vector<double> parse_values(std::string_view text, std::string_view field);

/// Formats with 12 significant digits, '.' separator, and "-0" mapped to "0".
std::string format_double(double v);

struct SweepConfig {
  Family family = Family::gsd;
  std::vector<GsdForm> forms{GsdForm::psi_gsd};
  std::array<Complex, 5> coeffs{1.0, 1.0, 1.0, 1.0, 1.0};  ///< gsd only, normalized on use
  std::vector<std::string> preps{"ggg"};
  std::vector<double> p{0.5};
  std::vector<double> alpha_sq{1.0 / 3.0};
  std::vector<double> gamma1_sq{0.6};
  std::vector<double> omega_sq{0.0};
  std::vector<double> transmittance{1.0};
  std::vector<double> g_tau{1.5707963267948966};
  double tail_tolerance = 1e-8;
  double eps_neg = kNegativityThreshold;
  int jobs = 1;
  std::string out;  ///< empty for stdout
};

/// Throws UsageError on empty axes, out-of-range values or oversize grids.
void validate_config(const SweepConfig& cfg);

std::size_t grid_size(const SweepConfig& cfg);

/// Applies the keys of a structured config on top of `cfg`. Keys: state,
/// form, coeffs, prep, p, alpha_sq, gamma1sq, omegasq, T, gtau,
/// tail_tolerance, eps_neg, jobs, out. Axis values may be a number, a string
/// accepted by parse_values, or an array of either.
void apply_json(SweepConfig& cfg, const nlohmann::json& j);

/// One grid point. Fields outside the family's axes keep their defaults.
struct GridPoint {
  GsdForm form = GsdForm::psi_gsd;
  std::string prep = "ggg";
  double p = 0.0;
  double alpha_sq = 0.0;
  double gamma1_sq = 0.0;
  double omega_sq = 0.0;
  double transmittance = 1.0;
  double g_tau = 0.0;
};

/// Lexicographic order over form, prep, p, alpha_sq, gamma1sq, omegasq, T,
/// gtau; only the family's own axes are iterated.
std::vector<GridPoint> expand_grid(const SweepConfig& cfg);

struct ResultRow {
  GridPoint point;
  EntanglementReport report;
  std::optional<TStateParams> t_params;  ///< tstate family only
  std::optional<analytic::PhotonStats> photons;
};

/// Field state of a grid point, restricted to the band the atoms can see.
ThreeModeDensity make_field(const SweepConfig& cfg, const GridPoint& pt, int band = -1);

ResultRow evaluate(const SweepConfig& cfg, const GridPoint& pt);

/// Evaluates every grid point on `cfg.jobs` workers. Rows are in grid order.
std::vector<ResultRow> run_sweep(const SweepConfig& cfg);

std::vector<std::string> csv_header(const SweepConfig& cfg);
void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<ResultRow>& rows);

/// "key = value" lines for a single point.
void write_point(std::ostream& os, const SweepConfig& cfg, const ResultRow& row);

struct FigurePreset {
  int id;
  std::string description;
  SweepConfig config;
};

inline constexpr std::array<int, 11> kFigureIds{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

/// Throws UsageError for unknown ids.
FigurePreset figure_preset(int id);

struct ValidateOptions {
  double eps_neg = kNegativityThreshold;
  bool flip_appendix_sign = false;  ///< mutation: negate one closed-form prefactor
};

struct CheckResult {
  enum class Kind { gating, regression, expected_fail, info };
  std::string section;
  std::string name;
  Kind kind = Kind::gating;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;  ///< all gating and regression checks pass, all expected failures fail
};

ValidationReport run_validation(const ValidateOptions& options = {});
void write_validation(std::ostream& os, const ValidationReport& report);

}  // namespace tripart::runner

#endif  // TRIPART_RUNNER_HPP
