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

// tripart: point evaluations, sweeps, figure datasets and validation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tripart/runner.hpp"

namespace {

using namespace tripart;
using runner::SweepConfig;
using runner::UsageError;

// Raw flag values; only those given on the command line override the config.
struct StateFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  int jobs = 1;
  std::string out;
};

void add_state_flags(CLI::App* app, StateFlags& f) {
  app->add_option("--config", f.config_path, "JSON config file; flags override its keys");
  const std::pair<const char*, const char*> flags[] = {
      {"state", "vacuum | ghz | w | gsd | w_like | mixed | tstate"},
      {"form", "GSD form(s), comma separated: psi_gsd, phi_3s, varphi_3s"},
      {"coeffs", "five GSD amplitudes alpha,beta,delta,epsilon,omega (normalized on use)"},
      {"prep", "atomic preparation label(s), e.g. ggg or ggg,geg"},
      {"p", "GHZ weight of the GHZ/W' mixture"},
      {"alpha_sq", "|alpha|^2 of the W-like family"},
      {"gamma1sq", "|gamma_1|^2 of the |T> state"},
      {"omegasq", "Omega^2 = |gamma_2|^2 - |gamma_1|^2 of the |T> state"},
      {"T", "mirror transmittance"},
      {"gtau", "interaction time; value, list, or start:stop:step (pi allowed)"},
      {"tail_tolerance", "|T> truncation tolerance"},
      {"eps_neg", "threshold below which PT eigenvalues count as zero"},
  };
  for (const auto& [name, help] : flags)
    app->add_option_function<std::string>(
        std::string("--") + name, [&f, key = std::string(name)](const std::string& v) {
          f.values[key] = v;
        },
        help);
}

SweepConfig build_config(const StateFlags& f, const CLI::App& app, bool with_io) {
  SweepConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw UsageError("config", "cannot open '" + f.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config", std::string("invalid JSON: ") + e.what());
    }
    runner::apply_json(cfg, j);
  }
  nlohmann::json overrides = nlohmann::json::object();
  for (const auto& [key, v] : f.values) {
    if (key == "coeffs") {
      nlohmann::json arr = nlohmann::json::array();
      for (double x : runner::parse_values(v, "coeffs")) arr.push_back(x);
      overrides[key] = arr;
    } else if (key == "form" || key == "prep") {
      nlohmann::json arr = nlohmann::json::array();
      std::stringstream ss(v);
      for (std::string item; std::getline(ss, item, ',');) arr.push_back(item);
      overrides[key] = arr;
    } else {
      overrides[key] = v;
    }
  }
  runner::apply_json(cfg, overrides);
  if (with_io) {
    if (app.count("--jobs")) cfg.jobs = f.jobs;
    if (app.count("--out")) cfg.out = f.out;
  }
  runner::validate_config(cfg);
  return cfg;
}

void write_rows(const SweepConfig& cfg, const std::vector<runner::ResultRow>& rows,
                const std::string& path) {
  if (path.empty() || path == "-") {
    runner::write_csv(std::cout, cfg, rows);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("out", "cannot write '" + path + "'");
  runner::write_csv(os, cfg, rows);
  if (!os) throw UsageError("out", "write to '" + path + "' failed");
}

int run_point(const StateFlags& f, const CLI::App& app) {
  const SweepConfig cfg = build_config(f, app, false);
  const auto grid = runner::expand_grid(cfg);
  if (grid.size() != 1)
    throw UsageError("point", "every parameter must have a single value (grid has " +
                                  std::to_string(grid.size()) + " points)");
  runner::write_point(std::cout, cfg, runner::evaluate(cfg, grid.front()));
  return 0;
}

int run_sweep(const StateFlags& f, const CLI::App& app) {
  const SweepConfig cfg = build_config(f, app, true);
  write_rows(cfg, runner::run_sweep(cfg), cfg.out);
  return 0;
}

int run_figures(const std::string& which, const std::string& out, const std::string& out_dir,
                int jobs) {
  std::vector<int> ids;
  if (which == "all") {
    ids.assign(runner::kFigureIds.begin(), runner::kFigureIds.end());
    if (!out.empty()) throw UsageError("out", "use --out-dir with 'all'");
  } else {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(which, &used));
      if (used != which.size()) throw std::invalid_argument(which);
    } catch (const std::exception&) {
      throw UsageError("figure", "expected a figure id 2..12 or 'all', got '" + which + "'");
    }
  }
  if (jobs < 1) throw UsageError("jobs", "must be at least 1");
  for (int id : ids) {
    auto preset = runner::figure_preset(id);
    preset.config.jobs = jobs;
    std::cerr << "figure " << id << ": " << preset.description << '\n';
    std::string path = out;
    if (ids.size() > 1 || !out_dir.empty()) {
      std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
      std::filesystem::create_directories(dir);
      path = (dir / ("fig" + std::string(id < 10 ? "0" : "") + std::to_string(id) + ".csv")).string();
    }
    write_rows(preset.config, runner::run_sweep(preset.config), path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement transfer from three-mode fields to three cavity atoms"};
  app.require_subcommand(1);

  StateFlags point_flags;
  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  add_state_flags(point, point_flags);

  StateFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid and write CSV");
  add_state_flags(sweep, sweep_flags);
  sweep->add_option("--out", sweep_flags.out, "CSV output path (default stdout)");
  sweep->add_option("--jobs", sweep_flags.jobs, "worker threads");

  std::string figure_id, figure_out, figure_dir;
  int figure_jobs = 1;
  auto* figures = app.add_subcommand("figures", "write the dataset of a figure preset");
  figures->add_option("id", figure_id, "figure id 2..12 or 'all'")->required();
  figures->add_option("--out", figure_out, "CSV output path (default stdout)");
  figures->add_option("--out-dir", figure_dir, "directory for figNN.csv files");
  figures->add_option("--jobs", figure_jobs, "worker threads");

  runner::ValidateOptions vopt;
  auto* validate = app.add_subcommand("validate", "run every cross-check and report");
  validate->add_option("--eps-neg", vopt.eps_neg, "negativity threshold (mutation testing)");
  validate->add_flag("--mutate-appendix-sign", vopt.flip_appendix_sign,
                     "negate one closed-form prefactor (mutation testing)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*point) return run_point(point_flags, *point);
    if (*sweep) return run_sweep(sweep_flags, *sweep);
    if (*figures) return run_figures(figure_id, figure_out, figure_dir, figure_jobs);
    if (*validate) {
      const auto report = runner::run_validation(vopt);
      runner::write_validation(std::cout, report);
      return report.ok() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
