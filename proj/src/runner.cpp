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

#include "tripart/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "tripart/numeric.hpp"
#include "tripart/transfer.hpp"

namespace tripart::runner {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// Reads a plain decimal literal from the front of `s`; returns false if none.
bool take_literal(std::string_view& s, double& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc()) return false;
  s.remove_prefix(static_cast<std::size_t>(res.ptr - s.data()));
  return true;
}

void require(bool ok, std::string_view field, std::string_view what) {
  if (!ok) throw UsageError(field, what);
}

void check_axis(const std::vector<double>& v, std::string_view field, double lo, double hi) {
  require(!v.empty(), field, "needs at least one value");
  for (double x : v) {
    require(std::isfinite(x), field, "values must be finite");
    require(x >= lo && x <= hi, field,
            "value " + format_double(x) + " outside [" + format_double(lo) + ", " +
                format_double(hi) + "]");
  }
}

bool uses_p(Family f) { return f == Family::mixed; }
bool uses_alpha(Family f) { return f == Family::w_like; }
bool uses_gamma(Family f) { return f == Family::tstate; }
bool uses_form(Family f) { return f == Family::gsd; }

template <typename T>
const std::vector<T>& axis_or(const std::vector<T>& axis, bool used,
                              const std::vector<T>& fallback) {
  return used ? axis : fallback;
}

// Field states for one worker's contiguous slice are rebuilt only when the
// state parameters change.
struct FieldCache {
  std::optional<GridPoint> state_key;
  ThreeModeDensity field = vacuum_density();
  std::optional<double> cavity_t;
  ThreeModeDensity cavity = vacuum_density();
};

bool same_state(const GridPoint& a, const GridPoint& b) {
  return a.form == b.form && a.p == b.p && a.alpha_sq == b.alpha_sq &&
         a.gamma1_sq == b.gamma1_sq && a.omega_sq == b.omega_sq;
}

// Basis-product preparations see photon offsets of at most one per mode.
constexpr int kBasisBand = 1;

ResultRow evaluate_cached(const SweepConfig& cfg, const GridPoint& pt, FieldCache& cache) {
  if (!cache.state_key || !same_state(*cache.state_key, pt)) {
    cache.field = make_field(cfg, pt, kBasisBand);
    cache.state_key = pt;
    cache.cavity_t.reset();
  }
  if (!cache.cavity_t || *cache.cavity_t != pt.transmittance) {
    cache.cavity = inject(cache.field, pt.transmittance);
    cache.cavity_t = pt.transmittance;
  }
  const AtomicPreparation prep = AtomicPreparation::from_label(pt.prep);
  const QubitRegisterDensity rho =
      prep.is_ground() ? jc_atomic_density_ground(cache.cavity, pt.g_tau)
                       : jc_atomic_density_general(cache.cavity, prep, pt.g_tau);
  ResultRow row;
  row.point = pt;
  row.report = report(rho, rho.trace_residual(), cfg.eps_neg);
  if (cfg.family == Family::tstate) {
    row.t_params = t_state_params(pt.gamma1_sq, pt.omega_sq);
    row.photons = analytic::t_photon_stats(*row.t_params);
  }
  return row;
}

}  // namespace

UsageError::UsageError(std::string_view field, std::string_view what)
    : std::invalid_argument(std::string(field) + ": " + std::string(what)), field_(field) {}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::vacuum: return "vacuum";
    case Family::ghz: return "ghz";
    case Family::w: return "w";
    case Family::gsd: return "gsd";
    case Family::w_like: return "w_like";
    case Family::mixed: return "mixed";
    case Family::tstate: return "tstate";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::vacuum, Family::ghz, Family::w, Family::gsd, Family::w_like,
                   Family::mixed, Family::tstate})
    if (s == to_string(f)) return f;
  throw UsageError("state", "unknown state family '" + std::string(s) +
                                "' (expected vacuum, ghz, w, gsd, w_like, mixed or tstate)");
}

double parse_number(std::string_view text, std::string_view field) {
  std::string_view s = trim(text);
  const std::string original(s);
  auto fail = [&] { throw UsageError(field, "cannot parse '" + original + "' as a number"); };
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double value = 1.0;
  const bool has_literal = take_literal(s, value);
  if (has_literal && !s.empty() && s.front() == '*') s.remove_prefix(1);
  bool has_pi = false;
  if (s.starts_with("pi")) {
    has_pi = true;
    value *= kPi;
    s.remove_prefix(2);
  }
  if (!has_literal && !has_pi) fail();
  if (!s.empty() && s.front() == '/') {
    s.remove_prefix(1);
    double denom = 0.0;
    if (!take_literal(s, denom) || denom == 0.0) fail();
    value /= denom;
  }
  if (!s.empty()) fail();
  return sign * value;
}

std::vector<double> parse_values(std::string_view text, std::string_view field) {
  const std::string_view s = trim(text);
  if (s.empty()) throw UsageError(field, "empty value list");
  if (s.find(':') != std::string_view::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError(field, "range must be start:stop:step");
    const double start = parse_number(parts[0], field);
    const double stop = parse_number(parts[1], field);
    const double step = parse_number(parts[2], field);
    if (!(step > 0.0)) throw UsageError(field, "range step must be positive");
    if (!(stop >= start)) throw UsageError(field, "range stop must not precede start");
    const double span = (stop - start) / step;
    if (span >= static_cast<double>(kMaxGridPoints))
      throw UsageError(field, "range has more than 1e7 points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
  }
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_number(part, field));
  return out;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void validate_config(const SweepConfig& cfg) {
  if (uses_form(cfg.family)) require(!cfg.forms.empty(), "form", "needs at least one value");
  require(!cfg.preps.empty(), "prep", "needs at least one value");
  for (const auto& label : cfg.preps) {
    try {
      (void)AtomicPreparation::from_label(label);
    } catch (const std::invalid_argument& e) {
      throw UsageError("prep", e.what());
    }
  }
  if (uses_form(cfg.family)) {
    double norm = 0.0;
    for (const auto& c : cfg.coeffs) {
      require(std::isfinite(c.real()) && std::isfinite(c.imag()), "coeffs", "must be finite");
      norm += std::norm(c);
    }
    require(norm > 0.0, "coeffs", "must not all vanish");
  }
  if (uses_p(cfg.family)) check_axis(cfg.p, "p", 0.0, 1.0);
  if (uses_alpha(cfg.family)) check_axis(cfg.alpha_sq, "alpha_sq", 0.0, 1.0);
  if (uses_gamma(cfg.family)) {
    check_axis(cfg.gamma1_sq, "gamma1sq", 0.0, 1e6);
    check_axis(cfg.omega_sq, "omegasq", 0.0, 1e6);
  }
  check_axis(cfg.transmittance, "T", 0.0, 1.0);
  check_axis(cfg.g_tau, "gtau", -1e6, 1e6);
  require(cfg.tail_tolerance > 0.0 && cfg.tail_tolerance <= 1e-2, "tail_tolerance",
          "must lie in (0, 1e-2]");
  require(cfg.eps_neg >= 0.0 && std::isfinite(cfg.eps_neg), "eps_neg",
          "must be finite and nonnegative");
  require(cfg.jobs >= 1 && cfg.jobs <= 1024, "jobs", "must lie in [1, 1024]");
  double size = static_cast<double>(cfg.preps.size()) * static_cast<double>(cfg.transmittance.size()) *
                static_cast<double>(cfg.g_tau.size());
  if (uses_form(cfg.family)) size *= static_cast<double>(cfg.forms.size());
  if (uses_p(cfg.family)) size *= static_cast<double>(cfg.p.size());
  if (uses_alpha(cfg.family)) size *= static_cast<double>(cfg.alpha_sq.size());
  if (uses_gamma(cfg.family))
    size *= static_cast<double>(cfg.gamma1_sq.size()) * static_cast<double>(cfg.omega_sq.size());
  require(size <= static_cast<double>(kMaxGridPoints), "grid",
          "grid of " + format_double(size) + " points exceeds the 1e7 limit");
}

std::size_t grid_size(const SweepConfig& cfg) {
  validate_config(cfg);
  std::size_t n = cfg.preps.size() * cfg.transmittance.size() * cfg.g_tau.size();
  if (uses_form(cfg.family)) n *= cfg.forms.size();
  if (uses_p(cfg.family)) n *= cfg.p.size();
  if (uses_alpha(cfg.family)) n *= cfg.alpha_sq.size();
  if (uses_gamma(cfg.family)) n *= cfg.gamma1_sq.size() * cfg.omega_sq.size();
  return n;
}

void apply_json(SweepConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config", "top level must be an object");
  auto values = [](const nlohmann::json& v, std::string_view field) {
    std::vector<double> out;
    auto one = [&](const nlohmann::json& x) {
      if (x.is_number()) {
        out.push_back(x.get<double>());
      } else if (x.is_string()) {
        const auto parsed = parse_values(x.get<std::string>(), field);
        out.insert(out.end(), parsed.begin(), parsed.end());
      } else {
        throw UsageError(field, "expected a number, a string or an array of those");
      }
    };
    if (v.is_array()) {
      for (const auto& x : v) one(x);
    } else {
      one(v);
    }
    return out;
  };
  auto strings = [](const nlohmann::json& v, std::string_view field) {
    std::vector<std::string> out;
    auto one = [&](const nlohmann::json& x) {
      if (!x.is_string()) throw UsageError(field, "expected a string or an array of strings");
      out.push_back(x.get<std::string>());
    };
    if (v.is_array()) {
      for (const auto& x : v) one(x);
    } else {
      one(v);
    }
    return out;
  };

  for (const auto& [key, v] : j.items()) {
    if (key == "state") {
      if (!v.is_string()) throw UsageError("state", "expected a string");
      cfg.family = parse_family(v.get<std::string>());
    } else if (key == "form") {
      cfg.forms.clear();
      for (const auto& s : strings(v, "form")) {
        try {
          cfg.forms.push_back(parse_gsd_form(s));
        } catch (const std::invalid_argument& e) {
          throw UsageError("form", e.what());
        }
      }
    } else if (key == "coeffs") {
      const auto c = values(v, "coeffs");
      if (c.size() != 5) throw UsageError("coeffs", "expected five amplitudes");
      for (std::size_t i = 0; i < 5; ++i) cfg.coeffs[i] = c[i];
    } else if (key == "prep") {
      cfg.preps = strings(v, "prep");
    } else if (key == "p") {
      cfg.p = values(v, "p");
    } else if (key == "alpha_sq") {
      cfg.alpha_sq = values(v, "alpha_sq");
    } else if (key == "gamma1sq") {
      cfg.gamma1_sq = values(v, "gamma1sq");
    } else if (key == "omegasq") {
      cfg.omega_sq = values(v, "omegasq");
    } else if (key == "T") {
      cfg.transmittance = values(v, "T");
    } else if (key == "gtau") {
      cfg.g_tau = values(v, "gtau");
    } else if (key == "tail_tolerance") {
      const auto t = values(v, "tail_tolerance");
      if (t.size() != 1) throw UsageError("tail_tolerance", "expected a single value");
      cfg.tail_tolerance = t[0];
    } else if (key == "eps_neg") {
      const auto t = values(v, "eps_neg");
      if (t.size() != 1) throw UsageError("eps_neg", "expected a single value");
      cfg.eps_neg = t[0];
    } else if (key == "jobs") {
      if (!v.is_number_integer()) throw UsageError("jobs", "expected an integer");
      cfg.jobs = v.get<int>();
    } else if (key == "out") {
      if (!v.is_string()) throw UsageError("out", "expected a string");
      cfg.out = v.get<std::string>();
    } else {
      throw UsageError(key, "unknown config key");
    }
  }
}

std::vector<GridPoint> expand_grid(const SweepConfig& cfg) {
  const std::size_t n = grid_size(cfg);
  const std::vector<GsdForm> one_form{GsdForm::psi_gsd};
  const std::vector<double> zero{0.0};
  const auto& forms = axis_or(cfg.forms, uses_form(cfg.family), one_form);
  const auto& ps = axis_or(cfg.p, uses_p(cfg.family), zero);
  const auto& alphas = axis_or(cfg.alpha_sq, uses_alpha(cfg.family), zero);
  const auto& gammas = axis_or(cfg.gamma1_sq, uses_gamma(cfg.family), zero);
  const auto& omegas = axis_or(cfg.omega_sq, uses_gamma(cfg.family), zero);

  std::vector<GridPoint> grid;
  grid.reserve(n);
  GridPoint pt;
  for (GsdForm form : forms)
    for (const auto& prep : cfg.preps)
      for (double p : ps)
        for (double a : alphas)
          for (double g : gammas)
            for (double o : omegas)
              for (double t : cfg.transmittance)
                for (double gt : cfg.g_tau) {
                  pt.form = form;
                  pt.prep = prep;
                  pt.p = p;
                  pt.alpha_sq = a;
                  pt.gamma1_sq = g;
                  pt.omega_sq = o;
                  pt.transmittance = t;
                  pt.g_tau = gt;
                  grid.push_back(pt);
                }
  return grid;
}

ThreeModeDensity make_field(const SweepConfig& cfg, const GridPoint& pt, int band) {
  auto banded = [band](const ThreeModeDensity& f) {
    return band < 0 ? f : band_limited(f, band);
  };
  switch (cfg.family) {
    case Family::vacuum:
      return vacuum_density();
    case Family::ghz:
      return banded(gsd_state(GsdCoefficients(GsdForm::psi_gsd, {1.0, 0.0, 0.0, 0.0, 1.0})));
    case Family::w:
      return banded(mixed_ghz_w(0.0));
    case Family::gsd:
      return banded(gsd_state(GsdCoefficients(pt.form, cfg.coeffs)));
    case Family::w_like: {
      const double side = std::sqrt((1.0 - pt.alpha_sq) / 2.0);
      return banded(gsd_state(
          GsdCoefficients(GsdForm::psi_gsd, {std::sqrt(pt.alpha_sq), 0.0, side, side, 0.0})));
    }
    case Family::mixed:
      return banded(mixed_ghz_w(pt.p));
    case Family::tstate: {
      // Built directly in banded form; the full matrix has ~K^4 entries.
      TStateOptions options;
      options.tail_tolerance = cfg.tail_tolerance;
      options.cap_policy = CapPolicy::truncate_at_cap;
      options.band = band;
      return gaussian_t_state(t_state_params(pt.gamma1_sq, pt.omega_sq), options);
    }
  }
  throw std::invalid_argument("unknown state family");
}

ResultRow evaluate(const SweepConfig& cfg, const GridPoint& pt) {
  FieldCache cache;
  return evaluate_cached(cfg, pt, cache);
}

std::vector<ResultRow> run_sweep(const SweepConfig& cfg) {
  const std::vector<GridPoint> grid = expand_grid(cfg);
  std::vector<ResultRow> rows(grid.size());
  const std::size_t jobs =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), grid.size()));

  // Contiguous slices keep consecutive points (same field state) on one worker.
  auto work = [&](std::size_t w) {
    FieldCache cache;
    const std::size_t begin = grid.size() * w / jobs;
    const std::size_t end = grid.size() * (w + 1) / jobs;
    for (std::size_t i = begin; i < end; ++i) rows[i] = evaluate_cached(cfg, grid[i], cache);
  };
  if (jobs == 1) {
    work(0);
    return rows;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::vector<std::string> csv_header(const SweepConfig& cfg) {
  std::vector<std::string> h;
  if (uses_form(cfg.family)) h.push_back("form");
  h.push_back("prep");
  if (uses_p(cfg.family)) h.push_back("p");
  if (uses_alpha(cfg.family)) h.push_back("alpha_sq");
  if (uses_gamma(cfg.family)) {
    h.push_back("gamma1sq");
    h.push_back("omegasq");
  }
  for (const char* c : {"T", "gtau", "purity", "neg_A_BC", "neg_B_AC", "neg_C_AB",
                        "tripartite_negativity", "neg_AB", "neg_AC", "neg_BC", "trace_residual"})
    h.push_back(c);
  if (uses_gamma(cfg.family))
    for (const char* c : {"N2", "N3", "b000_sq", "b110_sq", "b101_sq"}) h.push_back(c);
  return h;
}

namespace {

std::vector<std::string> row_fields(const SweepConfig& cfg, const ResultRow& row) {
  const auto& pt = row.point;
  const auto& r = row.report;
  std::vector<std::string> f;
  if (uses_form(cfg.family)) f.emplace_back(to_string(pt.form));
  f.push_back(pt.prep);
  if (uses_p(cfg.family)) f.push_back(format_double(pt.p));
  if (uses_alpha(cfg.family)) f.push_back(format_double(pt.alpha_sq));
  if (uses_gamma(cfg.family)) {
    f.push_back(format_double(pt.gamma1_sq));
    f.push_back(format_double(pt.omega_sq));
  }
  for (double v : {pt.transmittance, pt.g_tau, r.purity, r.neg_A_BC, r.neg_B_AC, r.neg_C_AB,
                   r.tripartite_negativity, r.neg_AB, r.neg_AC, r.neg_BC, r.trace_residual})
    f.push_back(format_double(v));
  if (uses_gamma(cfg.family))
    for (double v : {row.t_params->n2, row.t_params->n3, row.photons->b000_sq,
                     row.photons->b110_sq, row.photons->b101_sq})
      f.push_back(format_double(v));
  return f;
}

void write_joined(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

}  // namespace

void write_csv(std::ostream& os, const SweepConfig& cfg, const std::vector<ResultRow>& rows) {
  write_joined(os, csv_header(cfg));
  for (const auto& row : rows) write_joined(os, row_fields(cfg, row));
}

void write_point(std::ostream& os, const SweepConfig& cfg, const ResultRow& row) {
  os << "state = " << to_string(cfg.family) << '\n';
  const auto header = csv_header(cfg);
  const auto fields = row_fields(cfg, row);
  for (std::size_t i = 0; i < header.size(); ++i) os << header[i] << " = " << fields[i] << '\n';
}

}  // namespace tripart::runner
