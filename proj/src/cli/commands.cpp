#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cli/checks.hpp"
#include "cli/csv.hpp"
#include "cli/run.hpp"
#include "qedsim/constants.hpp"
#include "qedsim/errors.hpp"
#include "qedsim/oracles.hpp"
#include "qedsim/params.hpp"

namespace qedsim::cli {
namespace {

std::vector<double> linspace(double from, double to, int steps) {
  if (steps < 1) throw ConfigError("sweep steps must be >= 1");
  std::vector<double> v;
  v.reserve(size_t(steps));
  if (steps == 1) {
    v.push_back(from);
    return v;
  }
  for (int i = 0; i < steps; ++i) {
    v.push_back(from + (to - from) * double(i) / double(steps - 1));
  }
  return v;
}

std::vector<double> logspace(double from, double to, int steps) {
  if (!(from > 0.0) || !(to > 0.0)) {
    throw ConfigError("log spacing requires positive endpoints");
  }
  if (steps < 1) throw ConfigError("sweep steps must be >= 1");
  std::vector<double> v;
  v.reserve(size_t(steps));
  if (steps == 1) {
    v.push_back(from);
    return v;
  }
  for (int i = 0; i < steps; ++i) {
    const double t = double(i) / double(steps - 1);
    v.push_back(from * std::pow(to / from, t));
  }
  return v;
}

void warn_if_nonperturbative(Rendered& doc, const ResultRow& row,
                             size_t index) {
  if (!row.perturbative_warning) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "warning: row %zu is marginally perturbative "
                "(upsilon sqrt(n_max+1) max|pref| = %.3f > 0.1); "
                "second-order results may be inaccurate",
                index, row.perturbative_measure);
  doc.warnings.push_back(buf);
}

std::string resolve_output(const Config& cfg, const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  return cfg.get_string("output.path", "-");
}

int emit(const Config& cfg, const std::string& override_path,
         const Rendered& doc) {
  for (const std::string& w : doc.warnings) {
    std::fprintf(stderr, "%s\n", w.c_str());
  }
  write_output(resolve_output(cfg, override_path), doc.csv);
  return 0;
}

}  // namespace

Rendered render_simulate_csv(const Config& cfg) {
  RunSettings s = resolve_settings(cfg);
  ResultRow row = evaluate_point(s);
  Rendered doc;
  warn_if_nonperturbative(doc, row, 0);
  CsvBuilder b;
  b.echo_config("simulate", cfg);
  b.header(ResultRow::columns());
  b.row(row.values);
  doc.csv = b.str();
  return doc;
}

Rendered render_sweep_csv(const Config& cfg, int workers) {
  const std::string param = cfg.get_string("sweep.parameter", "");
  if (param.empty()) throw ConfigError("sweep.parameter is required");
  const double from = cfg.require_double("sweep.from");
  const double to = cfg.require_double("sweep.to");
  const int steps = cfg.get_int("sweep.steps", 0);
  if (steps < 1) throw ConfigError("sweep.steps must be >= 1");

  RunSettings base = resolve_settings(cfg);
  std::vector<RunSettings> points;
  points.reserve(size_t(steps));
  for (double v : linspace(from, to, steps)) {
    RunSettings s = base;
    if (param == "upsilon") {
      s.params.upsilon = v;
    } else if (param == "nu0") {
      s.params.nu0 = v;
    } else if (param == "xi") {
      s.params.xi_sq = v;
    } else if (param == "gamma0") {
      if (!(v > 0.0)) throw ConfigError("swept gamma0 must stay positive");
      s.params.gamma0 = v;
    } else if (param == "c_D") {
      s.params.c_D = v;
    } else if (param == "theta_bar") {
      s.params.theta_bar = v;
    } else if (param == "epsilon") {
      s.params.epsilon = v;
    } else if (param == "phi0") {
      s.params.phi0 = v;
    } else {
      throw ConfigError(
          "sweep.parameter must be one of "
          "upsilon|nu0|xi|gamma0|c_D|theta_bar|epsilon|phi0");
    }
    points.push_back(s);
  }

  std::vector<ResultRow> rows = evaluate_points(points, workers);
  Rendered doc;
  CsvBuilder b;
  b.echo_config("sweep", cfg);
  b.header(ResultRow::columns());
  for (size_t i = 0; i < rows.size(); ++i) {
    warn_if_nonperturbative(doc, rows[i], i);
    b.row(rows[i].values);
  }
  doc.csv = b.str();
  return doc;
}

Rendered render_fig3a_csv(const Config& cfg, int workers) {
  // Extinction sweep of the first-order signal for a coherent drive.
  const std::string kind = cfg.get_string("photon.kind", "coherent");
  if (kind != "coherent") {
    throw ConfigError("the extinction sweep is defined for photon.kind = coherent");
  }
  RunSettings base = resolve_settings(cfg);
  if (!cfg.has("scenario.upsilon") && !cfg.has("scenario.E_qz")) {
    base.params.upsilon = 0.005;
  }
  if (!cfg.has("photon.nu0")) base.params.nu0 = 100.0;

  const double gmin = cfg.get_double("fig3a.gamma_min", 0.01);
  const double gmax = cfg.get_double("fig3a.gamma_max", 4.0);
  const int steps = cfg.get_int("fig3a.steps", 41);
  const std::string spacing = cfg.get_string("fig3a.spacing", "log");
  std::vector<double> gammas;
  if (spacing == "log") {
    gammas = logspace(gmin, gmax, steps);
  } else if (spacing == "linear") {
    gammas = linspace(gmin, gmax, steps);
  } else {
    throw ConfigError("fig3a.spacing must be log|linear");
  }

  const double chirp_scale =
      std::sqrt(1.0 + base.params.c_D * base.params.c_D);
  std::vector<RunSettings> points;
  points.reserve(gammas.size());
  for (double gamma : gammas) {
    RunSettings s = base;
    s.params.gamma0 = gamma / chirp_scale;  // total extinction Gamma = gamma
    points.push_back(s);
  }
  std::vector<ResultRow> rows = evaluate_points(points, workers);

  const double amp = 4.0 * base.params.upsilon * std::sqrt(base.params.nu0) *
                     sinc(base.params.theta_bar / 2.0) *
                     std::cos(base.params.theta_bar / 2.0 + base.params.phi0);
  if (std::abs(amp) < 1e-300) {
    throw ConfigError(
        "the first-order signal vanishes identically at this theta_bar/phi0; "
        "nothing to normalize");
  }
  const double floor =
      vacuum_spontaneous(base.params.upsilon,
                         base.params.theta_bar + base.params.epsilon / 2.0);

  Rendered doc;
  CsvBuilder b;
  b.echo_config("fig3a", cfg);
  // Analytic annotation: where the coherent signal sinks below the
  // spontaneous floor, exp(-Gamma^2/2) |amp| = floor.
  if (std::abs(amp) > floor) {
    const double crossing = std::sqrt(2.0 * std::log(std::abs(amp) / floor));
    const bool inside = crossing >= gammas.front() && crossing <= gammas.back();
    b.comment("signal meets the spontaneous floor at Gamma = " +
              fmt_double(crossing) +
              (inside ? " (inside the plotted range)"
                      : " (outside the plotted range)"));
  } else {
    b.comment("signal never exceeds the spontaneous floor in this setting");
  }
  b.header({"gamma", "dnu1_num", "dnu1_normalized", "floor",
            "extinction_oracle"});
  for (size_t i = 0; i < rows.size(); ++i) {
    warn_if_nonperturbative(doc, rows[i], i);
    const double gamma = rows[i].values[col_gamma];
    const double dnu1 = rows[i].values[col_dnu1];
    b.row({gamma, dnu1, dnu1 / amp, floor, std::exp(-0.5 * gamma * gamma)});
  }
  doc.csv = b.str();
  return doc;
}

Rendered render_fig3b_csv(const Config& cfg) {
  // Map of the extinction coefficient over initial packet size and drift
  // length; pure closed-form evaluation, no scattering engine involved.
  PhysicalScenario phys;
  phys.wavelength = cfg.get_double("scenario.lambda", phys.wavelength);
  phys.beta = cfg.get_double("scenario.beta", phys.beta);
  phys.interaction_length =
      cfg.get_double("scenario.L", phys.interaction_length);

  const double smin = cfg.get_double("fig3b.sigma_min", 10e-9);
  const double smax = cfg.get_double("fig3b.sigma_max", 130e-9);
  const int ssteps = cfg.get_int("fig3b.sigma_steps", 13);
  const double lmin = cfg.get_double("fig3b.ld_min", -0.2);
  const double lmax = cfg.get_double("fig3b.ld_max", 0.2);
  const int lsteps = cfg.get_int("fig3b.ld_steps", 21);

  Rendered doc;
  CsvBuilder b;
  b.echo_config("fig3b", cfg);
  b.header({"sigma_z0", "L_D", "Gamma", "extinction"});
  for (double sigma : linspace(smin, smax, ssteps)) {
    for (double ld : linspace(lmin, lmax, lsteps)) {
      PhysicalScenario p = phys;
      p.sigma_z0 = sigma;
      p.drift_length = ld;
      DimensionlessParams d = derive_dimensionless(p);
      const double gamma = gamma_extinction(d.gamma0, d.c_D);
      b.row({sigma, ld, gamma, std::exp(-0.5 * gamma * gamma)});
    }
  }
  doc.csv = b.str();
  return doc;
}

Rendered render_smith_purcell_csv(const Config& cfg) {
  const double length = cfg.get_double("sp.L", 1e-3);
  const double beta = cfg.get_double("sp.beta", 0.5);
  const double eta = cfg.get_double("sp.eta", 0.3);
  const double a_eff = cfg.get_double("sp.A_eff", 1e-8);
  const double grating = cfg.get_double("sp.grating_period", 100e-6);
  const int harmonic = cfg.get_int("sp.harmonic", 1);
  const double theta_obs = cfg.get_double("sp.Theta", constants::pi / 3.0);
  const double omega0 = cfg.get_double("sp.omega", 1.2e13);
  const std::string sweep = cfg.get_string("sp.sweep", "omega");

  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw ConfigError("sp.beta must lie in (0, 1)");
  }
  const double v0 = beta * constants::c_light;

  std::vector<std::pair<double, double>> axis;  // (omega, Theta) per row
  if (sweep == "none") {
    axis.emplace_back(omega0, theta_obs);
  } else if (sweep == "omega") {
    const double from = cfg.get_double("sp.from", 0.6e13);
    const double to = cfg.get_double("sp.to", 1.8e13);
    const int steps = cfg.get_int("sp.steps", 25);
    for (double w : linspace(from, to, steps)) axis.emplace_back(w, theta_obs);
  } else if (sweep == "theta") {
    const double from = cfg.get_double("sp.from", 0.0);
    const double to = cfg.get_double("sp.to", constants::pi);
    const int steps = cfg.get_int("sp.steps", 25);
    for (double t : linspace(from, to, steps)) axis.emplace_back(omega0, t);
  } else {
    throw ConfigError("sp.sweep must be omega|theta|none");
  }

  Rendered doc;
  CsvBuilder b;
  b.echo_config("smith-purcell", cfg);
  if (!cfg.has("sp.V")) {
    b.comment("quantization volume defaulted to A_eff * c * L / v0 = " +
              fmt_double(a_eff * constants::c_light * length / v0));
  }
  b.header({"omega", "Theta", "theta_bar", "d2nu_per_domega_dOmega"});
  for (auto [omega, theta] : axis) {
    const double theta_bar =
        smith_purcell_detuning(omega, length, beta, theta, grating, harmonic);
    const double volume =
        cfg.get_double("sp.V", a_eff * constants::c_light * length / v0);
    const SmithPurcellDensity d = smith_purcell_density(
        omega, length, beta, eta, theta_bar, a_eff, volume);
    b.row({omega, theta, theta_bar, d.direct});
  }
  doc.csv = b.str();
  return doc;
}

int cmd_simulate(const Config& cfg, const std::string& output_override) {
  return emit(cfg, output_override, render_simulate_csv(cfg));
}

int cmd_sweep(const Config& cfg, const std::string& output_override,
              int workers) {
  return emit(cfg, output_override, render_sweep_csv(cfg, workers));
}

int cmd_fig3a(const Config& cfg, const std::string& output_override,
              int workers) {
  return emit(cfg, output_override, render_fig3a_csv(cfg, workers));
}

int cmd_fig3b(const Config& cfg, const std::string& output_override) {
  return emit(cfg, output_override, render_fig3b_csv(cfg));
}

int cmd_smith_purcell(const Config& cfg, const std::string& output_override) {
  return emit(cfg, output_override, render_smith_purcell_csv(cfg));
}

int cmd_verify(const std::string& output_override, int workers) {
  std::vector<CriterionResult> criteria = run_acceptance(workers);
  const std::string table = render_verify_table(criteria);
  write_output(output_override.empty() ? "-" : output_override, table);
  return verify_exit_code(criteria);
}

}  // namespace qedsim::cli
