#include "cli/run.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "qedsim/errors.hpp"
#include "qedsim/oracles.hpp"

namespace qedsim::cli {

const std::vector<std::string>& ResultRow::columns() {
  static const std::vector<std::string> cols = {
      // swept/settable inputs
      "upsilon", "nu0", "xi", "gamma0", "c_D", "theta_bar", "epsilon", "phi0",
      // observables
      "dnu1_num", "dnu2_num", "dE1_num", "dE2_num", "cross_nu", "cross_E",
      "dnu_direct", "dE_direct", "arc_r1", "arc_r2", "norm_deficit",
      // oracle + extinction bookkeeping
      "oracle_dnu1", "oracle_dnu2", "gamma", "extinction"};
  return cols;
}

RunSettings resolve_settings(const Config& cfg) {
  RunSettings s;

  // Physical route first; any dimensionless key then overrides its derived
  // counterpart.
  PhysicalScenario phys;
  phys.wavelength = cfg.get_double("scenario.lambda", phys.wavelength);
  phys.beta = cfg.get_double("scenario.beta", phys.beta);
  phys.interaction_length = cfg.get_double("scenario.L",
                                           phys.interaction_length);
  phys.sigma_z0 = cfg.get_double("scenario.sigma_z0", phys.sigma_z0);
  phys.drift_length = cfg.get_double("scenario.L_D", phys.drift_length);
  if (auto e = cfg.maybe_double("scenario.E_qz")) phys.E_qz = *e;
  s.params = derive_dimensionless(phys);

  if (auto v = cfg.maybe_double("scenario.upsilon")) s.params.upsilon = *v;
  if (auto v = cfg.maybe_double("scenario.gamma0")) {
    if (!(*v > 0.0)) throw ConfigError("scenario.gamma0 must be positive");
    s.params.gamma0 = *v;
  }
  if (auto v = cfg.maybe_double("scenario.c_D")) s.params.c_D = *v;
  s.params.theta_bar = cfg.get_double("scenario.theta_bar", 0.0);
  s.params.phi0 = cfg.get_double("scenario.phi0", 0.0);
  s.params.epsilon = cfg.get_double("run.epsilon", 0.0);
  if (auto v = cfg.maybe_double("scenario.p0_over_prec")) {
    if (!(*v > 0.0)) throw ConfigError("scenario.p0_over_prec must be > 0");
    s.params.p0_over_prec = *v;
  }
  s.params.hqz_over_prec = cfg.get_double("scenario.hqz_over_prec", 1.0);

  const std::string kind = cfg.get_string("photon.kind", "coherent");
  if (kind == "fock") {
    s.kind = PhotonKind::fock;
  } else if (kind == "coherent") {
    s.kind = PhotonKind::coherent;
  } else if (kind == "squeezed") {
    s.kind = PhotonKind::squeezed;
  } else if (kind == "vacuum") {
    s.kind = PhotonKind::fock;
    s.params.nu0 = 0.0;
  } else {
    throw ConfigError("photon.kind must be fock|coherent|squeezed|vacuum");
  }
  if (kind != "vacuum") {
    s.params.nu0 = cfg.get_double("photon.nu0", 0.0);
    if (!(s.params.nu0 >= 0.0)) throw ConfigError("photon.nu0 must be >= 0");
  } else if (cfg.has("photon.nu0")) {
    throw ConfigError("photon.nu0 contradicts photon.kind = vacuum");
  }
  s.params.xi_sq = cfg.get_double("photon.xi", 0.0);
  const std::string ord = cfg.get_string("photon.ordering", "sd");
  if (ord == "sd") {
    s.ordering = SqueezeOrdering::sd;
  } else if (ord == "ds") {
    s.ordering = SqueezeOrdering::ds;
  } else {
    throw ConfigError("photon.ordering must be sd|ds");
  }
  s.n_max = cfg.get_int("photon.n_max", -1);

  s.m_align = cfg.get_int("grid.m_align", 16);
  s.coverage = cfg.get_double("grid.sigma_coverage", 8.0);

  const std::string disp = cfg.get_string("run.dispersion", "linear");
  if (disp == "linear") {
    s.dispersion = Dispersion::linear;
  } else if (disp == "quadratic") {
    s.dispersion = Dispersion::quadratic;
  } else {
    throw ConfigError("run.dispersion must be linear|quadratic");
  }
  return s;
}

namespace {

PhotonAmplitudes build_photon(const RunSettings& s) {
  switch (s.kind) {
    case PhotonKind::fock: {
      const double n0 = s.params.nu0;
      const int nu0 = int(n0);
      if (double(nu0) != n0) {
        throw ConfigError("fock photon state requires an integer nu0");
      }
      const int n_max = s.n_max >= 0 ? s.n_max : default_fock_nmax(nu0);
      return fock_state(nu0, n_max);
    }
    case PhotonKind::coherent: {
      const int n_max =
          s.n_max >= 0 ? s.n_max : default_coherent_nmax(s.params.nu0);
      return coherent_state(s.params.nu0, n_max);
    }
    case PhotonKind::squeezed: {
      const int n_max = s.n_max >= 0
                            ? s.n_max
                            : default_squeezed_nmax(s.params.nu0,
                                                    s.params.xi_sq);
      return squeezed_coherent_state(s.params.nu0, s.params.xi_sq, s.ordering,
                                     n_max);
    }
  }
  throw ConfigError("unreachable photon kind");
}

ArcPrediction matching_oracle(const RunSettings& s, double Gamma) {
  const DimensionlessParams& p = s.params;
  switch (s.kind) {
    case PhotonKind::fock:
      return fock_arc(p.upsilon, p.nu0, p.theta_bar, p.epsilon);
    case PhotonKind::coherent:
      return coherent_arc(p.upsilon, p.nu0, Gamma, p.theta_bar, p.epsilon,
                          p.phi0);
    case PhotonKind::squeezed:
      return squeezed_arc(p.upsilon, p.nu0, p.xi_sq, Gamma, p.theta_bar,
                          p.epsilon, p.phi0);
  }
  throw ConfigError("unreachable photon kind");
}

}  // namespace

InteractionReport evaluate_report(const RunSettings& s) {
  const MomentumGrid grid =
      make_grid(s.params.rho(), s.m_align, s.coverage);
  const ElectronAmplitudes elec =
      gaussian_wavepacket(s.params.rho(), s.params.c_D, grid);
  const PhotonAmplitudes ph = build_photon(s);
  const JointState joint = joint_state(elec, ph);
  const ScatteredAmplitudes sc = scatter_first_order(joint, s.params);
  return analyze(joint, sc, s.dispersion, s.params);
}

ResultRow evaluate_point(const RunSettings& s) {
  const InteractionReport rep = evaluate_report(s);
  const double Gamma = gamma_extinction(s.params.gamma0, s.params.c_D);
  const ArcPrediction oracle = matching_oracle(s, Gamma);

  ResultRow row;
  row.values = {s.params.upsilon,
                s.params.nu0,
                s.params.xi_sq,
                s.params.gamma0,
                s.params.c_D,
                s.params.theta_bar,
                s.params.epsilon,
                s.params.phi0,
                rep.ordered.dnu1,
                rep.ordered.dnu2,
                rep.ordered.dE1,
                rep.ordered.dE2,
                rep.ordered.cross_nu,
                rep.ordered.cross_E,
                rep.direct.dnu_direct,
                rep.direct.dE_direct,
                rep.r1,
                rep.r2,
                rep.direct.norm_deficit,
                oracle.dnu1,
                oracle.dnu2,
                Gamma,
                std::exp(-0.5 * Gamma * Gamma)};
  row.perturbative_warning = rep.perturbative_warning;
  row.perturbative_measure = rep.perturbative_measure;
  return row;
}

std::vector<ResultRow> evaluate_points(const std::vector<RunSettings>& points,
                                       int workers) {
  const size_t n = points.size();
  std::vector<ResultRow> rows(n);
  if (n == 0) return rows;

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  size_t pool = workers > 0 ? size_t(workers) : size_t(hw);
  pool = std::min(pool, n);

  if (pool <= 1) {
    for (size_t i = 0; i < n; ++i) rows[i] = evaluate_point(points[i]);
    return rows;
  }

  std::atomic<size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        rows[i] = evaluate_point(points[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (size_t t = 0; t < pool; ++t) threads.emplace_back(work);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

}  // namespace qedsim::cli
