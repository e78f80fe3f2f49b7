#include "qedsim/scattering.hpp"

#include <cmath>
#include <tuple>
#include <sstream>

#include "qedsim/errors.hpp"
#include "qedsim/oracles.hpp"
#include "qedsim/summation.hpp"

namespace qedsim {

namespace {

// Emission/absorption transition prefactors at final momentum offset x'
// (p_rec units): (p' + p_rec - hbar q_z/2)/p0 and (p' - p_rec + hbar q_z/2)/p0,
// or exactly 1 in the unity limit.
struct Prefactors {
  bool unity;
  double inv_P;  // p_rec/p0
  double h;      // hbar q_z / p_rec

  double emission(double xf) const {
    return unity ? 1.0 : 1.0 + (xf + 1.0 - 0.5 * h) * inv_P;
  }
  double absorption(double xf) const {
    return unity ? 1.0 : 1.0 + (xf - 1.0 + 0.5 * h) * inv_P;
  }
};

Prefactors make_prefactors(const DimensionlessParams& p) {
  Prefactors pf;
  pf.unity = p.unity_prefactor();
  pf.inv_P = pf.unity ? 0.0 : 1.0 / p.p0_over_prec;
  pf.h = p.hqz_over_prec;
  return pf;
}

}  // namespace

ScatteredAmplitudes scatter_first_order(const JointState& joint,
                                        const DimensionlessParams& params) {
  const MomentumGrid& g = joint.grid;
  const int rows = g.size();
  const int m = g.m_align;
  const int n_states = joint.n_states;
  const int n_max = joint.n_max();

  const auto [theta_e, theta_a] =
      detuning_split(params.theta_bar, params.epsilon);
  const double se = sinc(0.5 * theta_e);
  const double sa = sinc(0.5 * theta_a);
  const cplx phase_e = std::polar(1.0, 0.5 * theta_e + params.phi0);
  const cplx phase_a = std::polar(1.0, -(0.5 * theta_a + params.phi0));
  const double ups = params.upsilon;
  const Prefactors pf = make_prefactors(params);

  // Perturbative-regime gate: the largest first-order amplitude ratio is
  // bounded by upsilon sqrt(n_max+1) max|prefactor|.
  double max_pref = 1.0;
  if (!pf.unity) {
    for (int k = 0; k < rows; ++k) {
      const double x = g.x(k);
      max_pref = std::max({max_pref, std::abs(pf.emission(x)),
                           std::abs(pf.absorption(x))});
    }
  }
  ScatteredAmplitudes sc;
  sc.perturbative_measure = ups * std::sqrt(double(n_max) + 1.0) * max_pref;
  if (sc.perturbative_measure > 0.5) {
    std::ostringstream msg;
    msg << "scatter_first_order: perturbative measure "
        << sc.perturbative_measure
        << " exceeds 0.5; first-order theory is not meaningful here";
    throw BudgetError(msg.str());
  }
  sc.perturbative_warning = sc.perturbative_measure > 0.1;

  sc.grid = g;
  sc.n_states = n_states;
  sc.e.assign(size_t(rows) * n_states, cplx(0.0, 0.0));
  sc.a.assign(size_t(rows) * n_states, cplx(0.0, 0.0));

  // Emission: final (k, nu) sourced from (k + m, nu - 1).
  for (int k = 0; k + m < rows; ++k) {
    const double coef = pf.emission(g.x(k)) * ups * se;
    for (int nu = 1; nu < n_states; ++nu) {
      const cplx src = joint.at(k + m, nu - 1);
      sc.e[size_t(k) * n_states + nu] =
          coef * std::sqrt(double(nu)) * src * phase_e;
    }
  }
  // Absorption: final (k, nu) sourced from (k - m, nu + 1).
  for (int k = m; k < rows; ++k) {
    const double coef = -pf.absorption(g.x(k)) * ups * sa;
    for (int nu = 0; nu + 1 < n_states; ++nu) {
      const cplx src = joint.at(k - m, nu + 1);
      sc.a[size_t(k) * n_states + nu] =
          coef * std::sqrt(double(nu + 1)) * src * phase_a;
    }
  }

  // Mass that would have scattered outside the stored ranges. Emission loses
  // sources in the lowest m momentum rows (final index < 0) and every source
  // on the top Fock rung (final nu = n_max + 1); absorption loses sources in
  // the highest m rows. Enumerated over final states so nothing is counted
  // twice.
  NeumaierSum lost;
  for (int src_k = 0; src_k < m && src_k < rows; ++src_k) {
    const double coef = pf.emission(g.x(src_k) - 1.0) * ups * se;
    for (int nu = 0; nu < n_max; ++nu) {
      const double a = std::abs(coef) * std::sqrt(double(nu + 1)) *
                       std::abs(joint.at(src_k, nu));
      lost.add(a * a);
    }
  }
  for (int src_k = 0; src_k < rows; ++src_k) {
    const double a = std::abs(pf.emission(g.x(src_k) - 1.0)) * ups *
                     std::abs(se) * std::sqrt(double(n_max) + 1.0) *
                     std::abs(joint.at(src_k, n_max));
    lost.add(a * a);
  }
  for (int src_k = std::max(0, rows - m); src_k < rows; ++src_k) {
    const double coef = pf.absorption(g.x(src_k) + 1.0) * ups * sa;
    for (int nu = 1; nu <= n_max; ++nu) {
      const double a = std::abs(coef) * std::sqrt(double(nu)) *
                       std::abs(joint.at(src_k, nu));
      lost.add(a * a);
    }
  }
  sc.truncated_mass = lost.value();

  NeumaierSum norm;
  for (const cplx& z : sc.e) norm.add(std::norm(z));
  for (const cplx& z : sc.a) norm.add(std::norm(z));
  sc.scattered_norm = norm.value();

  if (sc.truncated_mass > 1e-8 * sc.scattered_norm) {
    std::ostringstream msg;
    msg << "scatter_first_order: truncated scattered mass " << sc.truncated_mass
        << " exceeds 1e-8 of the scattered norm " << sc.scattered_norm
        << " (grid or Fock ladder too small for these parameters)";
    throw BudgetError(msg.str());
  }
  return sc;
}

namespace {

// Energy weight E_p - E0 in hbar*omega units. Linear dispersion: v0 (p - p0)
// -> x. Quadratic adds (p - p0)^2/(2 m*) with m* = p0/v0 -> x^2/(2 P).
struct EnergyWeight {
  double half_inv_P;  // 0 for linear
  double E0;
  double raw(double x) const { return x + half_inv_P * x * x; }
  double operator()(double x) const { return raw(x) - E0; }
};

EnergyWeight make_energy_weight(const JointState& joint, Dispersion dispersion,
                                const DimensionlessParams& params) {
  EnergyWeight w;
  w.E0 = 0.0;
  if (dispersion == Dispersion::quadratic) {
    if (params.unity_prefactor()) {
      throw ConfigError(
          "quadratic dispersion requires a finite p0/p_rec ratio to fix the "
          "effective mass");
    }
    w.half_inv_P = 0.5 / params.p0_over_prec;
  } else {
    w.half_inv_P = 0.0;
  }
  // Measured initial energy expectation (fixed-order compensated sum).
  const int rows = joint.grid.size();
  NeumaierSum e0;
  for (int k = 0; k < rows; ++k) {
    const double raw = w.raw(joint.grid.x(k));
    NeumaierSum row;
    for (int nu = 0; nu < joint.n_states; ++nu) {
      row.add(std::norm(joint.at(k, nu)));
    }
    e0.add(raw * row.value());
  }
  w.E0 = e0.value();
  return w;
}

}  // namespace

OrderedObservables observables_ordered(const JointState& joint,
                                   const ScatteredAmplitudes& sc,
                                   Dispersion dispersion,
                                   const DimensionlessParams& params) {
  const EnergyWeight w = make_energy_weight(joint, dispersion, params);
  const int rows = joint.grid.size();
  const int n_states = joint.n_states;

  NeumaierSum c0e, c0a, c0ea_w, ee, aa, eaw_w, ea, ea_w;
  for (int k = 0; k < rows; ++k) {
    const double wk = w(joint.grid.x(k));
    for (int nu = 0; nu < n_states; ++nu) {
      const size_t idx = size_t(k) * n_states + nu;
      const cplx c0 = joint.c[idx];
      const cplx e = sc.e[idx];
      const cplx a = sc.a[idx];
      const double re_c0e = std::real(std::conj(c0) * e);
      const double re_c0a = std::real(std::conj(c0) * a);
      const double re_ea = std::real(std::conj(e) * a);
      const double n_e = std::norm(e);
      const double n_a = std::norm(a);
      c0e.add(re_c0e);
      c0a.add(re_c0a);
      c0ea_w.add((re_c0e + re_c0a) * wk);
      ee.add(n_e);
      aa.add(n_a);
      eaw_w.add(std::norm(e + a) * wk);
      ea.add(re_ea);
      ea_w.add(re_ea * wk);
    }
  }

  OrderedObservables obs;
  obs.dnu1 = 2.0 * (c0e.value() - c0a.value());
  obs.dE1 = 2.0 * c0ea_w.value();
  obs.dnu2 = ee.value() - aa.value();
  obs.dE2 = eaw_w.value();
  obs.cross_nu = 2.0 * ea.value();
  obs.cross_E = 2.0 * ea_w.value();
  obs.E0 = w.E0;
  return obs;
}

DirectObservables observables_direct(const JointState& joint,
                                     const ScatteredAmplitudes& sc,
                                     Dispersion dispersion,
                                     const DimensionlessParams& params) {
  const EnergyWeight w = make_energy_weight(joint, dispersion, params);
  const int rows = joint.grid.size();
  const int n_states = joint.n_states;

  NeumaierSum dnu, dE, norm_f;
  for (int k = 0; k < rows; ++k) {
    const double wk = w(joint.grid.x(k));
    for (int nu = 0; nu < n_states; ++nu) {
      const size_t idx = size_t(k) * n_states + nu;
      const cplx cf = joint.c[idx] + sc.e[idx] + sc.a[idx];
      const double diff = std::norm(cf) - std::norm(joint.c[idx]);
      dnu.add(nu * diff);
      dE.add(wk * diff);
      norm_f.add(std::norm(cf));
    }
  }
  DirectObservables d;
  d.dnu_direct = dnu.value();
  d.dE_direct = dE.value();
  d.norm_deficit = 1.0 - norm_f.value();
  return d;
}

std::pair<double, double> correspondence_residual(const OrderedObservables& obs) {
  return {obs.dnu1 + obs.dE1, obs.dnu2 + obs.dE2};
}

ElectronSpectrum electron_spectrum(const JointState& joint,
                                   const ScatteredAmplitudes& sc) {
  const MomentumGrid& g = joint.grid;
  const int rows = g.size();
  const int n_states = joint.n_states;
  const int m = g.m_align;

  ElectronSpectrum sp;
  sp.marginal.resize(size_t(rows));
  NeumaierSum shift;
  for (int k = 0; k < rows; ++k) {
    NeumaierSum row_f, row_0;
    for (int nu = 0; nu < n_states; ++nu) {
      const size_t idx = size_t(k) * n_states + nu;
      const cplx cf = joint.c[idx] + sc.e[idx] + sc.a[idx];
      row_f.add(std::norm(cf));
      row_0.add(std::norm(joint.c[idx]));
    }
    sp.marginal[size_t(k)] = row_f.value();
    shift.add(g.x(k) * (row_f.value() - row_0.value()));
  }
  sp.mean_shift = shift.value();

  // Half-open windows of width p_rec: [center - m/2, center + m/2).
  auto window = [&](int center) {
    NeumaierSum s;
    for (int k = center - m / 2; k < center + m / 2; ++k) {
      if (k >= 0 && k < rows) s.add(sp.marginal[size_t(k)]);
    }
    return s.value();
  };
  sp.central = window(g.center());
  sp.up = window(g.center() + m);
  sp.down = window(g.center() - m);
  return sp;
}

InteractionReport analyze(const JointState& joint, const ScatteredAmplitudes& sc,
                          Dispersion dispersion,
                          const DimensionlessParams& params) {
  InteractionReport r;
  r.ordered = observables_ordered(joint, sc, dispersion, params);
  r.direct = observables_direct(joint, sc, dispersion, params);
  std::tie(r.r1, r.r2) = correspondence_residual(r.ordered);
  r.spectrum = electron_spectrum(joint, sc);
  r.truncated_mass = sc.truncated_mass;
  r.perturbative_measure = sc.perturbative_measure;
  r.perturbative_warning = sc.perturbative_warning;
  return r;
}

}  // namespace qedsim
