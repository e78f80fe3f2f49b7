#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "qedsim/errors.hpp"
#include "qedsim/oracles.hpp"
#include "qedsim/params.hpp"
#include "qedsim/scattering.hpp"
#include "qedsim/states.hpp"

using namespace qedsim;

namespace {

DimensionlessParams dimless(double upsilon, double nu0, double gamma_total,
                            double theta_bar, double epsilon, double phi0,
                            double c_d = 0.0, double xi = 0.0) {
  DimensionlessParams p;
  p.upsilon = upsilon;
  p.nu0 = nu0;
  p.xi_sq = xi;
  p.gamma0 = gamma_total / std::sqrt(1.0 + c_d * c_d);
  p.c_D = c_d;
  p.theta_bar = theta_bar;
  p.epsilon = epsilon;
  p.phi0 = phi0;
  return p;
}

struct EngineRun {
  JointState joint;
  ScatteredAmplitudes sc;
  DimensionlessParams p;
};

EngineRun run_coherent(const DimensionlessParams& p, int m_align = 16,
                       double coverage = 8.0) {
  MomentumGrid grid = make_grid(p.rho(), m_align, coverage);
  ElectronAmplitudes elec = gaussian_wavepacket(p.rho(), p.c_D, grid);
  PhotonAmplitudes ph = coherent_state(p.nu0, default_coherent_nmax(p.nu0));
  EngineRun r{joint_state(elec, ph), {}, p};
  r.sc = scatter_first_order(r.joint, p);
  return r;
}

EngineRun run_fock(const DimensionlessParams& p, int n_max = -1,
                   int m_align = 16) {
  MomentumGrid grid = make_grid(p.rho(), m_align, 8.0);
  ElectronAmplitudes elec = gaussian_wavepacket(p.rho(), p.c_D, grid);
  const int nu0 = int(p.nu0);
  PhotonAmplitudes ph =
      fock_state(nu0, n_max >= 0 ? n_max : default_fock_nmax(nu0));
  EngineRun r{joint_state(elec, ph), {}, p};
  r.sc = scatter_first_order(r.joint, p);
  return r;
}

double channel_norm(const std::vector<cplx>& c) {
  double s = 0.0;
  for (const cplx& z : c) s += std::norm(z);
  return s;
}

}  // namespace

TEST_CASE("zero coupling scatters nothing") {
  EngineRun r = run_coherent(dimless(0.0, 4.0, 1.0, 1.2, 0.1, 0.3));
  CHECK(channel_norm(r.sc.e) == 0.0);
  CHECK(channel_norm(r.sc.a) == 0.0);
  OrderedObservables obs =
      observables_ordered(r.joint, r.sc, Dispersion::linear, r.p);
  CHECK(obs.dnu1 == 0.0);
  CHECK(obs.dnu2 == 0.0);
  CHECK(obs.dE1 == 0.0);
  CHECK(obs.dE2 == 0.0);
}

TEST_CASE("vacuum input: no absorption channel at all") {
  DimensionlessParams p = dimless(0.01, 0.0, 1.0, 1.2, 0.1, 0.4);
  EngineRun r = run_fock(p);
  CHECK(channel_norm(r.sc.a) == 0.0);
  OrderedObservables obs =
      observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  CHECK(std::abs(obs.dnu2 - vacuum_spontaneous(0.01, 1.2 + 0.05)) <= 1e-12);
  // first order vanishes without a phase reference
  CHECK(std::abs(obs.dnu1) <= 1e-16);

  DirectObservables direct =
      observables_direct(r.joint, r.sc, Dispersion::linear, p);
  // with no absorption, direct counting equals channel counting exactly
  CHECK(std::abs(direct.dnu_direct - obs.dnu2) <= 1e-15);
}

TEST_CASE("fock channel weights reproduce the golden-rule line shapes") {
  DimensionlessParams p = dimless(0.01, 3.0, 1.0, 0.9, 0.14, 0.2);
  EngineRun r = run_fock(p);
  const double fe = sinc_sq_half(0.9 + 0.07);
  const double fa = sinc_sq_half(0.9 - 0.07);
  CHECK(channel_norm(r.sc.e) ==
        doctest::Approx(1e-4 * 4.0 * fe).epsilon(1e-10));
  CHECK(channel_norm(r.sc.a) ==
        doctest::Approx(1e-4 * 3.0 * fa).epsilon(1e-10));
}

TEST_CASE("reference first-order point") {
  // ups = 0.01, nu0 = 100, Gamma = 1, theta = eps = phi0 = 0:
  // dnu1 = 4 * 0.01 * 10 * exp(-1/2) = 0.4 exp(-1/2)
  DimensionlessParams p = dimless(0.01, 100.0, 1.0, 0.0, 0.0, 0.0);
  EngineRun r = run_coherent(p);
  OrderedObservables obs =
      observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  CHECK(obs.dnu1 == doctest::Approx(0.24261226388505339).epsilon(1e-9));
  CHECK(obs.dE1 == doctest::Approx(-0.5 * 0.24261226388505339).epsilon(1e-9));
}

TEST_CASE("interaction-phase covariance") {
  DimensionlessParams p0 = dimless(0.01, 9.0, 0.8, 1.1, 0.06, 0.35);
  DimensionlessParams p1 = p0;
  p1.phi0 = p0.phi0 + 3.141592653589793;
  EngineRun r0 = run_coherent(p0);
  EngineRun r1 = run_coherent(p1);
  OrderedObservables o0 = observables_ordered(r0.joint, r0.sc, Dispersion::linear, p0);
  OrderedObservables o1 = observables_ordered(r1.joint, r1.sc, Dispersion::linear, p1);
  // first order flips sign, second order is phase-blind
  CHECK(o1.dnu1 == doctest::Approx(-o0.dnu1).epsilon(1e-12));
  CHECK(o1.dE1 == doctest::Approx(-o0.dE1).epsilon(1e-12));
  CHECK(std::abs(o1.dnu2 - o0.dnu2) <= 1e-14);
  CHECK(std::abs(o1.dE2 - o0.dE2) <= 1e-14);
}

TEST_CASE("second order ignores extinction and phase") {
  double ref = 0.0;
  bool have_ref = false;
  for (double gamma : {0.3, 3.0}) {
    for (double phi : {0.0, 1.0}) {
      DimensionlessParams p = dimless(0.01, 4.0, gamma, 1.2, 0.1, phi);
      EngineRun r = run_coherent(p);
      OrderedObservables o = observables_ordered(r.joint, r.sc, Dispersion::linear, p);
      if (!have_ref) {
        ref = o.dnu2;
        have_ref = true;
      }
      CHECK(std::abs(o.dnu2 - ref) <= 1e-12);
    }
  }
}

TEST_CASE("first-order energy-to-photon ratio is one half, unchirped") {
  DimensionlessParams p = dimless(0.01, 4.0, 1.0, 1.2, 0.07, 0.2);
  EngineRun r = run_coherent(p);
  OrderedObservables o = observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  CHECK(-o.dE1 / o.dnu1 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("direct counting decomposes exactly in energy") {
  DimensionlessParams p = dimless(0.01, 4.0, 1.0, 1.2, 0.1, 0.5, 1.0);
  EngineRun r = run_coherent(p);
  OrderedObservables o = observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  DirectObservables d = observables_direct(r.joint, r.sc, Dispersion::linear, p);
  CHECK(std::abs(d.dE_direct - (o.dE1 + o.dE2)) <= 1e-14);
  CHECK(d.norm_deficit >= 0.0);
  CHECK(d.norm_deficit <= 1e-3);
}

TEST_CASE("photon-number counting closes at half the interference term") {
  // The direct photon count keeps the initial-state second-order
  // renormalization that channel counting books separately; the residual is
  // -dnu1/2 up to O(ups^2 nu0^2) corrections.
  DimensionlessParams p = dimless(1e-4, 4.0, 1.0, 0.8, 0.0, 0.3);
  EngineRun r = run_coherent(p);
  OrderedObservables o = observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  DirectObservables d = observables_direct(r.joint, r.sc, Dispersion::linear, p);
  const double residual = d.dnu_direct - (o.dnu1 + o.dnu2 + o.cross_nu);
  CHECK(residual / o.dnu1 == doctest::Approx(-0.5).epsilon(2e-3));
}

TEST_CASE("second-order correspondence residual equals the cross term") {
  DimensionlessParams p = dimless(0.01, 4.0, 1.0, 1.2, 0.1, 0.5, 2.0);
  EngineRun r = run_coherent(p);
  OrderedObservables o = observables_ordered(r.joint, r.sc, Dispersion::linear, p);
  auto [r1, r2] = correspondence_residual(o);
  CHECK(r1 == o.dnu1 + o.dE1);
  CHECK(std::abs(r2 - o.cross_E) <= 1e-18);
}

TEST_CASE("electron spectrum: sidebands and mean shift") {
  DimensionlessParams p = dimless(0.01, 0.0, 7.0, 1.2, 0.1, 0.0);
  MomentumGrid grid = make_grid(p.rho(), 24, 8.0);
  ElectronAmplitudes elec = gaussian_wavepacket(p.rho(), 0.0, grid);
  PhotonAmplitudes ph = fock_state(0, 1);
  JointState joint = joint_state(elec, ph);
  ScatteredAmplitudes sc = scatter_first_order(joint, p);
  ElectronSpectrum spec = electron_spectrum(joint, sc);

  // vacuum: nothing in the absorption sideband, emission sideband at the
  // spontaneous rate; Gamma = 7 keeps the packets cleanly separated
  CHECK(spec.up <= 1e-10);
  CHECK(spec.down ==
        doctest::Approx(vacuum_spontaneous(0.01, 1.25)).epsilon(1e-9));

  DirectObservables d = observables_direct(joint, sc, Dispersion::linear, p);
  CHECK(spec.mean_shift == doctest::Approx(d.dE_direct).epsilon(1e-10));

  // the marginal integrates to the (non-renormalized) final-state norm
  double total = 0.0;
  for (double v : spec.marginal) total += v;
  CHECK(total == doctest::Approx(1.0 - d.norm_deficit).epsilon(1e-12));
  // at this order the vacuum run only gains norm from the emission channel
  CHECK(1.0 - d.norm_deficit ==
        doctest::Approx(1.0 + vacuum_spontaneous(0.01, 1.25)).epsilon(1e-8));
}

TEST_CASE("ladder truncation is tallied and gated, not ignored") {
  // A one-rung ladder on a Fock input loses the whole emission channel.
  DimensionlessParams p = dimless(0.01, 3.0, 1.0, 0.0, 0.0, 0.0);
  CHECK_THROWS_AS(run_fock(p, /*n_max=*/3), BudgetError);
}

TEST_CASE("perturbative budget: warn then refuse") {
  {
    DimensionlessParams p = dimless(0.005, 100.0, 1.0, 0.0, 0.0, 0.0);
    EngineRun r = run_coherent(p);
    CHECK(!r.sc.perturbative_warning);
    CHECK(r.sc.perturbative_measure ==
          doctest::Approx(0.005 * std::sqrt(242.0)).epsilon(1e-12));
  }
  {
    DimensionlessParams p = dimless(0.02, 100.0, 1.0, 0.0, 0.0, 0.0);
    EngineRun r = run_coherent(p);
    CHECK(r.sc.perturbative_warning);
    CHECK(r.sc.perturbative_measure ==
          doctest::Approx(0.02 * std::sqrt(242.0)).epsilon(1e-12));
  }
  {
    DimensionlessParams p = dimless(0.1, 100.0, 1.0, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(run_coherent(p), BudgetError);
  }
}

TEST_CASE("finite-momentum prefactors and quadratic dispersion") {
  DimensionlessParams p = dimless(0.01, 4.0, 1.0, 1.2, 0.1, 0.5);
  // quadratic dispersion requires a finite central momentum
  {
    EngineRun r = run_coherent(p);
    CHECK_THROWS_AS(
        observables_ordered(r.joint, r.sc, Dispersion::quadratic, p),
        ConfigError);
  }
  DimensionlessParams pf = p;
  pf.p0_over_prec = 1e5;
  pf.hqz_over_prec = 1.0;
  EngineRun rf = run_coherent(pf);
  OrderedObservables lin = observables_ordered(rf.joint, rf.sc, Dispersion::linear, pf);
  OrderedObservables quad =
      observables_ordered(rf.joint, rf.sc, Dispersion::quadratic, pf);
  // the quadratic correction is a 1e-5-level perturbation here
  CHECK(quad.dE1 == doctest::Approx(lin.dE1).epsilon(1e-4));
  CHECK(quad.dE2 == doctest::Approx(lin.dE2).epsilon(1e-4));

  // unity-prefactor limit: enormous p0 reproduces the default amplitudes
  EngineRun r0 = run_coherent(p);
  DimensionlessParams phuge = p;
  phuge.p0_over_prec = 1e14;
  EngineRun rh = run_coherent(phuge);
  OrderedObservables o0 = observables_ordered(r0.joint, r0.sc, Dispersion::linear, p);
  OrderedObservables oh =
      observables_ordered(rh.joint, rh.sc, Dispersion::linear, phuge);
  CHECK(oh.dnu1 == doctest::Approx(o0.dnu1).epsilon(1e-10));
  CHECK(oh.dnu2 == doctest::Approx(o0.dnu2).epsilon(1e-10));
}

TEST_CASE("scattering is bitwise deterministic") {
  DimensionlessParams p = dimless(0.01, 4.0, 1.0, 1.2, 0.1, 0.5, 1.0);
  EngineRun a = run_coherent(p);
  EngineRun b = run_coherent(p);
  OrderedObservables oa = observables_ordered(a.joint, a.sc, Dispersion::linear, p);
  OrderedObservables ob = observables_ordered(b.joint, b.sc, Dispersion::linear, p);
  CHECK(oa.dnu1 == ob.dnu1);
  CHECK(oa.dnu2 == ob.dnu2);
  CHECK(oa.dE1 == ob.dE1);
  CHECK(oa.dE2 == ob.dE2);
  CHECK(oa.cross_E == ob.cross_E);
}
