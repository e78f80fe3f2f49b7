#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <string>

#include "qedsim/errors.hpp"
#include "qedsim/states.hpp"
#include "qedsim/summation.hpp"

using namespace qedsim;

namespace {

double norm_sq(const std::vector<cplx>& c) {
  NeumaierSum s;
  for (const cplx& z : c) s.add(std::norm(z));
  return s.value();
}

double variance_n(const PhotonAmplitudes& ph) {
  NeumaierSum n1, n2;
  for (int nu = 0; nu <= ph.n_max(); ++nu) {
    const double w = std::norm(ph.c[size_t(nu)]);
    n1.add(nu * w);
    n2.add(double(nu) * nu * w);
  }
  const double mean = n1.value();
  return n2.value() - mean * mean;
}

}  // namespace

TEST_CASE("grid construction and alignment") {
  MomentumGrid g = make_grid(1.0);
  CHECK(g.m_align == 16);
  CHECK(g.half_width == 160);  // ceil((8*1 + 2) * 16)
  CHECK(g.dp() == doctest::Approx(1.0 / 16.0).epsilon(1e-16));
  CHECK(g.x(g.center()) == 0.0);
  CHECK(g.x(g.center() + g.m_align) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.size() == 2 * g.half_width + 1);

  // alignment: one recoil is an exact integer index shift
  MomentumGrid g2 = make_grid(0.37, 24, 9.0);
  CHECK(g2.x(g2.center() + g2.m_align) - g2.x(g2.center()) ==
        doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_grid(1.0, 7, 8.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1.0, 16, 4.0), ConfigError);
  CHECK_THROWS_AS(make_grid(0.0, 16, 8.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1e6, 16, 8.0), BudgetError);  // > 5e7 points
}

TEST_CASE("gaussian wavepacket: normalization and chirped overlap") {
  for (double rho : {0.1, 0.5, 2.0, 5.0}) {
    for (double c_d : {0.0, 1.0, -5.0}) {
      MomentumGrid g = make_grid(rho);
      ElectronAmplitudes e = gaussian_wavepacket(rho, c_d, g);
      CHECK(norm_sq(e.c) == doctest::Approx(1.0).epsilon(1e-12));

      const cplx ov = shifted_overlap(e);
      const double gamma = std::sqrt(1.0 + c_d * c_d) / (2.0 * rho);
      CHECK(std::abs(ov) ==
            doctest::Approx(std::exp(-0.5 * gamma * gamma)).epsilon(1e-8));
      // chirped Gaussian overlap stays purely real
      CHECK(std::abs(ov.imag()) <= 1e-14);
    }
  }
}

TEST_CASE("unchirped wavepacket amplitudes are real and positive") {
  MomentumGrid g = make_grid(0.5);
  ElectronAmplitudes e = gaussian_wavepacket(0.5, 0.0, g);
  for (const cplx& z : e.c) {
    CHECK(z.imag() == 0.0);
    CHECK(z.real() >= 0.0);
  }
}

TEST_CASE("wavepacket refuses a grid that cannot hold its tails") {
  MomentumGrid narrow;
  narrow.m_align = 16;
  narrow.half_width = 80;  // extent 5 p_rec < 8*1 + 2
  CHECK_THROWS_AS(gaussian_wavepacket(1.0, 0.0, narrow), BudgetError);
}

TEST_CASE("fock states") {
  PhotonAmplitudes ph = fock_state(3, default_fock_nmax(3));
  CHECK(ph.n_max() == 4);
  CHECK(norm_sq(ph.c) == 1.0);
  CHECK(ph.c[3] == cplx(1.0, 0.0));
  PhotonExpectations ex = photon_expectations(ph);
  CHECK(ex.n == 3.0);
  CHECK(std::abs(ex.a) == 0.0);
  CHECK(ex.aadag == 4.0);
  CHECK(ph.tail_mass == 0.0);

  CHECK_THROWS_AS(fock_state(-1, 4), ConfigError);
  CHECK_THROWS_AS(fock_state(5, 4), BudgetError);
}

TEST_CASE("coherent states: Poisson statistics and expectations") {
  for (double nu0 : {1.0, 4.0, 100.0}) {
    PhotonAmplitudes ph = coherent_state(nu0, default_coherent_nmax(nu0));
    CHECK(norm_sq(ph.c) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ph.tail_mass <= 1e-12);
    PhotonExpectations ex = photon_expectations(ph);
    CHECK(ex.a.real() == doctest::Approx(std::sqrt(nu0)).epsilon(1e-10));
    CHECK(std::abs(ex.a.imag()) <= 1e-15);
    CHECK(ex.n == doctest::Approx(nu0).epsilon(1e-10));
    CHECK(ex.aadag == doctest::Approx(nu0 + 1.0).epsilon(1e-10));
  }
  // Poisson: Var(n) = <n>
  for (double nu0 : {1.0, 47.0, 400.0}) {
    PhotonAmplitudes ph = coherent_state(nu0, default_coherent_nmax(nu0));
    CHECK(variance_n(ph) / nu0 == doctest::Approx(1.0).epsilon(1e-6));
  }
  // vacuum limit
  PhotonAmplitudes vac = coherent_state(0.0, default_coherent_nmax(0.0));
  CHECK(vac.c[0].real() == doctest::Approx(1.0).epsilon(1e-15));

  // amplitudes are all real and nonnegative (phase carried by phi0)
  PhotonAmplitudes ph = coherent_state(7.3, default_coherent_nmax(7.3));
  for (const cplx& z : ph.c) {
    CHECK(z.imag() == 0.0);
    CHECK(z.real() >= 0.0);
  }

  // a too-short ladder is refused with the requirement stated
  try {
    coherent_state(100.0, 110);
    CHECK(false);
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("n_max") != std::string::npos);
  }
}

TEST_CASE("squeezed states reduce to coherent at xi = 0") {
  const int n_max = default_squeezed_nmax(4.0, 0.0);
  PhotonAmplitudes coh = coherent_state(4.0, n_max);
  for (SqueezeOrdering ord : {SqueezeOrdering::sd, SqueezeOrdering::ds}) {
    PhotonAmplitudes sq = squeezed_coherent_state(4.0, 0.0, ord, n_max);
    for (int nu = 0; nu <= n_max; ++nu) {
      CHECK(std::abs(sq.c[size_t(nu)] - coh.c[size_t(nu)]) <= 1e-12);
    }
  }
}

TEST_CASE("squeezed vacuum: parity, occupation, thermal-like variance") {
  for (double xi : {0.5, 1.0, -1.0, 2.0}) {
    const int n_max = default_squeezed_nmax(0.0, xi);
    PhotonAmplitudes ph =
        squeezed_coherent_state(0.0, xi, SqueezeOrdering::sd, n_max);
    CHECK(norm_sq(ph.c) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ph.tail_mass <= 1e-12);
    // only even Fock numbers are populated — exactly
    for (int nu = 1; nu <= ph.n_max(); nu += 2) {
      CHECK(ph.c[size_t(nu)] == cplx(0.0, 0.0));
    }
    PhotonExpectations ex = photon_expectations(ph);
    const double sh = std::sinh(std::abs(xi));
    CHECK(ex.n == doctest::Approx(sh * sh).epsilon(1e-8));
    CHECK(std::abs(ex.a) <= 1e-12);
  }
}

TEST_CASE("displaced squeezed states: ordering-dependent expectations") {
  const double nu0 = 4.0, xi = 0.7;
  const double alpha = std::sqrt(nu0);
  const double sh = std::sinh(xi);
  const int n_max = default_squeezed_nmax(nu0, xi);

  PhotonAmplitudes sd =
      squeezed_coherent_state(nu0, xi, SqueezeOrdering::sd, n_max);
  PhotonExpectations ex_sd = photon_expectations(sd);
  CHECK(ex_sd.a.real() ==
        doctest::Approx(alpha * std::exp(-xi)).epsilon(1e-8));
  CHECK(ex_sd.n ==
        doctest::Approx(nu0 * std::exp(-2.0 * xi) + sh * sh).epsilon(1e-8));

  PhotonAmplitudes ds =
      squeezed_coherent_state(nu0, xi, SqueezeOrdering::ds, n_max);
  PhotonExpectations ex_ds = photon_expectations(ds);
  CHECK(ex_ds.a.real() == doctest::Approx(alpha).epsilon(1e-8));
  CHECK(ex_ds.n == doctest::Approx(nu0 + sh * sh).epsilon(1e-8));

  // the ladder identity <a adag> = <adag a> + 1 as a computed property
  CHECK(ex_sd.aadag == doctest::Approx(ex_sd.n + 1.0).epsilon(1e-10));
  CHECK(ex_ds.aadag == doctest::Approx(ex_ds.n + 1.0).epsilon(1e-10));
}

TEST_CASE("squeezed construction budgets") {
  CHECK_THROWS_AS(
      squeezed_coherent_state(0.0, 5.5, SqueezeOrdering::sd, 100000),
      BudgetError);
  // ladder visibly too short for the occupation
  CHECK_THROWS_AS(squeezed_coherent_state(100.0, 1.0, SqueezeOrdering::ds, 40),
                  BudgetError);
  // negative occupations and ladders are configuration mistakes
  CHECK_THROWS_AS(squeezed_coherent_state(-1.0, 0.5, SqueezeOrdering::sd, 40),
                  ConfigError);
  CHECK_THROWS_AS(coherent_state(-2.0, 40), ConfigError);
}

TEST_CASE("default ladder sizes satisfy the tail budget") {
  CHECK(default_fock_nmax(0) == 1);
  CHECK(default_fock_nmax(7) == 8);
  CHECK(default_coherent_nmax(100.0) == 241);
  // squeezed default covers the amplified occupation with reserve
  const int n = default_squeezed_nmax(0.0, 1.0);
  CHECK(n >= 100);
  PhotonAmplitudes ph = squeezed_coherent_state(0.0, 1.0, SqueezeOrdering::sd, n);
  CHECK(ph.tail_mass <= 1e-12);
}

TEST_CASE("joint state is the exact outer product") {
  MomentumGrid g = make_grid(0.5, 8, 8.0);
  ElectronAmplitudes e = gaussian_wavepacket(0.5, 1.0, g);
  const int n_max = default_coherent_nmax(2.0);
  PhotonAmplitudes ph = coherent_state(2.0, n_max);
  JointState joint = joint_state(e, ph);
  CHECK(joint.n_states == n_max + 1);
  CHECK(norm_sq(joint.c) == doctest::Approx(1.0).epsilon(1e-12));
  // spot cells
  const int k = g.center() + 3;
  CHECK(joint.at(k, 5) == e.c[size_t(k)] * ph.c[5]);

  // photon marginal reproduces |c_nu|^2
  NeumaierSum m5;
  for (int kk = 0; kk < g.size(); ++kk) m5.add(std::norm(joint.at(kk, 5)));
  CHECK(m5.value() == doctest::Approx(std::norm(ph.c[5])).epsilon(1e-12));
}
