#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "qedsim/constants.hpp"
#include "qedsim/errors.hpp"
#include "qedsim/oracles.hpp"

using namespace qedsim;
namespace k = qedsim::constants;

TEST_CASE("lineshape basics") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(sinc_sq_half(0.0) == 1.0);
  // first zero of the lineshape
  CHECK(sinc_sq_half(2.0 * k::pi) <= 1e-30);
  CHECK(sinc_sq_half(2.0) == doctest::Approx(std::pow(std::sin(1.0), 2)).epsilon(1e-14));
}

TEST_CASE("lineshape derivative: branches agree and match finite differences") {
  CHECK(dsinc_sq_half(0.0) == 0.0);
  // series/closed-form seam: evaluate the closed form on the series side
  {
    const double x = 0.25 - 1e-9;  // the library uses the series here
    const double closed =
        2.0 * (x * std::sin(x) - 4.0 * std::pow(std::sin(x / 2.0), 2)) /
        (x * x * x);
    CHECK(std::abs(dsinc_sq_half(x) - closed) <= 1e-13);
  }
  for (double x : {0.05, 0.1, 0.5, 1.2, 2.6, 7.0}) {
    const double h = 1e-6;
    const double fd = (sinc_sq_half(x + h) - sinc_sq_half(x - h)) / (2.0 * h);
    CHECK(dsinc_sq_half(x) == doctest::Approx(fd).epsilon(5e-8));
    // oddness
    CHECK(dsinc_sq_half(-x) == doctest::Approx(-dsinc_sq_half(x)).epsilon(1e-14));
  }
}

TEST_CASE("classical point-particle energy exchange") {
  CHECK(classical_point_energy(2.0, 0.0, 0.0) == -2.0);
  CHECK(std::abs(classical_point_energy(2.0, 0.0, k::pi / 2.0)) <= 1e-15);
  // on the lineshape zero nothing is exchanged
  CHECK(std::abs(classical_point_energy(2.0, 2.0 * k::pi, 0.3)) <= 1e-15);
}

TEST_CASE("coherent oracle: reference value and structure") {
  ArcPrediction p = coherent_arc(0.01, 100.0, 1.0, 0.0, 0.0, 0.0);
  CHECK(p.dnu1 == doctest::Approx(0.24261226388505339).epsilon(1e-14));
  CHECK(p.dE1 == -p.dnu1);
  CHECK(p.dE2 == -p.dnu2);
  CHECK(p.dnu2 == doctest::Approx(1e-4 * (101.0 - 100.0)).epsilon(1e-12));

  // zero-extinction limit reproduces the classical exchange magnitude
  ArcPrediction q = coherent_arc(0.02, 25.0, 0.0, 1.1, 0.0, 0.6);
  const double classical = classical_point_energy(4.0 * 0.02 * 5.0, 1.1, 0.6);
  CHECK(q.dE1 == doctest::Approx(classical).epsilon(1e-14));

  // phase flip inverts first order only
  ArcPrediction r0 = coherent_arc(0.01, 4.0, 1.0, 1.2, 0.1, 0.3);
  ArcPrediction r1 = coherent_arc(0.01, 4.0, 1.0, 1.2, 0.1, 0.3 + k::pi);
  CHECK(r1.dnu1 == doctest::Approx(-r0.dnu1).epsilon(1e-14));
  CHECK(r1.dnu2 == r0.dnu2);

  // vacuum reduction
  ArcPrediction v = coherent_arc(0.05, 0.0, 1.0, k::pi, 0.0, 0.0);
  CHECK(v.dnu1 == 0.0);
  CHECK(v.dnu2 == doctest::Approx(1.0132118364233780e-3).epsilon(1e-13));
}

TEST_CASE("fock oracle: no first order, golden-rule second order") {
  ArcPrediction p = fock_arc(0.01, 5.0, 1.2, 0.1);
  CHECK(p.dnu1 == 0.0);
  CHECK(p.dE1 == 0.0);
  const double fe = sinc_sq_half(1.25);
  const double fa = sinc_sq_half(1.15);
  CHECK(p.dnu2 == doctest::Approx(1e-4 * (6.0 * fe - 5.0 * fa)).epsilon(1e-14));
  // without the recoil split the nu0 dependence cancels exactly
  CHECK(fock_arc(0.01, 50.0, 0.7, 0.0).dnu2 ==
        doctest::Approx(fock_arc(0.01, 0.0, 0.7, 0.0).dnu2).epsilon(1e-15));
}

TEST_CASE("vacuum spontaneous emission values") {
  CHECK(vacuum_spontaneous(0.05, 0.0) == doctest::Approx(2.5e-3).epsilon(1e-15));
  CHECK(vacuum_spontaneous(0.05, k::pi) ==
        doctest::Approx(1.0132118364233780e-3).epsilon(1e-13));
  CHECK(vacuum_spontaneous(0.05, 2.0 * k::pi) <= 1e-32);
}

TEST_CASE("squeezed oracle: occupation enhancement in the split terms") {
  // xi = 0 reduces to the coherent oracle exactly
  ArcPrediction c = coherent_arc(0.01, 4.0, 1.0, 1.2, 0.1, 0.3);
  ArcPrediction s0 = squeezed_arc(0.01, 4.0, 0.0, 1.0, 1.2, 0.1, 0.3);
  CHECK(s0.dnu1 == c.dnu1);
  CHECK(s0.dnu2 == c.dnu2);

  // the squeeze shifts only through nu0 -> nu0 + sinh^2|xi|
  const double sh2 = std::pow(std::sinh(1.0), 2);
  ArcPrediction s1 = squeezed_arc(0.01, 4.0, 1.0, 1.0, 1.2, 0.1, 0.3);
  const double fe = sinc_sq_half(1.25);
  const double fa = sinc_sq_half(1.15);
  CHECK(s1.dnu2 - s0.dnu2 ==
        doctest::Approx(1e-4 * sh2 * (fe - fa)).epsilon(1e-12));
  // first order does not see the squeeze occupation
  CHECK(s1.dnu1 == s0.dnu1);
  // sign of xi is irrelevant at second order
  CHECK(squeezed_arc(0.01, 4.0, -1.0, 1.0, 1.2, 0.1, 0.3).dnu2 == s1.dnu2);
}

TEST_CASE("squeezed-vacuum emission formula") {
  CHECK(squeezed_vacuum_emission(0.01, 1.2, 0.1, 0.0) ==
        doctest::Approx(vacuum_spontaneous(0.01, 1.2)).epsilon(1e-15));
  // at the lineshape peak the derivative term vanishes identically
  CHECK(squeezed_vacuum_emission(0.01, 0.0, 0.1, 2.0) ==
        doctest::Approx(vacuum_spontaneous(0.01, 0.0)).epsilon(1e-15));
  // Richardson at the lineshape peak, where the formula is O(eps^2)-exact:
  // residual/eps^2 must not grow as eps halves
  auto residual = [](double eps) {
    const double exact = squeezed_arc(0.01, 0.0, 1.0, 1.0, 0.0, eps, 0.0).dnu2;
    return std::abs(exact - squeezed_vacuum_emission(0.01, 0.0, eps, 1.0));
  };
  CHECK(residual(0.1) / (0.1 * 0.1) <= 1.1 * residual(0.2) / (0.2 * 0.2));
}

TEST_CASE("low-gain curve and its extremal detuning") {
  CHECK(fel_low_gain(0.01, 0.0, 1.2, 0.1) ==
        doctest::Approx(vacuum_spontaneous(0.01, 1.2)).epsilon(1e-15));
  // quadratic convergence to the exact quantum curve at theta = 0
  auto diff = [](double eps) {
    return std::abs(fock_arc(0.01, 3.0, 0.0, eps).dnu2 -
                    fel_low_gain(0.01, 3.0, 0.0, eps));
  };
  const double ratio = diff(0.05) / diff(0.1);
  CHECK(ratio == doctest::Approx(0.25).epsilon(0.02));

  const double x = fel_extremal_detuning();
  CHECK(x == doctest::Approx(2.6061634).epsilon(1e-5));
  // it is a stationary point of dF, i.e. an extremum of the gain slope
  const double h = 1e-5;
  CHECK(std::abs(dsinc_sq_half(x + h) - dsinc_sq_half(x - h)) / (2.0 * h) <=
        1e-4);
}

TEST_CASE("gaussian overlap suite: identities and printed-form discrepancies") {
  const double rho = 0.5, c_d = 1.0;
  const double r_tilde = 1e-3;  // p_rec / p0
  const double q_tilde = 1e-3;  // hbar q_z / p0 (synchronous: equals r_tilde)
  AppendixOverlaps s = gaussian_overlap_suite(rho, c_d, q_tilde, r_tilde);
  const double gamma = std::sqrt(1.0 + c_d * c_d) / (2.0 * rho);
  const double m = std::exp(-0.5 * gamma * gamma);

  // zeroth moments of the density families: quadrature equals printed form
  CHECK(std::abs(s.a1_zeroth.quadrature - s.a1_zeroth.printed) <= 1e-10);
  CHECK(std::abs(s.a2_zeroth.quadrature - s.a2_zeroth.printed) <= 1e-10);
  // first moments of the density families: unity up to O(r_tilde)
  CHECK(std::abs(s.a1_first.quadrature - 1.0) <= 5e-3);
  CHECK(std::abs(s.a2_first.quadrature - 1.0) <= 5e-3);
  CHECK(s.a1_first.printed == std::complex<double>(1.0, 0.0));

  // shifted-product zeroth moment: exactly the extinction factor when
  // hbar q_z = p_rec
  CHECK(std::abs(s.a3_zeroth.quadrature - m) <= 1e-12);
  CHECK(std::abs(s.a3_zeroth.printed - m) <= 1e-15);

  // shifted-product first moment: the quadrature sits at half the printed
  // magnitude — the discrepancy is exposed, not reconciled
  CHECK(std::abs(s.a3_first.quadrature - (-0.5 * m)) <= 2e-3 * m);
  CHECK(std::abs(s.a3_first.printed - (-m)) <= 1e-15);
  CHECK(std::abs(s.a3_first.quadrature - s.a3_first.printed) >= 0.4 * m);

  // complex family: the chirp-induced imaginary part of the zeroth moment
  // carries the opposite sign from the printed form
  CHECK(std::abs(s.a4_zeroth.quadrature.imag() - 0.5 * m * r_tilde * c_d) <=
        1e-6 * m);
  CHECK(s.a4_zeroth.printed.imag() ==
        doctest::Approx(-0.5 * m * r_tilde * c_d).epsilon(1e-12));
  CHECK(s.a4_zeroth.quadrature.imag() * s.a4_zeroth.printed.imag() < 0.0);

  // complex family first moment: half magnitude again, with the chirp phase
  const std::complex<double> expected4(0.5 * m, 0.5 * m * c_d);
  CHECK(std::abs(s.a4_first.quadrature - expected4) <= 2e-3 * m);
  CHECK(std::abs(s.a4_first.printed - std::complex<double>(m, 0.0)) <= 1e-15);
}

TEST_CASE("overlap suite away from the synchronous point") {
  // with hbar q_z = 0 the shifted zeroth moment picks up the recoil weight
  AppendixOverlaps s = gaussian_overlap_suite(0.5, 0.0, 0.0, 1e-3);
  const double m = std::exp(-0.5);
  CHECK(std::abs(s.a3_zeroth.quadrature - m * (1.0 + 0.5e-3)) <= 1e-9);
}

TEST_CASE("grating radiation density: pipeline identity and scalings") {
  const double omega = 1.2e13, length = 1e-3, beta = 0.5, eta = 0.3;
  const double a_eff = 1e-8;
  const double v0 = beta * k::c_light;
  const double volume = a_eff * k::c_light * length / v0;
  const double theta =
      smith_purcell_detuning(omega, length, beta, k::pi / 3.0, 100e-6, 1);
  SmithPurcellDensity d =
      smith_purcell_density(omega, length, beta, eta, theta, a_eff, volume);
  CHECK(d.direct > 0.0);
  CHECK(d.pipeline == doctest::Approx(d.direct).epsilon(1e-12));

  // quadratic in interaction length and coupling efficiency
  CHECK(smith_purcell_density(omega, 2 * length, beta, eta, theta, a_eff, volume)
            .direct == doctest::Approx(4.0 * d.direct).epsilon(1e-14));
  CHECK(smith_purcell_density(omega, length, beta, 2 * eta, theta, a_eff, volume)
            .direct == doctest::Approx(4.0 * d.direct).epsilon(1e-14));

  // a mismatched quantization volume breaks the identity proportionally
  SmithPurcellDensity d2 =
      smith_purcell_density(omega, length, beta, eta, theta, a_eff, 2.0 * volume);
  CHECK(d2.pipeline == doctest::Approx(2.0 * d.direct).epsilon(1e-12));
  CHECK(d2.direct == d.direct);

  CHECK_THROWS_AS(
      smith_purcell_density(-1.0, length, beta, eta, theta, a_eff, volume),
      ConfigError);
  CHECK_THROWS_AS(
      smith_purcell_density(omega, length, 1.5, eta, theta, a_eff, volume),
      ConfigError);
}

TEST_CASE("grating detuning geometry") {
  // at the synchronous frequency the accumulated detuning vanishes
  const double beta = 0.5, grating = 100e-6, theta_obs = k::pi / 3.0;
  const double qfac = std::cos(theta_obs) / k::c_light;
  const double omega_sync = (2.0 * k::pi / grating) /
                            (1.0 / (beta * k::c_light) - qfac);
  const double resid =
      smith_purcell_detuning(omega_sync, 1e-3, beta, theta_obs, grating, 1);
  CHECK(std::abs(resid) <= 1e-6);
  // detuning is linear in the interaction length
  CHECK(smith_purcell_detuning(1.2e13, 2e-3, beta, theta_obs, grating, 1) ==
        doctest::Approx(
            2.0 * smith_purcell_detuning(1.2e13, 1e-3, beta, theta_obs,
                                         grating, 1))
            .epsilon(1e-12));
}
