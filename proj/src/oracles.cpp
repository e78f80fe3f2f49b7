#include "qedsim/oracles.hpp"

#include <cmath>
#include <vector>

#include "qedsim/constants.hpp"
#include "qedsim/errors.hpp"
#include "qedsim/summation.hpp"

namespace qedsim {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double sinc_sq_half(double x) {
  const double s = sinc(0.5 * x);
  return s * s;
}

double dsinc_sq_half(double x) {
  const double ax = std::abs(x);
  if (ax < 0.25) {
    // Odd Taylor series of d/dx [2(1-cos x)/x^2]; the x^9 term at the branch
    // point is ~4e-17, so truncation sits below the 1e-14 design tolerance.
    const double x2 = x * x;
    return x * (-1.0 / 6.0 +
                x2 * (1.0 / 90.0 +
                      x2 * (-1.0 / 3360.0 +
                            x2 * (1.0 / 226800.0 - x2 / 23950080.0))));
  }
  const double sh = std::sin(0.5 * x);
  return 2.0 * (x * std::sin(x) - 4.0 * sh * sh) / (x * x * x);
}

double classical_point_energy(double amplitude, double theta_bar, double phi0) {
  return -amplitude * sinc(0.5 * theta_bar) * std::cos(0.5 * theta_bar + phi0);
}

namespace {

// Shared second-order lineshape: upsilon^2 [(n+1) F(theta_e) - n F(theta_a)]
// for an effective photon number n.
double second_order(double upsilon, double n_eff, double theta_bar,
                    double epsilon) {
  const double fe = sinc_sq_half(theta_bar + 0.5 * epsilon);
  const double fa = sinc_sq_half(theta_bar - 0.5 * epsilon);
  return upsilon * upsilon * ((n_eff + 1.0) * fe - n_eff * fa);
}

double first_order(double upsilon, double nu0, double Gamma, double theta_bar,
                   double phi0) {
  return 4.0 * upsilon * std::sqrt(nu0) * std::exp(-0.5 * Gamma * Gamma) *
         sinc(0.5 * theta_bar) * std::cos(0.5 * theta_bar + phi0);
}

ArcPrediction finish(double dnu1, double dnu2, ArcPrediction::Source tag) {
  ArcPrediction p;
  p.dnu1 = dnu1;
  p.dnu2 = dnu2;
  p.dE1 = -dnu1;  // exact correspondence, by construction of the closed forms
  p.dE2 = -dnu2;
  p.tag = tag;
  return p;
}

}  // namespace

ArcPrediction coherent_arc(double upsilon, double nu0, double Gamma,
                           double theta_bar, double epsilon, double phi0) {
  if (!(nu0 >= 0.0)) throw ConfigError("coherent_arc: nu0 must be >= 0");
  return finish(first_order(upsilon, nu0, Gamma, theta_bar, phi0),
                second_order(upsilon, nu0, theta_bar, epsilon),
                ArcPrediction::Source::coherent);
}

ArcPrediction fock_arc(double upsilon, double nu0, double theta_bar,
                       double epsilon) {
  if (!(nu0 >= 0.0)) throw ConfigError("fock_arc: nu0 must be >= 0");
  return finish(0.0, second_order(upsilon, nu0, theta_bar, epsilon),
                nu0 == 0.0 ? ArcPrediction::Source::vacuum
                           : ArcPrediction::Source::fock);
}

double vacuum_spontaneous(double upsilon, double theta_bar) {
  return upsilon * upsilon * sinc_sq_half(theta_bar);
}

ArcPrediction squeezed_arc(double upsilon, double nu0, double xi_sq,
                           double Gamma, double theta_bar, double epsilon,
                           double phi0) {
  if (!(nu0 >= 0.0)) throw ConfigError("squeezed_arc: nu0 must be >= 0");
  const double sh = std::sinh(std::abs(xi_sq));
  return finish(first_order(upsilon, nu0, Gamma, theta_bar, phi0),
                second_order(upsilon, nu0 + sh * sh, theta_bar, epsilon),
                ArcPrediction::Source::squeezed);
}

double squeezed_vacuum_emission(double upsilon, double theta_bar,
                                double epsilon, double xi_sq) {
  const double sh = std::sinh(std::abs(xi_sq));
  return upsilon * upsilon *
         (sinc_sq_half(theta_bar) +
          sh * sh * epsilon * dsinc_sq_half(theta_bar));
}

double fel_low_gain(double upsilon, double nu0, double theta_bar,
                    double epsilon) {
  return upsilon * upsilon *
         (sinc_sq_half(theta_bar) + nu0 * epsilon * dsinc_sq_half(theta_bar));
}

double fel_extremal_detuning() {
  // Golden-section minimization of dF on [1.5, 4]: the most negative slope
  // of the lineshape marks the maximum-gain detuning.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 1.5, b = 4.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = dsinc_sq_half(c);
  double fd = dsinc_sq_half(d);
  for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = dsinc_sq_half(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = dsinc_sq_half(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

constexpr int kQuadPoints = 400001;

// Trapezoid integration of f over [-X, X]; the integrands are products of
// Gaussians so the rule converges superexponentially in the point count.
template <typename F>
std::complex<double> trapezoid(double X, F&& f) {
  const double dx = 2.0 * X / (kQuadPoints - 1);
  NeumaierSum re, im;
  for (int i = 0; i < kQuadPoints; ++i) {
    const double x = -X + i * dx;
    std::complex<double> v = f(x);
    const double w = (i == 0 || i == kQuadPoints - 1) ? 0.5 : 1.0;
    re.add(w * v.real());
    im.add(w * v.imag());
  }
  return {re.value() * dx, im.value() * dx};
}

}  // namespace

AppendixOverlaps gaussian_overlap_suite(double rho, double c_D,
                                        double hqz_over_p0,
                                        double prec_over_p0) {
  if (!(rho > 0.0)) {
    throw ConfigError("gaussian_overlap_suite: rho must be positive");
  }
  using std::complex;
  const double q = hqz_over_p0;   // hbar q_z / p0
  const double r = prec_over_p0;  // p_rec / p0
  const double X = 14.0 * rho + 2.5;
  const double norm = 1.0 / std::sqrt(2.0 * constants::pi * rho * rho);
  const double Gamma = std::sqrt(1.0 + c_D * c_D) / (2.0 * rho);
  const double M = std::exp(-0.5 * Gamma * Gamma);

  // Continuum amplitude (x in p_rec units, center x = 0):
  // c(x) = (2 pi rho^2)^{-1/4} exp(-x^2 (1 + i c_D)/(4 rho^2)).
  auto amp = [&](double x) -> complex<double> {
    const double a = x * x / (4.0 * rho * rho);
    return std::sqrt(norm) * std::polar(std::exp(-a), -a * c_D);
  };
  auto density = [&](double x) {  // |c(x)|^2
    return norm * std::exp(-x * x / (2.0 * rho * rho));
  };
  // Linear weights: emission (p + p_rec - hbar q_z/2)/p0 and absorption
  // (p - p_rec + hbar q_z/2)/p0 at momentum offset x.
  auto w_e = [&](double x) { return 1.0 + r * (x + 1.0) - 0.5 * q; };
  auto w_a = [&](double x) { return 1.0 + r * (x - 1.0) + 0.5 * q; };
  auto p_over_p0 = [&](double x) { return 1.0 + r * x; };

  AppendixOverlaps out;

  // Family 1: emission density |c(p + p_rec)|^2 with squared weight.
  out.a1_zeroth.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    const double w = w_e(x);
    return w * w * density(x + 1.0);
  });
  out.a1_zeroth.printed = (1.0 - 0.5 * q) * (1.0 - 0.5 * q) + rho * r * rho * r;
  out.a1_first.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    const double w = w_e(x);
    return w * w * p_over_p0(x) * density(x + 1.0);
  });
  out.a1_first.printed = 1.0;  // ~= p0, normalized to p0

  // Family 2: absorption density |c(p - p_rec)|^2 with squared weight.
  out.a2_zeroth.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    const double w = w_a(x);
    return w * w * density(x - 1.0);
  });
  out.a2_zeroth.printed = (1.0 + 0.5 * q) * (1.0 + 0.5 * q) + rho * r * rho * r;
  out.a2_first.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    const double w = w_a(x);
    return w * w * p_over_p0(x) * density(x - 1.0);
  });
  out.a2_first.printed = 1.0;

  // Family 3: emission-shifted product Re{c*(p) c(p + p_rec)} with linear
  // weight; first moment in p_rec units.
  auto overlap_e = [&](double x) -> complex<double> {
    return std::conj(amp(x)) * amp(x + 1.0);
  };
  out.a3_zeroth.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    return w_e(x) * std::real(overlap_e(x));
  });
  out.a3_zeroth.printed = M;
  out.a3_first.quadrature = trapezoid(X, [&](double x) -> complex<double> {
    return w_e(x) * std::real(overlap_e(x)) * x;
  });
  out.a3_first.printed = -M;  // printed as -(hbar omega/v0) e^{-Gamma^2/2}

  // Family 4: absorption-shifted complex product c*(p) c(p - p_rec).
  auto overlap_a = [&](double x) -> complex<double> {
    return std::conj(amp(x)) * amp(x - 1.0);
  };
  out.a4_zeroth.quadrature =
      trapezoid(X, [&](double x) { return w_a(x) * overlap_a(x); });
  out.a4_zeroth.printed =
      M * (1.0 - 0.5 * complex<double>(r - q, r * c_D));
  out.a4_first.quadrature =
      trapezoid(X, [&](double x) { return w_a(x) * overlap_a(x) * x; });
  out.a4_first.printed = M;

  return out;
}

SmithPurcellDensity smith_purcell_density(double omega, double L, double beta,
                                          double eta_qm, double theta_bar,
                                          double A_eff, double V) {
  namespace k = constants;
  if (!(omega > 0.0 && L > 0.0 && A_eff > 0.0 && V > 0.0)) {
    throw ConfigError(
        "smith_purcell_density: omega, L, A_eff and V must be positive");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ConfigError("smith_purcell_density: beta must lie in (0, 1)");
  }
  const double eta2 = eta_qm * eta_qm;
  const double line = sinc_sq_half(theta_bar);
  const double zmu = std::sqrt(k::mu0 / k::eps0);  // free-space impedance

  SmithPurcellDensity out;
  out.direct = k::elementary_charge * k::elementary_charge * L * L /
               (64.0 * k::pi * k::pi) * (omega * omega) /
               (k::c_light * k::c_light) * zmu * eta2 * line;

  // Density-of-states route: quantize the travelling mode over the
  // interaction time, convert the synchronous harmonic to the coupling, and
  // weight the vacuum emission by the free-space density of states.
  const double v0 = beta * k::c_light;
  const double t1 = L / v0;
  const double e_perp_sq = 2.0 * k::hbar * omega * zmu / (A_eff * t1);
  const double e_qz = eta_qm * std::sqrt(e_perp_sq);
  const double ups = k::elementary_charge * e_qz * L / (4.0 * k::hbar * omega);
  const double dos = omega * omega * V /
                     (8.0 * k::pi * k::pi * k::c_light * k::c_light *
                      k::c_light);
  out.pipeline = k::hbar * omega * dos * ups * ups * line;
  return out;
}

double smith_purcell_detuning(double omega, double L, double beta,
                              double Theta, double grating_period,
                              int harmonic) {
  namespace k = constants;
  if (!(grating_period > 0.0)) {
    throw ConfigError("smith_purcell_detuning: grating_period must be > 0");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ConfigError("smith_purcell_detuning: beta must lie in (0, 1)");
  }
  const double v0 = beta * k::c_light;
  const double q_z = (omega / k::c_light) * std::cos(Theta) +
                     harmonic * 2.0 * k::pi / grating_period;
  return (omega / v0 - q_z) * L;
}

}  // namespace qedsim
