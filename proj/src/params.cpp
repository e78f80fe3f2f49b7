#include "qedsim/params.hpp"

#include <cmath>
#include <sstream>

#include "qedsim/constants.hpp"
#include "qedsim/errors.hpp"

namespace qedsim {

namespace {

void require(bool ok, const char* field, const char* why) {
  if (!ok) {
    std::ostringstream msg;
    msg << "invalid scenario: " << field << " " << why;
    throw ConfigError(msg.str());
  }
}

}  // namespace

DimensionlessParams derive_dimensionless(const PhysicalScenario& s) {
  namespace k = constants;
  require(s.beta > 0.0 && s.beta < 1.0, "beta", "must lie in (0, 1)");
  require(s.wavelength > 0.0, "wavelength", "must be positive");
  require(s.interaction_length > 0.0, "interaction_length", "must be positive");
  require(s.sigma_z0 > 0.0, "sigma_z0", "must be positive");
  require(s.nu0 >= 0.0, "nu0", "must be nonnegative");
  require(std::isfinite(s.drift_length), "drift_length", "must be finite");
  if (s.upsilon) {
    require(*s.upsilon >= 0.0, "upsilon", "must be nonnegative");
  }

  const double v0 = s.beta * k::c_light;
  const double omega = 2.0 * k::pi * k::c_light / s.wavelength;
  const double lorentz = 1.0 / std::sqrt(1.0 - s.beta * s.beta);

  DimensionlessParams p;
  p.gamma0 = 2.0 * k::pi * s.sigma_z0 / (s.beta * s.wavelength);

  // Chirp c_D = (spreading rate) x (drift time): the minimum-uncertainty
  // spread sigma_p0 = hbar/(2 sigma_z0) spreads at 2 sigma_p0^2/(m* hbar)
  // with the longitudinal effective mass m* = gamma^3 m_e.
  const double sigma_p0 = k::hbar / (2.0 * s.sigma_z0);
  const double m_eff = lorentz * lorentz * lorentz * k::electron_mass;
  const double spread_rate = 2.0 * sigma_p0 * sigma_p0 / (m_eff * k::hbar);
  const double t_D = s.drift_length / v0;
  p.c_D = spread_rate * t_D;

  if (s.upsilon) {
    p.upsilon = *s.upsilon;
  } else if (s.E_qz) {
    require(*s.E_qz >= 0.0, "E_qz", "must be nonnegative");
    p.upsilon = k::elementary_charge * (*s.E_qz) * s.interaction_length /
                (4.0 * k::hbar * omega);
  } else {
    p.upsilon = 0.0;
  }

  p.theta_bar = s.theta_bar;
  p.epsilon = s.epsilon;
  p.phi0 = s.phi0;
  p.nu0 = s.nu0;
  p.xi_sq = s.xi_sq;
  return p;
}

double gamma_extinction(double gamma0, double c_D) {
  if (!(gamma0 > 0.0)) {
    throw ConfigError("gamma_extinction: gamma0 must be positive");
  }
  return gamma0 * std::sqrt(1.0 + c_D * c_D);
}

double wavepacket_size(double sigma_z0, double t_D, double beta,
                       double gamma_lorentz) {
  (void)beta;  // the spreading law is velocity-independent; kept for symmetry
  if (!(sigma_z0 > 0.0)) {
    throw ConfigError(
        "wavepacket_size: sigma_z0 must be positive (an initially point-like "
        "packet violates the uncertainty relation)");
  }
  namespace k = constants;
  const double m_eff =
      gamma_lorentz * gamma_lorentz * gamma_lorentz * k::electron_mass;
  const double growth = k::hbar * t_D / (2.0 * m_eff * sigma_z0);
  return std::hypot(sigma_z0, growth);
}

std::pair<double, double> detuning_split(double theta_bar, double epsilon) {
  return {theta_bar + 0.5 * epsilon, theta_bar - 0.5 * epsilon};
}

double snr_max(double nu0, double upsilon) {
  if (!(upsilon > 0.0)) {
    throw ConfigError("snr_max: upsilon must be positive");
  }
  if (!(nu0 >= 0.0)) {
    throw ConfigError("snr_max: nu0 must be nonnegative");
  }
  return 4.0 * std::sqrt(nu0) / upsilon;
}

double unruh_temperature(double xi_sq) {
  if (xi_sq == 0.0) {
    // No squeezing: T = 0, i.e. an infinite hbar*omega/(kB T) ratio.
    return std::numeric_limits<double>::infinity();
  }
  const double s = std::sinh(std::abs(xi_sq));
  return std::log1p(1.0 / (s * s));
}

double unruh_kelvin(double xi_sq, double omega) {
  if (!(omega > 0.0)) {
    throw ConfigError("unruh_kelvin: omega must be positive");
  }
  const double ratio = unruh_temperature(xi_sq);
  if (std::isinf(ratio)) return 0.0;
  namespace k = constants;
  return k::hbar * omega / (k::boltzmann * ratio);
}

}  // namespace qedsim
