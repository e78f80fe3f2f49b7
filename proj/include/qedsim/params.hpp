#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

namespace qedsim {

/// Laboratory-frame description of one interaction instance. Lengths in
/// meters, angles/phases in radians. The coupling may be supplied either
/// directly (`upsilon`, dimensionless) or as the synchronous longitudinal
/// field amplitude `E_qz` in V/m; `upsilon` wins when both are present.
struct PhysicalScenario {
  double wavelength = 800e-9;         ///< radiation wavelength [m]
  double beta = 0.7;                  ///< normalized velocity v0/c, in (0,1)
  double interaction_length = 100e-6; ///< structure length L [m]
  double sigma_z0 = 50e-9;            ///< intrinsic wavepacket size [m]
  double drift_length = 0.0;          ///< pre-interaction drift L_D [m], signed
  double nu0 = 0.0;                   ///< photon expectation number
  double xi_sq = 0.0;                 ///< squeeze parameter, signed
  double phi0 = 0.0;                  ///< interaction phase [rad]
  std::optional<double> upsilon;      ///< coupling, dimensionless
  std::optional<double> E_qz;         ///< field amplitude [V/m]
  double theta_bar = 0.0;             ///< synchronism detuning, dimensionless
  double epsilon = 0.0;               ///< recoil lineshape split, dimensionless
};

/// All dimensionless knobs of one run.
///
/// Internal unit convention: hbar = omega = v0 = 1. Momentum is measured in
/// units of the recoil p_rec = hbar*omega/v0 and energy in units of
/// hbar*omega, so one photon exchange shifts the electron by exactly one
/// recoil unit and recoil displacements are exact integer index shifts on an
/// aligned momentum grid.
struct DimensionlessParams {
  double upsilon = 0.0;   ///< photon-exchange coupling
  double theta_bar = 0.0; ///< synchronism detuning
  double epsilon = 0.0;   ///< emission/absorption lineshape split
  double phi0 = 0.0;      ///< interaction phase
  double gamma0 = 1.0;    ///< zero-drift extinction coefficient (> 0)
  double c_D = 0.0;       ///< chirp: spreading rate x drift time, signed
  double nu0 = 0.0;       ///< photon expectation number
  double xi_sq = 0.0;     ///< squeeze parameter, signed

  /// p0/p_rec. Infinite (the default) selects the exact unity-prefactor limit
  /// of the transition amplitudes; a finite value enables the
  /// (p' +- p_rec -+ hbar q_z/2)/p0 prefactors for sensitivity studies.
  double p0_over_prec = std::numeric_limits<double>::infinity();
  /// hbar q_z / p_rec; only enters in finite-prefactor mode. The synchronous
  /// travelling mode has hbar q_z ~= p_rec, hence the default of 1.
  double hqz_over_prec = 1.0;

  bool unity_prefactor() const { return !std::isfinite(p0_over_prec); }
  /// Momentum spread in recoil units, sigma_p0/p_rec = 1/(2*Gamma0);
  /// chirp does not change |c_p|^2, so this is drift-independent.
  double rho() const { return 1.0 / (2.0 * gamma0); }
};

/// Convert a physical scenario to the dimensionless knobs. Gamma0 =
/// 2*pi*sigma_z0/(beta*lambda); the chirp follows from the free-space
/// spreading rate 2*sigma_p0^2/(m* hbar) with the minimum-uncertainty
/// initial spread sigma_p0 = hbar/(2 sigma_z0) and the longitudinal
/// effective mass m* = gamma_lorentz^3 m_e. Throws ConfigError naming the
/// offending field for non-physical inputs.
DimensionlessParams derive_dimensionless(const PhysicalScenario& s);

/// Extinction coefficient Gamma = Gamma0 * sqrt(1 + c_D^2); even in c_D.
double gamma_extinction(double gamma0, double c_D);

/// Free-space spreading of the wavepacket size:
/// sigma_z(t_D) = sqrt(sigma_z0^2 + (hbar t_D / (2 gamma_lorentz^3 m_e
/// sigma_z0))^2). Monotone nondecreasing in |t_D|. The normalized velocity is
/// accepted for signature completeness but the minimum-uncertainty spreading
/// law does not depend on it. Throws ConfigError for sigma_z0 <= 0 (a
/// point particle can never be realized).
double wavepacket_size(double sigma_z0, double t_D, double beta,
                       double gamma_lorentz);

/// Emission/absorption detunings (theta_bar + eps/2, theta_bar - eps/2).
std::pair<double, double> detuning_split(double theta_bar, double epsilon);

/// Maximum phase-dependent signal-to-noise ratio 4*sqrt(nu0)/upsilon.
/// Throws ConfigError for upsilon <= 0.
double snr_max(double nu0, double upsilon);

/// Unruh-like temperature mapping of squeezed amplification:
/// sinh^2|xi| = 1/(e^{hbar omega/kB T} - 1), returned as the dimensionless
/// ratio hbar*omega/(kB*T) = ln(1 + 1/sinh^2|xi|). xi = 0 corresponds to
/// T = 0 and is reported as +infinity (a distinguished value, not an error).
double unruh_temperature(double xi_sq);

/// The same mapping resolved to kelvin for a given angular frequency [rad/s].
double unruh_kelvin(double xi_sq, double omega);

}  // namespace qedsim
