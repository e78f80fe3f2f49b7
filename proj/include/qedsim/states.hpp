#pragma once

#include <complex>
#include <vector>

#include "qedsim/params.hpp"

namespace qedsim {

using cplx = std::complex<double>;

/// Uniform momentum grid centered on p0, in recoil (p_rec) units.
///
/// p_rec is an exact integer multiple (m_align) of the grid spacing, so a
/// photon exchange displaces the electron by exactly m_align indices and the
/// discretized sums involve no interpolation at all.
struct MomentumGrid {
  int m_align = 16;   ///< grid points per p_rec (>= 8)
  int half_width = 0; ///< points on each side of the center

  int size() const { return 2 * half_width + 1; }
  int center() const { return half_width; }
  double dp() const { return 1.0 / m_align; }
  /// Momentum offset from p0 in p_rec units at index k in [0, size()).
  double x(int k) const { return double(k - half_width) / m_align; }
};

/// Build a grid for a wavepacket of momentum spread rho = sigma_p0/p_rec:
/// half-extent (coverage*rho + 2) p_rec, i.e. `coverage` standard deviations
/// plus room for both recoil sidebands. coverage >= 8 and m_align >= 8 are
/// enforced (ConfigError below the minima).
MomentumGrid make_grid(double rho, int m_align = 16, double coverage = 8.0);

/// Normalized electron momentum-space amplitudes on a grid. Discrete
/// normalization: sum_k |c_k|^2 = 1 (the sqrt(dp) measure is absorbed).
struct ElectronAmplitudes {
  MomentumGrid grid;
  std::vector<cplx> c;
  double rho = 0.0; ///< sigma_p0 in p_rec units
  double c_D = 0.0; ///< chirp
};

/// Chirped Gaussian wavepacket: c_k ~ exp(-x_k^2 (1 + i c_D) / (4 rho^2)),
/// normalized. The physically irrelevant global phase of the drifted packet
/// is omitted (it cancels in every observable). Throws BudgetError when the
/// grid is too narrow for 8 sigma + sideband coverage at this rho.
ElectronAmplitudes gaussian_wavepacket(double rho, double c_D,
                                       const MomentumGrid& grid);

/// Recoil-shifted self-overlap sum_k conj(c_k) c_{k+m_align}. Its modulus is
/// the extinction factor e^{-Gamma^2/2} with Gamma = sqrt(1+c_D^2)/(2 rho);
/// for the chirped Gaussian the overlap is purely real.
cplx shifted_overlap(const ElectronAmplitudes& e);

enum class PhotonKind { fock, coherent, squeezed };
/// Operator ordering of the squeezed-coherent construction:
/// sd = squeeze after displacement S(xi) D(alpha)|0>,
/// ds = displacement after squeeze D(alpha) S(xi)|0>.
enum class SqueezeOrdering { sd, ds };

/// Photon amplitudes over the truncated Fock basis 0..n_max.
struct PhotonAmplitudes {
  PhotonKind kind = PhotonKind::fock;
  std::vector<cplx> c; ///< amplitude per Fock number, 0..n_max
  double nu0 = 0.0;
  double xi_sq = 0.0;
  SqueezeOrdering ordering = SqueezeOrdering::sd;
  /// Measured probability mass beyond n_max at construction (never silently
  /// renormalized away; must be <= 1e-10 or construction refuses).
  double tail_mass = 0.0;

  int n_max() const { return int(c.size()) - 1; }
};

/// Default ladder sizes meeting the 1e-12 construction tail budget.
int default_fock_nmax(int nu0);                 ///< nu0 + 1 (one emission step)
int default_coherent_nmax(double nu0);          ///< nu0 + 12 sqrt(nu0+1) + 20
int default_squeezed_nmax(double nu0, double xi_sq);

/// Number eigenstate |nu0>. Throws BudgetError if nu0 > n_max and
/// ConfigError if nu0 < 0.
PhotonAmplitudes fock_state(int nu0, int n_max);

/// Coherent state with real displacement alpha = sqrt(nu0): exact Poisson
/// amplitudes c_nu = e^{-nu0/2} nu0^{nu/2}/sqrt(nu!) via a stable upward
/// recurrence. The optical phase is carried exclusively by the interaction
/// phase phi0, so the amplitudes are real and nonnegative. Throws
/// BudgetError (stating the required n_max) when the ladder is too short.
PhotonAmplitudes coherent_state(double nu0, int n_max);

/// Squeezed-coherent state in the Fock basis, built from the eigenrelation
/// (cosh(xi) a + sinh(xi) a\dagger)|psi> = alpha_eff |psi> as a stable
/// two-term upward recurrence (both fundamental solutions decay, so upward
/// recursion is safe). alpha = sqrt(nu0) real; xi signed (the sign encodes
/// the squeeze phase 0 or pi). alpha_eff = alpha for sd ordering and
/// alpha e^{xi} for ds ordering. Throws BudgetError for |xi| > 5 (Fock
/// truncation impractical) or when the measured tail exceeds 1e-10.
PhotonAmplitudes squeezed_coherent_state(double nu0, double xi_sq,
                                         SqueezeOrdering ordering, int n_max);

/// Ladder-operator expectation values by direct Fock summation.
/// aadag is computed independently of n; <a a\dagger> = <a\dagger a> + 1
/// holds as a computed identity for normalized states.
struct PhotonExpectations {
  cplx a;      ///< <a>
  cplx adag;   ///< <a\dagger>
  double n;    ///< <a\dagger a>
  double aadag;///< <a a\dagger>
};
PhotonExpectations photon_expectations(const PhotonAmplitudes& ph);

/// Electron (x) photon product state, row-major over (grid point, Fock number).
struct JointState {
  MomentumGrid grid;
  int n_states = 0; ///< photon dimension, n_max + 1
  std::vector<cplx> c;

  int n_max() const { return n_states - 1; }
  const cplx& at(int k, int nu) const { return c[size_t(k) * n_states + nu]; }
  cplx& at(int k, int nu) { return c[size_t(k) * n_states + nu]; }
};

/// Outer product of normalized electron and photon states.
JointState joint_state(const ElectronAmplitudes& e, const PhotonAmplitudes& ph);

}  // namespace qedsim
