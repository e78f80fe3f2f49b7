#pragma once

#include <utility>
#include <vector>

#include "qedsim/params.hpp"
#include "qedsim/states.hpp"

namespace qedsim {

/// First-order scattered amplitudes, indexed by FINAL basis state (p', nu').
///
/// Indexing convention (fixed once for the whole project): the emission
/// amplitude at final (p', nu') is sourced from the initial amplitude at
/// (p' + p_rec, nu' - 1); absorption at (p', nu') from (p' - p_rec, nu' + 1).
struct ScatteredAmplitudes {
  MomentumGrid grid;
  int n_states = 0;
  std::vector<cplx> e; ///< emission channel c^(1,e), final-state indexed
  std::vector<cplx> a; ///< absorption channel c^(1,a), final-state indexed

  /// Squared amplitude that would have landed outside the stored grid or
  /// beyond the Fock ladder, tallied per channel instead of silently lost.
  double truncated_mass = 0.0;
  double scattered_norm = 0.0;       ///< sum |e|^2 + |a|^2 over stored states
  double perturbative_measure = 0.0; ///< upsilon sqrt(n_max+1) max|prefactor|
  bool perturbative_warning = false; ///< measure in (0.1, 0.5]

  const cplx& emis(int k, int nu) const { return e[size_t(k) * n_states + nu]; }
  const cplx& absn(int k, int nu) const { return a[size_t(k) * n_states + nu]; }
};

/// Apply the first-order emission/absorption amplitudes to a joint state:
///   e(p',nu') = +pref * upsilon * sqrt(nu') * c0(p'+p_rec, nu'-1)
///               * sinc(theta_e/2) * exp(+i(theta_e/2 + phi0))
///   a(p',nu') = -pref * upsilon * sqrt(nu'+1) * c0(p'-p_rec, nu'+1)
///               * sinc(theta_a/2) * exp(-i(theta_a/2 + phi0))
/// with theta_{e,a} = theta_bar +- epsilon/2 and pref = 1 in the default
/// unity-prefactor mode, or (p' + p_rec - hbar q_z/2)/p0 (emission) and
/// (p' - p_rec + hbar q_z/2)/p0 (absorption) when finite p0/p_rec is
/// configured. Off-range source states contribute zero and their would-be
/// scattered mass is tallied.
///
/// Throws BudgetError when the perturbative measure exceeds 0.5 or the
/// truncated mass exceeds 1e-8 of the scattered norm; sets the warning flag
/// above 0.1.
ScatteredAmplitudes scatter_first_order(const JointState& joint,
                                        const DimensionlessParams& params);

enum class Dispersion { linear, quadratic };

/// Channel-counting observables. The energy weight is E_p - E0 with E0 the
/// measured initial expectation; linear dispersion uses v0 (p - p0), the
/// quadratic mode adds (p - p0)^2/(2 m*) with m* = p0/v0 from the configured
/// p0/p_rec. All reductions run in fixed ascending (grid, Fock) order with
/// compensated accumulation.
struct OrderedObservables {
  double dnu1 = 0.0;  ///< first-order photon number change (interference)
  double dE1 = 0.0;   ///< first-order electron energy change
  double dnu2 = 0.0;  ///< second-order photon number change (FGR-like)
  double dE2 = 0.0;   ///< second-order electron energy change
  double cross_nu = 0.0; ///< emission-absorption interference, 2 Re{e* a}
  double cross_E = 0.0;  ///< same, energy-weighted
  double E0 = 0.0;    ///< measured initial energy expectation (internal units)
};
OrderedObservables observables_ordered(const JointState& joint,
                                   const ScatteredAmplitudes& sc,
                                   Dispersion dispersion,
                                   const DimensionlessParams& params);

/// Expectation change over the assembled (non-renormalized) final state
/// c^f = c^0 + e + a — the direct diagnostic complementing channel counting.
struct DirectObservables {
  double dnu_direct = 0.0;
  double dE_direct = 0.0;
  double norm_deficit = 0.0; ///< 1 - sum |c^f|^2, reported, never hidden
};
DirectObservables observables_direct(const JointState& joint,
                                     const ScatteredAmplitudes& sc,
                                     Dispersion dispersion,
                                     const DimensionlessParams& params);

/// Correspondence residuals r_k = dnu_k + dE_k (hbar*omega = 1).
std::pair<double, double> correspondence_residual(const OrderedObservables& obs);

/// Post-interaction electron momentum marginal and the first-order sideband
/// populations: integrated weights of half-open windows of width p_rec
/// centered at p0 and p0 +- p_rec.
struct ElectronSpectrum {
  std::vector<double> marginal; ///< sum_nu |c^f|^2 per grid point
  double central = 0.0;
  double up = 0.0;   ///< p0 + p_rec window (absorption recoil)
  double down = 0.0; ///< p0 - p_rec window (emission recoil)
  double mean_shift = 0.0; ///< <p>_f - <p>_0 in p_rec units
};
ElectronSpectrum electron_spectrum(const JointState& joint,
                                   const ScatteredAmplitudes& sc);

/// Everything above in one record, as produced for a CSV result row.
struct InteractionReport {
  OrderedObservables ordered;
  DirectObservables direct;
  double r1 = 0.0;
  double r2 = 0.0;
  ElectronSpectrum spectrum;
  double truncated_mass = 0.0;
  double perturbative_measure = 0.0;
  bool perturbative_warning = false;
};
InteractionReport analyze(const JointState& joint, const ScatteredAmplitudes& sc,
                          Dispersion dispersion,
                          const DimensionlessParams& params);

}  // namespace qedsim
