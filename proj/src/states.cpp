#include "qedsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qedsim/errors.hpp"
#include "qedsim/summation.hpp"

namespace qedsim {

namespace {

// Largest joint-state-compatible photon ladder we are willing to build as a
// bare vector; beyond this the squeeze is declared impractical.
constexpr int kMaxLadder = 5'000'000;

double norm_sq(const std::vector<cplx>& v) {
  NeumaierSum s;
  for (const cplx& z : v) s.add(std::norm(z));
  return s.value();
}

}  // namespace

MomentumGrid make_grid(double rho, int m_align, double coverage) {
  if (!(rho > 0.0)) throw ConfigError("make_grid: rho must be positive");
  if (m_align < 8) throw ConfigError("make_grid: m_align must be >= 8");
  if (coverage < 8.0) {
    throw ConfigError("make_grid: sigma coverage must be >= 8");
  }
  const double extent = coverage * rho + 2.0;  // p_rec units, each side
  const double points = std::ceil(extent * m_align);
  if (points > 5e7) {
    std::ostringstream msg;
    msg << "make_grid: grid of " << 2.0 * points
        << " points exceeds the practical budget (rho = " << rho << ")";
    throw BudgetError(msg.str());
  }
  MomentumGrid g;
  g.m_align = m_align;
  g.half_width = int(points);
  return g;
}

ElectronAmplitudes gaussian_wavepacket(double rho, double c_D,
                                       const MomentumGrid& grid) {
  if (!(rho > 0.0)) {
    throw ConfigError("gaussian_wavepacket: rho must be positive");
  }
  const double extent = grid.half_width * grid.dp();
  const double needed = 8.0 * rho + 2.0;
  if (extent < needed) {
    std::ostringstream msg;
    msg << "gaussian_wavepacket: grid half-extent " << extent
        << " p_rec is below the required 8 sigma + sidebands coverage of "
        << needed << " p_rec at rho = " << rho;
    throw BudgetError(msg.str());
  }

  ElectronAmplitudes e;
  e.grid = grid;
  e.rho = rho;
  e.c_D = c_D;
  e.c.resize(size_t(grid.size()));
  const double q = 1.0 / (4.0 * rho * rho);
  for (int k = 0; k < grid.size(); ++k) {
    const double x = grid.x(k);
    const double arg = x * x * q;
    // exp(-x^2 (1 + i c_D)/(4 rho^2)): chirp rotates the phase only, the
    // modulus keeps the drift-independent spread rho.
    e.c[size_t(k)] = std::polar(std::exp(-arg), -arg * c_D);
  }
  const double inv = 1.0 / std::sqrt(norm_sq(e.c));
  for (cplx& z : e.c) z *= inv;
  return e;
}

cplx shifted_overlap(const ElectronAmplitudes& e) {
  const int n = e.grid.size();
  const int m = e.grid.m_align;
  NeumaierSum re, im;
  for (int k = 0; k + m < n; ++k) {
    const cplx t = std::conj(e.c[size_t(k)]) * e.c[size_t(k + m)];
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value(), im.value()};
}

int default_fock_nmax(int nu0) { return nu0 + 1; }

int default_coherent_nmax(double nu0) {
  return int(std::ceil(nu0 + 12.0 * std::sqrt(nu0 + 1.0) + 20.0));
}

int default_squeezed_nmax(double nu0, double xi_sq) {
  const double axi = std::abs(xi_sq);
  const double sh = std::sinh(axi);
  // Center of mass of the amplified distribution: the displacement is
  // stretched by up to e^{2|xi|} (anti-squeezed quadrature), plus the
  // squeezed-vacuum population sinh^2|xi|.
  const double nu_c = nu0 * std::exp(2.0 * axi) + sh * sh;
  double n = nu_c + 14.0 * std::sqrt(nu_c + 1.0) + 30.0;
  if (axi > 0.0) {
    // The squeezed-vacuum tail decays only geometrically, with log-ratio
    // -ln tanh|xi| per rung pair; size for a 1e-13 residual including the
    // cosh|xi| amplitude factor.
    const double decay = -std::log(std::tanh(axi));
    n += (13.0 * std::log(10.0) + std::log(std::cosh(axi))) / decay;
  }
  return int(std::ceil(n));
}

PhotonAmplitudes fock_state(int nu0, int n_max) {
  if (nu0 < 0) throw ConfigError("fock_state: nu0 must be nonnegative");
  if (nu0 > n_max) {
    std::ostringstream msg;
    msg << "fock_state: nu0 = " << nu0 << " exceeds the ladder n_max = "
        << n_max;
    throw BudgetError(msg.str());
  }
  PhotonAmplitudes ph;
  ph.kind = PhotonKind::fock;
  ph.nu0 = nu0;
  ph.c.assign(size_t(n_max) + 1, cplx(0.0, 0.0));
  ph.c[size_t(nu0)] = 1.0;
  ph.tail_mass = 0.0;
  return ph;
}

PhotonAmplitudes coherent_state(double nu0, int n_max) {
  if (!(nu0 >= 0.0)) {
    throw ConfigError("coherent_state: nu0 must be nonnegative");
  }
  const int required = default_coherent_nmax(nu0);
  if (n_max < required) {
    std::ostringstream msg;
    msg << "coherent_state: ladder n_max = " << n_max
        << " is below the tail budget; need n_max >= " << required
        << " at nu0 = " << nu0;
    throw BudgetError(msg.str());
  }
  PhotonAmplitudes ph;
  ph.kind = PhotonKind::coherent;
  ph.nu0 = nu0;
  ph.c.resize(size_t(n_max) + 1);
  // Exact Poisson amplitudes by upward recurrence, seeded at the true
  // normalized c_0 so intermediate values never leave the double range.
  double amp = std::exp(-0.5 * nu0);
  const double alpha = std::sqrt(nu0);
  ph.c[0] = amp;
  for (int nu = 1; nu <= n_max; ++nu) {
    amp *= alpha / std::sqrt(double(nu));
    ph.c[size_t(nu)] = amp;
  }
  ph.tail_mass = std::max(0.0, 1.0 - norm_sq(ph.c));
  if (ph.tail_mass > 1e-10) {
    std::ostringstream msg;
    msg << "coherent_state: measured tail mass " << ph.tail_mass
        << " exceeds the 1e-10 budget";
    throw BudgetError(msg.str());
  }
  return ph;
}

PhotonAmplitudes squeezed_coherent_state(double nu0, double xi_sq,
                                         SqueezeOrdering ordering, int n_max) {
  if (!(nu0 >= 0.0)) {
    throw ConfigError("squeezed_coherent_state: nu0 must be nonnegative");
  }
  if (std::abs(xi_sq) > 5.0) {
    throw BudgetError(
        "squeezed_coherent_state: |xi| > 5 makes the Fock truncation "
        "impractical; refusing");
  }
  const int required = default_squeezed_nmax(nu0, xi_sq);
  if (n_max < required) {
    std::ostringstream msg;
    msg << "squeezed_coherent_state: ladder n_max = " << n_max
        << " is below the tail budget; need n_max >= " << required
        << " at nu0 = " << nu0 << ", xi = " << xi_sq;
    throw BudgetError(msg.str());
  }
  if (n_max > kMaxLadder) {
    throw BudgetError("squeezed_coherent_state: ladder exceeds 5e6 rungs");
  }

  // Work ladder: long enough past n_max that the measured tail converges.
  const double axi = std::abs(xi_sq);
  int pad = 160;
  if (axi > 0.0) {
    const double decay = -std::log(std::tanh(axi));
    pad = std::max(pad, int(std::ceil(0.25 * (13.0 * std::log(10.0)) / decay)));
  }
  const long n_work = long(n_max) + pad;

  const double mu = std::cosh(xi_sq);      // even in xi
  const double lam = std::sinh(xi_sq);     // signed: encodes squeeze phase
  const double alpha = std::sqrt(nu0);
  const double alpha_eff =
      ordering == SqueezeOrdering::sd ? alpha : alpha * std::exp(xi_sq);

  // Upward recurrence for (mu a + lam a\dagger)|psi> = alpha_eff |psi>:
  //   mu sqrt(nu+1) c_{nu+1} + lam sqrt(nu) c_{nu-1} = alpha_eff c_nu.
  // Both fundamental solutions decay (ratio ~ tanh xi), so this is stable;
  // seed c_0 = 1 and normalize afterwards. Real throughout for real alpha
  // and signed xi. Rescale the prefix whenever the running amplitude grows
  // past 1e140: entries driven to underflow by a rescale carry < 1e-160
  // relative mass by construction, far below every budget.
  std::vector<double> amp(size_t(n_work) + 1, 0.0);
  amp[0] = 1.0;
  if (n_work >= 1) amp[1] = alpha_eff / mu;
  for (long nu = 1; nu < n_work; ++nu) {
    const double next = (alpha_eff * amp[size_t(nu)] -
                         lam * std::sqrt(double(nu)) * amp[size_t(nu - 1)]) /
                        (mu * std::sqrt(double(nu + 1)));
    amp[size_t(nu + 1)] = next;
    if (std::abs(next) > 1e140) {
      for (long j = 0; j <= nu + 1; ++j) amp[size_t(j)] *= 1e-140;
    }
  }

  NeumaierSum total;
  for (double v : amp) total.add(v * v);
  const double inv = 1.0 / std::sqrt(total.value());

  PhotonAmplitudes ph;
  ph.kind = PhotonKind::squeezed;
  ph.nu0 = nu0;
  ph.xi_sq = xi_sq;
  ph.ordering = ordering;
  ph.c.resize(size_t(n_max) + 1);
  for (int nu = 0; nu <= n_max; ++nu) ph.c[size_t(nu)] = amp[size_t(nu)] * inv;

  NeumaierSum tail;
  for (long nu = long(n_max) + 1; nu <= n_work; ++nu) {
    const double v = amp[size_t(nu)] * inv;
    tail.add(v * v);
  }
  ph.tail_mass = tail.value();
  if (ph.tail_mass > 1e-10) {
    std::ostringstream msg;
    msg << "squeezed_coherent_state: measured tail mass " << ph.tail_mass
        << " exceeds the 1e-10 budget at n_max = " << n_max;
    throw BudgetError(msg.str());
  }
  return ph;
}

PhotonExpectations photon_expectations(const PhotonAmplitudes& ph) {
  const int n_max = ph.n_max();
  NeumaierSum a_re, a_im, n_sum, aad_sum;
  for (int nu = 0; nu <= n_max; ++nu) {
    const double w = std::norm(ph.c[size_t(nu)]);
    n_sum.add(nu * w);
    aad_sum.add((nu + 1.0) * w);
    if (nu + 1 <= n_max) {
      const cplx t = std::conj(ph.c[size_t(nu)]) *
                     std::sqrt(double(nu + 1)) * ph.c[size_t(nu + 1)];
      a_re.add(t.real());
      a_im.add(t.imag());
    }
  }
  PhotonExpectations ex;
  ex.a = {a_re.value(), a_im.value()};
  ex.adag = std::conj(ex.a);
  ex.n = n_sum.value();
  ex.aadag = aad_sum.value();
  return ex;
}

JointState joint_state(const ElectronAmplitudes& e, const PhotonAmplitudes& ph) {
  JointState j;
  j.grid = e.grid;
  j.n_states = ph.n_max() + 1;
  const int rows = e.grid.size();
  j.c.resize(size_t(rows) * j.n_states);
  for (int k = 0; k < rows; ++k) {
    const cplx ek = e.c[size_t(k)];
    for (int nu = 0; nu < j.n_states; ++nu) {
      j.at(k, nu) = ek * ph.c[size_t(nu)];
    }
  }
  return j;
}

}  // namespace qedsim
