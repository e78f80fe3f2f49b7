#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "qedsim/params.hpp"
#include "qedsim/scattering.hpp"
#include "qedsim/states.hpp"

namespace qedsim::cli {

/// Everything a single engine evaluation needs, fully resolved from a config.
struct RunSettings {
  DimensionlessParams params;
  PhotonKind kind = PhotonKind::coherent;
  SqueezeOrdering ordering = SqueezeOrdering::sd;
  int n_max = -1;  ///< -1: choose the default ladder for the state kind
  int m_align = 16;
  double coverage = 8.0;
  Dispersion dispersion = Dispersion::linear;
};

/// Column indices into ResultRow::values. Order is part of the output
/// contract and matches ResultRow::columns().
enum RowColumn : int {
  col_upsilon = 0,
  col_nu0 = 1,
  col_xi = 2,
  col_gamma0 = 3,
  col_c_d = 4,
  col_theta_bar = 5,
  col_epsilon = 6,
  col_phi0 = 7,
  col_dnu1 = 8,
  col_dnu2 = 9,
  col_dE1 = 10,
  col_dE2 = 11,
  col_cross_nu = 12,
  col_cross_E = 13,
  col_dnu_direct = 14,
  col_dE_direct = 15,
  col_r1 = 16,
  col_r2 = 17,
  col_norm_deficit = 18,
  col_oracle_dnu1 = 19,
  col_oracle_dnu2 = 20,
  col_gamma = 21,
  col_extinction = 22,
};

/// One CSV row: the standard input knobs, then every computed observable and
/// the matching oracle values. Column order is part of the output contract.
struct ResultRow {
  std::vector<double> values;
  bool perturbative_warning = false;
  double perturbative_measure = 0.0;

  static const std::vector<std::string>& columns();
};

/// Resolve the scenario/photon/grid/run sections of a config. Dimensionless
/// scenario keys take precedence over the physical route.
RunSettings resolve_settings(const Config& cfg);

/// Build states, scatter, analyze, and evaluate the matching oracle.
ResultRow evaluate_point(const RunSettings& s);

/// Full engine report for callers that need more than the row (checks).
InteractionReport evaluate_report(const RunSettings& s);

/// Evaluate many points with a worker pool; rows are returned in input
/// order regardless of completion order, so output bytes are independent of
/// the worker count. workers <= 0 selects the hardware concurrency.
std::vector<ResultRow> evaluate_points(const std::vector<RunSettings>& points,
                                       int workers);

}  // namespace qedsim::cli
