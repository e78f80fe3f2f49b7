#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace qedsim::cli {

/// A rendered CSV document plus any human-facing warnings. The CSV string is
/// byte-deterministic; warnings go to stderr only and never into the CSV.
struct Rendered {
  std::string csv;
  std::vector<std::string> warnings;
};

Rendered render_simulate_csv(const Config& cfg);
Rendered render_sweep_csv(const Config& cfg, int workers);
Rendered render_fig3a_csv(const Config& cfg, int workers);
Rendered render_fig3b_csv(const Config& cfg);
Rendered render_smith_purcell_csv(const Config& cfg);

/// Subcommand entry points. `output_override` (from --output) wins over the
/// config's output.path; empty string means "not given". Each returns a
/// process exit code.
int cmd_simulate(const Config& cfg, const std::string& output_override);
int cmd_sweep(const Config& cfg, const std::string& output_override,
              int workers);
int cmd_fig3a(const Config& cfg, const std::string& output_override,
              int workers);
int cmd_fig3b(const Config& cfg, const std::string& output_override);
int cmd_smith_purcell(const Config& cfg, const std::string& output_override);
int cmd_verify(const std::string& output_override, int workers);

}  // namespace qedsim::cli
