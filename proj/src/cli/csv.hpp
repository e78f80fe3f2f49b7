#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace qedsim::cli {

/// Fixed-width scientific float rendering: %.16e, i.e. 17 significant digits.
/// Chosen over shortest-round-trip for stable column widths under diffing.
std::string fmt_double(double v);

/// Assemble a deterministic CSV document: '#' comment lines (config echo and
/// any annotations), one header line, then data rows. Comma separator, LF
/// line endings, no quoting (names and numbers never need it).
class CsvBuilder {
 public:
  /// Adds "# <text>" lines; pass the command name and config entries.
  void comment(const std::string& text);
  void echo_config(const std::string& command, const Config& cfg);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

  const std::string& str() const { return out_; }

 private:
  std::string out_;
  size_t n_columns_ = 0;
};

/// Write a rendered document to a path, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace qedsim::cli
