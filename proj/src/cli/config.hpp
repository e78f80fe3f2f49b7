#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qedsim::cli {

/// Flat dotted-key configuration: one `key = value` per line, '#' comments,
/// blank lines ignored. Unknown keys are hard errors — there is no silent
/// typo tolerance. Pairs keep file order so that CSV header echoes are
/// byte-stable.
class Config {
 public:
  Config() = default;

  /// Parse from file contents (not a path). Throws ConfigError on malformed
  /// lines, duplicate keys, or keys absent from the known-key registry.
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::optional<double> maybe_double(const std::string& key) const;
  std::optional<std::string> maybe_string(const std::string& key) const;

  /// key/value pairs in file order, for the '# key = value' CSV echo.
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  const std::string* find(const std::string& key) const;
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace qedsim::cli
