#include "cli/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qedsim/errors.hpp"

namespace qedsim::cli {

namespace {

// Every key the runner understands. Anything else in a config file is a
// refused typo.
constexpr std::array kKnownKeys = {
    // physical scenario (converted via derive_dimensionless)
    "scenario.lambda", "scenario.beta", "scenario.L", "scenario.sigma_z0",
    "scenario.L_D", "scenario.E_qz",
    // dimensionless knobs (take precedence over the physical route)
    "scenario.upsilon", "scenario.gamma0", "scenario.c_D",
    "scenario.theta_bar", "scenario.phi0",
    // transition-prefactor controls
    "scenario.p0_over_prec", "scenario.hqz_over_prec",
    // grid
    "grid.m_align", "grid.sigma_coverage",
    // photon state
    "photon.kind", "photon.nu0", "photon.xi", "photon.ordering",
    "photon.n_max",
    // run controls
    "run.dispersion", "run.epsilon",
    // sweeps
    "sweep.parameter", "sweep.from", "sweep.to", "sweep.steps",
    // output
    "output.path",
    // figure generators
    "fig3a.gamma_min", "fig3a.gamma_max", "fig3a.steps", "fig3a.spacing",
    "fig3b.sigma_min", "fig3b.sigma_max", "fig3b.sigma_steps", "fig3b.ld_min",
    "fig3b.ld_max", "fig3b.ld_steps",
    // Smith-Purcell spectra
    "sp.L", "sp.beta", "sp.eta", "sp.A_eff", "sp.V", "sp.grating_period",
    "sp.harmonic", "sp.Theta", "sp.omega", "sp.sweep", "sp.from", "sp.to",
    "sp.steps",
};

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool known_key(const std::string& key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) !=
         kKnownKeys.end();
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                      v + "'");
  }
  return d;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << lineno << ": expected 'key = value', got '"
          << stripped << "'";
      throw ConfigError(msg.str());
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      std::ostringstream msg;
      msg << "config line " << lineno << ": empty key or value";
      throw ConfigError(msg.str());
    }
    if (!known_key(key)) {
      std::ostringstream msg;
      msg << "config line " << lineno << ": unknown key '" << key << "'";
      throw ConfigError(msg.str());
    }
    if (cfg.find(key) != nullptr) {
      std::ostringstream msg;
      msg << "config line " << lineno << ": duplicate key '" << key << "'";
      throw ConfigError(msg.str());
    }
    cfg.entries_.emplace_back(key, value);
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::string* Config::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

double Config::get_double(const std::string& key, double fallback) const {
  const std::string* v = find(key);
  return v ? parse_double(key, *v) : fallback;
}

double Config::require_double(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) throw ConfigError("config: missing required key '" + key + "'");
  return parse_double(key, *v);
}

int Config::get_int(const std::string& key, int fallback) const {
  const std::string* v = find(key);
  if (!v) return fallback;
  const double d = parse_double(key, *v);
  const int i = int(d);
  if (double(i) != d) {
    throw ConfigError("config: key '" + key + "' must be an integer");
  }
  return i;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  const std::string* v = find(key);
  return v ? *v : fallback;
}

std::optional<double> Config::maybe_double(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) return std::nullopt;
  return parse_double(key, *v);
}

std::optional<std::string> Config::maybe_string(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) return std::nullopt;
  return *v;
}

}  // namespace qedsim::cli
