#include "cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "qedsim/errors.hpp"

namespace qedsim::cli {

std::string fmt_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void CsvBuilder::comment(const std::string& text) {
  out_ += "# ";
  out_ += text;
  out_ += '\n';
}

void CsvBuilder::echo_config(const std::string& command, const Config& cfg) {
  comment("command: " + command);
  for (const auto& [k, v] : cfg.entries()) comment(k + " = " + v);
}

void CsvBuilder::header(const std::vector<std::string>& columns) {
  n_columns_ = columns.size();
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ += ',';
    out_ += columns[i];
  }
  out_ += '\n';
}

void CsvBuilder::row(const std::vector<double>& values) {
  if (values.size() != n_columns_) {
    throw std::logic_error("CsvBuilder: row width does not match header");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ',';
    out_ += fmt_double(values[i]);
  }
  out_ += '\n';
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output path '" + path + "'");
  out << content;
  if (!out) throw ConfigError("failed writing output to '" + path + "'");
}

}  // namespace qedsim::cli
