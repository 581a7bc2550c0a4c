#pragma once

#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "auvrl/common.hpp"

namespace auvrl {

// Minimal CSV emitter: '.' decimal, header row, '\n' line ends. Doubles are
// written with shortest round-trip formatting so identical values always
// produce identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  }

  void header(std::initializer_list<std::string_view> names) {
    std::string line;
    for (auto n : names) {
      if (!line.empty()) line += ',';
      line += n;
    }
    out_ << line << '\n';
  }

  void row(std::span<const double> values) {
    std::string line;
    for (double v : values) {
      if (!line.empty()) line += ',';
      line += fmt_double(v);
    }
    out_ << line << '\n';
  }

  template <typename... Ts>
  void row(Ts... vals) {
    const double tmp[] = {static_cast<double>(vals)...};
    row(std::span<const double>(tmp, sizeof...(Ts)));
  }

  void raw_row(const std::string& line) { out_ << line << '\n'; }

  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
};

}  // namespace auvrl
