#pragma once

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dpplab::io {

using Cell = std::variant<double, long, std::string>;

// Minimal CSV writer: header row then data rows.  Every numeric cell is
// checked finite before it reaches the file.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path);
    out_ << std::setprecision(17);
    write_row_strings(header);
    columns_ = header.size();
  }

  void row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_)
      throw std::runtime_error("csv row arity mismatch");
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ << ',';
      first = false;
      if (std::holds_alternative<double>(c)) {
        const double v = std::get<double>(c);
        if (!std::isfinite(v)) throw std::runtime_error("non-finite csv cell");
        out_ << v;
      } else if (std::holds_alternative<long>(c)) {
        out_ << std::get<long>(c);
      } else {
        out_ << std::get<std::string>(c);
      }
    }
    out_ << '\n';
  }

 private:
  void write_row_strings(const std::vector<std::string>& cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ << ',';
      first = false;
      out_ << c;
    }
    out_ << '\n';
  }

  std::ofstream out_;
  std::size_t columns_ = 0;
};

}  // namespace dpplab::io
