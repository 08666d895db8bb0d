#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace helfer {

//! Formats a double with 17 significant digits (round-trip exact),
//! locale independent.
std::string format_double(double v);

//! Deterministic CSV emitter: '#'-prefixed comment lines, comma
//! separation, '.' decimal point, LF line endings, 17 significant digits.
//! The first line must name the columns (and units where meaningful);
//! parameter comments follow so every file can be re-run from its header.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void comment(const std::string& text);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  //! Row with a trailing non-numeric cell (e.g. a case label).
  void row(const std::vector<double>& values, const std::string& tail);

  bool good() const { return out_.good(); }

 private:
  std::ofstream out_;
};

}  // namespace helfer
