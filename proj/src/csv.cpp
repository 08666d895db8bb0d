#include "helfer/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace helfer {

std::string format_double(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path)
    : out_(path, std::ios::out | std::ios::binary) {
  if (!out_) {
    throw std::runtime_error("CsvWriter: cannot open " + path);
  }
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::columns(const std::vector<std::string>& names) {
  out_ << "#";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out_ << (i == 0 ? " " : ",") << names[i];
  }
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ",";
    out_ << format_double(values[i]);
  }
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values, const std::string& tail) {
  for (const double v : values) out_ << format_double(v) << ",";
  out_ << tail << "\n";
}

}  // namespace helfer
