#include "torusns/csv.hpp"

#include <cstdio>

#include "torusns/errors.hpp"

namespace torusns {

CsvWriter::CsvWriter(const std::string& path) : os_(path) {
  if (!os_) throw NumericError("CsvWriter: cannot open " + path);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : CsvWriter(path) {
  this->header(header);
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& n : names) field(n);
  end_row();
}

CsvWriter& CsvWriter::field(const std::string& s) {
  if (row_open_) os_ << ',';
  row_open_ = true;
  const bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) {
    os_ << s;
    return *this;
  }
  os_ << '"';
  for (char c : s) {
    if (c == '"') os_ << '"';
    os_ << c;
  }
  os_ << '"';
  return *this;
}

CsvWriter& CsvWriter::field(double v) { return field(format_double(v)); }

CsvWriter& CsvWriter::field(long long v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", v);
  return field(std::string(buf));
}

void CsvWriter::end_row() {
  os_ << '\n';
  row_open_ = false;
}

std::string CsvWriter::format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace torusns
