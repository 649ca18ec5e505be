#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace torusns {

// Minimal RFC-4180 CSV writer: header row, CRLF-free line endings ('\n'),
// fields quoted only when they contain a comma, quote or newline. Numbers are
// printed with "%.17g" so re-runs are byte-identical.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void header(const std::vector<std::string>& names);
  CsvWriter& field(const std::string& s);
  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(bool v) { return field(std::string(v ? "true" : "false")); }
  void end_row();

  static std::string format_double(double v);

 private:
  std::ofstream os_;
  bool row_open_ = false;
};

}  // namespace torusns
