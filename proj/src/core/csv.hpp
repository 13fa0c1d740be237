#pragma once

#include <map>
#include <string>
#include <vector>

namespace gnop::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based line number of each row in the source file, for diagnostics.
  std::vector<long> line_numbers;

  // index of a header column, -1 if absent
  int column(const std::string& name) const;
};

// Plain comma-separated values, no quoting. Lines starting with '#' and
// blank lines are skipped.
Table read_file(const std::string& path);
Table parse(const std::string& text);

std::vector<std::string> split_line(const std::string& line);

class Writer {
 public:
  explicit Writer(std::string path) : path_(std::move(path)) {}

  void comment(const std::string& line);                 // "# line"
  void row(const std::vector<std::string>& fields);
  void flush();                                          // writes the file

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::string buffer_;
};

std::string fmt(double v);        // %.17g, lossless
std::string fmt_short(double v);  // %.10g, for human-facing metric columns

}  // namespace gnop::csv
