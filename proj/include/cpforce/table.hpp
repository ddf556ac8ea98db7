#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cpforce {

// CSV table: '# key = value' metadata lines, a header line, then rows of
// %.8e values. Line terminator is '\n' only.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value);
  // first value stored under key, or empty string
  std::string meta(const std::string& key) const;
  std::size_t column_index(const std::string& name) const;
};

std::string format_value(double v);
void write_csv(std::ostream& os, const Table& t);
std::string to_csv(const Table& t);
Table parse_csv(std::istream& is);
Table parse_csv_string(const std::string& text);

} // namespace cpforce
