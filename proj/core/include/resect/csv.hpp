// csv.hpp
// Minimal RFC-4180-style CSV reading and writing, enough for manifests and
// report tables: quoted fields, embedded commas and quotes, CRLF tolerance.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace resect::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name, -1 when absent.
  int column(const std::string& name) const;
};

Table read_file(const std::filesystem::path& path);
Table parse(const std::string& text);

std::string escape(const std::string& field);
std::string join_row(const std::vector<std::string>& fields);

}  // namespace resect::csv
