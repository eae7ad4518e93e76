#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace uncsmear::cli {

/// Shortest decimal that parses back to the same double.
std::string format_number(double v);

/// Column-major numeric table with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  void add(std::string name, std::vector<double> values);
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  /// Throws std::out_of_range naming the missing column.
  const std::vector<double>& column(std::string_view name) const;
};

/// Comma separated, LF line endings, one header row.
void write_csv(const std::filesystem::path& path, const Table& table);

/// Reads a file produced by write_csv. Throws std::runtime_error on ragged
/// rows or fields that are not numbers.
Table read_csv(const std::filesystem::path& path);

}  // namespace uncsmear::cli
