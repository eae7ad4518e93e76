#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace uncsmear::cli {

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void Table::add(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows()) {
    throw std::invalid_argument("column '" + name + "' has a different length");
  }
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

void write_csv(const std::filesystem::path& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::string line;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) line += ',';
    line += table.header[c];
  }
  line += '\n';
  out << line;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    line.clear();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) line += ',';
      line += format_number(table.columns[c][r]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + " is empty");
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) table.header.push_back(name);
  }
  table.columns.resize(table.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const std::size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != table.columns.size()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(row) + ": wrong field count");
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v = 0.0;
      const char* first = fields[c].data();
      const char* last = first + fields[c].size();
      const auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc() || res.ptr != last) {
        throw std::runtime_error(path.string() + ":" + std::to_string(row) + ": bad number");
      }
      table.columns[c].push_back(v);
    }
  }
  return table;
}

}  // namespace uncsmear::cli
