#pragma once

// Tabular output shared by the CLI and the Python module.

#include <string>
#include <string_view>
#include <vector>

namespace vpt {

enum class OutputFormat { kText, kCsv, kJson };

/// Throws DomainError for anything but "text", "csv" or "json".
OutputFormat parse_format(std::string_view name);

enum class CellKind { kText, kInteger, kDecimal };

struct Column {
  std::string name;
  CellKind kind = CellKind::kText;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
};

/// text: aligned columns, decimal fractions grouped in threes;
/// csv: header row plus plain values;
/// json: array of objects, decimals kept as strings so no digit is lost.
std::string render(const Table& table, OutputFormat format);

}  // namespace vpt
