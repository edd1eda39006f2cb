#include "vpt/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "vpt/errors.hpp"
#include "vpt/numerics.hpp"

namespace vpt {

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_text(const Table& table) {
  const std::size_t cols = table.columns.size();
  std::vector<std::vector<std::string>> cells;
  cells.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& v = c < row.size() ? row[c] : std::string();
      out.push_back(table.columns[c].kind == CellKind::kDecimal ? group_digits(v) : v);
    }
    cells.push_back(std::move(out));
  }
  std::vector<std::size_t> width(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    width[c] = table.columns[c].name.size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& values) {
    std::string s;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0) s += "  ";
      const std::string& v = values[c];
      const std::size_t pad = width[c] - v.size();
      // Numbers are right-aligned.
      if (table.columns[c].kind == CellKind::kText) {
        s += v;
        if (c + 1 < cols) s.append(pad, ' ');
      } else {
        s.append(pad, ' ');
        s += v;
      }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::vector<std::string> header;
  for (const auto& col : table.columns) header.push_back(col.name);
  std::string out = line(header);
  for (const auto& row : cells) out += line(row);
  return out;
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += csv_field(table.columns[c].name);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c > 0) out += ',';
      if (c < row.size()) out += csv_field(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const std::string v = c < row.size() ? row[c] : std::string();
      if (table.columns[c].kind == CellKind::kInteger && !v.empty()) {
        obj[table.columns[c].name] = std::stoll(v);
      } else {
        obj[table.columns[c].name] = v;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

}  // namespace

std::string render(const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return render_text(table);
    case OutputFormat::kCsv:
      return render_csv(table);
    case OutputFormat::kJson:
      return render_json(table);
  }
  return {};
}

}  // namespace vpt
