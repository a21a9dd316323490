#include "output.hpp"

#include <algorithm>
#include <ostream>

#include "permstat/error.hpp"

namespace permstat::cli {

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "plain") return OutputFormat::plain;
  throw ParseError("unknown format '" + std::string(name) + "' (expected csv, json or plain)");
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_field(table.columns[c]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(cell_text(row[c]));
    out << '\n';
  }
}

void write_plain(std::ostream& out, const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = table.columns[c].size();
  std::vector<std::vector<std::string>> text;
  for (const auto& row : table.rows) {
    auto& line = text.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(cell_text(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) line += "  ";
      line += cells[c];
      if (c + 1 < cells.size()) line.append(width[c] - cells[c].size(), ' ');
    }
    out << line << '\n';
  };
  emit(table.columns);
  for (const auto& line : text) emit(line);
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace permstat::cli
