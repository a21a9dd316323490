#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace permstat::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { csv, json, plain };

OutputFormat parse_format(std::string_view name);

// Rows of scalar JSON values under named columns. Strings print verbatim in
// csv/plain, null prints as an empty field.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

// RFC 4180 quoting: fields containing a comma, quote, CR or LF are wrapped in
// quotes with inner quotes doubled.
std::string csv_field(std::string_view text);
std::string cell_text(const Json& value);

void write_csv(std::ostream& out, const Table& table);
// Space-aligned columns with a header line.
void write_plain(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Json& doc);

}  // namespace permstat::cli
