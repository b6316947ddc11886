#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace sig6::cli {

enum class Format { csv, json };

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Column-ordered result table plus the summary fields of the JSON envelope.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  double max_residual = 0.0;
  bool pass = true;
};

/// 17 significant digits, '.' separator, independent of the C locale.
std::string format_double(double value);

/// CSV: header row then one line per row, LF endings, RFC 4180 quoting.
void write_csv(const Report& report, std::ostream& out);

/// JSON: {"config", "rows", "max_residual", "pass"}, rows as objects keyed by column.
void write_json(const Report& report, std::ostream& out);

void write_report(const Report& report, Format format, std::ostream& out);

}  // namespace sig6::cli
