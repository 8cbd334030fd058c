#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "binperm/field.hpp"
#include "binperm/search.hpp"
#include "binperm/theorems.hpp"

namespace binperm {

enum class ReportFormat { Json, Csv };

std::optional<ReportFormat> parse_format(std::string_view name);

/// The field model; valid-a integers are only meaningful relative to it.
struct FieldHeader {
  int n = 0;
  std::uint32_t reduction_poly = 0;
  Element generator;

  friend bool operator==(const FieldHeader&, const FieldHeader&) = default;
};

FieldHeader header_of(const Field& field);

struct SearchReport {
  FieldHeader field;
  std::vector<PBRecord> rows;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Lowercase, 0x-prefixed integer encoding.
std::string to_hex(std::uint32_t v);
inline std::string to_hex(Element x) { return to_hex(x.bits); }

/// Accepts "0x1f", "0X1F" or "1f". Throws std::invalid_argument on malformed input.
Element parse_hex(std::string_view text);

nlohmann::ordered_json to_json(const SearchReport& report);
SearchReport search_report_from_json(const nlohmann::json& j);

void write_report(const SearchReport& report, ReportFormat format, std::ostream& out);
/// Throws std::runtime_error naming the path when the file cannot be written.
void write_report(const SearchReport& report, ReportFormat format, const std::filesystem::path& path);

SearchReport read_report_json(std::istream& in);

/// Same top-level schema as a search report, plus a "validation" object.
nlohmann::ordered_json to_json(const ValidationReport& report);

}  // namespace binperm
