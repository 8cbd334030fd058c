#include "binperm/report.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "binperm/index_agw.hpp"

namespace binperm {

using ojson = nlohmann::ordered_json;

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

FieldHeader header_of(const Field& field) {
  return FieldHeader{field.degree(), field.reduction_poly(), field.generator()};
}

std::string to_hex(std::uint32_t v) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return "0x" + std::string(buf, end);
}

Element parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
    digits.remove_prefix(2);
  std::uint32_t v = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, 16);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
    throw std::invalid_argument("malformed hex field element '" + std::string(text) + "'");
  return Element{v};
}

namespace {

ojson elements_json(const std::vector<Element>& xs) {
  ojson arr = ojson::array();
  for (Element x : xs) arr.push_back(to_hex(x));
  return arr;
}

std::vector<Element> elements_from(const nlohmann::json& arr) {
  std::vector<Element> out;
  for (const auto& v : arr) out.push_back(parse_hex(v.get<std::string>()));
  return out;
}

ojson header_json(const FieldHeader& h) {
  return ojson{{"n", h.n}, {"reduction_poly", to_hex(h.reduction_poly)},
               {"generator", to_hex(h.generator)}};
}

ojson record_json(const PBRecord& r) {
  ojson j;
  j["n"] = r.n;
  j["i"] = r.i;
  j["index"] = r.index_d;
  j["linearized"] = r.linearized;
  j["valid_count"] = r.valid_count;
  j["elided"] = r.elided;
  j["valid_a"] = r.elided ? ojson(nullptr) : elements_json(r.valid_a);
  j["a_min"] = to_hex(r.a_min);
  j["a_max"] = to_hex(r.a_max);
  j["a_sample"] = to_hex(r.a_sample);
  j["theorem_tags"] = r.theorem_tags;
  return j;
}

PBRecord record_from(const nlohmann::json& j) {
  PBRecord r;
  r.n = j.at("n").get<int>();
  r.i = j.at("i").get<std::uint32_t>();
  r.index_d = j.at("index").get<std::uint32_t>();
  r.linearized = j.at("linearized").get<bool>();
  r.valid_count = j.at("valid_count").get<std::uint64_t>();
  r.elided = j.at("elided").get<bool>();
  if (!r.elided) r.valid_a = elements_from(j.at("valid_a"));
  r.a_min = parse_hex(j.at("a_min").get<std::string>());
  r.a_max = parse_hex(j.at("a_max").get<std::string>());
  r.a_sample = parse_hex(j.at("a_sample").get<std::string>());
  r.theorem_tags = j.at("theorem_tags").get<std::vector<std::string>>();
  return r;
}

void write_csv(const SearchReport& report, std::ostream& out) {
  out << "# field n=" << report.field.n << " reduction_poly=" << to_hex(report.field.reduction_poly)
      << " generator=" << to_hex(report.field.generator) << '\n';
  out << "n,i,index,linearized,valid_count,sample_a_hex,theorem_tags\n";
  for (const auto& r : report.rows) {
    std::string tags;
    for (const auto& t : r.theorem_tags) tags += (tags.empty() ? "" : ";") + t;
    out << r.n << ',' << r.i << ',' << r.index_d << ',' << (r.linearized ? "true" : "false") << ','
        << r.valid_count << ',' << to_hex(r.a_sample) << ',' << tags << '\n';
  }
}

}  // namespace

ojson to_json(const SearchReport& report) {
  ojson rows = ojson::array();
  for (const auto& r : report.rows) rows.push_back(record_json(r));
  return ojson{{"field", header_json(report.field)}, {"rows", std::move(rows)}};
}

SearchReport search_report_from_json(const nlohmann::json& j) {
  SearchReport report;
  const auto& f = j.at("field");
  report.field.n = f.at("n").get<int>();
  report.field.reduction_poly = parse_hex(f.at("reduction_poly").get<std::string>()).bits;
  report.field.generator = parse_hex(f.at("generator").get<std::string>());
  for (const auto& r : j.at("rows")) report.rows.push_back(record_from(r));
  return report;
}

void write_report(const SearchReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json)
    out << to_json(report).dump(2) << '\n';
  else
    write_csv(report, out);
}

void write_report(const SearchReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path.string());
  write_report(report, format, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing report file " + path.string());
}

SearchReport read_report_json(std::istream& in) {
  return search_report_from_json(nlohmann::json::parse(in));
}

ojson to_json(const ValidationReport& report) {
  const TheoremCase& c = report.theorem;
  const Field field(c.total_degree());
  SearchReport base{header_of(field), {}};
  if (!report.brute.empty())
    base.rows.push_back(make_record(field.degree(), c.exponent,
                                    compute_index(field, c.exponent).d, report.brute));
  ojson j = to_json(base);
  j["validation"] = ojson{
      {"case", std::string(family_tag(c.family))},
      {"base_n", c.base_n},
      {"m", c.m},
      {"exponent", c.exponent},
      {"tester", report.brute_tester},
      {"predicted_count", report.predicted.size()},
      {"brute_count", report.brute.size()},
      {"predicted", elements_json(report.predicted)},
      {"brute", elements_json(report.brute)},
      {"discrepancies", elements_json(report.discrepancies)},
      {"matching_gammas", elements_json(report.matching_gammas)},
      {"verified", report.verified()},
      {"predicted_seconds", report.predicted_seconds},
      {"brute_seconds", report.brute_seconds},
  };
  return j;
}

}  // namespace binperm
