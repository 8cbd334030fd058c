#include "binperm/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace binperm {
namespace {

SearchReport run(int n) {
  SearchConfig c;
  c.n = n;
  c.skip_linearized = true;
  return SearchReport{header_of(Field(n)), search_field(c)};
}

TEST(Hex, EncodeDecode) {
  EXPECT_EQ(to_hex(0u), "0x0");
  EXPECT_EQ(to_hex(0x1f3u), "0x1f3");
  EXPECT_EQ(parse_hex("0x1F3"), Element{0x1f3});
  EXPECT_EQ(parse_hex("ff"), Element{255});
  for (const char* bad : {"", "0x", "xyz", "0x12g", "-1"}) EXPECT_THROW(parse_hex(bad), std::invalid_argument) << bad;
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_format("csv"), ReportFormat::Csv);
  EXPECT_FALSE(parse_format("xml").has_value());
}

TEST(Json, HeaderAndRows) {
  const auto report = run(6);
  const auto j = to_json(report);
  EXPECT_EQ(j["field"]["n"], 6);
  EXPECT_EQ(j["field"]["reduction_poly"], "0x43");
  EXPECT_EQ(j["field"]["generator"], "0x2");
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][0]["i"], 10);
  EXPECT_EQ(j["rows"][0]["index"], 7);
  EXPECT_EQ(j["rows"][0]["theorem_tags"], nlohmann::ordered_json::array({"f2"}));
}

TEST(Json, RoundTrip) {
  for (int n : {4, 6, 9}) {
    const auto report = run(n);
    std::stringstream buf;
    write_report(report, ReportFormat::Json, buf);
    EXPECT_EQ(read_report_json(buf), report) << n;
  }
}

TEST(Json, EmptyReportKeepsHeader) {
  const auto report = run(5);
  ASSERT_TRUE(report.rows.empty());
  std::stringstream buf;
  write_report(report, ReportFormat::Json, buf);
  const auto j = nlohmann::json::parse(buf.str());
  EXPECT_TRUE(j["rows"].empty());
  EXPECT_EQ(j["field"]["n"], 5);
  buf.seekg(0);
  EXPECT_EQ(read_report_json(buf), report);
}

TEST(Csv, Layout) {
  std::stringstream buf;
  write_report(run(6), ReportFormat::Csv, buf);
  std::vector<std::string> lines;
  for (std::string line; std::getline(buf, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "# field n=6 reduction_poly=0x43 generator=0x2");
  EXPECT_EQ(lines[1], "n,i,index,linearized,valid_count,sample_a_hex,theorem_tags");
  EXPECT_EQ(lines[2].rfind("6,10,7,false,14,0x", 0), 0u);
  EXPECT_EQ(lines[2].substr(lines[2].size() - 3), ",f2");
  EXPECT_EQ(lines[4].back(), ',');  // i = 22 carries no tag
}

TEST(Files, WriteAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "binperm_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "n6.json";
  const auto report = run(6);
  write_report(report, ReportFormat::Json, path);
  std::ifstream in(path);
  EXPECT_EQ(read_report_json(in), report);
  std::filesystem::remove_all(dir);

  try {
    write_report(report, ReportFormat::Csv, std::filesystem::path("/nonexistent/dir/out.csv"));
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/out.csv"), std::string::npos);
  }
}

TEST(ValidationJson, SharesSearchSchema) {
  const auto j = to_json(validate(f2_case(2)));
  EXPECT_EQ(j["field"]["n"], 6);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["i"], 10);
  EXPECT_EQ(j["rows"][0]["valid_count"], 14);
  EXPECT_EQ(j["validation"]["case"], "f2");
  EXPECT_EQ(j["validation"]["verified"], true);
  EXPECT_EQ(j["validation"]["predicted_count"], 14);
  EXPECT_TRUE(j["validation"]["discrepancies"].empty());

  const auto none = to_json(validate(f4_case(4)));
  EXPECT_TRUE(none["rows"].empty());
  EXPECT_EQ(none["validation"]["brute_count"], 0);
}

}  // namespace
}  // namespace binperm
