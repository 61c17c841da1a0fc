#include "fibfield/report_io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

namespace fibfield {
namespace {

TEST(ScanJsonl, RoundTrip) {
  for (std::uint64_t p : {0u, 2u, 3u, 5u, 7u}) {
    const ScanReport r = selfreciprocal_scan(p, 400);
    const std::string text = scan_report_to_jsonl(r);
    EXPECT_EQ(scan_report_from_jsonl(text), r) << "p=" << p;
    EXPECT_EQ(scan_report_to_jsonl(scan_report_from_jsonl(text)), text);
  }
}

TEST(ScanJsonl, RecordShape) {
  const std::string text = scan_report_to_jsonl(selfreciprocal_scan(3, 50));
  std::istringstream in(text);
  std::string line;
  bool saw45 = false;
  std::size_t lines = 0;
  nlohmann::json last;
  while (std::getline(in, line)) {
    ++lines;
    last = nlohmann::json::parse(line);
    if (last.contains("n") && last["n"] == 45) {
      saw45 = true;
      EXPECT_EQ(last["degree"], 44);
      EXPECT_EQ(last["factorization"], nlohmann::json::parse("[[3,2],[5,1]]"));
      EXPECT_EQ(last["palindromic"], true);
      EXPECT_EQ(last["family"], "5*3^l");
      EXPECT_EQ(last["flagged"], false);
    }
  }
  EXPECT_TRUE(saw45);
  ASSERT_TRUE(last.contains("summary"));
  EXPECT_EQ(last["summary"]["hit_count"], lines - 1);
}

TEST(ScanJsonl, RejectsMalformedInput) {
  EXPECT_THROW(scan_report_from_jsonl("not json\n"), std::invalid_argument);
  EXPECT_THROW(scan_report_from_jsonl(""), std::invalid_argument);
  const std::string text = scan_report_to_jsonl(selfreciprocal_scan(2, 10));
  const std::string without_summary = text.substr(0, text.rfind("{\"summary\""));
  EXPECT_THROW(scan_report_from_jsonl(without_summary), std::invalid_argument);
}

TEST(RenderValue, PrimeSubfieldAndTuple) {
  const auto f9 = make_field(3, 2);
  EXPECT_EQ(render_value(f9->from_int(2)), "2");
  EXPECT_EQ(render_value(f9->generator()), "\"(0,1)\"");
}

TEST(MomentCsv, Q3) {
  const std::string csv = moment_series_to_csv(cross_validate(make_field(3, 1)));
  const std::string expected =
      "# q=3 p=3 e=1 case=THREE_MOD4_ODD_E period=8\n"
      "n,d_recur,d_oracle,agree\n"
      "1,0,0,true\n"
      "2,0,0,true\n"
      "3,2,2,true\n"
      "4,0,0,true\n"
      "5,2,2,true\n"
      "6,0,0,true\n"
      "7,0,0,true\n"
      "8,0,0,true\n";
  EXPECT_EQ(csv, expected);
}

TEST(EvenQJsonl, EveryLineParses) {
  const std::string text = even_q_report_to_jsonl(even_q_relations_check(make_field(2, 2), 2));
  std::istringstream in(text);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    ++lines;
  }
  EXPECT_GT(lines, 2u);
}

}  // namespace
}  // namespace fibfield
