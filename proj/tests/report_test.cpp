#include <gtest/gtest.h>

#include "rainbow/generators.hpp"
#include "rainbow/report.hpp"

using namespace rainbow;

TEST(Report, RoundTripsThroughStructuredFormat) {
  Graph pet = gen::petersen();
  RunReport r;
  r.command = "color";
  r.input = summarize(pet);
  r.outcome = outcome_json(pet, color_diam2(pet, {.witnesses = true}), true);
  r.timing_ms = 1.5;
  r.seed = 42;
  auto parsed = report_from_json(nlohmann::json::parse(render_structured(r)));
  EXPECT_EQ(parsed, r);

  RunReport bare;
  bare.command = "gen";
  EXPECT_EQ(report_from_json(nlohmann::json::parse(render_structured(bare))), bare);
}

TEST(Report, Summary) {
  auto s = summarize(gen::star(4));
  EXPECT_EQ(s.classification, "BridgedCutVertex");
  EXPECT_EQ(s.bridge_count, 4u);
  EXPECT_EQ(s.cut_vertices, std::vector<Vertex>{0});
  EXPECT_FALSE(s.srg);
  auto p = summarize(gen::petersen());
  EXPECT_EQ(p.srg, (SrgParameters{10, 3, 0, 1}));
}

TEST(Report, TextRender) {
  RunReport r;
  r.command = "exact";
  r.input = summarize(gen::cycle(6));
  r.outcome = rc_result_json(gen::cycle(6), exact_rc(gen::cycle(6)));
  std::string text = render_text(r);
  EXPECT_NE(text.find("command: exact"), std::string::npos);
  EXPECT_NE(text.find("kind: Exact"), std::string::npos);
  EXPECT_NE(text.find("value: 3"), std::string::npos);
}
