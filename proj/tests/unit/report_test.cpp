// Copyright 2026 The policytm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <regex>
#include <sstream>

#include "../support/synthetic.hpp"
#include "policytm/error.hpp"
#include "policytm/lda/model.hpp"
#include "policytm/report/export.hpp"
#include "policytm/report/pipeline.hpp"
#include "policytm/report/topic_table.hpp"

namespace policytm {
namespace {

LdaModel small_model(std::size_t k = 3) {
  FitConfig c;
  c.num_topics = k;
  c.iterations = 80;
  c.burn_in = 20;
  c.seed = 4;
  return fit(testing::random_dtm(60, 40, 12, 9), c);
}

LdaModel handmade() {
  LdaModel m;
  m.config.num_topics = 1;
  m.config.alpha = 50.0;
  m.vocab = {"b", "a", "c"};
  m.phi = Matrix::from_rows({{0.25, 0.25, 0.5}});
  return m;
}

TEST(TopicTable, RankedAndBounded) {
  const auto m = small_model();
  const auto r = topic_table(m, 5, "Health");
  ASSERT_EQ(r.topics.size(), 3u);
  for (const auto& topic : r.topics) {
    ASSERT_EQ(topic.size(), 5u);
    std::set<std::string> distinct;
    for (std::size_t i = 0; i < topic.size(); ++i) {
      EXPECT_GT(topic[i].probability, 0.0);
      EXPECT_LT(topic[i].probability, 1.0);
      if (i) EXPECT_GE(topic[i - 1].probability, topic[i].probability);
      distinct.insert(topic[i].term);
    }
    EXPECT_EQ(distinct.size(), topic.size());
  }
  EXPECT_THROW(topic_table(m, 0), DomainError);
  EXPECT_THROW(topic_table(m, m.vocab_size() + 1), DomainError);
}

TEST(TopicTable, FullRankingAndTieBreak) {
  const auto r = topic_table(handmade(), 3);
  ASSERT_EQ(r.topics[0].size(), 3u);
  EXPECT_EQ(r.topics[0][0].term, "c");
  EXPECT_EQ(r.topics[0][1].term, "a");
  EXPECT_EQ(r.topics[0][2].term, "b");
}

TEST(TopicTable, TextIsThreeDecimalFormattingOfJson) {
  const auto report = topic_table(small_model(), 5, "Agriculture");
  const auto text = render_topic_table(report);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# sector: Agriculture", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("Topic 1\tProb. (", 0), 0u);
  const std::regex prob(R"(^\d\.\d{3}$)");
  for (std::size_t r = 0; r < 5; ++r) {
    ASSERT_TRUE(std::getline(in, line));
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, '\t');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 2 * report.topics.size());
    for (std::size_t k = 0; k < report.topics.size(); ++k) {
      EXPECT_EQ(cells[2 * k], report.topics[k][r].term);
      EXPECT_TRUE(std::regex_match(cells[2 * k + 1], prob)) << cells[2 * k + 1];
      EXPECT_NEAR(std::stod(cells[2 * k + 1]), report.topics[k][r].probability, 0.0005 + 1e-12);
      char expect[16];
      std::snprintf(expect, sizeof(expect), "%.3f", report.topics[k][r].probability);
      EXPECT_EQ(cells[2 * k + 1], expect);
    }
  }
  EXPECT_EQ(format_probability(0.15), "0.150");
}

TEST(TopicTable, JsonRoundTrip) {
  const auto report = topic_table(small_model(), 4, "Health");
  EXPECT_EQ(topic_report_from_json(nlohmann::json::parse(dump_json(topic_report_to_json(report)))),
            report);
}

TEST(TuningSummary, TableTwoShape) {
  SectorTuning s;
  s.sector = "Home Affairs";
  s.tune.recommended_k = 10;
  s.tune.agreeing = {Metric::kCaoJuan2009, Metric::kGriffiths2004};
  const auto text = render_tuning_summary({s});
  EXPECT_EQ(text,
            "Sl. No.\tPolicy sectors\tApproximated number of topic models\tBenchmarking criteria\n"
            "1\tHome Affairs\t10\tCaoJuan2009; Griffiths2004\n");
}

TEST(Export, AtomicWriteAndReadBack) {
  const auto dir = std::filesystem::temp_directory_path() / "policytm_export_test";
  std::filesystem::remove_all(dir);
  write_file_atomic(dir / "nested" / "x.txt", "hello\n");
  EXPECT_EQ(read_file(dir / "nested" / "x.txt"), "hello\n");
  for (const auto& e : std::filesystem::directory_iterator(dir / "nested"))
    EXPECT_EQ(e.path().filename(), "x.txt");
  save_json(dir / "j.json", {{"a", 1}});
  EXPECT_EQ(load_json(dir / "j.json")["a"], 1);
  std::filesystem::remove_all(dir);
}

TEST(Export, IoErrorNamesPath) {
  try {
    read_file("/nonexistent/dir/file.json");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/file.json"), std::string::npos);
  }
  EXPECT_THROW(write_file_atomic("/proc/policytm/not/allowed", "x"), IoError);
}

TEST(Pipeline, Slugify) {
  EXPECT_EQ(slugify("Home Affairs"), "home_affairs");
  EXPECT_EQ(slugify("Prime Minister's Office"), "prime_minister_s_office");
}

TEST(Pipeline, TemporalAnalysisPerMonth) {
  std::vector<SentenceDocument> docs;
  const char* dates[] = {"2020-01-20", "2020-02-11", "2020-03-05", "2020-04-10"};
  for (int i = 0; i < 40; ++i) {
    SentenceDocument s;
    s.source_id = "d";
    s.index = static_cast<std::size_t>(i);
    s.sector = "Health";
    s.date = parse_iso_date(dates[i % 4]);
    s.tokens = {"covid", i % 2 ? "mask" : "test", "hospital", "w" + std::to_string(i % 7)};
    docs.push_back(s);
  }
  TemporalOptions opts;
  opts.fit.num_topics = 2;
  opts.fit.iterations = 40;
  opts.fit.burn_in = 10;
  const auto report = temporal_analysis(build_dtm(docs), "Health", opts);
  ASSERT_EQ(report.buckets.size(), 4u);
  EXPECT_EQ(report.buckets[0].label, "2020-01");
  EXPECT_EQ(report.buckets[3].label, "2020-04");
  for (const auto& b : report.buckets) {
    EXPECT_EQ(b.topics.num_topics, 2u);
    EXPECT_EQ(b.topics.period, b.label);
  }
  EXPECT_EQ(report.series.periods.size(), 4u);
  const auto text = render_temporal_topics(report);
  EXPECT_NE(text.find("2020-03"), std::string::npos);
  EXPECT_EQ(dump_json(temporal_report_to_json(report)),
            dump_json(temporal_report_to_json(temporal_analysis(build_dtm(docs), "Health", opts))));
}

}  // namespace
}  // namespace policytm
