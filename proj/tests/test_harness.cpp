#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "semitrans/generator.hpp"
#include "semitrans/harness.hpp"
#include "semitrans/split_semitrans.hpp"

namespace {

using namespace semitrans;

TEST(SplitMix, ReferenceValues) {
  // First outputs of the reference splitmix64.c for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

TEST(SplitMix, BoundedDraws) {
  SplitMix64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Generator, Deterministic) {
  GenSpec spec{.k = 4, .t = 3, .density = 0.5, .seed = 1, .mode = GenMode::Random};
  auto a = generate(spec, 50), b = generate(spec, 50);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(format_graph(a[i].graph, std::span<const int>(a[i].clique)),
              format_graph(b[i].graph, std::span<const int>(b[i].clique)));
    EXPECT_EQ(format_graph(a[i].graph), format_graph(generate_one(spec, i).graph));
  }
  spec.seed = 2;
  auto c = generate(spec, 50);
  int same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i].graph.edges() == c[i].graph.edges();
  EXPECT_LT(same, 10);
}

TEST(Generator, ValidatesSpec) {
  EXPECT_THROW(generate({.k = -1}, 1), std::invalid_argument);
  EXPECT_THROW(generate({.density = 1.5}, 1), std::invalid_argument);
  EXPECT_THROW(generate({.k = 6, .t = 2, .mode = GenMode::Exhaustive}, 1), std::invalid_argument);
  EXPECT_THROW(generate({.k = 3, .t = 3, .mode = GenMode::PlantedNo}, 1), std::invalid_argument);
  EXPECT_THROW(parse_gen_mode("bogus"), std::invalid_argument);
  for (auto m : {GenMode::Random, GenMode::Exhaustive, GenMode::PlantedYes, GenMode::PlantedNo}) {
    EXPECT_EQ(parse_gen_mode(gen_mode_name(m)), m);
  }
}

TEST(Generator, PartitionsAreValid) {
  for (auto mode : {GenMode::Random, GenMode::PlantedYes, GenMode::PlantedNo}) {
    auto corpus = generate({.k = 7, .t = 5, .density = 0.4, .seed = 3, .mode = mode}, 300);
    for (const auto& p : corpus) ASSERT_FALSE(partition_violation(p));
  }
}

TEST(Generator, PlantedYesAccepted) {
  for (int k : {1, 2, 3, 5, 8, 40}) {
    for (int t : {0, 1, 4, 12}) {
      auto corpus = generate({.k = k, .t = t, .density = 0.3, .seed = 4, .mode = GenMode::PlantedYes},
                             60);
      for (const auto& p : corpus) ASSERT_TRUE(recognize(p).semi_transitive()) << format_graph(p.graph);
    }
  }
}

TEST(Generator, PlantedNoRejected) {
  for (int k : {4, 5, 9}) {
    for (int t : {3, 4, 7}) {
      auto corpus = generate({.k = k, .t = t, .density = 0.5, .seed = 5, .mode = GenMode::PlantedNo},
                             60);
      for (const auto& p : corpus) {
        ASSERT_FALSE(recognize(p).semi_transitive());
        if (p.graph.vertex_count() <= 10) {
          ASSERT_FALSE(oracle_semi_transitive(p.graph));
        }
      }
    }
  }
}

TEST(Generator, ExhaustiveProfilesAreDistinct) {
  auto corpus = generate({.k = 3, .t = 2, .mode = GenMode::Exhaustive}, 0);
  std::set<std::string> seen;
  for (const auto& p : corpus) {
    ASSERT_FALSE(partition_violation(p));
    seen.insert(format_graph(p.graph));
  }
  EXPECT_EQ(seen.size(), corpus.size());
  // t = 0: one type; t = 1: C(2,1) + C(2,2); t = 2: C(4,1..3).
  EXPECT_EQ(corpus.size(), 1u + 3u + 14u);
}

TEST(Methods, Parse) {
  EXPECT_EQ(parse_methods("recognize,orientation-oracle"),
            (std::vector<Method>{Method::Recognize, Method::OrientationOracle}));
  EXPECT_THROW(parse_methods(""), std::invalid_argument);
  EXPECT_THROW(parse_methods("recognize,nope"), std::invalid_argument);
}

TEST(DiffTest, AgreementAndDeterminism) {
  GenSpec spec{.k = 5, .t = 3, .density = 0.5, .seed = 6, .mode = GenMode::Random};
  auto a = difftest(spec, 300);
  auto b = difftest(spec, 300);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.instances, 300u);
  EXPECT_EQ(a.agreements, 300u);
  EXPECT_EQ(a.format(), b.format());
  EXPECT_NE(a.format(true), a.format());
}

TEST(DiffTest, ForbiddenInstanceAllSayNo) {
  std::vector<SplitPartition> corpus{
      SplitPartition{forbidden_graph(ForbiddenCase::B), {1, 2, 3, 4}, {5, 6, 7}}};
  auto report = difftest(corpus);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.accepted, 0u);
  EXPECT_EQ(report.agreements, 1u);
}

TEST(DiffTest, DisagreementDumpIsReplayable) {
  // Hand-built disagreement; its dump must parse back to the instance.
  DiffReport report;
  report.instances = 1;
  const std::vector<int> clique{1, 2, 3, 4};
  report.disagreements.push_back(
      {0, format_graph(forbidden_graph(ForbiddenCase::A), std::span<const int>(clique)),
       {{Method::Recognize, false}, {Method::LabelingOracle, true}}});
  EXPECT_FALSE(report.ok());
  auto text = report.format();
  auto pos = text.find("7 12\n");
  ASSERT_NE(pos, std::string::npos);
  auto file = parse_graph_file(std::string_view(text).substr(pos));
  ASSERT_TRUE(file.clique);
  EXPECT_EQ(file.graph.edges(), forbidden_graph(ForbiddenCase::A).edges());
}

TEST(DiffTest, GuardViolationThrows) {
  GenSpec spec{.k = 9, .t = 1, .density = 0.5, .seed = 1, .mode = GenMode::Random};
  EXPECT_THROW(difftest(spec, 1), SizeGuardExceeded);
}

TEST(Bench, SmallGridCompletes) {
  const std::vector<int> ks{8, 16}, ts{4, 8};
  auto report = bench(ks, ts, 3);
  EXPECT_EQ(report.cells.size(), 4u);
  EXPECT_FALSE(std::isnan(report.slope_t));
  EXPECT_FALSE(std::isnan(report.slope_k));
  EXPECT_FALSE(std::isnan(report.doubling_t));
  const std::vector<int> one{8};
  auto single = bench(one, ts, 1);
  EXPECT_TRUE(std::isnan(single.slope_k));
  EXPECT_THROW(bench(std::vector<int>{}, ts, 1), std::invalid_argument);
}

}  // namespace
