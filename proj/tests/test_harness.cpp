#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "twistcube/harness.hpp"

namespace tc = twistcube;

namespace {

tc::SweepSpec single(const char* type, std::size_t len, std::vector<std::int64_t> alphabet = {0, 1}) {
  tc::SweepSpec spec;
  spec.entries.push_back({tc::parse_lie_type(type), len, std::nullopt, std::nullopt});
  spec.alphabet = std::move(alphabet);
  return spec;
}

}  // namespace

TEST(Enumerate, CountsAndOrder) {
  const auto inst = tc::enumerate_instances(single("A2", 4));
  EXPECT_EQ(inst.size(), 4u * (1 + 2 + 4 + 8 + 16));
  EXPECT_TRUE(inst[0].word.empty());
  EXPECT_EQ(inst[0].weight, tc::DominantWeight({0, 0}));
  EXPECT_EQ(inst[3].weight, tc::DominantWeight({1, 1}));
  EXPECT_EQ(inst[4].word, tc::Word({1}));
  EXPECT_EQ(inst.back().word, tc::Word({2, 2, 2, 2}));
  EXPECT_TRUE(tc::enumerate_instances(tc::SweepSpec{}).empty());
}

TEST(Enumerate, SamplesAreSeeded) {
  auto spec = single("B3", 6);
  spec.samples = 50;
  spec.seed = 9;
  const auto a = tc::enumerate_instances(spec);
  const auto b = tc::enumerate_instances(spec);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(a, b);
  spec.seed = 10;
  EXPECT_NE(tc::enumerate_instances(spec), a);
}

TEST(Enumerate, CapRejected) {
  auto spec = single("A2", 21);
  EXPECT_THROW(tc::enumerate_instances(spec), tc::CapExceeded);
}

TEST(VerifyEquivalence, A2Exhaustive) {
  const auto report = tc::verify_equivalence(single("A2", 4));
  EXPECT_EQ(report.instances, 124u);
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_EQ(report.untwisted_count + report.twisted_count, report.instances);
}

TEST(VerifyEquivalence, G2Exhaustive) {
  const auto report = tc::verify_equivalence(single("G2", 6));
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_GT(report.twisted_count, 0u);
}

TEST(VerifyEquivalence, EmptySweep) {
  const auto report = tc::verify_equivalence(tc::SweepSpec{});
  EXPECT_EQ(report.instances, 0u);
  EXPECT_TRUE(report.ok());
}

TEST(VerifyEquivalence, DeterministicAcrossJobs) {
  auto spec = single("B3", 4);
  const auto a = tc::to_json(tc::verify_equivalence(spec, 1), false).dump();
  const auto b = tc::to_json(tc::verify_equivalence(spec, 4), false).dump();
  EXPECT_EQ(a, b);
}

TEST(VerifyEquivalence, CounterexamplesAreReportedAndReproducible) {
  // A checker that disagrees on every twisted instance stands in for a broken criterion.
  const tc::InstanceChecker broken = [](const tc::Instance& inst, const tc::SweepSpec& spec) {
    auto out = tc::check_instance(inst, spec);
    if (!out.untwisted) out.discrepancy = "forced";
    return out;
  };
  const auto spec = single("A2", 3);
  const auto report = tc::verify_equivalence(spec, 2, broken);
  EXPECT_EQ(report.counterexamples.size(), report.twisted_count);
  EXPECT_FALSE(report.ok());
  for (const auto& c : report.counterexamples) {
    const auto reloaded = tc::instance_from_json(tc::to_json(c.instance));
    EXPECT_EQ(reloaded, c.instance);
    EXPECT_EQ(broken(reloaded, spec).discrepancy, c.reason);
  }
}

TEST(CheckInstance, CatchesVerdictMismatch) {
  // Raw check of the real checker on a known twisted instance: no discrepancy.
  const tc::Instance inst{tc::parse_lie_type("A2"), {1, 2, 1}, {2, 1}};
  const auto out = tc::check_instance(inst);
  EXPECT_FALSE(out.untwisted);
  EXPECT_FALSE(out.discrepancy.has_value());
}

TEST(Atlas, A1) {
  tc::SweepSpec spec;
  spec.entries.push_back({tc::parse_lie_type("A1"), 3, std::nullopt, std::vector<tc::DominantWeight>{{1}}});
  const auto rows = tc::atlas(spec);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_EQ(rows[n].length, n);
    EXPECT_EQ(rows[n].total, 1u);
    EXPECT_EQ(rows[n].avoiding, n <= 1 ? 1u : 0u);
  }
}

TEST(Atlas, ZeroWeightAvoidsEverything) {
  tc::SweepSpec spec = single("C3", 4, {0});
  for (const auto& row : tc::atlas(spec)) EXPECT_EQ(row.avoiding, row.total);
}

TEST(Atlas, A2LengthTwo) {
  tc::SweepSpec spec;
  spec.entries.push_back({tc::parse_lie_type("A2"), 2, std::nullopt, std::vector<tc::DominantWeight>{{1, 1}}});
  const auto rows = tc::atlas(spec);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].total, 4u);
  EXPECT_EQ(rows[2].avoiding, 2u);
  const tc::DominantWeight rho{1, 1};
  EXPECT_FALSE(tc::find_hesitant_lambda_walk(tc::parse_lie_type("A2"), {1, 2}, rho).has_value());
  EXPECT_FALSE(tc::find_hesitant_lambda_walk(tc::parse_lie_type("A2"), {2, 1}, rho).has_value());
  EXPECT_TRUE(tc::find_hesitant_lambda_walk(tc::parse_lie_type("A2"), {1, 1}, rho).has_value());
  EXPECT_TRUE(tc::find_hesitant_lambda_walk(tc::parse_lie_type("A2"), {2, 2}, rho).has_value());
}

TEST(SpecJson, Shapes) {
  const auto s1 = tc::sweep_spec_from_json(tc::json::parse(R"({"types":["A2","G2"],"max_length":3})"));
  ASSERT_EQ(s1.entries.size(), 2u);
  EXPECT_EQ(s1.entries[1].type.to_string(), "G2");
  const auto s2 = tc::sweep_spec_from_json(tc::json::parse(
      R"({"entries":[{"type":"A1","max_length":3,"weights":[[1]]}],"seed":4,"samples":7})"));
  EXPECT_EQ(s2.samples, 7u);
  EXPECT_EQ(s2.entries[0].weights->size(), 1u);
  const auto s3 = tc::sweep_spec_from_json(tc::json::parse(R"({"default":true})"));
  EXPECT_EQ(s3.entries.size(), tc::default_sweep_spec().entries.size());

  for (const char* bad : {R"([])", R"({"types":"A2","max_length":2})", R"({"types":["A2"]})",
                          R"({"types":["C2"],"max_length":2})", R"({"entries":[{"type":"A2"}]})",
                          R"({"entries":[{"type":"A2","max_length":2,"weights":[[1]]}]})",
                          R"({"types":["A2"],"max_length":25})", R"({"alphabet":[-1]})", R"({"bogus":1})"}) {
    EXPECT_THROW(tc::sweep_spec_from_json(tc::json::parse(bad)), tc::Error) << bad;
  }
}

TEST(ReportJson, Schema) {
  const auto report = tc::verify_equivalence(single("A1", 2));
  const auto j = tc::to_json(report);
  for (const char* key : {"instances", "counterexamples", "untwisted_count", "twisted_count", "wall_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(tc::to_json(report, false).contains("wall_ms"));
}
