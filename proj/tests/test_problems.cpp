#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "tq/problems.hpp"

using namespace tq;

TEST(EnumerateBalanced, Counts) {
  EXPECT_EQ(enumerate_balanced_functions(1).size(), 2u);
  EXPECT_EQ(enumerate_balanced_functions(2).size(), 6u);
  EXPECT_EQ(enumerate_balanced_functions(3).size(), 70u);
  EXPECT_EQ(enumerate_balanced_functions(4).size(), 12870u);
  EXPECT_EQ(enumerate_balanced_functions(5, 10).size(), 10u);
  EXPECT_THROW(enumerate_balanced_functions(5), std::invalid_argument);
  EXPECT_THROW(enumerate_balanced_functions(0), std::invalid_argument);
}

TEST(EnumerateBalanced, AllDistinctAndBalanced) {
  const auto all = enumerate_balanced_functions(3);
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& inst : all) {
    EXPECT_EQ(inst.function.classify(), FunctionClass::Balanced);
    EXPECT_EQ(inst.classification, FunctionClass::Balanced);
    seen.insert({inst.function.outputs().begin(), inst.function.outputs().end()});
  }
  EXPECT_EQ(seen.size(), all.size());
  const auto n1 = enumerate_balanced_functions(1);
  EXPECT_EQ(n1[0].function, BooleanFunctionTable(1, {0, 1}));
  EXPECT_EQ(n1[1].function, BooleanFunctionTable(1, {1, 0}));
}

TEST(EnumerateDjInstances, ClassificationCorrect) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& inst : enumerate_dj_instances(n)) EXPECT_EQ(inst.function.classify(), inst.classification);
  }
}

TEST(SampleBalanced, IsBalanced) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_balanced_function(5, rng).function.classify(), FunctionClass::Balanced);
}

TEST(DjGapMagnitude, ExamplesAndAgreement) {
  EXPECT_EQ(dj_gap_magnitude(FunctionClass::Constant1, 4, 1.0, 0.5), 4.0);
  EXPECT_EQ(dj_gap_magnitude(FunctionClass::Balanced, 4, 1.0, 0.5), 3.0);
  EXPECT_EQ(dj_gap_magnitude(FunctionClass::Constant0, 4, 1.0, 0.5), 2.0);
  EXPECT_THROW(dj_gap_magnitude(FunctionClass::Balanced, 3, 1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(dj_gap_magnitude(FunctionClass::Other, 4, 1.0, 0.5), std::invalid_argument);
  for (const auto& inst : enumerate_dj_instances(2)) {
    const auto o = build_dj_oracle(inst.function, 1.7, 0.3, 1.0);
    EXPECT_NEAR(dj_gap_magnitude(inst.classification, 4, 1.7, 0.3), o.gaps().total(), 1e-15);
  }
}

TEST(HammingWeightPopulation, Examples) {
  const ThermalQubit mixed(1.0, 0.0);
  EXPECT_NEAR(hamming_weight_population(BvInstance(BitString::parse("000")), 1.0, mixed, 1.0), 0.5, 1e-16);
  const double expected = (1.0 + (1.0 - std::exp(-3.0)) / std::pow(1.0 + std::exp(-1.0), 3)) / 2.0;
  EXPECT_NEAR(hamming_weight_population(BvInstance(BitString::parse("111")), 1.0, mixed, 1.0), expected, 1e-15);
  EXPECT_NEAR(expected, oracle::kickback_p0(1.0, 0.0, {1, 1, 1}, 1.0, {1, 1, 1}), 1e-15);
  EXPECT_THROW(hamming_weight_population(BvInstance(BitString::parse("1")), 0.0, mixed, 1.0), std::domain_error);
}

TEST(HammingWeightPopulation, MatchesIndependentOracleAllSecrets) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t s = 0; s < (1u << n); ++s) {
      const BitString secret = BitString::from_index(s, n);
      std::vector<double> gaps;
      for (std::size_t i = 0; i < n; ++i) gaps.push_back(secret[i] ? 0.8 : 0.0);
      const double p = oracle::kickback_p0(1.3, -0.4, gaps, 0.9, std::vector<int>(n, 1));
      EXPECT_NEAR(hamming_weight_population(BvInstance(secret), 0.8, ThermalQubit(1.3, -0.4), 0.9), p, 1e-14);
    }
  }
}

TEST(HammingWeightPopulation, IncreasesWithWeightWhenCooling) {
  const ThermalQubit probe(1.0, 0.0);
  for (double gamma : {0.3, 1.0, 2.0}) {
    for (double bm : {0.5, 1.0, 3.0}) {
      double prev = -1.0;
      for (const char* s : {"000", "100", "110", "111"}) {
        const double p = hamming_weight_population(BvInstance(BitString::parse(s)), gamma, probe, bm);
        EXPECT_GT(p, prev) << s;
        prev = p;
      }
    }
  }
}

TEST(DeterministicClassical, WorstCaseAndEarlyExit) {
  const auto c = solve_dj_deterministic_classical(BooleanFunctionTable::constant(3, false));
  EXPECT_EQ(c.classification, FunctionClass::Constant0);
  EXPECT_EQ(c.queries, 5u);
  const auto b = solve_dj_deterministic_classical(BooleanFunctionTable(2, {0, 1, 1, 0}));
  EXPECT_EQ(b.classification, FunctionClass::Balanced);
  EXPECT_EQ(b.queries, 2u);
  const auto bad = solve_dj_deterministic_classical(BooleanFunctionTable(2, {0, 1, 1, 1}));
  EXPECT_TRUE(bad.promise_violated);
  EXPECT_EQ(bad.classification, FunctionClass::Other);
}

TEST(DeterministicClassical, AlwaysCorrectWithinBudget) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& inst : enumerate_dj_instances(n)) {
      const auto r = solve_dj_deterministic_classical(inst.function);
      EXPECT_EQ(r.classification, inst.classification);
      EXPECT_LE(r.queries, (std::size_t{1} << (n - 1)) + 1);
      EXPECT_FALSE(r.promise_violated);
    }
  }
}
