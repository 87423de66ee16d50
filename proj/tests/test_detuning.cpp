#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tq/detuning.hpp"
#include "tq/exact_sim.hpp"
#include "tq/query_engine.hpp"

using namespace tq;

TEST(FlipProbability, Examples) {
  EXPECT_NEAR(flip_probability(1.0, 0.0, std::numbers::pi), 1.0, 1e-15);
  EXPECT_NEAR(flip_probability(2.0, 0.0, std::numbers::pi / 2.0), 1.0, 1e-15);
  EXPECT_EQ(flip_probability(1.0, 0.7, 0.0), 0.0);
  const double t = std::numbers::pi / std::sqrt(2.0);
  const double v = flip_probability(1.0, 1.0, t);
  EXPECT_NEAR(v, 0.5 * std::pow(std::sin(std::sqrt(2.0) * t / 2.0), 2), 1e-15);
  EXPECT_NEAR(v, 0.5, 1e-15);  // sqrt(2) t / 2 = pi/2
  EXPECT_THROW(flip_probability(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST(FlipProbability, EnvelopeBound) {
  for (double g : {0.1, 0.5, 1.0, 3.0}) {
    for (double d = -3.0; d <= 3.0; d += 0.25) {
      for (double t = 0.0; t <= 20.0; t += 0.1) {
        ASSERT_LE(flip_probability(g, d, t), suppression_factor(g, d) + 1e-15);
      }
    }
  }
}

TEST(SuppressionFactor, Examples) {
  EXPECT_EQ(suppression_factor(1.0, 0.0), 1.0);
  EXPECT_EQ(suppression_factor(2.0, 2.0), 0.5);
  double prev = 2.0;
  for (double d = 0.0; d < 5.0; d += 0.1) {
    const double e = suppression_factor(1.3, d);
    EXPECT_LT(e, prev);
    EXPECT_EQ(e, suppression_factor(1.3, -d));
    prev = e;
  }
}

TEST(DetunedTemperature, EtaOneMatchesQueryEngine) {
  const auto cfg = ExperimentConfig::defaults();
  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto o = biased_bv_oracle(cfg, BitString::from_index(s, 3));
    for (double bs = 0.0; bs <= 3.0; bs += 0.3) {
      const ThermalQubit probe(1.0, bs);
      const auto q = virtual_swap_outcome(probe, o);
      const auto d = detuned_probe_temperature(probe, o, 1.0);
      ASSERT_TRUE(q.beta_after && d.beta_after);
      EXPECT_NEAR(*d.beta_after, *q.beta_after, 1e-10);
    }
  }
}

TEST(DetunedTemperature, NoExchangeKeepsBeta) {
  const auto o = build_custom_oracle({0.5, 0.5}, 1.0);
  const ThermalQubit probe(1.0, 1.0);  // beta_S w = beta_M |Gamma|
  for (double eta : {0.1, 0.5, 1.0}) EXPECT_EQ(*detuned_probe_temperature(probe, o, eta).beta_after, 1.0);
}

TEST(DetunedTemperature, TwoPathAgreementThroughExactSim) {
  const auto cfg = ExperimentConfig::defaults();
  const auto o = biased_bv_oracle(cfg, BitString::parse("101"));
  for (double bs : {0.0, 0.5, 2.0}) {
    const ThermalQubit probe(1.0, bs);
    const auto s = build_joint_state(probe, o);
    const double p0 = probe_marginal(s).p0();
    const double p1 = probe_marginal(apply_kickback(s, BitString::ones(3))).p0();
    const double expected = inverse_temperature_from_population(p0 + 0.5 * (p1 - p0), 1.0);
    EXPECT_NEAR(*detuned_probe_temperature(probe, o, 0.5).beta_after, expected, 1e-10);
  }
}

TEST(DetunedTemperature, MonotoneInEta) {
  const auto cfg = ExperimentConfig::defaults();
  const auto o = biased_bv_oracle(cfg, BitString::parse("011"));
  for (double bs : {0.0, 0.5, 2.5}) {
    const ThermalQubit probe(1.0, bs);
    const double sign = virtual_swap_outcome(probe, o).delta_p0 > 0 ? 1.0 : -1.0;
    double prev = bs;
    for (double eta = 0.05; eta <= 1.0; eta += 0.05) {
      const double b = *detuned_probe_temperature(probe, o, eta).beta_after;
      EXPECT_GE(sign * (b - prev), 0.0);
      prev = b;
    }
  }
  EXPECT_THROW(detuned_probe_temperature(ThermalQubit(1, 1), o, 0.0), std::invalid_argument);
  EXPECT_THROW(detuned_probe_temperature(ThermalQubit(1, 1), o, 1.5), std::invalid_argument);
}

TEST(DetunedTemperature, AsPrintedPathDiffers) {
  const auto cfg = ExperimentConfig::defaults();
  const auto o = biased_bv_oracle(cfg, BitString::parse("111"));
  const auto d = detuned_probe_temperature(ThermalQubit(1.0, 0.2), o, 0.9);
  ASSERT_TRUE(d.beta_after);
  if (d.beta_after_as_printed) EXPECT_GT(std::abs(*d.beta_after_as_printed - *d.beta_after), 1e-6);
}

TEST(Bv3Sweep, DefaultConfigGivesEightCurves) {
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.05 * i);
  const auto s = bv3_sweep(ExperimentConfig::defaults(), grid);
  ASSERT_EQ(s.curves.size(), 8u);
  EXPECT_EQ(s.distinct_curves, 8u);
  EXPECT_GT(s.min_pointwise_separation, 0.0);
  EXPECT_EQ(s.curves[5].secret.to_string(), "101");
  const auto again = bv3_sweep(ExperimentConfig::defaults(), grid, false);
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(again.curves[c].beta_after, s.curves[c].beta_after);
}

TEST(Bv3Sweep, SymmetricGapsCollapseByWeight) {
  auto cfg = ExperimentConfig::defaults();
  cfg.gammas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const auto s = bv3_sweep(cfg, {0.0, 1.0, 2.0});
  EXPECT_LE(s.distinct_curves, 4u);
  EXPECT_EQ(s.min_sup_separation, 0.0);
  cfg.epsilon = 0.0;
  EXPECT_EQ(bv3_sweep(cfg, {0.0, 1.0, 2.0}).distinct_curves, 1u);
}

TEST(Bv3Sweep, Validation) {
  auto cfg = ExperimentConfig::defaults();
  EXPECT_THROW(bv3_sweep(cfg, {}), std::invalid_argument);
  cfg.coupling = 0.0;
  EXPECT_THROW(bv3_sweep(cfg, {0.0}), std::invalid_argument);
}

TEST(Bv3Sweep, DetuningUsesBiasedEncoding) {
  const auto cfg = ExperimentConfig::defaults();
  EXPECT_NEAR(secret_detuning(cfg, BitString::parse("000")), -cfg.epsilon, 1e-15);
  EXPECT_NEAR(secret_detuning(cfg, BitString::parse("111")), cfg.epsilon, 1e-15);
}
