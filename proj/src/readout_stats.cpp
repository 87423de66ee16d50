#include "tq/readout_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tq/kernels.hpp"
#include "tq/query_engine.hpp"

namespace tq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// p log(p / q) with 0 log 0 = 0
double entropy_term(double p, double q) {
  if (p == 0.0) return 0.0;
  if (q == 0.0) return kInf;
  return p * std::log(p / q);
}

// count * log(p), with 0 * log 0 = 0
double log_likelihood_term(std::uint64_t count, double p) {
  if (count == 0) return 0.0;
  if (p == 0.0) return -kInf;
  return static_cast<double>(count) * std::log(p);
}

void check_delta(double delta, const char* where) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument(std::string(where) + ": delta must lie in (0, 1)");
}

}  // namespace

BinaryDistribution::BinaryDistribution(double p0) : p0_(p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("BinaryDistribution: p0 must lie in [0, 1]");
}

std::string to_string(Hypothesis h) { return h == Hypothesis::Balanced ? "balanced" : "constant"; }

double relative_entropy(const BinaryDistribution& p, const BinaryDistribution& q) {
  const double d = entropy_term(p.p0(), q.p0()) + entropy_term(p.p1(), q.p1());
  // rounding can leave a tiny negative value for p ~ q
  return std::max(d, 0.0);
}

double total_variation(const BinaryDistribution& p, const BinaryDistribution& q) { return std::abs(p.p0() - q.p0()); }

double pinsker_lower_bound(const BinaryDistribution& p, const BinaryDistribution& q) {
  const double tv = total_variation(p, q);
  return 2.0 * tv * tv;
}

double chernoff_stein_bound(double delta, double divergence) {
  check_delta(delta, "chernoff_stein_bound");
  if (!(divergence >= 0.0)) throw std::invalid_argument("chernoff_stein_bound: divergence must be non-negative");
  return -std::log(delta) / divergence;
}

std::optional<std::uint64_t> chernoff_stein_samples(double delta, double divergence) {
  const double bound = chernoff_stein_bound(delta, divergence);
  if (!std::isfinite(bound)) return std::nullopt;
  return static_cast<std::uint64_t>(std::ceil(bound));
}

std::uint64_t sample_bound_from_threshold(double delta, double t) {
  check_delta(delta, "sample_bound_from_threshold");
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("sample_bound_from_threshold: t must lie in (0, 1]");
  return static_cast<std::uint64_t>(std::ceil(-std::log(delta) / (2.0 * t * t)));
}

double mixed_query_divergence() { return relative_entropy(BinaryDistribution(1.0), BinaryDistribution(0.75)); }

DistinguishabilityReport distinguishability_report(double e1, double e2, double beta_machine, std::size_t machine_size,
                                                   double t) {
  if (!(e2 > 0.0) || !(e1 > e2)) throw std::invalid_argument("distinguishability_report: require E1 > E2 > 0");
  if (machine_size == 0 || machine_size % 2 != 0) {
    throw std::invalid_argument("distinguishability_report: machine size must be even and positive");
  }
  if (!(t > 0.0)) throw std::invalid_argument("distinguishability_report: t must be positive");
  const auto n = static_cast<double>(machine_size);
  const double l1 = log1p_exp_neg(beta_machine * e1);
  const double l2 = log1p_exp_neg(beta_machine * e2);

  DistinguishabilityReport r;
  r.t = t;
  r.log_z_const = n * l1;
  r.log_z_bal = 0.5 * n * (l1 + l2);
  r.lhs = std::exp(-r.log_z_const) - std::exp(-r.log_z_bal);

  const double gamma_const = n * e1;
  const double gamma_bal = 0.5 * n * (e1 + e2);
  r.chi = std::exp(r.log_z_const - beta_machine * gamma_bal) - std::exp(r.log_z_bal - beta_machine * gamma_const);
  // chi / (Z_b Z_c) = e^{-log Z_b - beta |G_b|} - e^{-log Z_c - beta |G_c|}
  const double chi_scaled = std::exp(-r.log_z_bal - beta_machine * gamma_bal) -
                            std::exp(-r.log_z_const - beta_machine * gamma_const);
  r.chi_relative = std::abs(chi_scaled) / (2.0 * t);
  r.satisfied = r.lhs > 2.0 * t;
  return r;
}

Hypothesis likelihood_ratio_decision(std::uint64_t ground, std::uint64_t excited, const BinaryDistribution& balanced,
                                     const BinaryDistribution& constant) {
  if (ground + excited == 0) throw std::invalid_argument("likelihood_ratio_test: empty sample");
  const double lb = log_likelihood_term(ground, balanced.p0()) + log_likelihood_term(excited, balanced.p1());
  const double lc = log_likelihood_term(ground, constant.p0()) + log_likelihood_term(excited, constant.p1());
  if (lb == -kInf && lc == -kInf) {
    throw std::invalid_argument("likelihood_ratio_test: sample has zero likelihood under both hypotheses");
  }
  return lb >= lc ? Hypothesis::Balanced : Hypothesis::Constant;
}

Hypothesis likelihood_ratio_test(std::span<const std::uint8_t> samples, const BinaryDistribution& balanced,
                                 const BinaryDistribution& constant) {
  const auto excited = static_cast<std::uint64_t>(std::count_if(samples.begin(), samples.end(),
                                                                [](std::uint8_t s) { return s != 0; }));
  return likelihood_ratio_decision(samples.size() - excited, excited, balanced, constant);
}

HypothesisTestReport monte_carlo_readout(const BinaryDistribution& truth, const BinaryDistribution& balanced,
                                         const BinaryDistribution& constant, const MonteCarloConfig& config) {
  if (config.n_samples == 0 || config.trials == 0) {
    throw std::invalid_argument("monte_carlo_readout: n_samples and trials must be positive");
  }
  check_delta(config.delta, "monte_carlo_readout");

  HypothesisTestReport r;
  r.n_samples = config.n_samples;
  r.trials = config.trials;
  r.seed = config.seed;
  r.delta = config.delta;
  r.truth = total_variation(truth, balanced) <= total_variation(truth, constant) ? Hypothesis::Balanced
                                                                                : Hypothesis::Constant;

  const kernels::ReadoutTrialSpec spec{truth.p1(), balanced, constant, config.n_samples, config.trials, config.seed};
  r.balanced_decisions = config.parallel ? kernels::parallel::count_balanced_decisions(spec)
                                         : kernels::serial::count_balanced_decisions(spec);
  r.constant_decisions = config.trials - r.balanced_decisions;
  r.decision = r.balanced_decisions >= r.constant_decisions ? Hypothesis::Balanced : Hypothesis::Constant;

  r.divergence = relative_entropy(balanced, constant);
  r.pinsker_lower = pinsker_lower_bound(balanced, constant);
  r.total_variation = total_variation(balanced, constant);
  r.chernoff_stein_bound = chernoff_stein_samples(config.delta, r.divergence);

  const auto trials = static_cast<double>(config.trials);
  if (r.truth == Hypothesis::Constant) {
    r.empirical_false_positive = static_cast<double>(r.balanced_decisions) / trials;
    r.error_rate = *r.empirical_false_positive;
  } else {
    r.empirical_false_negative = static_cast<double>(r.constant_decisions) / trials;
    r.error_rate = *r.empirical_false_negative;
  }
  r.binomial_sigma = std::sqrt(r.error_rate * (1.0 - r.error_rate) / trials);
  return r;
}

double classical_with_replacement_error(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("classical_with_replacement_error: k must be at least 1");
  return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(k - 1, 2000)));
}

double classical_without_replacement_error(std::size_t n, std::uint64_t k) {
  if (n == 0 || n > 62) throw std::invalid_argument("classical_without_replacement_error: n out of range");
  const std::uint64_t total = std::uint64_t{1} << n;
  if (k == 0 || k > total) throw std::invalid_argument("classical_without_replacement_error: need 1 <= k <= 2^n");
  const std::uint64_t half = total / 2;
  if (k > half) return 0.0;
  if (k <= 64) {
    double r = 2.0;
    for (std::uint64_t i = 0; i < k; ++i) r *= static_cast<double>(half - i) / static_cast<double>(total - i);
    return r;
  }
  const auto h = static_cast<double>(half);
  const auto m = static_cast<double>(total);
  const auto kk = static_cast<double>(k);
  const double log_ratio = std::lgamma(h + 1.0) - std::lgamma(h - kk + 1.0) - std::lgamma(m + 1.0) +
                           std::lgamma(m - kk + 1.0);
  return 2.0 * std::exp(log_ratio);
}

std::uint64_t classical_sample_complexity(double delta) {
  check_delta(delta, "classical_sample_complexity");
  return static_cast<std::uint64_t>(std::ceil(std::log2(1.0 / delta) + 1.0));
}

std::vector<CrossoverRow> crossover_analysis(std::span<const double> delta_grid, std::span<const double> t_grid) {
  if (delta_grid.empty() || t_grid.empty()) throw std::invalid_argument("crossover_analysis: grids must be nonempty");
  std::vector<CrossoverRow> rows;
  rows.reserve(delta_grid.size() * t_grid.size());
  for (double delta : delta_grid) {
    const std::uint64_t k = classical_sample_complexity(delta);
    for (double t : t_grid) {
      const std::uint64_t n_star = sample_bound_from_threshold(delta, t);
      std::size_t n = 1;
      while (n < 63 && n_star >= (std::uint64_t{1} << (n - 1)) + 1) ++n;
      rows.push_back({delta, t, n_star, k, n, n_star < k});
    }
  }
  return rows;
}

std::optional<double> probabilistic_crossover_threshold(double delta, std::span<const double> t_grid) {
  const std::uint64_t k = classical_sample_complexity(delta);
  std::optional<double> best;
  for (double t : t_grid) {
    if (sample_bound_from_threshold(delta, t) < k && (!best || t < *best)) best = t;
  }
  return best;
}

DjReadoutHypotheses dj_readout_hypotheses(const ThermalQubit& probe, std::size_t n, double e1, double e2,
                                          double beta_machine) {
  if (n == 0 || n > 30) throw std::invalid_argument("dj_readout_hypotheses: n out of range");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> outputs(size, 0);
  std::fill(outputs.begin() + static_cast<std::ptrdiff_t>(size / 2), outputs.end(), std::uint8_t{1});

  auto post = [&](const BooleanFunctionTable& f) {
    return BinaryDistribution(virtual_swap_outcome(probe, build_dj_oracle(f, e1, e2, beta_machine)).p0_after);
  };
  const BinaryDistribution bal = post(BooleanFunctionTable(n, std::move(outputs)));
  const BinaryDistribution c1 = post(BooleanFunctionTable::constant(n, true));
  const BinaryDistribution c2 = post(BooleanFunctionTable::constant(n, false));
  const double d1 = relative_entropy(bal, c1);
  const double d2 = relative_entropy(bal, c2);
  return {bal, c1, c2, d1, d2, d1 <= d2};
}

}  // namespace tq
