#pragma once

// Statistical readout of the probe: divergences, sample-complexity bounds,
// likelihood-ratio decisions and the classical sampling baselines.
//
// Natural logarithms (nats) throughout, except classical_sample_complexity
// which is defined with log2.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tq/thermal_core.hpp"

namespace tq {

// Energy-basis measurement statistics of a qubit: p0 ground, p1 = 1 - p0.
class BinaryDistribution {
 public:
  explicit BinaryDistribution(double p0);

  double p0() const { return p0_; }
  double p1() const { return 1.0 - p0_; }

  friend bool operator==(const BinaryDistribution&, const BinaryDistribution&) = default;

 private:
  double p0_;
};

enum class Hypothesis { Balanced, Constant };

std::string to_string(Hypothesis h);

// D(p || q) in nats with 0 log 0 = 0. Returns +infinity when p is not
// absolutely continuous with respect to q.
double relative_entropy(const BinaryDistribution& p, const BinaryDistribution& q);

double total_variation(const BinaryDistribution& p, const BinaryDistribution& q);

// 2 d_TV^2, Pinsker's lower bound on D.
double pinsker_lower_bound(const BinaryDistribution& p, const BinaryDistribution& q);

// log(1/delta) / divergence, unrounded.
double chernoff_stein_bound(double delta, double divergence);

// ceil(log(1/delta) / divergence); empty when divergence == 0 (unbounded).
std::optional<std::uint64_t> chernoff_stein_samples(double delta, double divergence);

// ceil(log(1/delta) / (2 t^2)).
std::uint64_t sample_bound_from_threshold(double delta, double t);

// D((1,0) || (3/4,1/4)) = log(4/3): the best divergence reachable by the
// mixed-input query, where tau_1 = |0><0| and tau_2 = 1/2.
double mixed_query_divergence();

struct DistinguishabilityReport {
  double t = 0.0;
  double lhs = 0.0;  // 1/Z_f^Const - 1/Z_f^Bal
  double chi = 0.0;  // Z_f^Const e^{-beta_M |G_Bal|} - Z_f^Bal e^{-beta_M |G_Const|}
  // |chi| / (2 t Z_f^Bal Z_f^Const): chi on the scale of the 2t threshold
  double chi_relative = 0.0;
  double log_z_const = 0.0;
  double log_z_bal = 0.0;
  bool satisfied = false;  // lhs > 2t, chi omitted
};

// Requires E1 > E2 > 0 and even N.
DistinguishabilityReport distinguishability_report(double e1, double e2, double beta_machine, std::size_t machine_size,
                                                   double t);

// Samples are energy measurement outcomes: 0 ground, 1 excited. Ties go to
// Balanced. Throws std::invalid_argument for an empty sample or when neither
// hypothesis gives the sample non-zero likelihood.
Hypothesis likelihood_ratio_test(std::span<const std::uint8_t> samples, const BinaryDistribution& balanced,
                                 const BinaryDistribution& constant);

Hypothesis likelihood_ratio_decision(std::uint64_t ground, std::uint64_t excited, const BinaryDistribution& balanced,
                                     const BinaryDistribution& constant);

struct MonteCarloConfig {
  std::size_t n_samples = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double delta = 0.1;  // target false-positive rate used for the reported bound
  bool parallel = true;
};

struct HypothesisTestReport {
  std::size_t n_samples = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  Hypothesis truth = Hypothesis::Balanced;     // hypothesis nearest the sampled distribution
  Hypothesis decision = Hypothesis::Balanced;  // majority decision over trials
  std::uint64_t balanced_decisions = 0;
  std::uint64_t constant_decisions = 0;
  double divergence = 0.0;  // D(balanced || constant), nats
  double pinsker_lower = 0.0;
  double total_variation = 0.0;
  std::optional<std::uint64_t> chernoff_stein_bound;
  // fraction deciding Balanced when the truth is Constant
  std::optional<double> empirical_false_positive;
  // fraction deciding Constant when the truth is Balanced
  std::optional<double> empirical_false_negative;
  double error_rate = 0.0;
  double binomial_sigma = 0.0;  // sqrt(r (1 - r) / trials) of error_rate
  std::string log_unit = "nats";
};

// Repeats sampling + likelihood_ratio_test over independent seeded trials.
// Trial i draws from derive_seed(seed, i), so the report does not depend on
// thread count or scheduling.
HypothesisTestReport monte_carlo_readout(const BinaryDistribution& truth, const BinaryDistribution& balanced,
                                         const BinaryDistribution& constant, const MonteCarloConfig& config);

// delta = 2^{-(k-1)}
double classical_with_replacement_error(std::uint64_t k);

// delta' = 2 C(2^{n-1}, k) / C(2^n, k), zero for k > 2^{n-1}.
double classical_without_replacement_error(std::size_t n, std::uint64_t k);

// k = ceil(log2(1/delta) + 1)
std::uint64_t classical_sample_complexity(double delta);

struct CrossoverRow {
  double delta;
  double t;
  std::uint64_t n_star;
  std::uint64_t k_classical;
  // smallest problem size n with n_star < 2^{n-1} + 1
  std::size_t n_crossover;
  bool thermal_beats_probabilistic;  // n_star < k_classical
};

std::vector<CrossoverRow> crossover_analysis(std::span<const double> delta_grid, std::span<const double> t_grid);

// Smallest t on a grid with n* < k for a given delta, or empty.
std::optional<double> probabilistic_crossover_threshold(double delta, std::span<const double> t_grid);

// Post-kickback probe statistics for the DJ answer classes at fixed probe
// and machine parameters. The Constant hypothesis is whichever constant
// function minimises D(balanced || constant).
struct DjReadoutHypotheses {
  BinaryDistribution balanced;
  BinaryDistribution constant1;  // |Gamma| = N E1
  BinaryDistribution constant2;  // |Gamma| = N E2
  double divergence1;
  double divergence2;
  bool constant1_minimises;

  const BinaryDistribution& constant() const { return constant1_minimises ? constant1 : constant2; }
};

DjReadoutHypotheses dj_readout_hypotheses(const ThermalQubit& probe, std::size_t n, double e1, double e2,
                                          double beta_machine);

}  // namespace tq
