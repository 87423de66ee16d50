#include "tq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tq/random.hpp"

namespace tq::kernels {

namespace {

void check_joint_sizes(std::span<const double> gaps, std::span<double> energies, std::span<double> log_weights) {
  if (gaps.size() > 40) throw std::length_error("joint_levels: too many machine qubits");
  const std::size_t size = std::size_t{2} << gaps.size();
  if (energies.size() != size || log_weights.size() != size) {
    throw std::invalid_argument("joint_levels: output spans must have 2^(N+1) entries");
  }
}

inline void fill_level(std::span<const double> gaps, double omega, double beta_s, double beta_m, std::size_t index,
                       double& energy, double& log_weight) {
  const std::size_t n = gaps.size();
  const std::size_t probe_bit = index >> n;
  double machine_energy = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    if ((index >> (n - 1 - x)) & 1U) machine_energy += gaps[x];
  }
  const double probe_energy = probe_bit ? omega : 0.0;
  energy = probe_energy + machine_energy;
  log_weight = -beta_s * probe_energy - beta_m * machine_energy;
}

bool decide_trial(const ReadoutTrialSpec& spec, std::size_t trial) {
  Rng rng(derive_seed(spec.seed, trial));
  std::uint64_t excited = 0;
  for (std::size_t s = 0; s < spec.n_samples; ++s) {
    if (rng.uniform() < spec.excited_probability) ++excited;
  }
  return likelihood_ratio_decision(spec.n_samples - excited, excited, spec.balanced, spec.constant) ==
         Hypothesis::Balanced;
}

std::size_t chunk_count(std::size_t n) { return (n + kReductionChunk - 1) / kReductionChunk; }

}  // namespace

namespace serial {

void joint_levels(std::span<const double> gaps, double omega, double beta_s, double beta_m, std::span<double> energies,
                  std::span<double> log_weights) {
  check_joint_sizes(gaps, energies, log_weights);
  for (std::size_t i = 0; i < energies.size(); ++i) {
    fill_level(gaps, omega, beta_s, beta_m, i, energies[i], log_weights[i]);
  }
}

double max_value(std::span<const double> v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  return m;
}

double exp_shift_sum(std::span<double> v, double shift) {
  double s = 0.0;
  for (double& x : v) {
    x = std::exp(x - shift);
    s += x;
  }
  return s;
}

void scale(std::span<double> v, double factor) {
  for (double& x : v) x *= factor;
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

ProbeSums probe_sums(std::span<const double> populations) {
  const std::size_t half = populations.size() / 2;
  return {sum(populations.first(half)), sum(populations.subspan(half))};
}

void swap_probe_with_machine(std::span<double> populations, std::size_t machine_qubits, std::size_t x) {
  if (x >= machine_qubits) throw std::out_of_range("swap_probe_with_machine: machine index out of range");
  const std::size_t half = std::size_t{1} << machine_qubits;
  const std::size_t bit = std::size_t{1} << (machine_qubits - 1 - x);
  for (std::size_t m = 0; m < half; ++m) {
    if ((m & bit) == 0) std::swap(populations[half | m], populations[m | bit]);
  }
}

std::uint64_t count_balanced_decisions(const ReadoutTrialSpec& spec) {
  std::uint64_t count = 0;
  for (std::size_t t = 0; t < spec.trials; ++t) count += decide_trial(spec, t) ? 1 : 0;
  return count;
}

}  // namespace serial

namespace parallel {

void joint_levels(std::span<const double> gaps, double omega, double beta_s, double beta_m, std::span<double> energies,
                  std::span<double> log_weights) {
  check_joint_sizes(gaps, energies, log_weights);
  const auto size = static_cast<std::int64_t>(energies.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    fill_level(gaps, omega, beta_s, beta_m, idx, energies[idx], log_weights[idx]);
  }
}

double max_value(std::span<const double> v) {
  double m = -std::numeric_limits<double>::infinity();
  const auto size = static_cast<std::int64_t>(v.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::int64_t i = 0; i < size; ++i) m = std::max(m, v[static_cast<std::size_t>(i)]);
  return m;
}

double exp_shift_sum(std::span<double> v, double shift) {
  const std::size_t chunks = chunk_count(v.size());
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t end = std::min(begin + kReductionChunk, v.size());
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      v[i] = std::exp(v[i] - shift);
      s += v[i];
    }
    partial[static_cast<std::size_t>(c)] = s;
  }
  return serial::sum(partial);
}

void scale(std::span<double> v, double factor) {
  const auto size = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] *= factor;
}

double sum(std::span<const double> v) {
  const std::size_t chunks = chunk_count(v.size());
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t end = std::min(begin + kReductionChunk, v.size());
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += v[i];
    partial[static_cast<std::size_t>(c)] = s;
  }
  return serial::sum(partial);
}

ProbeSums probe_sums(std::span<const double> populations) {
  const std::size_t half = populations.size() / 2;
  return {sum(populations.first(half)), sum(populations.subspan(half))};
}

void swap_probe_with_machine(std::span<double> populations, std::size_t machine_qubits, std::size_t x) {
  if (x >= machine_qubits) throw std::out_of_range("swap_probe_with_machine: machine index out of range");
  const std::size_t half = std::size_t{1} << machine_qubits;
  const std::size_t bit = std::size_t{1} << (machine_qubits - 1 - x);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(half); ++i) {
    const auto m = static_cast<std::size_t>(i);
    if ((m & bit) == 0) std::swap(populations[half | m], populations[m | bit]);
  }
}

std::uint64_t count_balanced_decisions(const ReadoutTrialSpec& spec) {
  std::uint64_t count = 0;
  const auto trials = static_cast<std::int64_t>(spec.trials);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t t = 0; t < trials; ++t) count += decide_trial(spec, static_cast<std::size_t>(t)) ? 1 : 0;
  return count;
}

}  // namespace parallel

}  // namespace tq::kernels
