#pragma once

// Data-parallel inner loops. Every kernel exists twice with the same
// signature: `serial` is the plain reference loop kept for testing, and
// `parallel` is the OpenMP version used by default. Parallel reductions sum
// fixed-size chunks and combine the partials in chunk order, so results do
// not depend on the thread count.

#include <cstdint>
#include <span>

#include "tq/readout_stats.hpp"

namespace tq::kernels {

inline constexpr std::size_t kReductionChunk = 4096;

struct ProbeSums {
  double ground;
  double excited;
};

struct ReadoutTrialSpec {
  double excited_probability;  // of the sampled distribution
  BinaryDistribution balanced;
  BinaryDistribution constant;
  std::size_t n_samples;
  std::size_t trials;
  std::uint64_t seed;
};

namespace serial {

// Joint level energies w*i_S + i_M.Gamma and log Boltzmann weights
// -beta_S w i_S - beta_M i_M.Gamma for index = (i_S << N) | i_M, with machine
// qubit 0 at the most significant machine bit.
void joint_levels(std::span<const double> gaps, double omega, double beta_s, double beta_m, std::span<double> energies,
                  std::span<double> log_weights);

double max_value(std::span<const double> v);

// v[i] = exp(v[i] - shift); returns the sum of the results.
double exp_shift_sum(std::span<double> v, double shift);

void scale(std::span<double> v, double factor);

double sum(std::span<const double> v);

ProbeSums probe_sums(std::span<const double> populations);

// Exchanges the probe bit with machine qubit x in every basis label.
void swap_probe_with_machine(std::span<double> populations, std::size_t machine_qubits, std::size_t x);

// Number of trials whose likelihood-ratio decision is Balanced.
std::uint64_t count_balanced_decisions(const ReadoutTrialSpec& spec);

template <class F>
void for_each_index(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace serial

namespace parallel {

void joint_levels(std::span<const double> gaps, double omega, double beta_s, double beta_m, std::span<double> energies,
                  std::span<double> log_weights);
double max_value(std::span<const double> v);
double exp_shift_sum(std::span<double> v, double shift);
void scale(std::span<double> v, double factor);
double sum(std::span<const double> v);
ProbeSums probe_sums(std::span<const double> populations);
void swap_probe_with_machine(std::span<double> populations, std::size_t machine_qubits, std::size_t x);
std::uint64_t count_balanced_decisions(const ReadoutTrialSpec& spec);

// Independent iterations; f must only write to slots owned by index i.
template <class F>
void for_each_index(std::size_t n, F&& f) {
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

}  // namespace parallel

}  // namespace tq::kernels
