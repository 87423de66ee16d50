#pragma once

// Detuned flip-flop exchange between the probe and a three-qubit linear
// oracle. Secret bit 0 biases machine qubit i to gap (1 - eps) gamma_i and
// bit 1 to (1 + eps) gamma_i; the detuning is d(s) = sum_i s_i gamma_i - w.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tq/thermal_core.hpp"

namespace tq {

struct ExperimentConfig {
  std::array<double, 3> gammas{};
  double epsilon = 0.05;
  double coupling = 1.0;  // g
  double omega = 1.0;
  double beta_machine = 1.0;
  // Interaction time for flip_probability; empty means the resonant pi-time pi/g.
  std::optional<double> time;
  // Scale the exchange by P_flip(t) instead of the short-time factor eta.
  bool use_flip_probability = false;

  // gamma = (1, sqrt 2, sqrt 3) normalised so that sum gamma_i = w = 1.
  static ExperimentConfig defaults();
  void validate() const;
  double interaction_time() const;
};

// g^2/(g^2 + d^2) sin^2(sqrt(g^2 + d^2) t / 2)
double flip_probability(double coupling, double detuning, double time);

// eta = g^2/(g^2 + d^2)
double suppression_factor(double coupling, double detuning);

struct DetunedTemperature {
  double delta_p0 = 0.0;  // undetuned exchange, before scaling by eta
  // (1/w) log[(1 + eta Z_S dp0) / (e^{-beta_S w} - eta Z_S dp0)]
  std::optional<double> beta_after;
  // the same expression with Z_f - ... - 1 in the denominator, kept for comparison
  std::optional<double> beta_after_as_printed;
};

// Scales the 1^N kickback population change by eta. Throws
// std::invalid_argument unless 0 < eta <= 1.
DetunedTemperature detuned_probe_temperature(const ThermalQubit& probe, const ThermalMachineOracle& oracle, double eta);

// Secret bits s_1 s_2 s_3 mapped to biases; d(s) for this config.
double secret_detuning(const ExperimentConfig& config, const BitString& secret);
ThermalMachineOracle biased_bv_oracle(const ExperimentConfig& config, const BitString& secret);

struct Bv3Curve {
  BitString secret;
  double detuning = 0.0;
  double eta = 0.0;
  std::vector<std::optional<double>> beta_after;
};

struct Bv3Sweep {
  std::vector<double> beta_s_grid;
  std::vector<Bv3Curve> curves;  // secrets in index order 000 ... 111
  // min over grid points and curve pairs of |beta'_a - beta'_b|
  double min_pointwise_separation = 0.0;
  // min over curve pairs of the largest gap along the grid
  double min_sup_separation = 0.0;
  // curves whose values differ from every other curve somewhere on the grid
  std::size_t distinct_curves = 0;
};

Bv3Sweep bv3_sweep(const ExperimentConfig& config, const std::vector<double>& beta_s_grid, bool parallel = true);

}  // namespace tq
