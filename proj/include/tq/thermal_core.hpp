#pragma once

// Thermal qubits, machine gap vectors and thermal-machine oracles.
//
// Units: k_B = hbar = 1. Every qubit has its ground level at energy 0, so a
// qubit is fully described by its gap and an inverse temperature. Inverse
// temperatures may be zero (maximally mixed) or negative (population
// inverted). Partition functions are always handled as logarithms.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tq/bits.hpp"

namespace tq {

// Raised when a population of exactly 0 or 1 is converted to a temperature.
class InfiniteTemperatureParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// log(1 + e^{-x}) without overflow for large |x|.
double log1p_exp_neg(double x);

// log(e^a + e^b).
double log_add_exp(double a, double b);

// p_0 = 1 / (1 + e^{-beta * gap}). Throws std::domain_error for gap <= 0.
double ground_state_population(double gap, double beta);

// Exact inverse of ground_state_population: (1/gap) * log(p0 / (1 - p0)).
// Throws InfiniteTemperatureParameter for p0 in {0, 1}, std::domain_error
// for p0 outside [0, 1] or gap <= 0.
double inverse_temperature_from_population(double p0, double gap);

// Thermal excitation probability e^{-beta*gap} / (1 + e^{-beta*gap}).
// Unlike ground_state_population this accepts gap == 0 (returns 1/2).
double excitation_probability(double gap, double beta);

class ThermalQubit {
 public:
  ThermalQubit(double gap, double beta);

  double gap() const { return gap_; }
  double beta() const { return beta_; }
  double ground_population() const { return ground_state_population(gap_, beta_); }
  double excited_population() const { return excitation_probability(gap_, beta_); }
  // log Z = log(1 + e^{-beta*gap})
  double log_partition() const { return log1p_exp_neg(beta_ * gap_); }

  friend bool operator==(const ThermalQubit&, const ThermalQubit&) = default;

 private:
  double gap_;
  double beta_;
};

// Ordered machine-qubit gaps Gamma. Entries may be zero (a zero-gap qubit is
// maximally mixed at any temperature).
class GapVector {
 public:
  GapVector() = default;
  explicit GapVector(std::vector<double> gaps);

  std::size_t size() const { return gaps_.size(); }
  double operator[](std::size_t i) const { return gaps_[i]; }
  std::span<const double> values() const { return gaps_; }
  // |Gamma|, accumulated left to right (same order as dot()).
  double total() const { return total_; }

  // X . Gamma
  double dot(const QueryMask& mask) const;

  // sum_i log(1 + e^{-beta * gap_i})
  double log_partition(double beta) const;

 private:
  std::vector<double> gaps_;
  double total_ = 0.0;
};

enum class FunctionClass { Constant0, Constant1, Balanced, Other };

std::string to_string(FunctionClass c);

// Truth table of f : {0,1}^n -> {0,1}; outputs[x] is f at the big-endian
// index x.
class BooleanFunctionTable {
 public:
  BooleanFunctionTable(std::size_t n, std::vector<std::uint8_t> outputs);

  static BooleanFunctionTable constant(std::size_t n, bool value);

  std::size_t n() const { return n_; }
  std::size_t size() const { return outputs_.size(); }
  std::span<const std::uint8_t> outputs() const { return outputs_; }
  bool operator()(std::size_t x) const { return outputs_.at(x) != 0; }
  bool operator()(const BitString& x) const;

  std::size_t ones() const;
  FunctionClass classify() const;

  friend bool operator==(const BooleanFunctionTable&, const BooleanFunctionTable&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> outputs_;
};

struct DjProblem {
  BooleanFunctionTable function;
  double e1;
  double e2;
};

struct BvProblem {
  BitString secret;
  double gamma;
};

struct CustomProblem {};

using OracleProblem = std::variant<DjProblem, BvProblem, CustomProblem>;

// Product of thermal qubits at a common inverse temperature beta_M. Stored in
// product form; the 2^N-level state is only ever materialised by exact_sim.
class ThermalMachineOracle {
 public:
  ThermalMachineOracle(GapVector gaps, double beta_machine, OracleProblem problem);

  const GapVector& gaps() const { return gaps_; }
  double beta_machine() const { return beta_machine_; }
  const OracleProblem& problem() const { return problem_; }
  std::size_t size() const { return gaps_.size(); }

  // log Z_f
  double log_partition() const { return log_partition_; }

  // tau_x, the machine qubit at index x. Throws std::out_of_range for a bad
  // index and std::domain_error for a zero-gap qubit.
  ThermalQubit qubit(std::size_t x) const;

  bool is_dj() const { return std::holds_alternative<DjProblem>(problem_); }
  bool is_bv() const { return std::holds_alternative<BvProblem>(problem_); }

 private:
  GapVector gaps_;
  double beta_machine_;
  OracleProblem problem_;
  double log_partition_;
};

// Gap of machine qubit x: E(x) = f(x) E1 + (f(x) xor 1) E2.
ThermalMachineOracle build_dj_oracle(const BooleanFunctionTable& f, double e1, double e2, double beta_machine);

// Gap of machine qubit i: s_i * gamma.
ThermalMachineOracle build_bv_oracle(const BitString& secret, double gamma, double beta_machine);

ThermalMachineOracle build_custom_oracle(std::vector<double> gaps, double beta_machine);

struct PreparedQubit {
  bool excited;                   // sampled outcome of the preparation channel
  bool function_value;            // f(x) as read by the oracle
  double excitation_probability;  // p_x
  ThermalQubit target;            // the thermal state the channel reproduces
};

// Prepares one machine qubit from |0> with a conditional stochastic bit flip
// of probability p_x = e^{-beta_M*gap}/(1 + e^{-beta_M*gap}). The flip acts on
// a diagonal state, so its marginal is exactly the thermal qubit (gap, beta_M).
PreparedQubit prepare_via_conditional_thermalization(const BitString& x, const BooleanFunctionTable& f,
                                                     double target_gap, double beta_machine,
                                                     std::uint64_t seed);

}  // namespace tq
