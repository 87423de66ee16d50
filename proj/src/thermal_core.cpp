#include "tq/thermal_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tq/random.hpp"

namespace tq {

double log1p_exp_neg(double x) {
  if (x >= 0.0) return std::log1p(std::exp(-x));
  return -x + std::log1p(std::exp(x));
}

double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double ground_state_population(double gap, double beta) {
  if (!(gap > 0.0)) throw std::domain_error("ground_state_population: gap must be positive");
  const double x = beta * gap;
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double excitation_probability(double gap, double beta) {
  if (gap < 0.0) throw std::domain_error("excitation_probability: gap must be non-negative");
  if (gap == 0.0) return 0.5;
  const double x = beta * gap;
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double inverse_temperature_from_population(double p0, double gap) {
  if (!(gap > 0.0)) throw std::domain_error("inverse_temperature_from_population: gap must be positive");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::domain_error("inverse_temperature_from_population: p0 outside [0, 1]");
  if (p0 == 0.0 || p0 == 1.0) {
    throw InfiniteTemperatureParameter("inverse_temperature_from_population: pure state has no finite inverse temperature");
  }
  return (std::log(p0) - std::log1p(-p0)) / gap;
}

ThermalQubit::ThermalQubit(double gap, double beta) : gap_(gap), beta_(beta) {
  if (!(gap > 0.0) || !std::isfinite(gap)) throw std::domain_error("ThermalQubit: gap must be positive and finite");
  if (std::isnan(beta)) throw std::domain_error("ThermalQubit: inverse temperature is NaN");
}

GapVector::GapVector(std::vector<double> gaps) : gaps_(std::move(gaps)) {
  for (double g : gaps_) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::domain_error("GapVector: gaps must be finite and non-negative");
    total_ += g;
  }
}

double GapVector::dot(const QueryMask& mask) const {
  if (mask.size() != gaps_.size()) throw std::invalid_argument("GapVector::dot: mask length does not match gap vector");
  double s = 0.0;
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    if (mask[i]) s += gaps_[i];
  }
  return s;
}

double GapVector::log_partition(double beta) const {
  double s = 0.0;
  for (double g : gaps_) s += log1p_exp_neg(beta * g);
  return s;
}

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant0: return "constant0";
    case FunctionClass::Constant1: return "constant1";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Other: return "other";
  }
  return "other";
}

BooleanFunctionTable::BooleanFunctionTable(std::size_t n, std::vector<std::uint8_t> outputs)
    : n_(n), outputs_(std::move(outputs)) {
  if (n > 30) throw std::invalid_argument("BooleanFunctionTable: n too large");
  if (outputs_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("BooleanFunctionTable: expected 2^n outputs");
  }
  for (auto v : outputs_) {
    if (v > 1) throw std::invalid_argument("BooleanFunctionTable: outputs must be 0 or 1");
  }
}

BooleanFunctionTable BooleanFunctionTable::constant(std::size_t n, bool value) {
  return BooleanFunctionTable(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

bool BooleanFunctionTable::operator()(const BitString& x) const {
  if (x.size() != n_) throw std::invalid_argument("BooleanFunctionTable: input has wrong width");
  return (*this)(static_cast<std::size_t>(x.to_index()));
}

std::size_t BooleanFunctionTable::ones() const {
  return static_cast<std::size_t>(std::count(outputs_.begin(), outputs_.end(), std::uint8_t{1}));
}

FunctionClass BooleanFunctionTable::classify() const {
  const std::size_t k = ones();
  if (k == 0) return FunctionClass::Constant0;
  if (k == outputs_.size()) return FunctionClass::Constant1;
  if (2 * k == outputs_.size()) return FunctionClass::Balanced;
  return FunctionClass::Other;
}

ThermalMachineOracle::ThermalMachineOracle(GapVector gaps, double beta_machine, OracleProblem problem)
    : gaps_(std::move(gaps)), beta_machine_(beta_machine), problem_(std::move(problem)) {
  if (!std::isfinite(beta_machine)) throw std::domain_error("ThermalMachineOracle: beta_M must be finite");
  log_partition_ = gaps_.log_partition(beta_machine_);
  if (!std::isfinite(log_partition_)) throw std::domain_error("ThermalMachineOracle: log Z_f is not finite");
}

ThermalQubit ThermalMachineOracle::qubit(std::size_t x) const {
  if (x >= gaps_.size()) throw std::out_of_range("ThermalMachineOracle: machine qubit index out of range");
  return ThermalQubit(gaps_[x], beta_machine_);
}

ThermalMachineOracle build_dj_oracle(const BooleanFunctionTable& f, double e1, double e2, double beta_machine) {
  if (!(e1 > 0.0) || !(e2 > 0.0)) throw std::domain_error("build_dj_oracle: E1 and E2 must be positive");
  std::vector<double> gaps(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) gaps[x] = f(x) ? e1 : e2;
  return ThermalMachineOracle(GapVector(std::move(gaps)), beta_machine, DjProblem{f, e1, e2});
}

ThermalMachineOracle build_bv_oracle(const BitString& secret, double gamma, double beta_machine) {
  if (!(gamma > 0.0)) throw std::domain_error("build_bv_oracle: gamma must be positive");
  if (secret.empty()) throw std::invalid_argument("build_bv_oracle: secret must be non-empty");
  std::vector<double> gaps(secret.size());
  for (std::size_t i = 0; i < secret.size(); ++i) gaps[i] = secret[i] ? gamma : 0.0;
  return ThermalMachineOracle(GapVector(std::move(gaps)), beta_machine, BvProblem{secret, gamma});
}

ThermalMachineOracle build_custom_oracle(std::vector<double> gaps, double beta_machine) {
  return ThermalMachineOracle(GapVector(std::move(gaps)), beta_machine, CustomProblem{});
}

PreparedQubit prepare_via_conditional_thermalization(const BitString& x, const BooleanFunctionTable& f,
                                                     double target_gap, double beta_machine,
                                                     std::uint64_t seed) {
  if (!(target_gap > 0.0)) throw std::domain_error("prepare_via_conditional_thermalization: target gap must be positive");
  const bool fx = f(x);
  const double px = excitation_probability(target_gap, beta_machine);
  Rng rng(derive_seed(seed, x.to_index()));
  const bool excited = rng.bernoulli(px);
  return PreparedQubit{excited, fx, px, ThermalQubit(target_gap, beta_machine)};
}

}  // namespace tq
