#include "tq/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tq {

BalancedFunctionEnumerator::BalancedFunctionEnumerator(std::size_t n, std::optional<std::size_t> limit)
    : n_(n), limit_(limit) {
  if (n == 0) throw std::invalid_argument("enumerate_balanced_functions: n must be at least 1");
  if (n > kMaxExhaustiveBits && !limit) {
    throw std::invalid_argument("enumerate_balanced_functions: n too large for exhaustive enumeration");
  }
  if (n > 6) throw std::invalid_argument("enumerate_balanced_functions: n too large");
  const std::size_t size = std::size_t{1} << n;
  outputs_.assign(size, 0);
  std::fill(outputs_.begin() + static_cast<std::ptrdiff_t>(size / 2), outputs_.end(), std::uint8_t{1});
}

std::optional<DjInstance> BalancedFunctionEnumerator::next() {
  if (done_ || (limit_ && produced_ >= *limit_)) return std::nullopt;
  DjInstance inst{BooleanFunctionTable(n_, outputs_), FunctionClass::Balanced};
  ++produced_;
  done_ = !std::next_permutation(outputs_.begin(), outputs_.end());
  return inst;
}

std::vector<DjInstance> enumerate_balanced_functions(std::size_t n, std::optional<std::size_t> limit) {
  BalancedFunctionEnumerator it(n, limit);
  std::vector<DjInstance> out;
  while (auto inst = it.next()) out.push_back(std::move(*inst));
  return out;
}

std::vector<DjInstance> enumerate_dj_instances(std::size_t n) {
  std::vector<DjInstance> out;
  out.push_back({BooleanFunctionTable::constant(n, false), FunctionClass::Constant0});
  out.push_back({BooleanFunctionTable::constant(n, true), FunctionClass::Constant1});
  for (auto& inst : enumerate_balanced_functions(n)) out.push_back(std::move(inst));
  return out;
}

DjInstance sample_balanced_function(std::size_t n, Rng& rng) {
  if (n == 0 || n > 30) throw std::invalid_argument("sample_balanced_function: n out of range");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> outputs(size, 0);
  std::fill(outputs.begin() + static_cast<std::ptrdiff_t>(size / 2), outputs.end(), std::uint8_t{1});
  for (std::size_t i = size - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(outputs[i], outputs[j]);
  }
  return {BooleanFunctionTable(n, std::move(outputs)), FunctionClass::Balanced};
}

double dj_gap_magnitude(FunctionClass classification, std::size_t machine_size, double e1, double e2) {
  const auto n = static_cast<double>(machine_size);
  switch (classification) {
    case FunctionClass::Constant1: return n * e1;
    case FunctionClass::Constant0: return n * e2;
    case FunctionClass::Balanced:
      if (machine_size % 2 != 0) throw std::invalid_argument("dj_gap_magnitude: balanced needs an even machine size");
      return (n / 2.0) * (e1 + e2);
    case FunctionClass::Other: break;
  }
  throw std::invalid_argument("dj_gap_magnitude: function is neither constant nor balanced");
}

double hamming_weight_population(const BvInstance& instance, double gamma, const ThermalQubit& probe, double beta_machine) {
  if (!(gamma > 0.0)) throw std::domain_error("hamming_weight_population: gamma must be positive");
  const auto n = static_cast<double>(instance.secret.size());
  const auto weight = static_cast<double>(instance.hamming_weight);
  const double log_zf = (n - weight) * std::numbers::ln2 + weight * log1p_exp_neg(beta_machine * gamma);
  const double log_a = -probe.beta() * probe.gap();
  const double log_b = -beta_machine * weight * gamma;
  const double zs_dp0 = std::exp(log_a - log_zf) - std::exp(log_b - log_zf);
  return probe.ground_population() * (1.0 + zs_dp0);
}

ClassicalSolution solve_dj_deterministic_classical(const BooleanFunctionTable& f) {
  if (f.n() == 0) throw std::invalid_argument("solve_dj_deterministic_classical: n must be at least 1");
  const FunctionClass truth = f.classify();
  const bool violated = truth == FunctionClass::Other;
  const std::size_t budget = (f.size() / 2) + 1;

  const bool first = f(std::size_t{0});
  std::size_t queries = 1;
  for (std::size_t x = 1; x < budget; ++x) {
    ++queries;
    if (f(x) != first) {
      return {violated ? FunctionClass::Other : FunctionClass::Balanced, queries, violated};
    }
  }
  const FunctionClass decided = first ? FunctionClass::Constant1 : FunctionClass::Constant0;
  return {violated ? FunctionClass::Other : decided, queries, violated};
}

}  // namespace tq
