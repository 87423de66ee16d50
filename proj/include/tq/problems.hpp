#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tq/bits.hpp"
#include "tq/random.hpp"
#include "tq/thermal_core.hpp"

namespace tq {

struct DjInstance {
  BooleanFunctionTable function;
  FunctionClass classification;
};

struct BvInstance {
  BitString secret;
  std::size_t hamming_weight;

  explicit BvInstance(BitString s) : secret(std::move(s)), hamming_weight(secret.hamming_weight()) {}
};

// Lazily yields balanced truth tables of n inputs in lexicographic order of
// their output vectors. Exhaustive mode requires n <= 4 (C(16, 8) = 12870);
// larger n (up to 6) is accepted only together with a limit.
class BalancedFunctionEnumerator {
 public:
  explicit BalancedFunctionEnumerator(std::size_t n, std::optional<std::size_t> limit = std::nullopt);

  std::optional<DjInstance> next();

 private:
  std::size_t n_;
  std::optional<std::size_t> limit_;
  std::size_t produced_ = 0;
  std::vector<std::uint8_t> outputs_;
  bool done_ = false;
};

inline constexpr std::size_t kMaxExhaustiveBits = 4;

std::vector<DjInstance> enumerate_balanced_functions(std::size_t n, std::optional<std::size_t> limit = std::nullopt);

// Both constants followed by every balanced function.
std::vector<DjInstance> enumerate_dj_instances(std::size_t n);

DjInstance sample_balanced_function(std::size_t n, Rng& rng);

// |Gamma| for a DJ oracle of N machine qubits: N E1, N E2 or (N/2)(E1 + E2).
double dj_gap_magnitude(FunctionClass classification, std::size_t machine_size, double e1, double e2);

// p0' = (1 + Z_f^{-1} (e^{-beta_S w} - e^{-beta_M #(s) gamma})) / Z_S after the
// 1^n kickback on the linear oracle, with
// log Z_f = (n - #(s)) log 2 + #(s) log(1 + e^{-beta_M gamma}).
double hamming_weight_population(const BvInstance& instance, double gamma, const ThermalQubit& probe, double beta_machine);

struct ClassicalSolution {
  FunctionClass classification;
  std::size_t queries;
  bool promise_violated;
};

// Queries f(0), f(1), ... until a differing output appears or 2^{n-1} + 1
// equal outputs have been seen.
ClassicalSolution solve_dj_deterministic_classical(const BooleanFunctionTable& f);

}  // namespace tq
