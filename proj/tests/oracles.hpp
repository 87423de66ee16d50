#pragma once

// Test-only reference computations. These deliberately avoid the library's
// log-domain helpers and index conventions so that a shared bug cannot hide.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline double ground(double gap, double beta) { return 1.0 / (1.0 + std::exp(-beta * gap)); }

// Unnormalised joint weights, probe bit first, machine qubits in the given
// order (qubit 0 leftmost), built from explicit bit vectors.
struct Joint {
  std::vector<std::vector<int>> labels;  // [probe, m_0, ..., m_{N-1}]
  std::vector<long double> weight;
};

inline Joint joint(double omega, double beta_s, const std::vector<double>& gaps, double beta_m) {
  const std::size_t n = gaps.size();
  Joint j;
  for (int probe = 0; probe <= 1; ++probe) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::vector<int> label{probe};
      long double e_m = 0.0L;
      for (std::size_t q = 0; q < n; ++q) {
        const int bit = static_cast<int>((m >> (n - 1 - q)) & 1U);
        label.push_back(bit);
        e_m += bit * static_cast<long double>(gaps[q]);
      }
      j.labels.push_back(label);
      j.weight.push_back(std::exp(-static_cast<long double>(beta_s) * probe * omega -
                                  static_cast<long double>(beta_m) * e_m));
    }
  }
  return j;
}

inline long double total(const Joint& j) {
  long double s = 0.0L;
  for (auto w : j.weight) s += w;
  return s;
}

inline std::size_t find(const Joint& j, const std::vector<int>& label) {
  for (std::size_t i = 0; i < j.labels.size(); ++i) {
    if (j.labels[i] == label) return i;
  }
  return j.labels.size();
}

// Probe ground population after exchanging |0 X> with |1 X^1>.
inline double kickback_p0(double omega, double beta_s, const std::vector<double>& gaps, double beta_m,
                          const std::vector<int>& mask) {
  Joint j = joint(omega, beta_s, gaps, beta_m);
  std::vector<int> a{0}, b{1};
  for (int x : mask) {
    a.push_back(x);
    b.push_back(1 - x);
  }
  std::swap(j.weight[find(j, a)], j.weight[find(j, b)]);
  long double g = 0.0L;
  for (std::size_t i = 0; i < j.labels.size(); ++i) {
    if (j.labels[i][0] == 0) g += j.weight[i];
  }
  return static_cast<double>(g / total(j));
}

inline double logit_over_gap(double p, double gap) { return std::log(p / (1.0 - p)) / gap; }

// Exact probability that the count-based likelihood-ratio test (ties to
// Balanced) answers Balanced when samples come from `p_excited`.
inline double prob_decide_balanced(std::size_t n, double p_excited, double bal_p0, double const_p0) {
  long double acc = 0.0L;
  for (std::size_t k = 0; k <= n; ++k) {  // k excited outcomes
    const long double g = static_cast<long double>(n - k);
    const long double e = static_cast<long double>(k);
    const long double lb = g * std::log(static_cast<long double>(bal_p0)) + e * std::log(1.0L - bal_p0);
    const long double lc = g * std::log(static_cast<long double>(const_p0)) + e * std::log(1.0L - const_p0);
    if (lb < lc) continue;
    const long double log_binom = std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(e + 1) - std::lgamma(g + 1);
    acc += std::exp(log_binom + e * std::log(static_cast<long double>(p_excited)) +
                    g * std::log(1.0L - p_excited));
  }
  return static_cast<double>(acc);
}

// 2 C(h, k) / C(2h, k) by counting k-subsets of 2h inputs (small sizes only).
inline double all_equal_fraction_by_enumeration(std::size_t inputs, std::size_t k) {
  std::uint64_t all_equal = 0, total_subsets = 0;
  const std::size_t half = inputs / 2;  // inputs [0, half) map to 0, the rest to 1
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << inputs); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != k) continue;
    ++total_subsets;
    const std::uint64_t low = s & ((std::uint64_t{1} << half) - 1);
    if (low == 0 || low == s) ++all_equal;
  }
  return static_cast<double>(all_equal) / static_cast<double>(total_subsets);
}

}  // namespace oracle
