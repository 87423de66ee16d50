#pragma once

// Brute-force diagonal simulator of the probe + machine joint state.
//
// Index convention: index = (probe_bit << N) | machine_bits, with machine
// qubit 0 at the most significant machine bit, so the machine part of an
// index reads like the big-endian bit-string text.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tq/bits.hpp"
#include "tq/kernels.hpp"
#include "tq/readout_stats.hpp"
#include "tq/thermal_core.hpp"

namespace tq {

inline constexpr std::size_t kDefaultMaxQubits = 20;

struct DiagonalJointState {
  std::size_t machine_qubits = 0;
  double probe_gap = 0.0;
  std::vector<double> populations;
  std::vector<double> level_energies;
  // log of the unnormalised Boltzmann sum, i.e. log(Z_S Z_f)
  double log_partition = 0.0;

  std::size_t size() const { return populations.size(); }
};

// Throws std::length_error when N + 1 exceeds max_qubits.
DiagonalJointState build_joint_state(const ThermalQubit& probe, const ThermalMachineOracle& oracle,
                                     std::size_t max_qubits = kDefaultMaxQubits, bool parallel = true);

// Swaps two populations. Throws std::out_of_range for a bad index and
// std::invalid_argument when a == b.
DiagonalJointState apply_level_exchange(DiagonalJointState state, std::size_t level_a, std::size_t level_b);

// V(X): exchanges |0_S X> with |1_S X^1>.
DiagonalJointState apply_kickback(DiagonalJointState state, const QueryMask& mask);

DiagonalJointState apply_swap_with_machine_qubit(DiagonalJointState state, std::size_t machine_index,
                                                 bool parallel = true);

kernels::ProbeSums probe_populations(const DiagonalJointState& state);
BinaryDistribution probe_marginal(const DiagonalJointState& state);

double total_population(const DiagonalJointState& state);
double probe_mean_energy(const DiagonalJointState& state);
double machine_mean_energy(const DiagonalJointState& state);

// index,bitstring,energy,population; the bit string is probe bit first.
void write_populations_csv(std::ostream& os, const DiagonalJointState& state);

}  // namespace tq
