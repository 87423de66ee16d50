#include "tq/exact_sim.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace tq {

DiagonalJointState build_joint_state(const ThermalQubit& probe, const ThermalMachineOracle& oracle,
                                     std::size_t max_qubits, bool parallel) {
  const std::size_t n = oracle.size();
  if (n + 1 > max_qubits) throw std::length_error("build_joint_state: joint system exceeds the qubit limit");

  DiagonalJointState s;
  s.machine_qubits = n;
  s.probe_gap = probe.gap();
  const std::size_t size = std::size_t{2} << n;
  s.populations.resize(size);
  s.level_energies.resize(size);

  const auto gaps = oracle.gaps().values();
  if (parallel) {
    kernels::parallel::joint_levels(gaps, probe.gap(), probe.beta(), oracle.beta_machine(), s.level_energies,
                                    s.populations);
    const double shift = kernels::parallel::max_value(s.populations);
    const double z = kernels::parallel::exp_shift_sum(s.populations, shift);
    kernels::parallel::scale(s.populations, 1.0 / z);
    s.log_partition = shift + std::log(z);
  } else {
    kernels::serial::joint_levels(gaps, probe.gap(), probe.beta(), oracle.beta_machine(), s.level_energies,
                                  s.populations);
    const double shift = kernels::serial::max_value(s.populations);
    const double z = kernels::serial::exp_shift_sum(s.populations, shift);
    kernels::serial::scale(s.populations, 1.0 / z);
    s.log_partition = shift + std::log(z);
  }
  return s;
}

DiagonalJointState apply_level_exchange(DiagonalJointState state, std::size_t level_a, std::size_t level_b) {
  if (level_a >= state.size() || level_b >= state.size()) {
    throw std::out_of_range("apply_level_exchange: level index out of range");
  }
  if (level_a == level_b) throw std::invalid_argument("apply_level_exchange: levels must be distinct");
  std::swap(state.populations[level_a], state.populations[level_b]);
  return state;
}

DiagonalJointState apply_kickback(DiagonalJointState state, const QueryMask& mask) {
  const std::size_t n = state.machine_qubits;
  if (mask.size() != n) throw std::invalid_argument("apply_kickback: mask length does not match machine size");
  const std::size_t half = std::size_t{1} << n;
  const auto x = static_cast<std::size_t>(mask.to_index());
  const std::size_t a = x;
  const std::size_t b = half | (x ^ (half - 1));
  return apply_level_exchange(std::move(state), a, b);
}

DiagonalJointState apply_swap_with_machine_qubit(DiagonalJointState state, std::size_t machine_index, bool parallel) {
  if (parallel) {
    kernels::parallel::swap_probe_with_machine(state.populations, state.machine_qubits, machine_index);
  } else {
    kernels::serial::swap_probe_with_machine(state.populations, state.machine_qubits, machine_index);
  }
  return state;
}

kernels::ProbeSums probe_populations(const DiagonalJointState& state) {
  return kernels::serial::probe_sums(state.populations);
}

BinaryDistribution probe_marginal(const DiagonalJointState& state) {
  const auto sums = probe_populations(state);
  return BinaryDistribution(std::clamp(sums.ground / (sums.ground + sums.excited), 0.0, 1.0));
}

double total_population(const DiagonalJointState& state) { return kernels::serial::sum(state.populations); }

double probe_mean_energy(const DiagonalJointState& state) {
  return probe_populations(state).excited * state.probe_gap;
}

double machine_mean_energy(const DiagonalJointState& state) {
  const std::size_t half = state.size() / 2;
  double e = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double probe_part = i >= half ? state.probe_gap : 0.0;
    e += state.populations[i] * (state.level_energies[i] - probe_part);
  }
  return e;
}

void write_populations_csv(std::ostream& os, const DiagonalJointState& state) {
  const std::size_t width = state.machine_qubits + 1;
  os << "index,bitstring,energy,population\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < state.size(); ++i) {
    os << i << ',' << BitString::from_index(i, width).to_string() << ',' << state.level_energies[i] << ','
       << state.populations[i] << '\n';
  }
}

}  // namespace tq
