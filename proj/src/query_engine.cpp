#include "tq/query_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace tq {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Cooling: return "cooling";
    case Regime::Heating: return "heating";
    case Regime::Neutral: return "neutral";
  }
  return "neutral";
}

namespace {

// log_a, log_b are the log Boltzmann weights of |1_S X^1> and |0_S X>.
QueryOutcome outcome_from_exchange(const ThermalQubit& probe, double log_zf, double log_a, double log_b) {
  const double bw = probe.beta() * probe.gap();
  const double log_zs = log1p_exp_neg(bw);

  QueryOutcome out;
  out.p0_before = probe.ground_population();

  // zs_dp0 = Z_S dp0 = Z_f^{-1} (A - B)
  double zs_dp0 = 0.0;
  if (std::abs(log_a - log_b) > kNeutralTolerance) {
    zs_dp0 = std::exp(log_a - log_zf) - std::exp(log_b - log_zf);
    out.delta_p0 = std::exp(log_a - log_zf - log_zs) - std::exp(log_b - log_zf - log_zs);
  }
  out.p0_after = out.p0_before + out.delta_p0;
  out.regime = out.delta_p0 > 0.0 ? Regime::Cooling : (out.delta_p0 < 0.0 ? Regime::Heating : Regime::Neutral);

  const double numerator = 1.0 + zs_dp0;
  const double denominator = std::exp(-bw) - zs_dp0;
  if (numerator > 0.0 && denominator > 0.0) {
    out.beta_after = (std::log(numerator) - std::log(denominator)) / probe.gap();
  }
  return out;
}

}  // namespace

SwapResult swap_query(const ThermalQubit& probe, const ThermalMachineOracle& oracle, std::size_t x) {
  return SwapResult{oracle.qubit(x), probe, x};
}

SwapResult swap_query(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const BitString& x) {
  if (x.size() > 63) throw std::out_of_range("swap_query: input string too wide");
  return swap_query(probe, oracle, static_cast<std::size_t>(x.to_index()));
}

double mixed_input_query(const ThermalQubit& /*probe*/, const ThermalMachineOracle& oracle) {
  if (!oracle.is_dj()) throw std::invalid_argument("mixed_input_query: requires a Deutsch-Jozsa oracle");
  double sum = 0.0;
  for (double gap : oracle.gaps().values()) sum += ground_state_population(gap, oracle.beta_machine());
  return sum / static_cast<double>(oracle.size());
}

QueryOutcome kickback_outcome(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const QueryMask& mask) {
  if (mask.size() != oracle.size()) throw std::invalid_argument("kickback_outcome: mask length does not match oracle");
  const double beta_m = oracle.beta_machine();
  const double x_dot_gamma = oracle.gaps().dot(mask);
  const double rest = oracle.gaps().total() - x_dot_gamma;
  const double log_a = -probe.beta() * probe.gap() - beta_m * rest;
  const double log_b = -beta_m * x_dot_gamma;
  return outcome_from_exchange(probe, oracle.log_partition(), log_a, log_b);
}

QueryOutcome virtual_swap_outcome(const ThermalQubit& probe, const ThermalMachineOracle& oracle) {
  const double log_a = -probe.beta() * probe.gap();
  const double log_b = -oracle.beta_machine() * oracle.gaps().total();
  return outcome_from_exchange(probe, oracle.log_partition(), log_a, log_b);
}

Regime classify_regime(const ThermalQubit& probe, const ThermalMachineOracle& oracle) {
  const double probe_ratio = probe.beta() * probe.gap();
  const double machine_ratio = oracle.beta_machine() * oracle.gaps().total();
  const double diff = machine_ratio - probe_ratio;
  if (std::abs(diff) <= kNeutralTolerance) return Regime::Neutral;
  return diff > 0.0 ? Regime::Cooling : Regime::Heating;
}

SensitivityReport sensitivity_check(const ThermalQubit& probe, const ThermalMachineOracle& oracle, double c) {
  if (!(c > 0.0) || !(c < probe.excited_population())) {
    throw std::invalid_argument("sensitivity_check: require 0 < c < 1 - p0");
  }
  const QueryOutcome outcome = virtual_swap_outcome(probe, oracle);

  SensitivityReport rep;
  rep.delta_p0 = outcome.delta_p0;
  rep.regime = outcome.regime;
  rep.sensitive = std::abs(outcome.delta_p0) > c;

  const double bw = probe.beta() * probe.gap();
  const double machine_exponent = -oracle.beta_machine() * oracle.gaps().total();
  const double log_czz = std::log(c) + log1p_exp_neg(bw) + oracle.log_partition();

  const double cooling_arg = log_add_exp(log_czz, machine_exponent);
  rep.cooling_bound_positive = cooling_arg <= 0.0;
  rep.cooling_bound_holds = bw < -cooling_arg;

  rep.heating_argument_positive = machine_exponent > log_czz;
  if (rep.heating_argument_positive) {
    const double heating_arg = machine_exponent + std::log1p(-std::exp(log_czz - machine_exponent));
    rep.heating_bound_holds = bw > -heating_arg;
  }

  switch (rep.regime) {
    case Regime::Cooling:
      rep.closed_form = rep.cooling_bound_holds;
      rep.closed_form_applicable = rep.cooling_bound_positive;
      break;
    case Regime::Heating:
      rep.closed_form = rep.heating_bound_holds;
      rep.closed_form_applicable = rep.heating_argument_positive;
      break;
    case Regime::Neutral:
      rep.closed_form = false;
      rep.closed_form_applicable = true;
      break;
  }
  rep.agree = rep.closed_form == rep.sensitive;
  return rep;
}

bool temperature_well_defined(const QueryOutcome& outcome, const ThermalQubit& probe) {
  const double bw = probe.beta() * probe.gap();
  const double zs_dp0 = std::exp(log1p_exp_neg(bw)) * outcome.delta_p0;
  // Cooling can only fail through the denominator, heating only through the
  // numerator; both are checked so the result matches the log argument.
  return (1.0 + zs_dp0 > 0.0) && (std::exp(-bw) - zs_dp0 > 0.0);
}

ResetCosts reset_costs(const QueryOutcome& outcome, const ThermalMachineOracle& oracle, const ThermalQubit& probe) {
  return ResetCosts{outcome.delta_p0 * oracle.gaps().total(), outcome.delta_p0 * probe.gap()};
}

}  // namespace tq
