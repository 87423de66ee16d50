#pragma once

// Heat-exchange queries between a probe qubit and a thermal-machine oracle.
//
// Three query models are supported:
//   swap_query         - swap the probe with the machine qubit tau_x
//   mixed_input_query  - the uniform classical mixture of all swaps
//   kickback_outcome   - the level exchange V(X): |0_S X> <-> |1_S X^1>
//
// For the kickback, with A = e^{-beta_S w - beta_M (|G| - X.G)} and
// B = e^{-beta_M X.G}, the probe ground population changes by
//   dp0 = (A - B) / (Z_S Z_f)
// and the post-query inverse temperature is
//   beta_S' = (1/w) log[(1 + Z_S dp0) / (e^{-beta_S w} - Z_S dp0)].
// X = 1^N is the virtual-qubit swap, for which A = e^{-beta_S w} and
// B = e^{-beta_M |G|}.

#include <optional>
#include <string>

#include "tq/bits.hpp"
#include "tq/thermal_core.hpp"

namespace tq {

enum class Regime { Cooling, Heating, Neutral };

std::string to_string(Regime r);

// Boundary convention: beta_S w and beta_M |Gamma| closer than this are
// treated as equal (Neutral, dp0 = 0).
inline constexpr double kNeutralTolerance = 1e-14;

struct QueryOutcome {
  double p0_before = 0.0;
  double p0_after = 0.0;
  double delta_p0 = 0.0;
  std::optional<double> beta_after;  // empty when the log argument is non-positive
  Regime regime = Regime::Neutral;
};

struct SwapResult {
  ThermalQubit probe;      // the machine qubit tau_x, now held by the agent
  ThermalQubit displaced;  // the former probe, now sitting in the machine
  std::size_t index;
};

SwapResult swap_query(const ThermalQubit& probe, const ThermalMachineOracle& oracle, std::size_t x);
SwapResult swap_query(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const BitString& x);

// Probe ground population after a uniformly mixed input: the average of
// p0(tau_x) over all x. Requires a DJ oracle (std::invalid_argument otherwise).
double mixed_input_query(const ThermalQubit& probe, const ThermalMachineOracle& oracle);

QueryOutcome kickback_outcome(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const QueryMask& mask);

// The X = 1^N exchange written directly in terms of |Gamma|, without going
// through a mask dot product.
QueryOutcome virtual_swap_outcome(const ThermalQubit& probe, const ThermalMachineOracle& oracle);

Regime classify_regime(const ThermalQubit& probe, const ThermalMachineOracle& oracle);

struct SensitivityReport {
  bool sensitive = false;  // |dp0| > c, evaluated directly
  double delta_p0 = 0.0;
  Regime regime = Regime::Neutral;
  // w/T_S < -log(c Z_S Z_f + e^{-beta_M |G|})
  bool cooling_bound_holds = false;
  // right-hand side of the cooling bound is non-negative
  bool cooling_bound_positive = false;
  // w/T_S > -log(e^{-beta_M |G|} - c Z_S Z_f); false when the argument is <= 0
  bool heating_bound_holds = false;
  // e^{-beta_M |G|} > c Z_S Z_f, i.e. the heating log argument is positive
  bool heating_argument_positive = false;
  // the closed-form test for the current regime
  bool closed_form = false;
  // whether the closed form's positivity precondition holds for the regime
  bool closed_form_applicable = false;
  bool agree = false;
};

// Throws std::invalid_argument unless 0 < c < 1 - p0_before.
SensitivityReport sensitivity_check(const ThermalQubit& probe, const ThermalMachineOracle& oracle, double c);

// Cooling: e^{-beta_S w} > Z_S dp0. Heating: 1 > Z_S dp0.
bool temperature_well_defined(const QueryOutcome& outcome, const ThermalQubit& probe);

struct ResetCosts {
  double dissipation;  // E_Diss = dp0 |Gamma|, rethermalising the machine
  double reset;        // E_reset = dp0 w, restoring the probe
};

ResetCosts reset_costs(const QueryOutcome& outcome, const ThermalMachineOracle& oracle, const ThermalQubit& probe);

}  // namespace tq
