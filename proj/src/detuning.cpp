#include "tq/detuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tq/kernels.hpp"
#include "tq/query_engine.hpp"

namespace tq {

namespace {

// Curves closer than this everywhere count as the same curve.
constexpr double kCurveTolerance = 1e-12;

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  const double s2 = std::numbers::sqrt2;
  const double s3 = std::numbers::sqrt3;
  const double norm = 1.0 + s2 + s3;
  c.gammas = {1.0 / norm, s2 / norm, s3 / norm};
  return c;
}

void ExperimentConfig::validate() const {
  for (double g : gammas) {
    if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("detuning: machine gaps must be positive");
  }
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::invalid_argument("detuning: epsilon must lie in [0, 1)");
  if (!(coupling > 0.0)) throw std::invalid_argument("detuning: coupling must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("detuning: probe gap must be positive");
  if (!std::isfinite(beta_machine)) throw std::invalid_argument("detuning: beta_M must be finite");
  if (time && !(*time >= 0.0)) throw std::invalid_argument("detuning: interaction time must be non-negative");
}

double ExperimentConfig::interaction_time() const { return time ? *time : std::numbers::pi / coupling; }

double flip_probability(double coupling, double detuning, double time) {
  if (!(coupling > 0.0)) throw std::invalid_argument("flip_probability: coupling must be positive");
  const double rabi2 = coupling * coupling + detuning * detuning;
  const double s = std::sin(std::sqrt(rabi2) * time / 2.0);
  return coupling * coupling / rabi2 * s * s;
}

double suppression_factor(double coupling, double detuning) {
  if (!(coupling > 0.0)) throw std::invalid_argument("suppression_factor: coupling must be positive");
  const double g2 = coupling * coupling;
  return g2 / (g2 + detuning * detuning);
}

DetunedTemperature detuned_probe_temperature(const ThermalQubit& probe, const ThermalMachineOracle& oracle, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("detuned_probe_temperature: eta must lie in (0, 1]");
  const QueryOutcome base = virtual_swap_outcome(probe, oracle);
  const double bw = probe.beta() * probe.gap();
  const double zs = std::exp(probe.log_partition());
  const double scaled = eta * zs * base.delta_p0;

  DetunedTemperature out;
  out.delta_p0 = base.delta_p0;
  if (base.delta_p0 == 0.0) {
    out.beta_after = probe.beta();
  } else {
    const double num = 1.0 + scaled;
    const double den = std::exp(-bw) - scaled;
    if (num > 0.0 && den > 0.0) out.beta_after = (std::log(num) - std::log(den)) / probe.gap();
  }

  const double zf = std::exp(oracle.log_partition());
  const double printed_den = zf - scaled - 1.0;
  if (1.0 + scaled > 0.0 && printed_den > 0.0) {
    out.beta_after_as_printed = (std::log(1.0 + scaled) - std::log(printed_den)) / probe.gap();
  }
  return out;
}

double secret_detuning(const ExperimentConfig& config, const BitString& secret) {
  if (secret.size() != config.gammas.size()) throw std::invalid_argument("secret_detuning: secret must have 3 bits");
  double total = 0.0;
  for (std::size_t i = 0; i < secret.size(); ++i) {
    total += (secret[i] ? 1.0 + config.epsilon : 1.0 - config.epsilon) * config.gammas[i];
  }
  return total - config.omega;
}

ThermalMachineOracle biased_bv_oracle(const ExperimentConfig& config, const BitString& secret) {
  if (secret.size() != config.gammas.size()) throw std::invalid_argument("biased_bv_oracle: secret must have 3 bits");
  std::vector<double> gaps(secret.size());
  for (std::size_t i = 0; i < secret.size(); ++i) {
    gaps[i] = (secret[i] ? 1.0 + config.epsilon : 1.0 - config.epsilon) * config.gammas[i];
  }
  return build_custom_oracle(std::move(gaps), config.beta_machine);
}

Bv3Sweep bv3_sweep(const ExperimentConfig& config, const std::vector<double>& beta_s_grid, bool parallel) {
  config.validate();
  if (beta_s_grid.empty()) throw std::invalid_argument("bv3_sweep: beta_S grid must be nonempty");

  Bv3Sweep sweep;
  sweep.beta_s_grid = beta_s_grid;
  sweep.curves.resize(8);
  const double time = config.interaction_time();

  auto fill = [&](std::size_t idx) {
    Bv3Curve& c = sweep.curves[idx];
    c.secret = BitString::from_index(idx, 3);
    c.detuning = secret_detuning(config, c.secret);
    c.eta = config.use_flip_probability ? flip_probability(config.coupling, c.detuning, time)
                                        : suppression_factor(config.coupling, c.detuning);
    const ThermalMachineOracle oracle = biased_bv_oracle(config, c.secret);
    c.beta_after.reserve(beta_s_grid.size());
    for (double beta_s : beta_s_grid) {
      if (c.eta == 0.0) {
        c.beta_after.push_back(beta_s);
        continue;
      }
      c.beta_after.push_back(detuned_probe_temperature(ThermalQubit(config.omega, beta_s), oracle, c.eta).beta_after);
    }
  };
  if (parallel) {
    kernels::parallel::for_each_index(sweep.curves.size(), fill);
  } else {
    kernels::serial::for_each_index(sweep.curves.size(), fill);
  }

  double pointwise = std::numeric_limits<double>::infinity();
  double sup_min = std::numeric_limits<double>::infinity();
  std::vector<bool> duplicate(sweep.curves.size(), false);
  for (std::size_t a = 0; a < sweep.curves.size(); ++a) {
    for (std::size_t b = a + 1; b < sweep.curves.size(); ++b) {
      double sup = 0.0;
      for (std::size_t k = 0; k < beta_s_grid.size(); ++k) {
        const auto& va = sweep.curves[a].beta_after[k];
        const auto& vb = sweep.curves[b].beta_after[k];
        if (!va || !vb) continue;
        const double d = std::abs(*va - *vb);
        pointwise = std::min(pointwise, d);
        sup = std::max(sup, d);
      }
      sup_min = std::min(sup_min, sup);
      if (sup <= kCurveTolerance) duplicate[b] = true;
    }
  }
  sweep.min_pointwise_separation = pointwise;
  sweep.min_sup_separation = sup_min;
  sweep.distinct_curves = static_cast<std::size_t>(std::count(duplicate.begin(), duplicate.end(), false));
  return sweep;
}

}  // namespace tq
