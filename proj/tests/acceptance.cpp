// Acceptance criteria: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tq/cli.hpp"
#include "tq/detuning.hpp"
#include "tq/exact_sim.hpp"
#include "tq/problems.hpp"
#include "tq/query_engine.hpp"
#include "tq/random.hpp"
#include "tq/readout_stats.hpp"

using namespace tq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Params {
  double omega, beta_s, beta_m, e1, e2;
};

Params draw(Rng& rng) {
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
  return {u(0.1, 2.0), u(-2.0, 2.0), u(0.1, 2.0), u(0.1, 2.0), u(0.1, 2.0)};
}

BitString random_bits(std::size_t n, Rng& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1U);
  return BitString(std::move(bits));
}

// Largest |analytic - exact| over p0', dp0 and beta' for one kickback.
double kickback_error(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const QueryMask& mask) {
  const QueryOutcome o = kickback_outcome(probe, oracle, mask);
  const auto state = build_joint_state(probe, oracle);
  const double before = probe_marginal(state).p0();
  const double after = probe_marginal(apply_kickback(state, mask)).p0();
  double err = std::max(std::abs(o.p0_after - after), std::abs(o.delta_p0 - (after - before)));
  if (o.beta_after && after > 0.0 && after < 1.0) {
    err = std::max(err, std::abs(*o.beta_after - inverse_temperature_from_population(after, probe.gap())));
  }
  return err;
}

Outcome criterion1() {
  const auto start = Clock::now();
  Rng rng(derive_seed(2024, 1));
  double worst = 0.0;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& inst : enumerate_dj_instances(n)) {
      for (int trial = 0; trial < 100; ++trial) {
        const Params p = draw(rng);
        const auto oracle = build_dj_oracle(inst.function, p.e1, p.e2, p.beta_m);
        worst = std::max(worst, kickback_error(ThermalQubit(p.omega, p.beta_s), oracle, BitString::ones(oracle.size())));
        ++count;
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << count << " cases, max error " << worst << ", " << elapsed << " s";
  return {worst <= 1e-12 && elapsed < 10.0, os.str()};
}

Outcome criterion2() {
  Rng rng(derive_seed(2024, 2));
  double worst_dj = 0.0, worst_bv = 0.0, worst_ones = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Params p = draw(rng);
    const std::size_t n = 1 + rng.next() % 3;
    const auto instances = enumerate_dj_instances(n);
    const auto& f = instances[rng.next() % instances.size()].function;
    const auto oracle = build_dj_oracle(f, p.e1, p.e2, p.beta_m);
    const ThermalQubit probe(p.omega, p.beta_s);
    worst_dj = std::max(worst_dj, kickback_error(probe, oracle, random_bits(oracle.size(), rng)));

    const QueryOutcome a = kickback_outcome(probe, oracle, BitString::ones(oracle.size()));
    const QueryOutcome b = virtual_swap_outcome(probe, oracle);
    worst_ones = std::max(worst_ones, std::abs(a.delta_p0 - b.delta_p0));
    if (a.beta_after && b.beta_after) worst_ones = std::max(worst_ones, std::abs(*a.beta_after - *b.beta_after));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Params p = draw(rng);
    const std::size_t n = 1 + rng.next() % 6;
    const auto oracle = build_bv_oracle(random_bits(n, rng), p.e1, p.beta_m);
    worst_bv = std::max(worst_bv, kickback_error(ThermalQubit(p.omega, p.beta_s), oracle, random_bits(n, rng)));
  }
  std::ostringstream os;
  os << "dj max error " << worst_dj << ", bv max error " << worst_bv << ", 1^N reduction " << worst_ones;
  return {worst_dj <= 1e-12 && worst_bv <= 1e-12 && worst_ones <= 1e-14, os.str()};
}

Outcome criterion3() {
  const std::uint64_t n_star = sample_bound_from_threshold(0.1, 0.1);
  const std::vector<double> delta{0.1}, t{0.1};
  const auto rows = crossover_analysis(delta, t);
  const std::size_t n_cross = rows.front().n_crossover;
  std::ostringstream os;
  os << "n* = " << n_star << ", crossover at n = " << n_cross << " (2^" << n_cross - 1 << " + 1 = "
     << (std::uint64_t{1} << (n_cross - 1)) + 1 << " > " << n_star << ")";
  return {n_star == 116 && (n_cross == 8 || n_cross == 9), os.str()};
}

Outcome criterion4() {
  const double d = relative_entropy(BinaryDistribution(1.0), BinaryDistribution(0.75));
  const double err = std::abs(d - std::log(4.0 / 3.0));
  std::ostringstream os;
  os << "D = " << d << ", error " << err;
  return {err <= 1e-14, os.str()};
}

Outcome criterion5() {
  const auto start = Clock::now();
  const ThermalQubit probe(1.0, 0.0);
  const double e1 = 8.0, beta_m = 1.0, target = 0.1;
  auto tv = [&](double e2) {
    const auto h = dj_readout_hypotheses(probe, 2, e1, e2, beta_m);
    return total_variation(h.balanced, h.constant());
  };
  // TV grows as E2 moves away from E1; bisect on E2 in (0.5, E1).
  double lo = 0.5, hi = e1 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tv(mid) > target ? lo : hi) = mid;
  }
  const double e2 = 0.5 * (lo + hi);
  const auto h = dj_readout_hypotheses(probe, 2, e1, e2, beta_m);
  MonteCarloConfig cfg;
  cfg.n_samples = sample_bound_from_threshold(0.1, target);
  cfg.trials = 10000;
  cfg.seed = 5;
  cfg.delta = 0.1;
  const auto r = monte_carlo_readout(h.constant(), h.balanced, h.constant(), cfg);
  const double fp = r.empirical_false_positive.value_or(1.0);
  const double limit = 0.1 + 3.0 * std::sqrt(0.1 * 0.9 / static_cast<double>(cfg.trials));
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "E2 = " << e2 << ", TV = " << tv(e2) << ", n = " << cfg.n_samples << ", FP = " << fp << " (limit " << limit
     << "), " << elapsed << " s";
  return {r.truth == Hypothesis::Constant && std::abs(tv(e2) - target) < 1e-9 && fp <= limit && elapsed < 60.0,
          os.str()};
}

Outcome criterion6() {
  bool ok = true;
  for (std::uint64_t k = 1; k <= 64; ++k) ok = ok && classical_with_replacement_error(k) == std::ldexp(1.0, 1 - static_cast<int>(k));
  ok = ok && classical_without_replacement_error(2, 2) == 1.0 / 3.0;
  bool bounded = true, monotone = true;
  for (std::uint64_t k = 1; k <= 10; ++k) {
    double prev = -1.0;
    for (std::size_t n = 2; n <= 20; ++n) {
      if (k > (std::uint64_t{1} << n)) continue;
      const double v = classical_without_replacement_error(n, k);
      bounded = bounded && v <= classical_with_replacement_error(k);
      monotone = monotone && (prev < 0.0 || v >= prev);
      prev = v;
    }
    monotone = monotone && std::abs(prev - classical_with_replacement_error(k)) < 1e-4;
  }
  std::ostringstream os;
  os << "delta(k) exact " << (ok ? "yes" : "no") << ", delta' <= delta " << (bounded ? "yes" : "no")
     << ", monotone in n " << (monotone ? "yes" : "no");
  return {ok && bounded && monotone, os.str()};
}

Outcome criterion7() {
  const auto r = cli::run_distinguishability(cli::DistinguishabilityOptions{});
  double max_small = 0.0;
  for (const auto& row : r.rows) {
    if (row.machine_size <= 4) max_small = std::max(max_small, row.report.lhs);
  }
  const auto& best = r.rows[r.argmax_row];
  const bool lhs_ok = r.max_lhs <= 0.5 && max_small >= 0.4;
  const bool chi_ok = r.max_chi_relative_satisfied < 0.1;
  std::ostringstream os;
  os << "max lhs " << r.max_lhs << " at N=" << best.machine_size << " E1=" << best.e1 << " E2=" << best.e2
     << "; satisfied points " << r.satisfied_points << ", max |chi|/(2t Zb Zc) " << r.max_chi_relative_satisfied
     << ", max |chi|/(2t) " << r.max_chi_raw_satisfied;
  return {lhs_ok && chi_ok, os.str()};
}

Outcome criterion8() {
  Rng rng(derive_seed(2024, 8));
  std::size_t regime_bad = 0, closed_checked = 0, closed_bad = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Params p = draw(rng);
    const std::size_t n = 1 + rng.next() % 3;
    const auto instances = enumerate_dj_instances(n);
    const auto oracle = build_dj_oracle(instances[rng.next() % instances.size()].function, p.e1, p.e2, p.beta_m);
    const ThermalQubit probe(p.omega, p.beta_s);
    const QueryOutcome o = virtual_swap_outcome(probe, oracle);
    const Regime sign = o.delta_p0 > 0.0 ? Regime::Cooling : (o.delta_p0 < 0.0 ? Regime::Heating : Regime::Neutral);
    if (classify_regime(probe, oracle) != sign) ++regime_bad;

    const double u = rng.uniform();
    const double c = (1.0 - o.p0_before) * std::max(u * u * u, 1e-6) * 0.999;
    const SensitivityReport s = sensitivity_check(probe, oracle, c);
    if (s.closed_form_applicable) {
      ++closed_checked;
      if (s.closed_form != s.sensitive) ++closed_bad;
    }
  }
  std::ostringstream os;
  os << "regime mismatches " << regime_bad << "/10000, closed-form mismatches " << closed_bad << "/" << closed_checked;
  return {regime_bad == 0 && closed_bad == 0 && closed_checked > 0, os.str()};
}

Outcome criterion9() {
  bool envelope = true;
  for (double g = 0.25; g <= 3.0; g += 0.25) {
    for (double d = -4.0; d <= 4.0; d += 0.2) {
      for (double t = 0.0; t <= 15.0; t += 0.05) envelope = envelope && flip_probability(g, d, t) <= suppression_factor(g, d) + 1e-15;
    }
  }
  const auto cfg = ExperimentConfig::defaults();
  const auto sweep = bv3_sweep(cfg, cli::linspace(0.0, 3.0, 61));
  double eta_one = 0.0;
  for (std::uint64_t s = 1; s < 8; ++s) {
    const auto oracle = biased_bv_oracle(cfg, BitString::from_index(s, 3));
    for (double bs : cli::linspace(0.0, 3.0, 61)) {
      const ThermalQubit probe(cfg.omega, bs);
      const auto a = detuned_probe_temperature(probe, oracle, 1.0);
      const auto b = virtual_swap_outcome(probe, oracle);
      if (a.beta_after && b.beta_after) eta_one = std::max(eta_one, std::abs(*a.beta_after - *b.beta_after));
    }
  }
  const bool eta0 = suppression_factor(cfg.coupling, 0.0) == 1.0;
  std::ostringstream os;
  os << "eta(0)=1 " << (eta0 ? "yes" : "no") << ", envelope " << (envelope ? "holds" : "violated") << ", "
     << sweep.curves.size() << " curves, " << sweep.distinct_curves << " distinct, min separation "
     << sweep.min_pointwise_separation << ", eta=1 error " << eta_one;
  return {eta0 && envelope && sweep.curves.size() == 8 && sweep.distinct_curves == 8 &&
              sweep.min_pointwise_separation > 0.0 && eta_one <= 1e-10,
          os.str()};
}

Outcome criterion10() {
  bool between = true;
  double sep_hi = 0.0, sep_lo = 0.0;
  for (const auto& [e1, e2] : std::vector<std::pair<double, double>>{{1.0, 0.5}, {2.0, 0.25}, {0.8, 0.6}}) {
    cli::DjKickbackOptions o;
    o.e1 = e1;
    o.e2 = e2;
    const auto r = cli::run_dj_kickback(o);
    for (const auto& s : r.summary) between = between && s.balanced_between;
    const auto at = [&](double bm) {
      return std::find_if(r.summary.begin(), r.summary.end(), [&](const auto& s) { return s.beta_m == bm; })->max_separation;
    };
    if (e1 == 1.0) sep_hi = at(2.0), sep_lo = at(0.25);
    between = between && at(0.25) < at(2.0);
  }
  std::ostringstream os;
  os << "balanced strictly between " << (between ? "yes" : "no") << ", separation " << sep_hi << " (beta_M=2) vs "
     << sep_lo << " (beta_M=0.25)";
  return {between && sep_lo < sep_hi, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"criterion 1 oracle equivalence", criterion1},
      {"criterion 2 general masks", criterion2},
      {"criterion 3 sample bound and crossover", criterion3},
      {"criterion 4 mixed-query divergence", criterion4},
      {"criterion 5 Monte Carlo achievability", criterion5},
      {"criterion 6 classical baselines", criterion6},
      {"criterion 7 distinguishability grid", criterion7},
      {"criterion 8 regime and sensitivity", criterion8},
      {"criterion 9 detuning model", criterion9},
      {"criterion 10 kickback curve ordering", criterion10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
