// Analytic formulas against the brute-force joint-state simulator.

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "tq/cli.hpp"
#include "tq/exact_sim.hpp"
#include "tq/problems.hpp"
#include "tq/query_engine.hpp"
#include "tq/random.hpp"

namespace tq::cli {

namespace {

struct Params {
  double omega;
  double beta_s;
  double beta_m;
  double e1;
  double e2;
};

Params draw(Rng& rng) {
  auto u = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
  return {u(0.1, 2.0), u(-2.0, 2.0), u(0.1, 2.0), u(0.1, 2.0), u(0.1, 2.0)};
}

std::string describe(const std::string& what, const Params& p) {
  std::ostringstream os;
  os << what << " omega=" << format_double(p.omega) << " beta_S=" << format_double(p.beta_s)
     << " beta_M=" << format_double(p.beta_m) << " E1=" << format_double(p.e1) << " E2=" << format_double(p.e2);
  return os.str();
}

class Check {
 public:
  Check(std::string name, double tolerance) { c_.name = std::move(name), c_.tolerance = tolerance; }

  void compare(double analytic, double exact, const std::string& context) {
    ++c_.comparisons;
    const double err = std::abs(analytic - exact);
    if (!(err <= c_.tolerance)) {
      if (c_.passed) c_.first_failure = context + " analytic=" + format_double(analytic) + " exact=" + format_double(exact);
      c_.passed = false;
    }
    if (std::isfinite(err)) c_.max_error = std::max(c_.max_error, err);
    else c_.max_error = err;
  }

  void expect(bool ok, const std::string& context) {
    ++c_.comparisons;
    if (!ok && c_.passed) c_.first_failure = context;
    c_.passed = c_.passed && ok;
  }

  VerifyCheck done() { return std::move(c_); }

 private:
  VerifyCheck c_;
};

struct Exact {
  double p0_before;
  double p0_after;
};

Exact exact_kickback(const ThermalQubit& probe, const ThermalMachineOracle& oracle, const QueryMask& mask) {
  const auto state = build_joint_state(probe, oracle);
  const double before = probe_marginal(state).p0();
  const double after = probe_marginal(apply_kickback(state, mask)).p0();
  return {before, after};
}

// Analytic outcome with the optional sign-flip mutation applied.
QueryOutcome analytic(QueryOutcome o, bool fault) {
  if (fault) {
    o.delta_p0 = -o.delta_p0;
    o.p0_after = o.p0_before + o.delta_p0;
  }
  return o;
}

void compare_outcome(Check& check, const QueryOutcome& o, const Exact& e, double omega, const std::string& ctx) {
  check.compare(o.p0_after, e.p0_after, ctx + " p0'");
  check.compare(o.delta_p0, e.p0_after - e.p0_before, ctx + " dp0");
  if (o.beta_after && e.p0_after > 0.0 && e.p0_after < 1.0) {
    check.compare(*o.beta_after, inverse_temperature_from_population(e.p0_after, omega), ctx + " beta'");
  }
}

BooleanFunctionTable random_dj_function(std::size_t n, Rng& rng) {
  const auto pick = rng.next() % 4;
  if (pick == 0) return BooleanFunctionTable::constant(n, false);
  if (pick == 1) return BooleanFunctionTable::constant(n, true);
  return sample_balanced_function(n, rng).function;
}

BitString random_bits(std::size_t n, Rng& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1U);
  return BitString(std::move(bits));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.max_n < 1 || opts.max_n > 4) throw ValidationError("max-n must lie in [1, 4]");
  if (opts.max_bv < 1 || opts.max_bv > 12) throw ValidationError("max-bv must lie in [1, 12]");
  if (opts.trials < 1) throw ValidationError("trials must be at least 1");

  VerifyReport report;
  const bool fault = opts.inject_fault;

  // Kickback V(1^N) on every DJ instance.
  {
    Check dj("dj_kickback_all_instances", 1e-12);
    Check regime("regime_matches_sign", 0.0);
    Check zf("log_partition_vs_direct_sum", 1e-12);
    Check ones("mask_ones_reduction", 1e-14);
    Check energy("energy_bookkeeping", 1e-12);
    Rng rng(derive_seed(opts.seed, 1));
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      for (const auto& inst : enumerate_dj_instances(n)) {
        for (std::size_t trial = 0; trial < opts.trials; ++trial) {
          const Params p = draw(rng);
          const auto oracle = build_dj_oracle(inst.function, p.e1, p.e2, p.beta_m);
          const ThermalQubit probe(p.omega, p.beta_s);
          const std::string ctx = describe("n=" + std::to_string(n) + " f=" + to_string(inst.classification), p);

          const QueryOutcome raw = virtual_swap_outcome(probe, oracle);
          const QueryOutcome o = analytic(raw, fault);
          const auto state = build_joint_state(probe, oracle);
          const auto after = apply_kickback(state, BitString::ones(oracle.size()));
          const Exact e{probe_marginal(state).p0(), probe_marginal(after).p0()};
          compare_outcome(dj, o, e, p.omega, ctx);

          const Regime label = classify_regime(probe, oracle);
          const Regime sign = o.delta_p0 > 0.0 ? Regime::Cooling
                                               : (o.delta_p0 < 0.0 ? Regime::Heating : Regime::Neutral);
          regime.expect(label == sign, ctx + " regime=" + to_string(label));

          const double expected_log_z = oracle.log_partition() + probe.log_partition();
          // absolute error in log Z is the relative error in Z
          zf.compare(expected_log_z, state.log_partition, ctx + " log Z");

          const QueryOutcome via_mask = kickback_outcome(probe, oracle, BitString::ones(oracle.size()));
          ones.compare(via_mask.delta_p0, raw.delta_p0, ctx + " dp0(1^N)");
          if (via_mask.beta_after && raw.beta_after) ones.compare(*via_mask.beta_after, *raw.beta_after, ctx);

          const ResetCosts costs = reset_costs(o, oracle, probe);
          energy.compare(machine_mean_energy(after) - machine_mean_energy(state), costs.dissipation, ctx + " E_Diss");
          energy.compare(probe_mean_energy(after) - probe_mean_energy(state), -costs.reset, ctx + " E_reset");
        }
      }
    }
    report.checks.push_back(dj.done());
    report.checks.push_back(regime.done());
    report.checks.push_back(zf.done());
    report.checks.push_back(ones.done());
    report.checks.push_back(energy.done());
  }

  // General masks on DJ and BV oracles.
  {
    Check mask_dj("general_mask_dj", 1e-12);
    Check mask_bv("general_mask_bv", 1e-12);
    Rng rng(derive_seed(opts.seed, 2));
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        const Params p = draw(rng);
        const auto f = random_dj_function(n, rng);
        const auto oracle = build_dj_oracle(f, p.e1, p.e2, p.beta_m);
        const QueryMask mask = random_bits(oracle.size(), rng);
        const ThermalQubit probe(p.omega, p.beta_s);
        const QueryOutcome o = analytic(kickback_outcome(probe, oracle, mask), fault);
        compare_outcome(mask_dj, o, exact_kickback(probe, oracle, mask), p.omega,
                        describe("dj n=" + std::to_string(n) + " X=" + mask.to_string(), p));
      }
    }
    for (std::size_t n = 1; n <= opts.max_bv; ++n) {
      for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        const Params p = draw(rng);
        const BitString secret = random_bits(n, rng);
        const auto oracle = build_bv_oracle(secret, p.e1, p.beta_m);
        const QueryMask mask = random_bits(n, rng);
        const ThermalQubit probe(p.omega, p.beta_s);
        const QueryOutcome o = analytic(kickback_outcome(probe, oracle, mask), fault);
        compare_outcome(mask_bv, o, exact_kickback(probe, oracle, mask), p.omega,
                        describe("bv s=" + secret.to_string() + " X=" + mask.to_string() + " (gamma=E1)", p));
      }
    }
    report.checks.push_back(mask_dj.done());
    report.checks.push_back(mask_bv.done());
  }

  // Hamming-weight readout for every secret.
  {
    Check bv("bv_hamming_weight_population", 1e-12);
    Rng rng(derive_seed(opts.seed, 3));
    const std::size_t per_secret = std::max<std::size_t>(1, opts.trials / 10);
    for (std::size_t n = 1; n <= opts.max_bv; ++n) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const BvInstance inst(BitString::from_index(s, n));
        for (std::size_t trial = 0; trial < per_secret; ++trial) {
          const Params p = draw(rng);
          const ThermalQubit probe(p.omega, p.beta_s);
          double analytic_p0 = hamming_weight_population(inst, p.e1, probe, p.beta_m);
          if (fault) analytic_p0 = 2.0 * probe.ground_population() - analytic_p0;
          const auto oracle = build_bv_oracle(inst.secret, p.e1, p.beta_m);
          bv.compare(analytic_p0, exact_kickback(probe, oracle, BitString::ones(n)).p0_after,
                     describe("s=" + inst.secret.to_string() + " (gamma=E1)", p));
        }
      }
    }
    report.checks.push_back(bv.done());
  }

  // Swap and mixed-input queries.
  {
    Check swap("swap_query_marginal", 1e-12);
    Check mixed("mixed_input_query", 1e-12);
    Rng rng(derive_seed(opts.seed, 4));
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        const Params p = draw(rng);
        const auto oracle = build_dj_oracle(random_dj_function(n, rng), p.e1, p.e2, p.beta_m);
        const ThermalQubit probe(p.omega, p.beta_s);
        const auto state = build_joint_state(probe, oracle);
        double average = 0.0;
        for (std::size_t x = 0; x < oracle.size(); ++x) {
          const double exact = probe_marginal(apply_swap_with_machine_qubit(state, x)).p0();
          average += exact;
          swap.compare(swap_query(probe, oracle, x).probe.ground_population(), exact,
                       describe("n=" + std::to_string(n) + " x=" + std::to_string(x), p));
        }
        average /= static_cast<double>(oracle.size());
        mixed.compare(mixed_input_query(probe, oracle), average, describe("n=" + std::to_string(n), p));
      }
    }
    report.checks.push_back(swap.done());
    report.checks.push_back(mixed.done());
  }

  // Detuned temperature: eta = 1 reduction and the population-scaling path.
  {
    Check eta1("detuned_eta_one", 1e-10);
    Check scaled("detuned_population_scaling", 1e-10);
    Rng rng(derive_seed(opts.seed, 5));
    for (std::size_t trial = 0; trial < opts.trials; ++trial) {
      const Params p = draw(rng);
      const BitString secret = random_bits(3, rng);
      const auto oracle = build_bv_oracle(secret.hamming_weight() ? secret : BitString::ones(3), p.e1, p.beta_m);
      const ThermalQubit probe(p.omega, p.beta_s);
      const std::string ctx = describe("bv3", p);
      const auto base = virtual_swap_outcome(probe, oracle);
      const auto d1 = detuned_probe_temperature(probe, oracle, 1.0);
      if (base.beta_after && d1.beta_after) eta1.compare(*d1.beta_after, *base.beta_after, ctx);

      const double eta = 0.05 + 0.95 * rng.uniform();
      const auto e = exact_kickback(probe, oracle, BitString::ones(3));
      const double p_eta = e.p0_before + eta * (e.p0_after - e.p0_before);
      const auto d = detuned_probe_temperature(probe, oracle, eta);
      if (d.beta_after) {
        scaled.compare(*d.beta_after, inverse_temperature_from_population(p_eta, p.omega),
                       ctx + " eta=" + format_double(eta));
      }
    }
    report.checks.push_back(eta1.done());
    report.checks.push_back(scaled.done());
  }

  // lhs = 2 (dp0_Const1 - dp0_Bal) - chi / (Z_b Z_c) for a maximally mixed probe.
  {
    Check dist("distinguishability_identity", 1e-12);
    Rng rng(derive_seed(opts.seed, 6));
    for (std::size_t n = 1; n <= opts.max_n; ++n) {
      const std::size_t machine = std::size_t{1} << n;
      for (std::size_t trial = 0; trial < opts.trials; ++trial) {
        Params p = draw(rng);
        if (p.e1 == p.e2) continue;
        if (p.e1 < p.e2) std::swap(p.e1, p.e2);
        const ThermalQubit probe(p.omega, 0.0);
        const auto c1 = build_dj_oracle(BooleanFunctionTable::constant(n, true), p.e1, p.e2, p.beta_m);
        std::vector<std::uint8_t> outputs(machine, 0);
        std::fill(outputs.begin() + static_cast<std::ptrdiff_t>(machine / 2), outputs.end(), std::uint8_t{1});
        const auto bal = build_dj_oracle(BooleanFunctionTable(n, std::move(outputs)), p.e1, p.e2, p.beta_m);
        const auto ec = exact_kickback(probe, c1, BitString::ones(machine));
        const auto eb = exact_kickback(probe, bal, BitString::ones(machine));
        const auto r = distinguishability_report(p.e1, p.e2, p.beta_m, machine, 0.1);
        const double two_diff = 2.0 * ((ec.p0_after - ec.p0_before) - (eb.p0_after - eb.p0_before));
        const double chi_scaled = r.chi_relative * 2.0 * r.t;
        const std::string ctx = describe("N=" + std::to_string(machine), p);
        dist.compare(std::abs(r.lhs - two_diff), chi_scaled, ctx);
        dist.expect(std::abs(r.lhs - two_diff) <= std::abs(r.chi) + 1e-12, ctx + " |lhs - 2 ddp0| > |chi|");
      }
    }
    report.checks.push_back(dist.done());
  }
  return report;
}

Json to_json(const VerifyOptions& o) {
  return Json{{"max_n", o.max_n}, {"max_bv", o.max_bv}, {"trials", o.trials}, {"seed", o.seed},
              {"inject_fault", o.inject_fault}};
}

void write_verify(std::ostream& os, const VerifyOptions& opts, const VerifyReport& r, Format format) {
  if (format == Format::Json) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"comparisons", c.comparisons},
                            {"max_error", c.max_error},
                            {"tolerance", c.tolerance},
                            {"passed", c.passed},
                            {"first_failure", c.first_failure}});
    }
    os << Json{{"config", to_json(opts)}, {"checks", checks}, {"passed", r.passed()}}.dump(2) << '\n';
    return;
  }
  write_comment_header(os, "thermoquery verify", to_json(opts));
  os << "check,comparisons,max_error,tolerance,passed,first_failure\n";
  for (const auto& c : r.checks) {
    os << c.name << ',' << c.comparisons << ',' << format_double(c.max_error) << ',' << format_double(c.tolerance)
       << ',' << (c.passed ? "true" : "false") << ",\"" << c.first_failure << "\"\n";
  }
}

}  // namespace tq::cli
