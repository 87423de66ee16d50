#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "tq/cli.hpp"
#include "tq/kernels.hpp"
#include "tq/query_engine.hpp"

namespace tq::cli {

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : "nan"; }

Json nullable(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void require_finite_grid(const std::vector<double>& grid, const std::string& name) {
  require(!grid.empty(), name + " must be nonempty");
  for (double v : grid) require(std::isfinite(v), name + " must contain finite values");
}

BooleanFunctionTable first_half_balanced(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> outputs(size, 0);
  std::fill(outputs.begin() + static_cast<std::ptrdiff_t>(size / 2), outputs.end(), std::uint8_t{1});
  return BooleanFunctionTable(n, std::move(outputs));
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> v(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

// ---- dj-kickback ----------------------------------------------------------

DjKickbackResult run_dj_kickback(const DjKickbackOptions& opts) {
  require(opts.n >= 1 && opts.n <= 16, "n must lie in [1, 16]");
  require(opts.e1 > 0.0 && opts.e2 > 0.0, "E1 and E2 must be positive");
  require(opts.omega > 0.0 && std::isfinite(opts.omega), "omega must be positive");
  require_finite_grid(opts.beta_m_grid, "beta_M grid");
  require_finite_grid(opts.beta_s_grid, "beta_S grid");

  const std::size_t ns = opts.beta_s_grid.size();
  DjKickbackResult r;
  r.rows.resize(opts.beta_m_grid.size() * ns);
  r.summary.resize(opts.beta_m_grid.size());

  kernels::parallel::for_each_index(opts.beta_m_grid.size(), [&](std::size_t m) {
    const double beta_m = opts.beta_m_grid[m];
    const auto c1 = build_dj_oracle(BooleanFunctionTable::constant(opts.n, true), opts.e1, opts.e2, beta_m);
    const auto c2 = build_dj_oracle(BooleanFunctionTable::constant(opts.n, false), opts.e1, opts.e2, beta_m);
    const auto bal = build_dj_oracle(first_half_balanced(opts.n), opts.e1, opts.e2, beta_m);

    DjKickbackSummary s{beta_m, 0.0, true};
    for (std::size_t k = 0; k < ns; ++k) {
      const ThermalQubit probe(opts.omega, opts.beta_s_grid[k]);
      DjKickbackRow row{beta_m, opts.beta_s_grid[k], virtual_swap_outcome(probe, c1).beta_after,
                        virtual_swap_outcome(probe, c2).beta_after, virtual_swap_outcome(probe, bal).beta_after};
      if (row.constant1 && row.constant2 && row.balanced) {
        const double lo = std::min(*row.constant1, *row.constant2);
        const double hi = std::max(*row.constant1, *row.constant2);
        s.max_separation = std::max(s.max_separation, std::max(hi, *row.balanced) - std::min(lo, *row.balanced));
        s.balanced_between = s.balanced_between && lo < *row.balanced && *row.balanced < hi;
      } else {
        s.balanced_between = false;
      }
      r.rows[m * ns + k] = row;
    }
    r.summary[m] = s;
  });
  return r;
}

Json to_json(const DjKickbackOptions& o) {
  return Json{{"n", o.n},           {"E1", o.e1}, {"E2", o.e2}, {"omega", o.omega}, {"beta_M", o.beta_m_grid},
              {"beta_S", o.beta_s_grid}};
}

void write_dj_kickback(std::ostream& os, const DjKickbackOptions& opts, const DjKickbackResult& r, Format format) {
  if (format == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back(Json{{"beta_M", row.beta_m},
                          {"beta_S", row.beta_s},
                          {"constant1", nullable(row.constant1)},
                          {"constant2", nullable(row.constant2)},
                          {"balanced", nullable(row.balanced)}});
    }
    Json summary = Json::array();
    for (const auto& s : r.summary) {
      summary.push_back(
          Json{{"beta_M", s.beta_m}, {"max_separation", s.max_separation}, {"balanced_between", s.balanced_between}});
    }
    os << Json{{"config", to_json(opts)}, {"rows", rows}, {"summary", summary}}.dump(2) << '\n';
    return;
  }
  write_comment_header(os, "thermoquery dj-kickback", to_json(opts));
  for (const auto& s : r.summary) {
    os << "# beta_M=" << format_double(s.beta_m) << " max_separation=" << format_double(s.max_separation)
       << " balanced_between=" << (s.balanced_between ? "true" : "false") << '\n';
  }
  os << "beta_M,beta_S,constant1,constant2,balanced\n";
  for (const auto& row : r.rows) {
    os << format_double(row.beta_m) << ',' << format_double(row.beta_s) << ',' << cell(row.constant1) << ','
       << cell(row.constant2) << ',' << cell(row.balanced) << '\n';
  }
}

// ---- distinguishability ---------------------------------------------------

DistinguishabilityResult run_distinguishability(const DistinguishabilityOptions& opts) {
  require(std::isfinite(opts.beta_m), "beta_M must be finite");
  require(opts.t > 0.0 && opts.t <= 0.5, "t must lie in (0, 0.5]");
  require(!opts.machine_sizes.empty(), "N list must be nonempty");
  for (std::size_t n : opts.machine_sizes) require(n >= 2 && n % 2 == 0 && n <= 4096, "N must be even, 2..4096");
  require_finite_grid(opts.energy_grid, "energy grid");
  std::vector<double> grid = opts.energy_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  require(grid.front() > 0.0, "energies must be positive");

  DistinguishabilityResult r;
  r.max_lhs = -std::numeric_limits<double>::infinity();
  for (std::size_t n : opts.machine_sizes) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        DistinguishabilityRow row{n, grid[i], grid[j], {}};
        if (i == j) {
          row.report.t = opts.t;
          const double l = log1p_exp_neg(opts.beta_m * grid[i]) * static_cast<double>(n);
          row.report.log_z_const = l;
          row.report.log_z_bal = l;
        } else {
          row.report = distinguishability_report(grid[i], grid[j], opts.beta_m, n, opts.t);
        }
        if (row.report.lhs > r.max_lhs) {
          r.max_lhs = row.report.lhs;
          r.argmax_row = r.rows.size();
        }
        if (row.report.satisfied) {
          ++r.satisfied_points;
          r.max_chi_relative_satisfied = std::max(r.max_chi_relative_satisfied, row.report.chi_relative);
          r.max_chi_raw_satisfied = std::max(r.max_chi_raw_satisfied, std::abs(row.report.chi) / (2.0 * opts.t));
        }
        r.rows.push_back(row);
      }
    }
  }
  return r;
}

Json to_json(const DistinguishabilityOptions& o) {
  return Json{{"beta_M", o.beta_m}, {"N", o.machine_sizes}, {"E", o.energy_grid}, {"t", o.t}};
}

void write_distinguishability(std::ostream& os, const DistinguishabilityOptions& opts,
                              const DistinguishabilityResult& r, Format format) {
  if (format == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json j = tq::to_json(row.report);
      j["N"] = row.machine_size;
      j["E1"] = row.e1;
      j["E2"] = row.e2;
      rows.push_back(std::move(j));
    }
    os << Json{{"config", to_json(opts)},
               {"rows", rows},
               {"max_lhs", r.max_lhs},
               {"satisfied_points", r.satisfied_points},
               {"max_chi_relative_satisfied", r.max_chi_relative_satisfied},
               {"max_chi_raw_satisfied", r.max_chi_raw_satisfied}}
              .dump(2)
       << '\n';
    return;
  }
  write_comment_header(os, "thermoquery distinguishability", to_json(opts));
  os << "# max_lhs=" << format_double(r.max_lhs) << " satisfied_points=" << r.satisfied_points
     << " max_chi_relative_satisfied=" << format_double(r.max_chi_relative_satisfied) << '\n';
  os << "N,E1,E2,lhs,chi,chi_relative,satisfied\n";
  for (const auto& row : r.rows) {
    os << row.machine_size << ',' << format_double(row.e1) << ',' << format_double(row.e2) << ','
       << format_double(row.report.lhs) << ',' << format_double(row.report.chi) << ','
       << format_double(row.report.chi_relative) << ',' << (row.report.satisfied ? "true" : "false") << '\n';
  }
}

// ---- sample-complexity ----------------------------------------------------

SampleComplexityResult run_sample_complexity(const SampleComplexityOptions& opts) {
  require_finite_grid(opts.delta_grid, "delta grid");
  require_finite_grid(opts.t_grid, "t grid");
  for (double d : opts.delta_grid) require(d > 0.0 && d < 1.0, "delta must lie in (0, 1)");
  for (double t : opts.t_grid) require(t > 0.0 && t <= 1.0, "t must lie in (0, 1]");
  SampleComplexityResult r;
  r.rows = crossover_analysis(opts.delta_grid, opts.t_grid);
  for (double d : opts.delta_grid) r.mixed.push_back({d, *chernoff_stein_samples(d, mixed_query_divergence())});
  return r;
}

Json to_json(const SampleComplexityOptions& o) { return Json{{"delta", o.delta_grid}, {"t", o.t_grid}}; }

void write_sample_complexity(std::ostream& os, const SampleComplexityOptions& opts, const SampleComplexityResult& r,
                             Format format) {
  if (format == Format::Json) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(tq::to_json(row));
    Json mixed = Json::array();
    for (const auto& m : r.mixed) mixed.push_back(Json{{"delta", m.delta}, {"n_mixed", m.n_mixed}});
    os << Json{{"config", to_json(opts)},
               {"rows", rows},
               {"mixed_query", mixed},
               {"mixed_query_divergence", mixed_query_divergence()}}
              .dump(2)
       << '\n';
    return;
  }
  write_comment_header(os, "thermoquery sample-complexity", to_json(opts));
  for (const auto& m : r.mixed) {
    os << "# mixed_query delta=" << format_double(m.delta) << " divergence=log(4/3) n=" << m.n_mixed << '\n';
  }
  write_crossover_csv(os, r.rows);
}

// ---- detuning-sweep -------------------------------------------------------

Json to_json(const DetuningOptions& o) {
  const auto& c = o.config;
  Json j{{"gammas", c.gammas},          {"epsilon", c.epsilon}, {"g", c.coupling},
         {"omega", c.omega},            {"beta_M", c.beta_machine},
         {"time", c.interaction_time()}, {"use_flip_probability", c.use_flip_probability},
         {"beta_S", o.beta_s_grid}};
  return j;
}

void write_detuning(std::ostream& os, const DetuningOptions& opts, const Bv3Sweep& sweep, Format format) {
  if (format == Format::Json) {
    os << Json{{"config", to_json(opts)}, {"sweep", tq::to_json(sweep)}}.dump(2) << '\n';
    return;
  }
  write_comment_header(os, "thermoquery detuning-sweep", to_json(opts));
  os << "# distinct_curves=" << sweep.distinct_curves
     << " min_pointwise_separation=" << format_double(sweep.min_pointwise_separation)
     << " min_sup_separation=" << format_double(sweep.min_sup_separation) << '\n';
  write_sweep_csv(os, sweep);
}

// ---- query ----------------------------------------------------------------

QueryOutcome run_query(const QueryOptions& opts) {
  require(opts.omega > 0.0 && std::isfinite(opts.omega), "omega must be positive");
  require(std::isfinite(opts.beta_s), "beta_S must be finite");
  try {
    const ThermalMachineOracle oracle = oracle_from_json(opts.oracle);
    const ThermalQubit probe(opts.omega, opts.beta_s);
    const QueryMask mask = opts.mask ? BitString::parse(*opts.mask) : BitString::ones(oracle.size());
    return kickback_outcome(probe, oracle, mask);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  } catch (const std::domain_error& e) {
    throw ValidationError(e.what());
  }
}

void write_query(std::ostream& os, const QueryOptions& opts, const QueryOutcome& o, Format format) {
  Json config{{"oracle", opts.oracle}, {"omega", opts.omega}, {"beta_S", opts.beta_s}};
  config["mask"] = opts.mask ? Json(*opts.mask) : Json(nullptr);
  if (format == Format::Json) {
    os << Json{{"config", config}, {"outcome", tq::to_json(o)}}.dump(2) << '\n';
    return;
  }
  write_comment_header(os, "thermoquery query", config);
  os << "p0_before,p0_after,delta_p0,beta_after,regime\n";
  os << format_double(o.p0_before) << ',' << format_double(o.p0_after) << ',' << format_double(o.delta_p0) << ','
     << cell(o.beta_after) << ',' << to_string(o.regime) << '\n';
}

}  // namespace tq::cli
