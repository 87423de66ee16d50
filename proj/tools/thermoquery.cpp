// thermoquery: figure data and verification runs for thermal-machine queries.
//
//   thermoquery <subcommand> [--param value]... [--out PATH] [--format csv|json] [--seed INT]
//
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "tq/cli.hpp"
#include "tq/version.hpp"

namespace {

using namespace tq::cli;

struct Common {
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
}

// Runs `body` with the selected stream; maps library exceptions to exit codes.
int emit(const Common& c, const std::function<int(std::ostream&, Format)>& body) {
  const Format format = c.format == "json" ? Format::Json : Format::Csv;
  try {
    if (c.out == "-") return body(std::cout, format);
    std::ofstream file(c.out);
    if (!file) {
      std::cerr << "error: cannot open " << c.out << " for writing\n";
      return kValidationError;
    }
    return body(file, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamic query complexity: thermal-machine oracles, kickback queries and readout statistics"};
  app.set_version_flag("--version", std::string(tq::kVersion));
  app.require_subcommand(1);

  Common common;
  std::function<int()> run;

  // dj-kickback
  DjKickbackOptions dj;
  double dj_bs_min = 0.0, dj_bs_max = 2.0;
  std::size_t dj_bs_points = 41;
  auto* dj_cmd = app.add_subcommand("dj-kickback", "Probe temperature after V(1^N) for constant and balanced f");
  dj_cmd->add_option("--n", dj.n, "Input bits")->capture_default_str();
  dj_cmd->add_option("--E1", dj.e1, "Gap for f(x) = 1")->capture_default_str();
  dj_cmd->add_option("--E2", dj.e2, "Gap for f(x) = 0")->capture_default_str();
  dj_cmd->add_option("--omega", dj.omega, "Probe gap")->capture_default_str();
  dj_cmd->add_option("--beta-M", dj.beta_m_grid, "Machine inverse temperatures")->delimiter(',');
  dj_cmd->add_option("--beta-S-min", dj_bs_min)->capture_default_str();
  dj_cmd->add_option("--beta-S-max", dj_bs_max)->capture_default_str();
  dj_cmd->add_option("--beta-S-points", dj_bs_points)->capture_default_str();
  add_common(dj_cmd, common);
  dj_cmd->callback([&] {
    run = [&] {
      dj.beta_s_grid = linspace(dj_bs_min, dj_bs_max, dj_bs_points);
      return emit(common, [&](std::ostream& os, Format f) {
        write_dj_kickback(os, dj, run_dj_kickback(dj), f);
        return int{kSuccess};
      });
    };
  });

  // distinguishability
  DistinguishabilityOptions dist;
  double e_min = 0.01, e_max = 2.0;
  std::size_t e_points = 200;
  auto* dist_cmd = app.add_subcommand("distinguishability", "Distinguishability lhs and chi over (E1, E2) grids");
  dist_cmd->add_option("--beta-M", dist.beta_m)->capture_default_str();
  dist_cmd->add_option("--N", dist.machine_sizes, "Machine sizes (even)")->delimiter(',');
  dist_cmd->add_option("--E-min", e_min)->capture_default_str();
  dist_cmd->add_option("--E-max", e_max)->capture_default_str();
  dist_cmd->add_option("--E-points", e_points)->capture_default_str();
  dist_cmd->add_option("--t", dist.t, "Threshold")->capture_default_str();
  add_common(dist_cmd, common);
  dist_cmd->callback([&] {
    run = [&] {
      dist.energy_grid = linspace(e_min, e_max, e_points);
      return emit(common, [&](std::ostream& os, Format f) {
        write_distinguishability(os, dist, run_distinguishability(dist), f);
        return int{kSuccess};
      });
    };
  });

  // sample-complexity
  SampleComplexityOptions sc;
  auto* sc_cmd = app.add_subcommand("sample-complexity", "Thermal n*, classical k and the deterministic crossover");
  sc_cmd->add_option("--delta", sc.delta_grid, "Error rates")->delimiter(',');
  sc_cmd->add_option("--t", sc.t_grid, "Thresholds")->delimiter(',');
  add_common(sc_cmd, common);
  sc_cmd->callback([&] {
    run = [&] {
      return emit(common, [&](std::ostream& os, Format f) {
        write_sample_complexity(os, sc, run_sample_complexity(sc), f);
        return int{kSuccess};
      });
    };
  });

  // detuning-sweep
  DetuningOptions det;
  std::vector<double> gammas;
  double bs_min = 0.0, bs_max = 3.0, time = -1.0;
  std::size_t bs_points = 61;
  auto* det_cmd = app.add_subcommand("detuning-sweep", "Detuned probe temperature for the 8 three-bit secrets");
  det_cmd->add_option("--gamma", gammas, "Three machine gaps")->delimiter(',')->expected(3);
  det_cmd->add_option("--epsilon", det.config.epsilon)->capture_default_str();
  det_cmd->add_option("--g", det.config.coupling, "Coupling")->capture_default_str();
  det_cmd->add_option("--omega", det.config.omega)->capture_default_str();
  det_cmd->add_option("--beta-M", det.config.beta_machine)->capture_default_str();
  det_cmd->add_option("--time", time, "Interaction time (default pi/g)");
  det_cmd->add_flag("--use-flip-probability", det.config.use_flip_probability,
                    "Scale by P_flip(t) instead of the short-time eta");
  det_cmd->add_option("--beta-S-min", bs_min)->capture_default_str();
  det_cmd->add_option("--beta-S-max", bs_max)->capture_default_str();
  det_cmd->add_option("--beta-S-points", bs_points)->capture_default_str();
  add_common(det_cmd, common);
  det_cmd->callback([&] {
    run = [&] {
      if (!gammas.empty()) std::copy(gammas.begin(), gammas.end(), det.config.gammas.begin());
      if (time >= 0.0) det.config.time = time;
      det.beta_s_grid = linspace(bs_min, bs_max, bs_points);
      return emit(common, [&](std::ostream& os, Format f) {
        write_detuning(os, det, tq::bv3_sweep(det.config, det.beta_s_grid), f);
        return int{kSuccess};
      });
    };
  });

  // query
  QueryOptions q;
  std::string oracle_path;
  std::string mask;
  auto* q_cmd = app.add_subcommand("query", "Single kickback query on an oracle read from JSON");
  q_cmd->add_option("--oracle", oracle_path, "Oracle JSON file")->required()->check(CLI::ExistingFile);
  q_cmd->add_option("--omega", q.omega)->capture_default_str();
  q_cmd->add_option("--beta-S", q.beta_s)->capture_default_str();
  q_cmd->add_option("--mask", mask, "Mask bit string (default all ones)");
  add_common(q_cmd, common);
  q_cmd->callback([&] {
    run = [&] {
      return emit(common, [&](std::ostream& os, Format f) {
        std::ifstream in(oracle_path);
        try {
          q.oracle = tq::Json::parse(in);
        } catch (const tq::Json::exception& e) {
          throw std::invalid_argument(std::string("oracle json: ") + e.what());
        }
        if (!mask.empty()) q.mask = mask;
        write_query(os, q, run_query(q), f);
        return int{kSuccess};
      });
    };
  });

  // verify
  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Analytic formulas against the exact joint-state simulation");
  ver_cmd->add_option("--max-n", ver.max_n, "DJ input bits")->capture_default_str();
  ver_cmd->add_option("--max-bv", ver.max_bv, "BV secret length")->capture_default_str();
  ver_cmd->add_option("--trials", ver.trials, "Random tuples per instance")->capture_default_str();
  ver_cmd->add_flag("--inject-fault", ver.inject_fault)->group("");
  add_common(ver_cmd, common);
  ver_cmd->callback([&] {
    run = [&] {
      ver.seed = common.seed;
      return emit(common, [&](std::ostream& os, Format f) {
        const VerifyReport r = run_verify(ver);
        write_verify(os, ver, r, f);
        if (!r.passed()) {
          for (const auto& c : r.checks) {
            if (!c.passed) {
              std::cerr << "FAIL " << c.name << ": " << c.first_failure << '\n';
              break;
            }
          }
          return int{kVerificationFailure};
        }
        return int{kSuccess};
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kValidationError;
  }
  return run ? run() : kValidationError;
}
