#pragma once

// Subcommand implementations behind the thermoquery tool. Each command turns
// its options into plain rows, then a writer renders them as CSV or JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tq/detuning.hpp"
#include "tq/io.hpp"
#include "tq/readout_stats.hpp"

namespace tq::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kVerificationFailure = 2 };

enum class Format { Csv, Json };

// Thrown for bad parameters; the tool maps it to kValidationError.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// count points from lo to hi inclusive (count == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t count);

// ---- dj-kickback ----------------------------------------------------------

struct DjKickbackOptions {
  std::size_t n = 2;
  double e1 = 1.0;
  double e2 = 0.5;
  double omega = 1.0;
  std::vector<double> beta_m_grid{2.0, 1.0, 0.5, 0.25};
  std::vector<double> beta_s_grid = linspace(0.0, 2.0, 41);
};

struct DjKickbackRow {
  double beta_m;
  double beta_s;
  std::optional<double> constant1;
  std::optional<double> constant2;
  std::optional<double> balanced;
};

struct DjKickbackSummary {
  double beta_m;
  double max_separation;    // max over beta_S of the spread of the three curves
  bool balanced_between;    // strictly between the constants at every beta_S
};

struct DjKickbackResult {
  std::vector<DjKickbackRow> rows;  // beta_M in grid order, then beta_S
  std::vector<DjKickbackSummary> summary;
};

DjKickbackResult run_dj_kickback(const DjKickbackOptions& opts);
Json to_json(const DjKickbackOptions& opts);
void write_dj_kickback(std::ostream& os, const DjKickbackOptions& opts, const DjKickbackResult& r, Format format);

// ---- distinguishability ---------------------------------------------------

struct DistinguishabilityOptions {
  double beta_m = 1.0;
  std::vector<std::size_t> machine_sizes{2, 4, 8};
  std::vector<double> energy_grid = linspace(0.01, 2.0, 200);
  double t = 0.1;
};

struct DistinguishabilityRow {
  std::size_t machine_size;
  double e1;
  double e2;
  DistinguishabilityReport report;
};

struct DistinguishabilityResult {
  std::vector<DistinguishabilityRow> rows;  // N, then E1, then E2 <= E1
  double max_lhs = 0.0;
  std::size_t argmax_row = 0;
  std::size_t satisfied_points = 0;
  double max_chi_relative_satisfied = 0.0;  // |chi|/(2t Z_b Z_c)
  double max_chi_raw_satisfied = 0.0;       // |chi|/(2t)
};

DistinguishabilityResult run_distinguishability(const DistinguishabilityOptions& opts);
Json to_json(const DistinguishabilityOptions& opts);
void write_distinguishability(std::ostream& os, const DistinguishabilityOptions& opts,
                              const DistinguishabilityResult& r, Format format);

// ---- sample-complexity ----------------------------------------------------

struct SampleComplexityOptions {
  std::vector<double> delta_grid{0.1, 0.05, 0.01, 0.001, 1e-6};
  std::vector<double> t_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.55, 0.5887, 0.6};
};

struct MixedQueryRow {
  double delta;
  std::uint64_t n_mixed;  // ceil(log(1/delta)/log(4/3))
};

struct SampleComplexityResult {
  std::vector<CrossoverRow> rows;
  std::vector<MixedQueryRow> mixed;
};

SampleComplexityResult run_sample_complexity(const SampleComplexityOptions& opts);
Json to_json(const SampleComplexityOptions& opts);
void write_sample_complexity(std::ostream& os, const SampleComplexityOptions& opts, const SampleComplexityResult& r,
                             Format format);

// ---- detuning-sweep -------------------------------------------------------

struct DetuningOptions {
  ExperimentConfig config = ExperimentConfig::defaults();
  std::vector<double> beta_s_grid = linspace(0.0, 3.0, 61);
};

Json to_json(const DetuningOptions& opts);
void write_detuning(std::ostream& os, const DetuningOptions& opts, const Bv3Sweep& sweep, Format format);

// ---- query ----------------------------------------------------------------

struct QueryOptions {
  Json oracle;
  double omega = 1.0;
  double beta_s = 0.0;
  std::optional<std::string> mask;  // default 1^N
};

QueryOutcome run_query(const QueryOptions& opts);
void write_query(std::ostream& os, const QueryOptions& opts, const QueryOutcome& outcome, Format format);

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::size_t max_n = 3;      // DJ instances up to this many input bits
  std::size_t max_bv = 6;     // BV secrets up to this length
  std::size_t trials = 100;   // random parameter tuples per instance
  std::uint64_t seed = 1;
  bool inject_fault = false;  // flips the sign of the analytic dp0 (harness self-test)
};

struct VerifyCheck {
  std::string name;
  std::size_t comparisons = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string first_failure;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& opts);
Json to_json(const VerifyOptions& opts);
void write_verify(std::ostream& os, const VerifyOptions& opts, const VerifyReport& r, Format format);

}  // namespace tq::cli
