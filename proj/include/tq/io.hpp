#pragma once

// JSON and CSV encodings of oracles, outcomes, reports and sweeps.

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "tq/detuning.hpp"
#include "tq/query_engine.hpp"
#include "tq/readout_stats.hpp"
#include "tq/thermal_core.hpp"

namespace tq {

using Json = nlohmann::json;

// {"kind":"dj","n":..,"outputs":[..],"E1":..,"E2":..,"beta_M":..}
// {"kind":"bv","n":..,"secret":"101","gamma":..,"beta_M":..}
// {"kind":"custom","gaps":[..],"beta_M":..}
Json oracle_to_json(const ThermalMachineOracle& oracle);

// Throws std::invalid_argument on a malformed or inconsistent object.
ThermalMachineOracle oracle_from_json(const Json& j);

Json to_json(const QueryOutcome& outcome);
Json to_json(const HypothesisTestReport& report);
Json to_json(const DistinguishabilityReport& report);
Json to_json(const CrossoverRow& row);
Json to_json(const Bv3Sweep& sweep);

// "# <tool> <version>" then "# config: <compact json>".
void write_comment_header(std::ostream& os, const std::string& tool, const Json& config);

void write_crossover_csv(std::ostream& os, std::span<const CrossoverRow> rows);

// secret,beta_S,delta_s,eta,beta_S_prime; an undefined temperature is written as "nan".
void write_sweep_csv(std::ostream& os, const Bv3Sweep& sweep);

// Shortest text that round-trips the double.
std::string format_double(double v);

}  // namespace tq
