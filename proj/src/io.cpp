#include "tq/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "tq/version.hpp"

namespace tq {

namespace {

double require_number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("oracle json: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Json optional_number(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return nullptr;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json oracle_to_json(const ThermalMachineOracle& oracle) {
  Json j;
  if (const auto* dj = std::get_if<DjProblem>(&oracle.problem())) {
    j["kind"] = "dj";
    j["n"] = dj->function.n();
    j["outputs"] = std::vector<int>(dj->function.outputs().begin(), dj->function.outputs().end());
    j["E1"] = dj->e1;
    j["E2"] = dj->e2;
  } else if (const auto* bv = std::get_if<BvProblem>(&oracle.problem())) {
    j["kind"] = "bv";
    j["n"] = bv->secret.size();
    j["secret"] = bv->secret.to_string();
    j["gamma"] = bv->gamma;
  } else {
    j["kind"] = "custom";
    j["gaps"] = std::vector<double>(oracle.gaps().values().begin(), oracle.gaps().values().end());
  }
  j["beta_M"] = oracle.beta_machine();
  return j;
}

ThermalMachineOracle oracle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("oracle json: expected an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const double beta_m = require_number(j, "beta_M");
  try {
    if (kind == "dj") {
      if (!j.contains("outputs") || !j.at("outputs").is_array()) {
        throw std::invalid_argument("oracle json: dj needs an 'outputs' array");
      }
      std::vector<std::uint8_t> outputs;
      for (const auto& v : j.at("outputs")) {
        if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
          throw std::invalid_argument("oracle json: outputs must be 0 or 1");
        }
        outputs.push_back(static_cast<std::uint8_t>(v.get<int>()));
      }
      const auto n = static_cast<std::size_t>(require_number(j, "n"));
      return build_dj_oracle(BooleanFunctionTable(n, std::move(outputs)), require_number(j, "E1"),
                             require_number(j, "E2"), beta_m);
    }
    if (kind == "bv") {
      if (!j.contains("secret") || !j.at("secret").is_string()) {
        throw std::invalid_argument("oracle json: bv needs a 'secret' string");
      }
      const BitString secret = BitString::parse(j.at("secret").get<std::string>());
      if (j.contains("n") && j.at("n").get<std::size_t>() != secret.size()) {
        throw std::invalid_argument("oracle json: 'n' does not match the secret length");
      }
      return build_bv_oracle(secret, require_number(j, "gamma"), beta_m);
    }
    if (kind == "custom") {
      if (!j.contains("gaps") || !j.at("gaps").is_array()) {
        throw std::invalid_argument("oracle json: custom needs a 'gaps' array");
      }
      return build_custom_oracle(j.at("gaps").get<std::vector<double>>(), beta_m);
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("oracle json: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("oracle json: ") + e.what());
  }
  throw std::invalid_argument("oracle json: unknown kind '" + kind + "'");
}

Json to_json(const QueryOutcome& o) {
  return Json{{"p0_before", o.p0_before},
              {"p0_after", o.p0_after},
              {"delta_p0", o.delta_p0},
              {"beta_after", optional_number(o.beta_after)},
              {"regime", to_string(o.regime)}};
}

Json to_json(const HypothesisTestReport& r) {
  Json j{{"n_samples", r.n_samples},
         {"trials", r.trials},
         {"seed", r.seed},
         {"delta", r.delta},
         {"truth", to_string(r.truth)},
         {"decision", to_string(r.decision)},
         {"balanced_decisions", r.balanced_decisions},
         {"constant_decisions", r.constant_decisions},
         {"divergence", r.divergence},
         {"pinsker_lower", r.pinsker_lower},
         {"total_variation", r.total_variation},
         {"error_rate", r.error_rate},
         {"binomial_sigma", r.binomial_sigma},
         {"log_unit", r.log_unit}};
  j["chernoff_stein_bound"] = r.chernoff_stein_bound ? Json(*r.chernoff_stein_bound) : Json(nullptr);
  j["empirical_false_positive"] = optional_number(r.empirical_false_positive);
  j["empirical_false_negative"] = optional_number(r.empirical_false_negative);
  return j;
}

Json to_json(const DistinguishabilityReport& r) {
  return Json{{"t", r.t},
              {"lhs", r.lhs},
              {"chi", r.chi},
              {"chi_relative", r.chi_relative},
              {"log_z_const", r.log_z_const},
              {"log_z_bal", r.log_z_bal},
              {"satisfied", r.satisfied}};
}

Json to_json(const CrossoverRow& r) {
  return Json{{"delta", r.delta},
              {"t", r.t},
              {"n_star", r.n_star},
              {"k_classical", r.k_classical},
              {"n_crossover", r.n_crossover},
              {"thermal_beats_probabilistic", r.thermal_beats_probabilistic}};
}

Json to_json(const Bv3Sweep& s) {
  Json curves = Json::array();
  for (const auto& c : s.curves) {
    Json values = Json::array();
    for (const auto& v : c.beta_after) values.push_back(optional_number(v));
    curves.push_back(Json{{"secret", c.secret.to_string()},
                          {"delta_s", c.detuning},
                          {"eta", c.eta},
                          {"beta_S_prime", std::move(values)}});
  }
  return Json{{"beta_S", s.beta_s_grid},
              {"curves", std::move(curves)},
              {"min_pointwise_separation", optional_number(s.min_pointwise_separation)},
              {"min_sup_separation", optional_number(s.min_sup_separation)},
              {"distinct_curves", s.distinct_curves}};
}

void write_comment_header(std::ostream& os, const std::string& tool, const Json& config) {
  os << "# " << tool << ' ' << kVersion << '\n';
  os << "# config: " << config.dump() << '\n';
}

void write_crossover_csv(std::ostream& os, std::span<const CrossoverRow> rows) {
  os << "delta,t,n_star,k_classical,n_crossover,thermal_beats_probabilistic\n";
  for (const auto& r : rows) {
    os << format_double(r.delta) << ',' << format_double(r.t) << ',' << r.n_star << ',' << r.k_classical << ','
       << r.n_crossover << ',' << (r.thermal_beats_probabilistic ? "true" : "false") << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const Bv3Sweep& sweep) {
  os << "secret,beta_S,delta_s,eta,beta_S_prime\n";
  for (const auto& c : sweep.curves) {
    for (std::size_t k = 0; k < sweep.beta_s_grid.size(); ++k) {
      os << c.secret.to_string() << ',' << format_double(sweep.beta_s_grid[k]) << ',' << format_double(c.detuning)
         << ',' << format_double(c.eta) << ',' << (c.beta_after[k] ? format_double(*c.beta_after[k]) : "nan") << '\n';
    }
  }
}

}  // namespace tq
