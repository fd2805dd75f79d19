#include "hyperaco/json_io.hpp"

#include <utility>

namespace hyperaco {

namespace {

nlohmann::json edge_set_json(const EdgeSet& ids) {
  nlohmann::json arr = nlohmann::json::array();
  for (int id : ids) {
    arr.push_back(id);
  }
  return arr;
}

}  // namespace

nlohmann::json to_json(const SolveResult& result) {
  nlohmann::json j;
  j["best_edges"] = edge_set_json(result.best_edges);
  j["best_fitness"] = result.best_fitness;
  j["iterations_run"] = result.iterations_run;
  j["iteration_found"] = result.iteration_found;
  if (!result.trace.empty()) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [iteration, fitness] : result.trace) {
      trace.push_back(nlohmann::json::array({iteration, fitness}));
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

nlohmann::json oracle_json(const std::string& problem, const OracleResult& result) {
  nlohmann::json j;
  j["problem"] = problem;
  j["value"] = result.optimum_value;
  j["witness"] = edge_set_json(result.witness);
  j["optima_count"] = result.optima_count;
  return j;
}

nlohmann::json bound_json(const std::string& kind,
                          const std::map<std::string, double>& inputs, const Bound& bound) {
  nlohmann::json j;
  j["theorem"] = kind;
  j["inputs"] = inputs;
  j["value"] = bound.value;
  j["log_value"] = bound.log_value;
  return j;
}

nlohmann::json sidecar_json(const PlantedInstance& instance, const nlohmann::json& params) {
  nlohmann::json j;
  j["planted_cover"] = edge_set_json(instance.planted_cover);
  j["k"] = instance.k;
  j["eta_prime_min"] = instance.eta_prime_min;
  j["eta_1_max"] = instance.eta_1_max;
  j["beta_star"] = instance.beta_star ? nlohmann::json(*instance.beta_star)
                                      : nlohmann::json(nullptr);
  j["generator_params"] = params;
  return j;
}

nlohmann::json to_json(const TrialRecord& record) {
  nlohmann::json j;
  j["seed"] = record.seed;
  j["iterations"] = record.iterations;
  j["best_fitness"] = record.best_fitness;
  j["success"] = record.success;
  return j;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json config;
  config["alpha"] = report.config.alpha;
  config["beta"] = report.config.beta;
  config["pher_high"] = report.config.pher_high ? nlohmann::json(*report.config.pher_high)
                                                : nlohmann::json(nullptr);
  config["pher_low"] = report.config.pher_low ? nlohmann::json(*report.config.pher_low)
                                              : nlohmann::json(nullptr);
  config["max_iterations"] = report.config.max_iterations;

  nlohmann::json records = nlohmann::json::array();
  for (const TrialRecord& r : report.records) {
    records.push_back(to_json(r));
  }

  nlohmann::json j;
  j["mode"] = to_string(report.mode);
  j["config"] = std::move(config);
  j["master_seed"] = report.master_seed;
  j["trials"] = report.trials;
  j["records"] = std::move(records);
  j["mean_iterations"] = report.mean_iterations;
  j["median_iterations"] = report.median_iterations;
  j["success_frequency"] = report.success_frequency;
  j["std_error"] = report.std_error;
  j["bound_kind"] = report.bound_kind;
  j["bound_value"] =
      report.bound_value ? nlohmann::json(*report.bound_value) : nlohmann::json(nullptr);
  j["verdict"] = report.verdict;
  j["optimum_value"] = report.optimum_value;
  j["designated_optimum"] = edge_set_json(report.designated_optimum);
  return j;
}

PlantedMeta planted_meta_from_json(const nlohmann::json& sidecar) {
  PlantedMeta meta;
  meta.planted_cover = sidecar.at("planted_cover").get<EdgeSet>();
  meta.k = sidecar.at("k").get<int>();
  meta.eta_prime_min = sidecar.at("eta_prime_min").get<double>();
  meta.eta_1_max = sidecar.at("eta_1_max").get<double>();
  const auto& bs = sidecar.at("beta_star");
  meta.beta_star = bs.is_null() ? std::nullopt : std::optional<double>(bs.get<double>());
  return meta;
}

std::string dump_json(const nlohmann::json& value, int indent) { return value.dump(indent); }

}  // namespace hyperaco
