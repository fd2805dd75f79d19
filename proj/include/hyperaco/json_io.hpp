#pragma once

#include <map>
#include <optional>
#include <string>

#include "hyperaco/bounds.hpp"
#include "hyperaco/harness.hpp"
#include "hyperaco/instance_gen.hpp"
#include "hyperaco/oracle.hpp"
#include "hyperaco/solver.hpp"

#include "json.hpp"

namespace hyperaco {

// All emitters produce canonical JSON: object keys sorted (nlohmann::json
// default ordering), arrays in natural order, so equal inputs give equal
// bytes.

/// {"best_edges": [...], "best_fitness": x, "iterations_run": n,
///  "iteration_found": n} plus "trace" (array of [iteration, fitness]) when
/// the result carries one.
nlohmann::json to_json(const SolveResult& result);

/// {"problem": name, "value": x, "witness": [...], "optima_count": n}
nlohmann::json oracle_json(const std::string& problem, const OracleResult& result);

/// {"theorem": kind, "inputs": {...}, "value": x, "log_value": x}
nlohmann::json bound_json(const std::string& kind,
                          const std::map<std::string, double>& inputs, const Bound& bound);

/// Generator sidecar: {"planted_cover": [...], "k": n, "eta_prime_min": x,
///  "eta_1_max": x, "beta_star": x|null, "generator_params": {...}}
nlohmann::json sidecar_json(const PlantedInstance& instance, const nlohmann::json& params);

nlohmann::json to_json(const TrialRecord& record);
nlohmann::json to_json(const ExperimentReport& report);

/// Parses a sidecar produced by sidecar_json back into planted metadata.
PlantedMeta planted_meta_from_json(const nlohmann::json& sidecar);

/// Serialize with sorted keys, no trailing newline.
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace hyperaco
