#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperaco/hypergraph.hpp"
#include "hyperaco/solver.hpp"

namespace hyperaco {

enum class ExperimentMode {
  OptimizationTime,         // full solve per trial, iterations to optimum
  ConstructionProbability,  // single construction per trial, uniform pheromones
  AdversarialPheromone,     // single construction, worst-case pheromone state
};

/// Wire names: optimization_time, construction_probability, adversarial_t1.
std::string to_string(ExperimentMode mode);
ExperimentMode parse_mode(const std::string& name);

/// Planted-optimum metadata (generator sidecar).
struct PlantedMeta {
  EdgeSet planted_cover;
  int k = 0;
  double eta_prime_min = 0.0;
  double eta_1_max = 0.0;
  std::optional<double> beta_star;
};

struct ExperimentSpec {
  Hypergraph instance;
  std::optional<PlantedMeta> planted;
  std::vector<SolverConfig> configs;  // expanded grid, one report per entry
  std::int64_t trials = 1;
  ExperimentMode mode = ExperimentMode::OptimizationTime;
  std::uint64_t master_seed = 0;
};

/// Cross product of the parameter lists. Empty level list keeps the
/// per-instance defaults.
std::vector<SolverConfig> expand_grid(const std::vector<double>& alphas,
                                      const std::vector<double>& betas,
                                      const std::vector<std::pair<double, double>>& high_low,
                                      std::int64_t max_iterations);

/// The ground truth a trial is scored against: optimum value from the
/// exhaustive oracle when m <= 24, else the planted cover's fitness; the
/// designated set S is the planted cover when present, else the oracle
/// witness. Throws UnknownOptimumError when neither source is available.
struct ResolvedOptimum {
  double value = 0.0;
  EdgeSet designated;
  /// A cover whose fitness equals `value`, used as the target of time-bound
  /// evaluation; differs from `designated` when the planted cover is not
  /// actually optimal.
  EdgeSet bound_target;
  bool from_oracle = false;
};
ResolvedOptimum resolve_optimum(const Hypergraph& h, const std::optional<PlantedMeta>& planted);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  double best_fitness = 0.0;
  bool success = false;
};

struct ExperimentReport {
  ExperimentMode mode = ExperimentMode::OptimizationTime;
  SolverConfig config;
  std::uint64_t master_seed = 0;
  std::int64_t trials = 0;
  std::vector<TrialRecord> records;  // indexed by trial
  // Aggregates.
  double mean_iterations = 0.0;
  double median_iterations = 0.0;
  double success_frequency = 0.0;
  double std_error = 0.0;  // of the headline statistic: mean for the time
                           // mode, frequency for the construction modes
  // Matching theoretical bound, when one applies to the configuration.
  std::string bound_kind = "none";  // pheromone | heuristic | separated | none
  std::optional<double> bound_value;
  std::string verdict = "no bound";  // "bound respected" | "bound violated"
  // The ground truth trials were scored against.
  double optimum_value = 0.0;
  EdgeSet designated_optimum;
};

enum class Parallelism { Serial, Parallel };

/// Hard cap on per-trial iteration budgets; capped trials count as failures.
inline constexpr std::int64_t kMaxTrialIterations = 10000000;

/// One report per grid point. Trials run concurrently under OpenMP when
/// Parallel (HYPERACO_THREADS overrides the thread count); records and
/// aggregates are bit-identical to the serial runner either way, since every
/// trial owns RNG stream `trial` split from the master seed and aggregation
/// happens in trial order after the loop.
std::vector<ExperimentReport> run_experiment(const ExperimentSpec& spec,
                                             Parallelism par = Parallelism::Parallel);

/// Single-configuration runners, one per mode.
ExperimentReport run_optimization_time(const ExperimentSpec& spec, const SolverConfig& cfg,
                                       Parallelism par = Parallelism::Parallel);
ExperimentReport run_construction_probability(const ExperimentSpec& spec,
                                              const SolverConfig& cfg,
                                              Parallelism par = Parallelism::Parallel);
/// Forces alpha=1, beta=0 and the worst pheromone state (low on the optimum,
/// high elsewhere). Throws PendantEdgesPresentError unless pendant-free.
ExperimentReport run_adversarial_pheromone(const ExperimentSpec& spec, const SolverConfig& cfg,
                                           Parallelism par = Parallelism::Parallel);

/// CSV: header `trial,seed,iterations,best_fitness,success`, one row per
/// trial, 1-based trial index, stable bytes.
void write_trials_csv(std::ostream& out, const ExperimentReport& report);

}  // namespace hyperaco
