#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperaco/hypergraph.hpp"
#include "hyperaco/rng.hpp"

namespace hyperaco {

struct SolverConfig {
  double alpha = 1.0;  // pheromone exponent; 0 allowed to isolate the heuristic
  double beta = 1.0;   // heuristic exponent; 0 allowed to isolate pheromones
  std::optional<double> pher_high;  // default 1 - 1/m, resolved per instance
  std::optional<double> pher_low;   // default 1/m
  std::int64_t max_iterations = 100000;
  std::optional<double> target_fitness;  // stop once best <= target
  std::uint64_t seed = 0;

  double resolved_high(int edge_count) const;
  double resolved_low(int edge_count) const;
};

/// Throws ConfigError unless alpha,beta >= 0, max_iterations >= 1 and
/// 0 < l <= h after per-instance resolution.
void check_config(const SolverConfig& cfg, int edge_count);

/// Per construction-graph node pheromone level. The update rule gives every
/// incoming edge of a node the same value and initialization is uniform, so
/// one value per node is an exact representation, not an approximation.
class PheromoneState {
 public:
  /// Pre-first-update state: every node at 1/m² (the construction graph has
  /// m start arcs plus m(m-1) ordered pairs).
  static PheromoneState uniform(int edge_count);
  /// Two-level state: `high` on nodes in best, `low` elsewhere.
  static PheromoneState two_level(int edge_count, const EdgeSet& best, double high, double low);
  /// Arbitrary per-node levels (adversarial experiment setups).
  static PheromoneState from_levels(std::vector<double> levels);

  double level(EdgeId e) const { return levels_[static_cast<size_t>(e) - 1]; }
  bool initial_uniform() const { return initial_uniform_; }
  int edge_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<double>& levels() const { return levels_; }

  bool operator==(const PheromoneState&) const = default;

 private:
  std::vector<double> levels_;
  bool initial_uniform_ = false;
};

/// Static per-edge desirability eta_e = |e| / w(e).
class Heuristic {
 public:
  explicit Heuristic(std::vector<double> eta) : eta_(std::move(eta)) {}
  double eta(EdgeId e) const { return eta_[static_cast<size_t>(e) - 1]; }
  int edge_count() const { return static_cast<int>(eta_.size()); }

 private:
  std::vector<double> eta_;
};

Heuristic heuristic_info(const Hypergraph& h);

/// Unvisited edges that still contribute at least one uncovered vertex.
/// `covered` and `visited` are sorted id sets.
EdgeSet feasible_neighborhood(const Hypergraph& h, const VertexSet& covered,
                              const EdgeSet& visited);

/// p(e) = tau_e^alpha * eta_e^beta normalized over `candidates`; zero for
/// non-candidates. Indexed by edge id (slot 0 unused). Throws
/// DegenerateWeightsError if the normalizing sum underflows to zero.
std::vector<double> selection_probabilities(const EdgeSet& candidates,
                                            const PheromoneState& pher, const Heuristic& eta,
                                            const SolverConfig& cfg);

/// One ant walk: preselects every forced edge, then roulette-selects edges
/// from the feasible neighborhood until all vertices are covered. Returns a
/// sorted feasible edge cover.
EdgeSet construct(const Hypergraph& h, const PheromoneState& pher, const Heuristic& eta,
                  const SolverConfig& cfg, Rng& rng);

struct SolveResult {
  EdgeSet best_edges;
  double best_fitness = 0.0;
  std::int64_t iterations_run = 0;
  std::int64_t iteration_found = 0;
  /// Improvement events (iteration, fitness); strictly decreasing fitness.
  std::vector<std::pair<std::int64_t, double>> trace;

  bool operator==(const SolveResult&) const = default;
};

/// h on nodes of `best`, l elsewhere; clears the initial-uniform flag.
PheromoneState update_pheromones(const PheromoneState& pher, const EdgeSet& best,
                                 const SolverConfig& cfg);

/// Best-so-far iterated construction: each iteration builds one solution and
/// replaces the incumbent only on strictly smaller fitness, then pheromones
/// track the incumbent. Runs until max_iterations or target_fitness.
/// Deterministic for fixed (instance, cfg, seed).
SolveResult solve(const Hypergraph& h, const SolverConfig& cfg);

}  // namespace hyperaco
