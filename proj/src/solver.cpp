#include "hyperaco/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "hyperaco/errors.hpp"

namespace hyperaco {

double SolverConfig::resolved_high(int edge_count) const {
  if (pher_high) {
    return *pher_high;
  }
  // The 1 - 1/m default crosses below 1/m when m == 1; fall back to equal
  // levels there (selection among one edge never consults pheromones).
  return edge_count > 1 ? 1.0 - 1.0 / edge_count : 0.5;
}

double SolverConfig::resolved_low(int edge_count) const {
  if (pher_low) {
    return *pher_low;
  }
  return edge_count > 1 ? 1.0 / edge_count : 0.5;
}

void check_config(const SolverConfig& cfg, int edge_count) {
  if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha)) {
    throw ConfigError("alpha must be a finite value >= 0");
  }
  if (!(cfg.beta >= 0.0) || !std::isfinite(cfg.beta)) {
    throw ConfigError("beta must be a finite value >= 0");
  }
  if (cfg.max_iterations < 1) {
    throw ConfigError("max_iterations must be at least 1");
  }
  if (edge_count < 1) {
    throw ConfigError("pheromone levels need at least one edge");
  }
  double low = cfg.resolved_low(edge_count);
  double high = cfg.resolved_high(edge_count);
  if (!(low > 0.0) || !std::isfinite(low)) {
    throw ConfigError("pheromone low level must be a finite value > 0");
  }
  if (!(high >= low) || !std::isfinite(high)) {
    throw ConfigError("pheromone high level must be finite and >= the low level");
  }
}

PheromoneState PheromoneState::uniform(int edge_count) {
  PheromoneState s;
  double m = static_cast<double>(edge_count);
  s.levels_.assign(static_cast<size_t>(edge_count), 1.0 / (m * m));
  s.initial_uniform_ = true;
  return s;
}

PheromoneState PheromoneState::two_level(int edge_count, const EdgeSet& best, double high,
                                         double low) {
  PheromoneState s;
  s.levels_.assign(static_cast<size_t>(edge_count), low);
  for (EdgeId e : best) {
    s.levels_[static_cast<size_t>(e) - 1] = high;
  }
  s.initial_uniform_ = false;
  return s;
}

PheromoneState PheromoneState::from_levels(std::vector<double> levels) {
  PheromoneState s;
  s.levels_ = std::move(levels);
  s.initial_uniform_ = false;
  return s;
}

Heuristic heuristic_info(const Hypergraph& h) {
  std::vector<double> eta;
  eta.reserve(static_cast<size_t>(h.edge_count()));
  for (const Hyperedge& e : h.edges()) {
    eta.push_back(static_cast<double>(e.cardinality()) / e.weight);
  }
  return Heuristic(std::move(eta));
}

EdgeSet feasible_neighborhood(const Hypergraph& h, const VertexSet& covered,
                              const EdgeSet& visited) {
  EdgeSet out;
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    if (set_contains(visited, id)) {
      continue;
    }
    const Hyperedge& e = h.edge(id);
    bool contributes = std::any_of(e.vertices.begin(), e.vertices.end(),
                                   [&](VertexId v) { return !set_contains(covered, v); });
    if (contributes) {
      out.push_back(id);
    }
  }
  return out;
}

namespace {

/// pow(tau, alpha) memo. Pheromone states hold at most a handful of distinct
/// levels, so a linear scan beats a hash map.
class TauPowCache {
 public:
  explicit TauPowCache(double alpha) : alpha_(alpha) {}

  double operator()(double tau) {
    for (const auto& [key, val] : entries_) {
      if (key == tau) {
        return val;
      }
    }
    double val = std::pow(tau, alpha_);
    entries_.emplace_back(tau, val);
    return val;
  }

 private:
  double alpha_;
  std::vector<std::pair<double, double>> entries_;
};

std::vector<double> eta_pows(const Heuristic& eta, double beta) {
  std::vector<double> out(static_cast<size_t>(eta.edge_count()));
  for (EdgeId e = 1; e <= eta.edge_count(); ++e) {
    out[static_cast<size_t>(e) - 1] = std::pow(eta.eta(e), beta);
  }
  return out;
}

std::vector<std::vector<EdgeId>> incidence_lists(const Hypergraph& h) {
  std::vector<std::vector<EdgeId>> inc(static_cast<size_t>(h.vertex_count()) + 1);
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    for (VertexId v : h.edge(id).vertices) {
      inc[static_cast<size_t>(v)].push_back(id);
    }
  }
  return inc;
}

/// Shared walk body; eta_pow is precomputed so solve() pays for the pow calls
/// once, not per iteration. Assumes a valid hypergraph.
EdgeSet construct_impl(const Hypergraph& h, const PheromoneState& pher,
                       const std::vector<double>& eta_pow, double alpha, Rng& rng) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  std::vector<std::vector<EdgeId>> inc = incidence_lists(h);
  std::vector<char> covered(static_cast<size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<size_t>(m) + 1, 0);
  std::vector<int> uncovered_count(static_cast<size_t>(m) + 1, 0);
  for (EdgeId id = 1; id <= m; ++id) {
    uncovered_count[static_cast<size_t>(id)] = h.edge(id).cardinality();
  }
  int covered_count = 0;
  EdgeSet chosen;

  auto take = [&](EdgeId id) {
    visited[static_cast<size_t>(id)] = 1;
    chosen.push_back(id);
    for (VertexId v : h.edge(id).vertices) {
      if (!covered[static_cast<size_t>(v)]) {
        covered[static_cast<size_t>(v)] = 1;
        ++covered_count;
        for (EdgeId f : inc[static_cast<size_t>(v)]) {
          --uncovered_count[static_cast<size_t>(f)];
        }
      }
    }
  };

  for (EdgeId id : forced_edges(h)) {
    take(id);
  }

  TauPowCache tau_pow(alpha);
  std::vector<EdgeId> candidates;
  std::vector<double> weights;
  while (covered_count < n) {
    candidates.clear();
    weights.clear();
    double total = 0.0;
    for (EdgeId id = 1; id <= m; ++id) {
      if (visited[static_cast<size_t>(id)] || uncovered_count[static_cast<size_t>(id)] == 0) {
        continue;
      }
      double w = tau_pow(pher.level(id)) * eta_pow[static_cast<size_t>(id) - 1];
      candidates.push_back(id);
      weights.push_back(w);
      total += w;
    }
    if (candidates.empty()) {
      throw InvalidHypergraphError("construction stuck: some vertex lies in no edge");
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw DegenerateWeightsError("selection weights sum to zero or overflow");
    }
    double r = rng.uniform01() * total;
    EdgeId pick = candidates.back();  // absorbs any rounding residue
    double acc = 0.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      acc += weights[i];
      if (r < acc) {
        pick = candidates[i];
        break;
      }
    }
    take(pick);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<double> selection_probabilities(const EdgeSet& candidates,
                                            const PheromoneState& pher, const Heuristic& eta,
                                            const SolverConfig& cfg) {
  std::vector<double> p(static_cast<size_t>(pher.edge_count()) + 1, 0.0);
  double total = 0.0;
  for (EdgeId id : candidates) {
    double w = std::pow(pher.level(id), cfg.alpha) * std::pow(eta.eta(id), cfg.beta);
    p[static_cast<size_t>(id)] = w;
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DegenerateWeightsError("selection weights sum to zero or overflow");
  }
  for (EdgeId id : candidates) {
    p[static_cast<size_t>(id)] /= total;
  }
  return p;
}

EdgeSet construct(const Hypergraph& h, const PheromoneState& pher, const Heuristic& eta,
                  const SolverConfig& cfg, Rng& rng) {
  return construct_impl(h, pher, eta_pows(eta, cfg.beta), cfg.alpha, rng);
}

PheromoneState update_pheromones(const PheromoneState& pher, const EdgeSet& best,
                                 const SolverConfig& cfg) {
  int m = pher.edge_count();
  return PheromoneState::two_level(m, best, cfg.resolved_high(m), cfg.resolved_low(m));
}

SolveResult solve(const Hypergraph& h, const SolverConfig& cfg) {
  require_valid(h);
  check_config(cfg, h.edge_count());
  Heuristic eta = heuristic_info(h);
  std::vector<double> eta_pow = eta_pows(eta, cfg.beta);
  PheromoneState pher = PheromoneState::uniform(h.edge_count());
  Rng rng = Rng::stream(cfg.seed, 0);

  SolveResult res;
  res.best_fitness = std::numeric_limits<double>::infinity();
  for (std::int64_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    EdgeSet x = construct_impl(h, pher, eta_pow, cfg.alpha, rng);
    double f = fitness(h, x);
    if (f < res.best_fitness) {
      res.best_edges = std::move(x);
      res.best_fitness = f;
      res.iteration_found = iter;
      res.trace.emplace_back(iter, f);
    }
    pher = update_pheromones(pher, res.best_edges, cfg);
    res.iterations_run = iter;
    if (cfg.target_fitness && res.best_fitness <= *cfg.target_fitness) {
      break;
    }
  }
  return res;
}

}  // namespace hyperaco
