#include "hyperaco/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyperaco/bounds.hpp"
#include "hyperaco/errors.hpp"
#include "hyperaco/hgr.hpp"
#include "hyperaco/oracle.hpp"
#include "hyperaco/rng.hpp"

namespace hyperaco {

std::string to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::OptimizationTime:
      return "optimization_time";
    case ExperimentMode::ConstructionProbability:
      return "construction_probability";
    case ExperimentMode::AdversarialPheromone:
      return "adversarial_t1";
  }
  return "unknown";
}

ExperimentMode parse_mode(const std::string& name) {
  if (name == "optimization_time") {
    return ExperimentMode::OptimizationTime;
  }
  if (name == "construction_probability") {
    return ExperimentMode::ConstructionProbability;
  }
  if (name == "adversarial_t1") {
    return ExperimentMode::AdversarialPheromone;
  }
  throw ConfigError("unknown experiment mode '" + name + "'");
}

std::vector<SolverConfig> expand_grid(const std::vector<double>& alphas,
                                      const std::vector<double>& betas,
                                      const std::vector<std::pair<double, double>>& high_low,
                                      std::int64_t max_iterations) {
  std::vector<SolverConfig> grid;
  for (double a : alphas) {
    for (double b : betas) {
      if (high_low.empty()) {
        SolverConfig cfg;
        cfg.alpha = a;
        cfg.beta = b;
        cfg.max_iterations = max_iterations;
        grid.push_back(cfg);
      } else {
        for (const auto& [high, low] : high_low) {
          SolverConfig cfg;
          cfg.alpha = a;
          cfg.beta = b;
          cfg.pher_high = high;
          cfg.pher_low = low;
          cfg.max_iterations = max_iterations;
          grid.push_back(cfg);
        }
      }
    }
  }
  return grid;
}

ResolvedOptimum resolve_optimum(const Hypergraph& h, const std::optional<PlantedMeta>& planted) {
  require_valid(h);
  ResolvedOptimum out;
  if (h.edge_count() <= kMaxEnumerationBits) {
    OracleResult oracle = min_weight_edge_cover(h);
    out.value = oracle.optimum_value;
    out.from_oracle = true;
    out.designated = planted ? planted->planted_cover : oracle.witness;
    bool planted_optimal =
        planted && fitness(h, planted->planted_cover) <= oracle.optimum_value;
    out.bound_target = planted_optimal ? planted->planted_cover : oracle.witness;
    return out;
  }
  if (planted) {
    out.value = fitness(h, planted->planted_cover);
    out.designated = planted->planted_cover;
    out.bound_target = planted->planted_cover;
    out.from_oracle = false;
    return out;
  }
  throw UnknownOptimumError(
      "instance too large for exhaustive optimum and no planted cover given");
}

namespace {

std::uint64_t trial_seed(std::uint64_t master, std::int64_t t) {
  return Rng::stream(master, static_cast<std::uint64_t>(t)).next_u64();
}

/// Runs body(t) for t in [0, trials), in parallel when requested. Records are
/// written by index, so results do not depend on scheduling. The first
/// exception is rethrown after the loop.
template <typename Body>
void for_each_trial(std::int64_t trials, Parallelism par, const Body& body) {
  std::exception_ptr first_error = nullptr;
  [[maybe_unused]] const bool parallel = par == Parallelism::Parallel;
#ifdef _OPENMP
  int threads = omp_get_max_threads();
  if (const char* env = std::getenv("HYPERACO_THREADS")) {
    int requested = std::atoi(env);
    if (requested > 0) {
      threads = requested;
    }
  }
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
#endif
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      body(t);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(hyperaco_trial_error)
#endif
      {
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

struct EtaSplit {
  double inside_min = 0.0;
  double outside_max = 0.0;  // 0 when the target set is all of E
};

EtaSplit eta_split(const Hypergraph& h, const EdgeSet& target) {
  EtaSplit s;
  bool first_inside = true;
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    double eta = static_cast<double>(h.edge(id).cardinality()) / h.edge(id).weight;
    if (set_contains(target, id)) {
      s.inside_min = first_inside ? eta : std::min(s.inside_min, eta);
      first_inside = false;
    } else {
      s.outside_max = std::max(s.outside_max, eta);
    }
  }
  return s;
}

void aggregate(ExperimentReport& report) {
  const auto& rec = report.records;
  const double t = static_cast<double>(rec.size());
  double iter_sum = 0.0;
  std::int64_t successes = 0;
  std::vector<std::int64_t> iters;
  iters.reserve(rec.size());
  for (const TrialRecord& r : rec) {
    iter_sum += static_cast<double>(r.iterations);
    successes += r.success ? 1 : 0;
    iters.push_back(r.iterations);
  }
  report.mean_iterations = iter_sum / t;
  std::sort(iters.begin(), iters.end());
  size_t mid = iters.size() / 2;
  report.median_iterations =
      iters.size() % 2 == 1
          ? static_cast<double>(iters[mid])
          : (static_cast<double>(iters[mid - 1]) + static_cast<double>(iters[mid])) / 2.0;
  report.success_frequency = static_cast<double>(successes) / t;

  if (report.mode == ExperimentMode::OptimizationTime) {
    double sq = 0.0;
    for (const TrialRecord& r : rec) {
      double d = static_cast<double>(r.iterations) - report.mean_iterations;
      sq += d * d;
    }
    report.std_error = rec.size() > 1 ? std::sqrt(sq / (t - 1.0)) / std::sqrt(t) : 0.0;
  } else {
    double p = report.success_frequency;
    report.std_error = std::sqrt(p * (1.0 - p) / t);
  }
}

void attach_verdict(ExperimentReport& report) {
  if (!report.bound_value) {
    report.bound_kind = "none";
    report.verdict = "no bound";
    return;
  }
  double margin = 3.0 * report.std_error;
  bool ok;
  if (report.mode == ExperimentMode::OptimizationTime) {
    // Upper bound on the mean.
    ok = report.mean_iterations <= *report.bound_value + margin;
  } else {
    // Lower bound on the success frequency.
    ok = report.success_frequency >= *report.bound_value - margin;
  }
  report.verdict = ok ? "bound respected" : "bound violated";
}

ExperimentReport make_report(const ExperimentSpec& spec, const SolverConfig& cfg,
                             const ResolvedOptimum& opt) {
  ExperimentReport report;
  report.mode = spec.mode;
  report.config = cfg;
  report.master_seed = spec.master_seed;
  report.trials = spec.trials;
  report.records.resize(static_cast<size_t>(spec.trials));
  report.optimum_value = opt.value;
  report.designated_optimum = opt.designated;
  return report;
}

}  // namespace

ExperimentReport run_optimization_time(const ExperimentSpec& spec, const SolverConfig& cfg,
                                       Parallelism par) {
  const Hypergraph& h = spec.instance;
  ResolvedOptimum opt = resolve_optimum(h, spec.planted);
  SolverConfig eff = cfg;
  eff.max_iterations = std::min(cfg.max_iterations, kMaxTrialIterations);
  eff.target_fitness = opt.value;
  check_config(eff, h.edge_count());

  ExperimentReport report = make_report(spec, eff, opt);
  auto& records = report.records;
  for_each_trial(spec.trials, par, [&](std::int64_t t) {
    SolverConfig trial_cfg = eff;
    trial_cfg.seed = trial_seed(spec.master_seed, t);
    SolveResult r = solve(h, trial_cfg);
    bool ok = r.best_fitness <= opt.value + 1e-9;
    records[static_cast<size_t>(t)] =
        TrialRecord{trial_cfg.seed, ok ? r.iteration_found : r.iterations_run, r.best_fitness,
                    ok};
  });
  aggregate(report);

  const int m = h.edge_count();
  const int k = static_cast<int>(opt.bound_target.size());
  if (eff.alpha == 0.0) {
    // Pheromones cancel out of every selection, so each iteration
    // independently hits a fixed optimal cover with at least the separated
    // floor probability; the expected hitting time is at most its inverse.
    EtaSplit split = eta_split(h, opt.bound_target);
    Bound time = separated_time_bound(m, k, split.inside_min, split.outside_max, eff.beta);
    report.bound_kind = "separated";
    report.bound_value = time.value;
  } else if (eff.beta == 0.0 && forced_edges(h).empty()) {
    // Heuristics cancel instead; the worst reachable pheromone state has
    // ratio (high/low)^alpha against the target's edges.
    double c = std::pow(eff.resolved_high(m) / eff.resolved_low(m), eff.alpha);
    Bound time = pheromone_time_bound(m, k, c);
    report.bound_kind = "pheromone";
    report.bound_value = time.value;
  }
  attach_verdict(report);
  return report;
}

ExperimentReport run_construction_probability(const ExperimentSpec& spec,
                                              const SolverConfig& cfg, Parallelism par) {
  const Hypergraph& h = spec.instance;
  ResolvedOptimum opt = resolve_optimum(h, spec.planted);
  check_config(cfg, h.edge_count());
  PheromoneState pher = PheromoneState::uniform(h.edge_count());
  Heuristic eta = heuristic_info(h);

  ExperimentReport report = make_report(spec, cfg, opt);
  auto& records = report.records;
  const EdgeSet& designated = opt.designated;
  for_each_trial(spec.trials, par, [&](std::int64_t t) {
    std::uint64_t seed = trial_seed(spec.master_seed, t);
    Rng rng = Rng::stream(seed, 0);
    EdgeSet x = construct(h, pher, eta, cfg, rng);
    records[static_cast<size_t>(t)] =
        TrialRecord{seed, 1, fitness(h, x), is_subset(x, designated)};
  });
  aggregate(report);

  const int m = h.edge_count();
  const int k = static_cast<int>(designated.size());
  if (spec.planted) {
    Bound floor = separated_success_floor(m, k, spec.planted->eta_prime_min,
                                          spec.planted->eta_1_max, cfg.beta);
    report.bound_kind = "separated";
    report.bound_value = floor.value;
  } else {
    EtaSplit split = eta_split(h, designated);
    double eta_min = split.inside_min;
    double eta_max = std::max(split.inside_min, split.outside_max);
    for (EdgeId id = 1; id <= m; ++id) {
      double e = static_cast<double>(h.edge(id).cardinality()) / h.edge(id).weight;
      eta_min = std::min(eta_min, e);
      eta_max = std::max(eta_max, e);
    }
    Bound floor = heuristic_success_floor(m, k, eta_max, eta_min, cfg.beta);
    report.bound_kind = "heuristic";
    report.bound_value = floor.value;
  }
  attach_verdict(report);
  return report;
}

ExperimentReport run_adversarial_pheromone(const ExperimentSpec& spec, const SolverConfig& cfg,
                                           Parallelism par) {
  const Hypergraph& h = spec.instance;
  if (!forced_edges(h).empty()) {
    throw PendantEdgesPresentError(
        "adversarial pheromone mode requires a pendant-free instance");
  }
  ResolvedOptimum opt = resolve_optimum(h, spec.planted);
  SolverConfig eff = cfg;
  eff.alpha = 1.0;
  eff.beta = 0.0;
  check_config(eff, h.edge_count());

  const int m = h.edge_count();
  const double high = eff.resolved_high(m);
  const double low = eff.resolved_low(m);
  const EdgeSet& designated = opt.designated;
  // Worst case for finding the designated cover: low pheromone on its edges,
  // high everywhere else.
  std::vector<double> levels(static_cast<size_t>(m), high);
  for (EdgeId id : designated) {
    levels[static_cast<size_t>(id) - 1] = low;
  }
  PheromoneState pher = PheromoneState::from_levels(std::move(levels));
  Heuristic eta = heuristic_info(h);

  ExperimentReport report = make_report(spec, eff, opt);
  auto& records = report.records;
  for_each_trial(spec.trials, par, [&](std::int64_t t) {
    std::uint64_t seed = trial_seed(spec.master_seed, t);
    Rng rng = Rng::stream(seed, 0);
    EdgeSet x = construct(h, pher, eta, eff, rng);
    records[static_cast<size_t>(t)] =
        TrialRecord{seed, 1, fitness(h, x), is_subset(x, designated)};
  });
  aggregate(report);

  Bound floor =
      pheromone_success_floor(m, static_cast<int>(designated.size()), high / low);
  report.bound_kind = "pheromone";
  report.bound_value = floor.value;
  attach_verdict(report);
  return report;
}

std::vector<ExperimentReport> run_experiment(const ExperimentSpec& spec, Parallelism par) {
  if (spec.trials < 1) {
    throw ConfigError("trial count must be at least 1");
  }
  if (spec.configs.empty()) {
    throw ConfigError("experiment needs at least one solver configuration");
  }
  std::vector<ExperimentReport> reports;
  reports.reserve(spec.configs.size());
  for (const SolverConfig& cfg : spec.configs) {
    switch (spec.mode) {
      case ExperimentMode::OptimizationTime:
        reports.push_back(run_optimization_time(spec, cfg, par));
        break;
      case ExperimentMode::ConstructionProbability:
        reports.push_back(run_construction_probability(spec, cfg, par));
        break;
      case ExperimentMode::AdversarialPheromone:
        reports.push_back(run_adversarial_pheromone(spec, cfg, par));
        break;
    }
  }
  return reports;
}

void write_trials_csv(std::ostream& out, const ExperimentReport& report) {
  out << "trial,seed,iterations,best_fitness,success\n";
  for (size_t i = 0; i < report.records.size(); ++i) {
    const TrialRecord& r = report.records[i];
    out << (i + 1) << ',' << r.seed << ',' << r.iterations << ','
        << format_decimal(r.best_fitness) << ',' << (r.success ? "true" : "false") << '\n';
  }
}

}  // namespace hyperaco
