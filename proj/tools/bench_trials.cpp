// Compares the serial and OpenMP trial runners on one experiment workload:
// wall time for each, the speedup, and a field-by-field check that both
// produced identical trial records.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "hyperaco/harness.hpp"
#include "hyperaco/instance_gen.hpp"

namespace {

double seconds_of(const std::chrono::steady_clock::duration& d) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(d).count();
}

bool same_records(const std::vector<hyperaco::TrialRecord>& a,
                  const std::vector<hyperaco::TrialRecord>& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].seed != b[i].seed || a[i].iterations != b[i].iterations ||
        a[i].best_fitness != b[i].best_fitness || a[i].success != b[i].success) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel trial-runner benchmark"};
  int n = 31;
  int r = 2;
  std::int64_t trials = 64;
  std::int64_t max_iters = 200;
  std::uint64_t seed = 1;
  std::string mode = "optimization_time";
  app.add_option("--n", n, "vertex count (default 31)");
  app.add_option("--r", r, "edge cardinality (default 2)");
  app.add_option("--trials", trials, "trials (default 64)");
  app.add_option("--max-iters", max_iters, "per-trial budget (default 200)");
  app.add_option("--seed", seed, "master seed (default 1)");
  app.add_option("--mode", mode, "experiment mode (default optimization_time)")
      ->check(CLI::IsMember(
          {"optimization_time", "construction_probability", "adversarial_t1"}));
  CLI11_PARSE(app, argc, argv);

  hyperaco::PlantedInstance inst = hyperaco::gen_instance1(n, r, seed, 10);
  hyperaco::ExperimentSpec spec;
  spec.instance = inst.hypergraph;
  spec.planted = hyperaco::PlantedMeta{inst.planted_cover, inst.k, inst.eta_prime_min,
                                       inst.eta_1_max, inst.beta_star};
  spec.configs = hyperaco::expand_grid({1.0}, {1.0}, {}, max_iters);
  spec.trials = trials;
  spec.mode = hyperaco::parse_mode(mode);
  spec.master_seed = seed;

  std::cout << "instance: n=" << n << " r=" << r << " m=" << inst.hypergraph.edge_count()
            << "\nmode=" << mode << " trials=" << trials << " budget=" << max_iters << "\n";

  auto t0 = std::chrono::steady_clock::now();
  auto serial = hyperaco::run_experiment(spec, hyperaco::Parallelism::Serial);
  auto t1 = std::chrono::steady_clock::now();
  auto parallel = hyperaco::run_experiment(spec, hyperaco::Parallelism::Parallel);
  auto t2 = std::chrono::steady_clock::now();

  double serial_s = seconds_of(t1 - t0);
  double parallel_s = seconds_of(t2 - t1);
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
  // Report the same override the trial runner applies.
  if (const char* env = std::getenv("HYPERACO_THREADS")) {
    int requested = std::atoi(env);
    if (requested > 0) {
      threads = requested;
    }
  }
#endif
  std::cout << "serial:   " << serial_s << " s\n"
            << "parallel: " << parallel_s << " s (" << threads << " threads)\n"
            << "speedup:  " << (parallel_s > 0.0 ? serial_s / parallel_s : 0.0) << "x\n";

  bool identical = same_records(serial[0].records, parallel[0].records) &&
                   serial[0].mean_iterations == parallel[0].mean_iterations &&
                   serial[0].success_frequency == parallel[0].success_frequency;
  std::cout << "records identical: " << (identical ? "yes" : "NO") << "\n";
  return identical ? 0 : 1;
}
