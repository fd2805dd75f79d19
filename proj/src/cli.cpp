#include "hyperaco/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hyperaco/bounds.hpp"
#include "hyperaco/errors.hpp"
#include "hyperaco/harness.hpp"
#include "hyperaco/hgr.hpp"
#include "hyperaco/instance_gen.hpp"
#include "hyperaco/json_io.hpp"
#include "hyperaco/oracle.hpp"
#include "hyperaco/reductions.hpp"
#include "hyperaco/solver.hpp"

namespace hyperaco {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw Error("cannot open '" + out_path + "' for writing");
  }
  file << text;
}

void emit_json(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
  emit_text(dump_json(j) + "\n", out_path, out);
}

void require_explicit_seed(bool strict, const CLI::Option* seed_opt) {
  if (strict && seed_opt->count() == 0) {
    throw CLI::ValidationError("--strict requires an explicit --seed");
  }
}

double parse_beta_value(const std::string& token, const std::optional<PlantedMeta>& meta) {
  if (token == "auto") {
    if (!meta) {
      throw ConfigError("--beta auto needs --meta with a usable beta_star");
    }
    if (!meta->beta_star) {
      throw ConfigError("--beta auto: metadata has no beta_star for this instance");
    }
    return std::ceil(*meta->beta_star);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw CLI::ValidationError("--beta expects a number or 'auto', got '" + token + "'");
  }
  return value;
}

nlohmann::json reduction_json(const ReductionResult& r) {
  nlohmann::json j;
  j["best_vertices"] = r.vertices;
  j["best_value"] = r.value;
  j["iterations_run"] = r.iterations_run;
  j["iteration_found"] = r.iteration_found;
  return j;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ant-colony toolkit for minimum-weight hypergraph edge cover"};
  app.name("hyperaco");
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "fail unless every seeded command gets an explicit --seed");

  int rc = kExitOk;

  // --- gen -----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);

  auto* gen1 = gen->add_subcommand(
      "instance1", "weighted complete r-uniform instance with a planted unit-weight cover");
  int g1_n = 0;
  int g1_r = 0;
  std::uint64_t g1_seed = 0;
  int g1_rand_max = 10;
  std::string g1_out;
  gen1->add_option("--n", g1_n, "vertex count")->required();
  gen1->add_option("--r", g1_r, "uniform edge cardinality")->required();
  auto* g1_seed_opt = gen1->add_option("--seed", g1_seed, "generator seed (default 0)");
  gen1->add_option("--rand-max", g1_rand_max, "largest non-planted weight (default 10)");
  gen1->add_option("--out", g1_out, "output prefix; writes <prefix>.hgr and <prefix>.json")
      ->required();
  gen1->callback([&] {
    require_explicit_seed(strict, g1_seed_opt);
    PlantedInstance inst = gen_instance1(g1_n, g1_r, g1_seed, g1_rand_max);
    write_hgr_file(g1_out + ".hgr", inst.hypergraph);
    nlohmann::json params;
    params["generator"] = "instance1";
    params["n"] = g1_n;
    params["r"] = g1_r;
    params["seed"] = g1_seed;
    params["rand_max"] = g1_rand_max;
    emit_json(sidecar_json(inst, params), g1_out + ".json", out);
    out << "wrote " << g1_out << ".hgr and " << g1_out << ".json\n";
  });

  auto* gen2 = gen->add_subcommand(
      "instance2", "unweighted instance covered by edges of a prescribed cardinality sequence");
  int g2_n = 0;
  std::vector<int> g2_p;
  int g2_extra = 0;
  std::uint64_t g2_seed = 0;
  std::string g2_out;
  gen2->add_option("--n", g2_n, "vertex count")->required();
  gen2->add_option("--p", g2_p, "non-increasing cardinality sequence")->required();
  gen2->add_option("--extra", g2_extra, "edges beyond the planted cover (default 0)");
  auto* g2_seed_opt = gen2->add_option("--seed", g2_seed, "generator seed (default 0)");
  gen2->add_option("--out", g2_out, "output prefix; writes <prefix>.hgr and <prefix>.json")
      ->required();
  gen2->callback([&] {
    require_explicit_seed(strict, g2_seed_opt);
    PlantedInstance inst = gen_instance2(g2_n, g2_p, g2_extra, g2_seed);
    write_hgr_file(g2_out + ".hgr", inst.hypergraph);
    nlohmann::json params;
    params["generator"] = "instance2";
    params["n"] = g2_n;
    params["p_sequence"] = g2_p;
    params["extra_edges"] = g2_extra;
    params["seed"] = g2_seed;
    emit_json(sidecar_json(inst, params), g2_out + ".json", out);
    out << "wrote " << g2_out << ".hgr and " << g2_out << ".json\n";
  });

  auto* gen3 = gen->add_subcommand("random", "unstructured random instance");
  int g3_n = 0;
  int g3_m = 0;
  int g3_max_card = 3;
  bool g3_weighted = false;
  std::uint64_t g3_seed = 0;
  std::string g3_out;
  gen3->add_option("--n", g3_n, "vertex count")->required();
  gen3->add_option("--m", g3_m, "edge count")->required();
  gen3->add_option("--max-card", g3_max_card, "largest edge cardinality (default 3)");
  gen3->add_flag("--weighted", g3_weighted, "draw integer weights in [1, 10] instead of 1");
  auto* g3_seed_opt = gen3->add_option("--seed", g3_seed, "generator seed (default 0)");
  gen3->add_option("--out", g3_out, "output prefix; writes <prefix>.hgr (default: stdout)");
  gen3->callback([&] {
    require_explicit_seed(strict, g3_seed_opt);
    Hypergraph h = gen_random(g3_n, g3_m, g3_max_card, g3_weighted, g3_seed);
    if (g3_out.empty()) {
      out << to_hgr_string(h);
    } else {
      write_hgr_file(g3_out + ".hgr", h);
      out << "wrote " << g3_out << ".hgr\n";
    }
  });

  // --- solve ---------------------------------------------------------------
  auto* solve_cmd = app.add_subcommand("solve", "run the solver on an instance");
  std::string s_in;
  std::string s_problem = "edge-cover";
  std::string s_out;
  SolverConfig s_cfg;
  double s_high = 0.0;
  double s_low = 0.0;
  double s_target = 0.0;
  bool s_trace = false;
  solve_cmd->add_option("file", s_in, "instance file (.hgr)");
  solve_cmd->add_option("--in", s_in, "instance file (.hgr)");
  solve_cmd->add_option("--problem", s_problem, "edge-cover | vertex-cover | weak-is")
      ->check(CLI::IsMember({"edge-cover", "vertex-cover", "weak-is"}));
  solve_cmd->add_option("--alpha", s_cfg.alpha, "pheromone exponent (default 1)");
  solve_cmd->add_option("--beta", s_cfg.beta, "heuristic exponent (default 1)");
  auto* s_high_opt =
      solve_cmd->add_option("--pher-high", s_high, "best-edge pheromone level (default 1-1/m)");
  auto* s_low_opt =
      solve_cmd->add_option("--pher-low", s_low, "other-edge pheromone level (default 1/m)");
  solve_cmd->add_option("--max-iters", s_cfg.max_iterations,
                        "iteration budget (default 100000)");
  auto* s_seed_opt = solve_cmd->add_option("--seed", s_cfg.seed, "solver seed (default 0)");
  auto* s_target_opt =
      solve_cmd->add_option("--target", s_target, "stop at this value; exit 3 if unreached");
  solve_cmd->add_flag("--trace", s_trace, "include the improvement trace in the output");
  solve_cmd->add_option("--out", s_out, "write the result JSON here instead of stdout");
  solve_cmd->callback([&] {
    if (s_in.empty()) {
      throw CLI::ValidationError("an instance file is required (positional or --in)");
    }
    require_explicit_seed(strict, s_seed_opt);
    if (s_high_opt->count() > 0) {
      s_cfg.pher_high = s_high;
    }
    if (s_low_opt->count() > 0) {
      s_cfg.pher_low = s_low;
    }
    if (s_target_opt->count() > 0) {
      s_cfg.target_fitness = s_target;
    }
    Hypergraph h = read_hgr_file(s_in);
    if (s_problem == "edge-cover") {
      SolveResult r = solve(h, s_cfg);
      if (!s_trace) {
        r.trace.clear();
      }
      emit_json(to_json(r), s_out, out);
      if (s_cfg.target_fitness && r.best_fitness > *s_cfg.target_fitness) {
        rc = kExitBudget;
      }
      return;
    }
    ReductionResult r = s_problem == "vertex-cover" ? solve_vertex_cover(h, s_cfg)
                                                    : solve_weak_independent_set(h, s_cfg);
    emit_json(reduction_json(r), s_out, out);
    if (s_cfg.target_fitness) {
      bool reached = s_problem == "vertex-cover" ? r.value <= *s_cfg.target_fitness
                                                 : r.value >= *s_cfg.target_fitness;
      if (!reached) {
        rc = kExitBudget;
      }
    }
  });

  // --- oracle ----------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth on small instances");
  std::string o_in;
  std::string o_problem = "edge-cover";
  std::string o_out;
  oracle_cmd->add_option("file", o_in, "instance file (.hgr)");
  oracle_cmd->add_option("--in", o_in, "instance file (.hgr)");
  oracle_cmd->add_option("--problem", o_problem, "edge-cover | vertex-cover | weak-is")
      ->check(CLI::IsMember({"edge-cover", "vertex-cover", "weak-is"}));
  oracle_cmd->add_option("--out", o_out, "write the result JSON here instead of stdout");
  oracle_cmd->callback([&] {
    if (o_in.empty()) {
      throw CLI::ValidationError("an instance file is required (positional or --in)");
    }
    Hypergraph h = read_hgr_file(o_in);
    OracleResult r = o_problem == "edge-cover"     ? min_weight_edge_cover(h)
                     : o_problem == "vertex-cover" ? min_vertex_cover(h)
                                                   : max_weak_independent_set(h);
    emit_json(oracle_json(o_problem, r), o_out, out);
  });

  // --- bounds ----------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form guarantees");
  std::string b_kind;
  std::string b_out;
  int b_m = 0;
  int b_k = 0;
  double b_c = 0.0;
  double b_eta_max = 0.0;
  double b_eta_min = 0.0;
  double b_eta_prime_min = 0.0;
  double b_eta_1_max = 0.0;
  double b_beta = 0.0;
  bounds_cmd
      ->add_option("--theorem", b_kind,
                   "pheromone | heuristic | separated-pmin | beta-star")
      ->required()
      ->check(CLI::IsMember({"pheromone", "heuristic", "separated-pmin", "beta-star"}));
  bounds_cmd->add_option("--m", b_m, "edge count")->required();
  bounds_cmd->add_option("--k", b_k, "target cover cardinality")->required();
  auto* b_c_opt = bounds_cmd->add_option("--c", b_c, "pheromone ratio high/low");
  auto* b_eta_max_opt = bounds_cmd->add_option("--eta-max", b_eta_max, "largest eta overall");
  auto* b_eta_min_opt = bounds_cmd->add_option("--eta-min", b_eta_min, "smallest eta overall");
  auto* b_epm_opt =
      bounds_cmd->add_option("--eta-prime-min", b_eta_prime_min, "smallest eta on the target");
  auto* b_e1m_opt =
      bounds_cmd->add_option("--eta-1-max", b_eta_1_max, "largest eta off the target");
  auto* b_beta_opt = bounds_cmd->add_option("--beta", b_beta, "heuristic exponent");
  bounds_cmd->callback([&] {
    auto need = [&](const CLI::Option* opt, const char* name) {
      if (opt->count() == 0) {
        throw CLI::ValidationError(std::string("--theorem ") + b_kind + " requires " + name);
      }
    };
    std::map<std::string, double> inputs{{"m", static_cast<double>(b_m)},
                                         {"k", static_cast<double>(b_k)}};
    Bound bound;
    if (b_kind == "pheromone") {
      need(b_c_opt, "--c");
      inputs["c"] = b_c;
      bound = pheromone_time_bound(b_m, b_k, b_c);
    } else if (b_kind == "heuristic") {
      need(b_eta_max_opt, "--eta-max");
      need(b_eta_min_opt, "--eta-min");
      need(b_beta_opt, "--beta");
      inputs["eta_max"] = b_eta_max;
      inputs["eta_min"] = b_eta_min;
      inputs["beta"] = b_beta;
      bound = heuristic_time_bound(b_m, b_k, b_eta_max, b_eta_min, b_beta);
    } else if (b_kind == "separated-pmin") {
      need(b_epm_opt, "--eta-prime-min");
      need(b_e1m_opt, "--eta-1-max");
      need(b_beta_opt, "--beta");
      inputs["eta_prime_min"] = b_eta_prime_min;
      inputs["eta_1_max"] = b_eta_1_max;
      inputs["beta"] = b_beta;
      bound = separated_success_floor(b_m, b_k, b_eta_prime_min, b_eta_1_max, b_beta);
    } else {  // beta-star
      need(b_epm_opt, "--eta-prime-min");
      need(b_e1m_opt, "--eta-1-max");
      inputs["eta_prime_min"] = b_eta_prime_min;
      inputs["eta_1_max"] = b_eta_1_max;
      double v = beta_star(b_m, b_k, b_eta_prime_min, b_eta_1_max);
      bound = Bound{v, std::log(v)};
    }
    emit_json(bound_json(b_kind, inputs, bound), b_out, out);
  });
  bounds_cmd->add_option("--out", b_out, "write the result JSON here instead of stdout");

  // --- experiment ------------------------------------------------------------
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo check of the guarantees");
  std::string e_in;
  std::string e_meta;
  std::string e_mode;
  std::vector<double> e_alphas{1.0};
  std::vector<std::string> e_betas{"1"};
  std::vector<double> e_highs;
  std::vector<double> e_lows;
  std::int64_t e_trials = 1000;
  std::int64_t e_max_iters = 100000;
  std::uint64_t e_seed = 0;
  bool e_serial = false;
  std::string e_out;
  std::string e_csv;
  std::string e_gen;
  int e_n = 0;
  int e_r = 0;
  int e_m = 0;
  int e_max_card = 3;
  int e_rand_max = 10;
  int e_extra = 0;
  std::vector<int> e_p;
  bool e_weighted = false;
  std::uint64_t e_gen_seed = 0;
  exp_cmd->add_option("file", e_in, "instance file (.hgr)");
  exp_cmd->add_option("--in", e_in, "instance file (.hgr)");
  exp_cmd->add_option("--meta", e_meta, "planted-cover sidecar JSON from gen");
  exp_cmd
      ->add_option("--gen", e_gen,
                   "generate the instance inline: instance1 | instance2 | random")
      ->check(CLI::IsMember({"instance1", "instance2", "random"}));
  exp_cmd->add_option("--n", e_n, "generator: vertex count");
  exp_cmd->add_option("--r", e_r, "generator: uniform cardinality (instance1)");
  exp_cmd->add_option("--rand-max", e_rand_max,
                      "generator: largest non-planted weight (instance1, default 10)");
  exp_cmd->add_option("--p", e_p, "generator: cardinality sequence (instance2)");
  exp_cmd->add_option("--extra", e_extra,
                      "generator: edges beyond the planted cover (instance2, default 0)");
  exp_cmd->add_option("--m", e_m, "generator: edge count (random)");
  exp_cmd->add_option("--max-card", e_max_card,
                      "generator: largest edge cardinality (random, default 3)");
  exp_cmd->add_flag("--weighted", e_weighted, "generator: integer weights in [1, 10] (random)");
  exp_cmd->add_option("--gen-seed", e_gen_seed, "generator seed when --gen is used (default 0)");
  exp_cmd
      ->add_option("--mode", e_mode,
                   "optimization_time | construction_probability | adversarial_t1")
      ->required()
      ->check(CLI::IsMember(
          {"optimization_time", "construction_probability", "adversarial_t1"}));
  exp_cmd->add_option("--alpha", e_alphas, "pheromone exponent grid (default 1)");
  exp_cmd->add_option("--beta", e_betas,
                      "heuristic exponent grid; 'auto' = ceil(beta_star) from --meta");
  exp_cmd->add_option("--pher-high", e_highs, "pheromone high levels, zipped with --pher-low");
  exp_cmd->add_option("--pher-low", e_lows, "pheromone low levels, zipped with --pher-high");
  exp_cmd->add_option("--trials", e_trials, "trials per grid point (default 1000)");
  exp_cmd->add_option("--max-iters", e_max_iters,
                      "per-trial iteration budget (default 100000, capped at 10^7)");
  auto* e_seed_opt = exp_cmd->add_option("--seed", e_seed, "master seed (default 0)");
  exp_cmd->add_flag("--serial", e_serial, "run trials on one thread");
  exp_cmd->add_option("--out", e_out, "write the report JSON here instead of stdout");
  exp_cmd->add_option("--csv", e_csv, "write per-trial CSV <prefix>.<grid-index>.csv");
  exp_cmd->callback([&] {
    require_explicit_seed(strict, e_seed_opt);
    if (e_highs.size() != e_lows.size()) {
      throw CLI::ValidationError("--pher-high and --pher-low must pair up");
    }
    if (e_in.empty() == e_gen.empty()) {
      throw CLI::ValidationError("give exactly one of an instance file or --gen KIND");
    }
    ExperimentSpec spec;
    if (e_gen == "instance1") {
      if (e_n <= 0 || e_r <= 0) {
        throw CLI::ValidationError("--gen instance1 needs --n and --r");
      }
      PlantedInstance gi = gen_instance1(e_n, e_r, e_gen_seed, e_rand_max);
      spec.instance = gi.hypergraph;
      spec.planted =
          PlantedMeta{gi.planted_cover, gi.k, gi.eta_prime_min, gi.eta_1_max, gi.beta_star};
    } else if (e_gen == "instance2") {
      if (e_n <= 0 || e_p.empty()) {
        throw CLI::ValidationError("--gen instance2 needs --n and --p");
      }
      PlantedInstance gi = gen_instance2(e_n, e_p, e_extra, e_gen_seed);
      spec.instance = gi.hypergraph;
      spec.planted =
          PlantedMeta{gi.planted_cover, gi.k, gi.eta_prime_min, gi.eta_1_max, gi.beta_star};
    } else if (e_gen == "random") {
      if (e_n <= 0 || e_m <= 0) {
        throw CLI::ValidationError("--gen random needs --n and --m");
      }
      spec.instance = gen_random(e_n, e_m, e_max_card, e_weighted, e_gen_seed);
    } else {
      spec.instance = read_hgr_file(e_in);
      if (!e_meta.empty()) {
        std::ifstream meta_file(e_meta);
        if (!meta_file) {
          throw Error("cannot open '" + e_meta + "' for reading");
        }
        nlohmann::json sidecar = nlohmann::json::parse(meta_file);
        spec.planted = planted_meta_from_json(sidecar);
      }
    }
    std::vector<double> betas;
    betas.reserve(e_betas.size());
    for (const std::string& tok : e_betas) {
      betas.push_back(parse_beta_value(tok, spec.planted));
    }
    std::vector<std::pair<double, double>> levels;
    for (size_t i = 0; i < e_highs.size(); ++i) {
      levels.emplace_back(e_highs[i], e_lows[i]);
    }
    spec.configs = expand_grid(e_alphas, betas, levels, e_max_iters);
    spec.trials = e_trials;
    spec.mode = parse_mode(e_mode);
    spec.master_seed = e_seed;
    std::vector<ExperimentReport> reports =
        run_experiment(spec, e_serial ? Parallelism::Serial : Parallelism::Parallel);
    if (!e_csv.empty()) {
      for (size_t i = 0; i < reports.size(); ++i) {
        std::string path = e_csv + "." + std::to_string(i + 1) + ".csv";
        std::ofstream file(path);
        if (!file) {
          throw Error("cannot open '" + path + "' for writing");
        }
        write_trials_csv(file, reports[i]);
      }
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const ExperimentReport& r : reports) {
      arr.push_back(to_json(r));
    }
    emit_json(arr, e_out, out);
  });

  // --- validate ----------------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  std::string v_in;
  validate_cmd->add_option("file", v_in, "instance file (.hgr)");
  validate_cmd->add_option("--in", v_in, "instance file (.hgr)");
  validate_cmd->callback([&] {
    if (v_in.empty()) {
      throw CLI::ValidationError("an instance file is required (positional or --in)");
    }
    Hypergraph h = read_hgr_file(v_in);
    if (auto verr = validate(h)) {
      out << "invalid: " << verr->message() << "\n";
      rc = kExitDomain;
      return;
    }
    out << "valid\n";
  });

  // --- parse and dispatch --------------------------------------------------
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hyperaco");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return rc;
}

}  // namespace hyperaco
