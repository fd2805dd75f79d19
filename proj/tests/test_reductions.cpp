#include "hyperaco/reductions.hpp"

#include <vector>

#include "doctest.h"
#include "hyperaco/instance_gen.hpp"
#include "hyperaco/oracle.hpp"
#include "hyperaco/rng.hpp"

using namespace hyperaco;

namespace {

Hypergraph triangle() {
  return Hypergraph(3, {Hyperedge{{1, 2}}, Hyperedge{{2, 3}}, Hyperedge{{1, 3}}});
}

SolverConfig budget(std::int64_t iters, std::uint64_t seed = 0) {
  SolverConfig cfg;
  cfg.max_iterations = iters;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("vertex cover on the triangle") {
  ReductionResult r = solve_vertex_cover(triangle(), budget(10000));
  CHECK(r.value == 2.0);
  CHECK(r.vertices.size() == 2);
  CHECK(is_vertex_cover(triangle(), r.vertices));
}

TEST_CASE("vertex cover on a single edge") {
  Hypergraph h(3, {Hyperedge{{1, 2, 3}}});
  ReductionResult r = solve_vertex_cover(h, budget(100));
  CHECK(r.value == 1.0);
  CHECK(r.vertices.size() == 1);
  CHECK(is_vertex_cover(h, r.vertices));
}

TEST_CASE("weak independent set complements the cover") {
  ReductionResult tri = solve_weak_independent_set(triangle(), budget(10000));
  CHECK(tri.value == 1.0);
  CHECK(tri.vertices.size() == 1);
  CHECK(is_weak_independent(triangle(), tri.vertices));

  Hypergraph single(3, {Hyperedge{{1, 2, 3}}});
  ReductionResult s = solve_weak_independent_set(single, budget(100));
  CHECK(s.value == 2.0);
  CHECK(s.vertices.size() == 2);
  CHECK(is_weak_independent(single, s.vertices));
}

TEST_CASE("reductions match the direct oracles on random instances") {
  Rng rng(4242);
  int tested = 0;
  for (int it = 0; tested < 12 && it < 60; ++it) {
    int n = 3 + static_cast<int>(rng.below(6));  // n <= 8
    int m = 2 + static_cast<int>(rng.below(7));
    Hypergraph h = gen_random(n, m, 3, false, rng.next_u64());
    if (validate(h)) {
      continue;
    }
    ++tested;
    SolverConfig cfg = budget(20000, rng.next_u64());
    ReductionResult vc = solve_vertex_cover(h, cfg);
    ReductionResult ws = solve_weak_independent_set(h, cfg);
    OracleResult direct = min_vertex_cover(h);

    CHECK(vc.value == direct.optimum_value);
    CHECK(is_vertex_cover(h, vc.vertices));
    CHECK(is_weak_independent(h, ws.vertices));
    // Complementarity of the reduction pair.
    CHECK(vc.value + ws.value == static_cast<double>(n));
  }
  CHECK(tested == 12);
}

TEST_CASE("weighted vertex cover carries vertex weights through the dual") {
  // Star with an expensive center: cardinality-wise {1} wins, weight-wise
  // the two leaves do.
  Hypergraph h(3, {Hyperedge{{1, 2}}, Hyperedge{{1, 3}}});
  ReductionResult plain = solve_vertex_cover(h, budget(5000));
  CHECK(plain.value == 1.0);
  CHECK(plain.vertices == VertexSet{1});

  std::vector<double> vw{10.0, 1.0, 1.0};
  ReductionResult weighted = solve_vertex_cover(h, budget(5000), vw);
  CHECK(weighted.value == 2.0);
  CHECK(weighted.vertices == VertexSet{2, 3});
}

TEST_CASE("reduction results carry solver bookkeeping") {
  ReductionResult r = solve_vertex_cover(triangle(), budget(500, 7));
  CHECK(r.iterations_run >= 1);
  CHECK(r.iterations_run <= 500);
  CHECK(r.iteration_found >= 1);
  CHECK(r.iteration_found <= r.iterations_run);
}
