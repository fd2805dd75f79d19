#include "hyperaco/reductions.hpp"

#include <algorithm>
#include <cassert>

namespace hyperaco {

namespace {

// Edge j of dual(h) is incident to exactly the dual vertices (= edges of h)
// that vertex j of h belongs to, so dual edge ids map back to vertex ids of h
// by identity. A dual edge cover is therefore a vertex cover of h.
ReductionResult cover_via_dual(const Hypergraph& h, const Hypergraph& d,
                               const SolverConfig& cfg) {
  SolveResult r = solve(d, cfg);
  assert(is_vertex_cover(h, r.best_edges));
  (void)h;
  return ReductionResult{r.best_edges, r.best_fitness, r.iterations_run, r.iteration_found};
}

}  // namespace

ReductionResult solve_vertex_cover(const Hypergraph& h, const SolverConfig& cfg) {
  require_valid(h);
  return cover_via_dual(h, dual(h), cfg);
}

ReductionResult solve_vertex_cover(const Hypergraph& h, const SolverConfig& cfg,
                                   std::span<const double> vertex_weights) {
  require_valid(h);
  return cover_via_dual(h, dual(h, vertex_weights), cfg);
}

ReductionResult solve_weak_independent_set(const Hypergraph& h, const SolverConfig& cfg) {
  ReductionResult cover = solve_vertex_cover(h, cfg);
  ReductionResult out;
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    if (!set_contains(cover.vertices, v)) {
      out.vertices.push_back(v);
    }
  }
  out.value = static_cast<double>(out.vertices.size());
  out.iterations_run = cover.iterations_run;
  out.iteration_found = cover.iteration_found;
  return out;
}

}  // namespace hyperaco
