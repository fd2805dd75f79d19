#pragma once

#include <cstdint>
#include <span>

#include "hyperaco/hypergraph.hpp"
#include "hyperaco/solver.hpp"

namespace hyperaco {

/// Result of a reduction-based solve; the witness lives in the original
/// hypergraph's vertex space.
struct ReductionResult {
  VertexSet vertices;
  double value = 0.0;  // |cover| resp. n - |cover| (weighted sum if weighted)
  std::int64_t iterations_run = 0;
  std::int64_t iteration_found = 0;
};

/// Minimum vertex cover: runs the edge-cover solver on the unweighted dual
/// and maps dual edge ids back to vertex ids (the bijection is the identity
/// on indices). Pass vertex_weights for the weighted variant.
ReductionResult solve_vertex_cover(const Hypergraph& h, const SolverConfig& cfg);
ReductionResult solve_vertex_cover(const Hypergraph& h, const SolverConfig& cfg,
                                   std::span<const double> vertex_weights);

/// Maximum weak-independent set: complement of the vertex cover.
ReductionResult solve_weak_independent_set(const Hypergraph& h, const SolverConfig& cfg);

}  // namespace hyperaco
