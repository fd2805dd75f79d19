#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperaco/errors.hpp"

namespace hyperaco {

using VertexId = int;  // 1-based, dense 1..n
using EdgeId = int;    // 1-based, dense 1..m (position in the edge list)

/// Sorted ascending, no duplicates. Plain vectors keep iteration order
/// deterministic, which the solver's reproducibility contract depends on.
using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<EdgeId>;

/// Sort + dedupe in place.
template <typename T>
void normalize_set(std::vector<T>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

template <typename T>
bool set_contains(const std::vector<T>& sorted_ids, T id) {
  return std::binary_search(sorted_ids.begin(), sorted_ids.end(), id);
}

/// a ⊆ b, both sorted.
template <typename T>
bool is_subset(const std::vector<T>& a, const std::vector<T>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct Hyperedge {
  VertexSet vertices;  // sorted on Hypergraph construction; duplicates kept for validate()
  double weight = 1.0;

  int cardinality() const { return static_cast<int>(vertices.size()); }
};

struct ValidationError {
  enum class Kind {
    UncoveredVertex,    // some vertex lies in no edge
    NonPositiveWeight,  // w(e) <= 0
    EmptyEdge,          // edge with no vertices
    DuplicateVertex,    // repeated vertex inside one edge
    VertexOutOfRange,   // id outside 1..n
    NoEdges,            // m = 0
  };
  Kind kind;
  int id = 0;  // offending vertex id or edge id, by kind
  std::string message() const;
};

/// Immutable edge-weighted hypergraph on vertices 1..n. Edge ids are the
/// 1-based positions in the edge list. Construction sorts each edge's vertex
/// list but performs no validation; call validate() for that, so that invalid
/// inputs are representable and reportable.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<Hyperedge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Hyperedge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id) - 1]; }
  std::span<const Hyperedge> edges() const { return edges_; }

  /// Number of edges containing v. Meaningful only for valid graphs.
  int degree(VertexId v) const { return degree_[static_cast<size_t>(v) - 1]; }

 private:
  int vertex_count_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<int> degree_;  // per vertex, ids clamped into range
};

/// First invariant violation in deterministic order (edge checks by id, then
/// uncovered vertices ascending), or nullopt if the graph is valid.
std::optional<ValidationError> validate(const Hypergraph& h);

/// Throws InvalidHypergraphError if validate() reports anything.
void require_valid(const Hypergraph& h);

/// Vertices of degree exactly 1.
VertexSet pendant_vertices(const Hypergraph& h);

/// Edges containing at least one pendant vertex; forced into every cover.
EdgeSet forced_edges(const Hypergraph& h);

bool is_edge_cover(const Hypergraph& h, const EdgeSet& t);
bool is_vertex_cover(const Hypergraph& h, const VertexSet& s);
bool is_weak_independent(const Hypergraph& h, const VertexSet& i);
bool is_strong_independent(const Hypergraph& h, const VertexSet& i);

/// Dual hypergraph: vertex j of the dual is edge j of h, edge i of the dual is
/// { j : vertex i ∈ edge j of h }. Dual edges get weight 1; pass vertex_weights
/// (one per vertex of h) to carry vertex weights onto the dual's edges instead.
Hypergraph dual(const Hypergraph& h);
Hypergraph dual(const Hypergraph& h, std::span<const double> vertex_weights);

/// Sum of w(e) over x. Feasibility is the caller's concern.
double fitness(const Hypergraph& h, const EdgeSet& x);

}  // namespace hyperaco
