#include "hyperaco/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hyperaco {

std::string ValidationError::message() const {
  switch (kind) {
    case Kind::UncoveredVertex:
      return "vertex " + std::to_string(id) + " lies in no edge";
    case Kind::NonPositiveWeight:
      return "edge " + std::to_string(id) + " has non-positive weight";
    case Kind::EmptyEdge:
      return "edge " + std::to_string(id) + " is empty";
    case Kind::DuplicateVertex:
      return "edge " + std::to_string(id) + " repeats a vertex";
    case Kind::VertexOutOfRange:
      return "edge " + std::to_string(id) + " contains a vertex id out of range";
    case Kind::NoEdges:
      return "hypergraph has no edges";
  }
  return "unknown validation error";
}

Hypergraph::Hypergraph(int vertex_count, std::vector<Hyperedge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  degree_.assign(vertex_count_ > 0 ? static_cast<size_t>(vertex_count_) : 0, 0);
  for (Hyperedge& e : edges_) {
    std::sort(e.vertices.begin(), e.vertices.end());
    VertexId prev = 0;  // ids are >= 1 in-range, so 0 never matches
    for (VertexId v : e.vertices) {
      if (v >= 1 && v <= vertex_count_ && v != prev) {
        ++degree_[static_cast<size_t>(v) - 1];
      }
      prev = v;
    }
  }
}

std::optional<ValidationError> validate(const Hypergraph& h) {
  using Kind = ValidationError::Kind;
  if (h.edge_count() == 0) {
    return ValidationError{Kind::NoEdges, 0};
  }
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    const Hyperedge& e = h.edge(id);
    if (e.vertices.empty()) {
      return ValidationError{Kind::EmptyEdge, id};
    }
    for (VertexId v : e.vertices) {
      if (v < 1 || v > h.vertex_count()) {
        return ValidationError{Kind::VertexOutOfRange, id};
      }
    }
    for (size_t i = 1; i < e.vertices.size(); ++i) {
      if (e.vertices[i] == e.vertices[i - 1]) {
        return ValidationError{Kind::DuplicateVertex, id};
      }
    }
    if (!(e.weight > 0.0)) {  // also rejects NaN
      return ValidationError{Kind::NonPositiveWeight, id};
    }
  }
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    if (h.degree(v) == 0) {
      return ValidationError{Kind::UncoveredVertex, v};
    }
  }
  return std::nullopt;
}

void require_valid(const Hypergraph& h) {
  if (auto err = validate(h)) {
    throw InvalidHypergraphError(err->message());
  }
}

VertexSet pendant_vertices(const Hypergraph& h) {
  VertexSet out;
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    if (h.degree(v) == 1) {
      out.push_back(v);
    }
  }
  return out;
}

EdgeSet forced_edges(const Hypergraph& h) {
  EdgeSet out;
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    const Hyperedge& e = h.edge(id);
    bool forced = std::any_of(e.vertices.begin(), e.vertices.end(),
                              [&](VertexId v) { return h.degree(v) == 1; });
    if (forced) {
      out.push_back(id);
    }
  }
  return out;
}

bool is_edge_cover(const Hypergraph& h, const EdgeSet& t) {
  std::vector<char> covered(static_cast<size_t>(h.vertex_count()) + 1, 0);
  for (EdgeId id : t) {
    for (VertexId v : h.edge(id).vertices) {
      covered[static_cast<size_t>(v)] = 1;
    }
  }
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    if (!covered[static_cast<size_t>(v)]) {
      return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Hypergraph& h, const VertexSet& s) {
  for (const Hyperedge& e : h.edges()) {
    bool hit = std::any_of(e.vertices.begin(), e.vertices.end(),
                           [&](VertexId v) { return set_contains(s, v); });
    if (!hit) {
      return false;
    }
  }
  return true;
}

bool is_weak_independent(const Hypergraph& h, const VertexSet& i) {
  for (const Hyperedge& e : h.edges()) {
    if (is_subset(e.vertices, i)) {
      return false;
    }
  }
  return true;
}

bool is_strong_independent(const Hypergraph& h, const VertexSet& i) {
  for (const Hyperedge& e : h.edges()) {
    int inside = 0;
    for (VertexId v : e.vertices) {
      inside += set_contains(i, v) ? 1 : 0;
    }
    if (inside > 1) {
      return false;
    }
  }
  return true;
}

namespace {

Hypergraph dual_impl(const Hypergraph& h, const double* vertex_weights) {
  std::vector<Hyperedge> dual_edges(static_cast<size_t>(h.vertex_count()));
  for (VertexId v = 1; v <= h.vertex_count(); ++v) {
    dual_edges[static_cast<size_t>(v) - 1].weight =
        vertex_weights != nullptr ? vertex_weights[v - 1] : 1.0;
  }
  for (EdgeId id = 1; id <= h.edge_count(); ++id) {
    for (VertexId v : h.edge(id).vertices) {
      if (v >= 1 && v <= h.vertex_count()) {
        dual_edges[static_cast<size_t>(v) - 1].vertices.push_back(id);
      }
    }
  }
  return Hypergraph(h.edge_count(), std::move(dual_edges));
}

}  // namespace

Hypergraph dual(const Hypergraph& h) { return dual_impl(h, nullptr); }

Hypergraph dual(const Hypergraph& h, std::span<const double> vertex_weights) {
  if (static_cast<int>(vertex_weights.size()) != h.vertex_count()) {
    throw InvalidHypergraphError("vertex weight count does not match vertex count");
  }
  return dual_impl(h, vertex_weights.data());
}

double fitness(const Hypergraph& h, const EdgeSet& x) {
  double total = 0.0;
  for (EdgeId id : x) {
    total += h.edge(id).weight;
  }
  return total;
}

}  // namespace hyperaco
