#pragma once

#include <cstdint>
#include <vector>

#include "hyperaco/hypergraph.hpp"

namespace hyperaco {

/// Exhaustive ground truth at desk scale. Plain enumeration on purpose:
/// clarity is this module's job, not speed.
struct OracleResult {
  double optimum_value = 0.0;
  std::vector<int> witness;  // edge ids or vertex ids, sorted; lexicographically
                             // smallest optimum for reproducibility
  std::int64_t optima_count = 0;
};

inline constexpr int kMaxEnumerationBits = 24;

/// Minimum-weight edge cover over all 2^m subsets. Throws
/// InstanceTooLargeError if m > 24.
OracleResult min_weight_edge_cover(const Hypergraph& h);

/// Minimum-cardinality vertex cover over all vertex subsets (n <= 24).
OracleResult min_vertex_cover(const Hypergraph& h);

/// Maximum-cardinality weak-independent set (n <= 24).
OracleResult max_weak_independent_set(const Hypergraph& h);

}  // namespace hyperaco
