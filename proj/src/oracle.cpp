#include "hyperaco/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "hyperaco/errors.hpp"

namespace hyperaco {

namespace {

std::vector<int> mask_to_ids(std::uint32_t mask) {
  std::vector<int> ids;
  for (int b = 0; b < 32; ++b) {
    if (mask & (1u << b)) {
      ids.push_back(b + 1);
    }
  }
  return ids;
}

/// Sorted-sequence lexicographic order on id sets encoded as bitmasks.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  std::vector<int> av = mask_to_ids(a);
  std::vector<int> bv = mask_to_ids(b);
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

}  // namespace

OracleResult min_weight_edge_cover(const Hypergraph& h) {
  require_valid(h);
  const int m = h.edge_count();
  const int n = h.vertex_count();
  if (m > kMaxEnumerationBits) {
    throw InstanceTooLargeError("edge cover enumeration limited to " +
                                std::to_string(kMaxEnumerationBits) + " edges, got " +
                                std::to_string(m));
  }
  const size_t blocks = (static_cast<size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> edge_mask(static_cast<size_t>(m) * blocks, 0);
  for (EdgeId id = 1; id <= m; ++id) {
    for (VertexId v : h.edge(id).vertices) {
      size_t bit = static_cast<size_t>(v) - 1;
      edge_mask[(static_cast<size_t>(id) - 1) * blocks + bit / 64] |= 1ull << (bit % 64);
    }
  }
  std::vector<std::uint64_t> full(blocks, 0);
  for (int v = 0; v < n; ++v) {
    full[static_cast<size_t>(v) / 64] |= 1ull << (v % 64);
  }

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  std::int64_t count = 0;
  std::vector<std::uint64_t> acc(blocks);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    double weight = 0.0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      weight += h.edge(std::countr_zero(bits) + 1).weight;
    }
    if (weight > best) {
      continue;
    }
    std::fill(acc.begin(), acc.end(), 0ull);
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      size_t e = static_cast<size_t>(std::countr_zero(bits));
      for (size_t blk = 0; blk < blocks; ++blk) {
        acc[blk] |= edge_mask[e * blocks + blk];
      }
    }
    if (acc != full) {
      continue;
    }
    if (weight < best) {
      best = weight;
      best_mask = mask;
      count = 1;
    } else {  // exact tie; weights are expected to be integers so + is exact
      ++count;
      if (lex_less(mask, best_mask)) {
        best_mask = mask;
      }
    }
  }
  return OracleResult{best, mask_to_ids(best_mask), count};
}

OracleResult min_vertex_cover(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxEnumerationBits) {
    throw InstanceTooLargeError("vertex cover enumeration limited to " +
                                std::to_string(kMaxEnumerationBits) + " vertices, got " +
                                std::to_string(n));
  }
  if (h.edge_count() == 0) {
    return OracleResult{0.0, {}, 1};
  }
  std::vector<std::uint32_t> edge_mask;
  edge_mask.reserve(static_cast<size_t>(h.edge_count()));
  for (const Hyperedge& e : h.edges()) {
    std::uint32_t mask = 0;
    for (VertexId v : e.vertices) {
      if (v >= 1 && v <= n) {
        mask |= 1u << (v - 1);
      }
    }
    edge_mask.push_back(mask);
  }

  int best = n + 1;
  std::uint32_t best_mask = 0;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size > best) {
      continue;
    }
    bool covers = std::all_of(edge_mask.begin(), edge_mask.end(),
                              [&](std::uint32_t e) { return (e & mask) != 0; });
    if (!covers) {
      continue;
    }
    if (size < best) {
      best = size;
      best_mask = mask;
      count = 1;
    } else {
      ++count;
      if (lex_less(mask, best_mask)) {
        best_mask = mask;
      }
    }
  }
  if (count == 0) {
    throw InvalidHypergraphError("no vertex cover exists (empty edge present)");
  }
  return OracleResult{static_cast<double>(best), mask_to_ids(best_mask), count};
}

OracleResult max_weak_independent_set(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxEnumerationBits) {
    throw InstanceTooLargeError("independent set enumeration limited to " +
                                std::to_string(kMaxEnumerationBits) + " vertices, got " +
                                std::to_string(n));
  }
  // Edges with a vertex outside 1..n can never be contained in a candidate
  // set, so they impose no constraint here.
  std::vector<std::uint32_t> edge_mask;
  for (const Hyperedge& e : h.edges()) {
    std::uint32_t mask = 0;
    bool out_of_range = false;
    for (VertexId v : e.vertices) {
      if (v >= 1 && v <= n) {
        mask |= 1u << (v - 1);
      } else {
        out_of_range = true;
      }
    }
    if (!out_of_range) {
      edge_mask.push_back(mask);
    }
  }

  int best = -1;
  std::uint32_t best_mask = 0;
  std::int64_t count = 0;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size < best) {
      continue;
    }
    bool independent = std::none_of(edge_mask.begin(), edge_mask.end(), [&](std::uint32_t e) {
      return (e & ~mask) == 0;  // edge fully inside the candidate set
    });
    if (!independent) {
      continue;
    }
    if (size > best) {
      best = size;
      best_mask = mask;
      count = 1;
    } else {
      ++count;
      if (lex_less(mask, best_mask)) {
        best_mask = mask;
      }
    }
  }
  if (count == 0) {
    throw InvalidHypergraphError("no weak-independent set exists (empty edge present)");
  }
  return OracleResult{static_cast<double>(best), mask_to_ids(best_mask), count};
}

}  // namespace hyperaco
