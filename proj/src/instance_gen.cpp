#include "hyperaco/instance_gen.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperaco/bounds.hpp"
#include "hyperaco/errors.hpp"
#include "hyperaco/rng.hpp"

namespace hyperaco {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) {
    return 0;
  }
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(acc);
}

namespace {

constexpr std::int64_t kMaxPoolEdges = 1 << 16;

/// First r-combination of {1..n} in lexicographic order.
std::vector<int> first_combination(int r) {
  std::vector<int> comb(static_cast<size_t>(r));
  std::iota(comb.begin(), comb.end(), 1);
  return comb;
}

/// Advance to the next combination; false once exhausted.
bool next_combination(std::vector<int>& comb, int n) {
  int r = static_cast<int>(comb.size());
  for (int i = r - 1; i >= 0; --i) {
    if (comb[static_cast<size_t>(i)] < n - (r - 1 - i)) {
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < r; ++j) {
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

/// `count` distinct elements of `pool`, chosen by partial Fisher-Yates,
/// returned sorted. Consumes exactly `count` RNG draws.
std::vector<int> sample_distinct(std::vector<int> pool, int count, Rng& rng) {
  for (int i = 0; i < count; ++i) {
    size_t j = static_cast<size_t>(i) +
               static_cast<size_t>(rng.below(pool.size() - static_cast<size_t>(i)));
    std::swap(pool[static_cast<size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::optional<double> try_beta_star(int m, int k, double eta_prime_min, double eta_1_max) {
  try {
    return beta_star(m, k, eta_prime_min, eta_1_max);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

PlantedInstance gen_instance1(int n, int r, std::uint64_t seed, int rand_max) {
  if (r < 2) {
    throw GenerationError("uniform cardinality r must be at least 2");
  }
  if (n < r) {
    throw GenerationError("need at least r vertices");
  }
  if (rand_max < 2) {
    throw GenerationError("rand_max must be at least 2");
  }
  if (binomial(n, r) > kMaxPoolEdges) {
    throw InstanceTooLargeError("complete r-uniform pool exceeds " +
                                std::to_string(kMaxPoolEdges) + " edges");
  }

  const int q = n / r;
  std::set<VertexSet> planted_sets;
  for (int i = 0; i < q; ++i) {
    VertexSet block(static_cast<size_t>(r));
    std::iota(block.begin(), block.end(), i * r + 1);
    planted_sets.insert(std::move(block));
  }
  // The one extra unit edge covering the leftover vertices; with no leftover
  // it is the lexicographically first subset not already planted.
  VertexSet extra;
  for (int v = q * r + 1; v <= n; ++v) {
    extra.push_back(v);
  }
  if (extra.empty()) {
    VertexSet comb = first_combination(r);
    bool found = false;
    do {
      if (!planted_sets.count(comb)) {
        extra = comb;
        found = true;
        break;
      }
    } while (next_combination(comb, n));
    if (!found) {
      throw GenerationError("edge pool too small for a distinct extra unit edge");
    }
  } else {
    for (int v = 1; static_cast<int>(extra.size()) < r; ++v) {
      extra.push_back(v);
    }
    std::sort(extra.begin(), extra.end());
  }
  planted_sets.insert(extra);

  Rng rng = Rng::stream(seed, 0);
  std::vector<Hyperedge> edges;
  EdgeSet planted_ids;
  double min_other_weight = 0.0;
  VertexSet comb = first_combination(r);
  EdgeId id = 1;
  do {
    Hyperedge e;
    e.vertices = comb;
    if (planted_sets.count(comb)) {
      e.weight = 1.0;
      planted_ids.push_back(id);
    } else {
      e.weight = static_cast<double>(rng.uniform_int(2, rand_max));
      if (min_other_weight == 0.0 || e.weight < min_other_weight) {
        min_other_weight = e.weight;
      }
    }
    edges.push_back(std::move(e));
    ++id;
  } while (next_combination(comb, n));

  PlantedInstance inst{Hypergraph(n, std::move(edges)), std::move(planted_ids), 0, 0.0, 0.0,
                       std::nullopt};
  inst.k = static_cast<int>(inst.planted_cover.size());
  inst.eta_prime_min = static_cast<double>(r);  // unit weight, cardinality r
  inst.eta_1_max =
      min_other_weight > 0.0 ? static_cast<double>(r) / min_other_weight : 0.0;
  inst.beta_star = try_beta_star(inst.hypergraph.edge_count(), inst.k, inst.eta_prime_min,
                                 inst.eta_1_max);
  return inst;
}

PlantedInstance gen_instance2(int n, const std::vector<int>& p_sequence, int extra_edges,
                              std::uint64_t seed) {
  if (n < 2) {
    throw GenerationError("need at least two vertices");
  }
  if (extra_edges < 0) {
    throw GenerationError("extra edge count must be nonnegative");
  }
  if (p_sequence.empty()) {
    throw InvalidSequenceError("cardinality sequence must be nonempty");
  }
  for (size_t i = 0; i < p_sequence.size(); ++i) {
    if (p_sequence[i] < 2 || p_sequence[i] > n) {
      throw InvalidSequenceError("cardinality " + std::to_string(p_sequence[i]) +
                                 " outside [2, " + std::to_string(n) + "]");
    }
    if (i > 0 && p_sequence[i] > p_sequence[i - 1]) {
      throw InvalidSequenceError("cardinality sequence must be non-increasing");
    }
  }
  auto seq = [&](int i) {
    size_t idx = std::min(static_cast<size_t>(i), p_sequence.size() - 1);
    return p_sequence[idx];
  };

  Rng rng = Rng::stream(seed, 0);
  VertexSet uncovered(static_cast<size_t>(n));
  std::iota(uncovered.begin(), uncovered.end(), 1);
  VertexSet covered;
  std::vector<Hyperedge> edges;
  std::set<VertexSet> used;

  // Cover phase: each drawn edge lives inside the uncovered region while it
  // fits, and the closing edge swallows the whole remainder.
  int step = 0;
  while (!uncovered.empty()) {
    int p = seq(step);
    VertexSet verts;
    if (p <= static_cast<int>(uncovered.size())) {
      verts = sample_distinct(uncovered, p, rng);
    } else {
      verts = uncovered;
      VertexSet fill = sample_distinct(covered, p - static_cast<int>(uncovered.size()), rng);
      verts.insert(verts.end(), fill.begin(), fill.end());
      std::sort(verts.begin(), verts.end());
    }
    VertexSet remaining;
    for (VertexId v : uncovered) {
      if (set_contains(verts, v)) {
        covered.push_back(v);
      } else {
        remaining.push_back(v);
      }
    }
    std::sort(covered.begin(), covered.end());
    uncovered = std::move(remaining);
    used.insert(verts);
    edges.push_back(Hyperedge{std::move(verts), 1.0});
    ++step;
  }
  const int k = step;

  VertexSet all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int j = 0; j < extra_edges; ++j) {
    int p = seq(k + j);
    bool placed = false;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      VertexSet verts = sample_distinct(all, p, rng);
      if (used.insert(verts).second) {
        edges.push_back(Hyperedge{std::move(verts), 1.0});
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw GenerationError("cannot draw a distinct extra edge of cardinality " +
                            std::to_string(p));
    }
  }

  PlantedInstance inst{Hypergraph(n, std::move(edges)), {}, k, 0.0, 0.0, std::nullopt};
  for (EdgeId id = 1; id <= k; ++id) {
    inst.planted_cover.push_back(id);
  }
  double min_planted = static_cast<double>(n + 1);
  for (EdgeId id = 1; id <= k; ++id) {
    min_planted = std::min(min_planted,
                           static_cast<double>(inst.hypergraph.edge(id).cardinality()));
  }
  double max_other = 0.0;
  for (EdgeId id = k + 1; id <= inst.hypergraph.edge_count(); ++id) {
    max_other = std::max(max_other,
                         static_cast<double>(inst.hypergraph.edge(id).cardinality()));
  }
  inst.eta_prime_min = min_planted;  // unit weights: eta is the cardinality
  inst.eta_1_max = max_other;
  inst.beta_star = try_beta_star(inst.hypergraph.edge_count(), inst.k, inst.eta_prime_min,
                                 inst.eta_1_max);
  return inst;
}

Hypergraph gen_random(int n, int m, int max_card, bool weighted, std::uint64_t seed) {
  if (n < 1 || m < 1) {
    throw GenerationError("need at least one vertex and one edge");
  }
  if (max_card < 1 || max_card > n) {
    throw GenerationError("max cardinality must lie in [1, n]");
  }
  Rng rng = Rng::stream(seed, 0);
  VertexSet all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  std::vector<Hyperedge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int c = static_cast<int>(rng.uniform_int(1, max_card));
    Hyperedge e;
    e.vertices = sample_distinct(all, c, rng);
    e.weight = weighted ? static_cast<double>(rng.uniform_int(1, 10)) : 1.0;
    edges.push_back(std::move(e));
  }
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const Hyperedge& e : edges) {
    for (VertexId v : e.vertices) {
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (!seen[static_cast<size_t>(v)]) {
      size_t target = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(m)));
      edges[target].vertices.push_back(v);
      normalize_set(edges[target].vertices);
    }
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hyperaco
