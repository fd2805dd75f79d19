#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperaco/hypergraph.hpp"

namespace hyperaco {

/// A generated instance together with its planted optimal cover S and the
/// eta-separation quantities the bound evaluators take as inputs.
struct PlantedInstance {
  Hypergraph hypergraph;
  EdgeSet planted_cover;  // the set S
  int k = 0;              // |S|
  double eta_prime_min = 0.0;  // min eta over S
  double eta_1_max = 0.0;      // max eta outside S; 0 when S = E
  std::optional<double> beta_star;  // present iff eta_prime_min > eta_1_max and k < m
};

/// Weighted complete r-uniform hypergraph with floor(n/r) disjoint planted
/// unit edges, one extra unit edge containing the leftover vertices, and
/// integer weights uniform in [2, rand_max] on everything else. The extra
/// edge is added even when r divides n, so k = floor(n/r) + 1 always.
/// Throws InstanceTooLargeError if C(n,r) > 2^16 and GenerationError if the
/// pool cannot supply k distinct planted edges.
PlantedInstance gen_instance1(int n, int r, std::uint64_t seed, int rand_max);

/// Unweighted hypergraph built by drawing edges of the given sizes inside the
/// uncovered region until it is exhausted (the planted cover, set Psi), then
/// `extra_edges` further distinct edges whose sizes continue the tail of the
/// sequence. p_sequence must be non-increasing with every entry in [2, n];
/// the last entry repeats once the sequence runs out.
PlantedInstance gen_instance2(int n, const std::vector<int>& p_sequence, int extra_edges,
                              std::uint64_t seed);

/// m random edges with cardinalities uniform in [1, max_card]; any vertex
/// left uncovered is injected into a random edge afterwards. Weights are
/// integers uniform in [1, 10] when weighted, else 1.
Hypergraph gen_random(int n, int m, int max_card, bool weighted, std::uint64_t seed);

/// C(n, r) without overflow for the guard check; saturates at int64 max.
std::int64_t binomial(int n, int r);

}  // namespace hyperaco
