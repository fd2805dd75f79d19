#include "hyperaco/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "doctest.h"
#include "hyperaco/errors.hpp"
#include "hyperaco/hgr.hpp"
#include "hyperaco/oracle.hpp"
#include "hyperaco/rng.hpp"

using namespace hyperaco;

TEST_CASE("binomial is exact below saturation and saturates above") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(52, 26) == 495918532948104LL);
  CHECK(binomial(70, 35) == std::numeric_limits<std::int64_t>::max());  // saturated
}

TEST_CASE("planted uniform instance: structure for n=4, r=2") {
  PlantedInstance gi = gen_instance1(4, 2, 2, 2);
  const Hypergraph& h = gi.hypergraph;
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 6);  // complete 2-uniform pool

  // Edges are the lexicographic pair enumeration.
  CHECK(h.edge(1).vertices == VertexSet{1, 2});
  CHECK(h.edge(2).vertices == VertexSet{1, 3});
  CHECK(h.edge(3).vertices == VertexSet{1, 4});
  CHECK(h.edge(4).vertices == VertexSet{2, 3});
  CHECK(h.edge(5).vertices == VertexSet{2, 4});
  CHECK(h.edge(6).vertices == VertexSet{3, 4});

  // Plant: the two aligned blocks plus the lex-first spare pair.
  CHECK(gi.planted_cover == EdgeSet{1, 2, 6});
  CHECK(gi.k == 3);
  CHECK(is_edge_cover(h, gi.planted_cover));
  CHECK(fitness(h, gi.planted_cover) == 3.0);

  for (EdgeId e = 1; e <= 6; ++e) {
    if (set_contains(gi.planted_cover, e)) {
      CHECK(h.edge(e).weight == 1.0);
    } else {
      CHECK(h.edge(e).weight >= 2.0);
      CHECK(h.edge(e).weight <= 2.0);  // rand_max = 2 pins them
    }
  }

  // Separation quantities: planted etas are r, others r/weight.
  CHECK(gi.eta_prime_min == 2.0);
  CHECK(gi.eta_1_max == 1.0);
  REQUIRE(gi.beta_star.has_value());
  CHECK(*gi.beta_star ==
        doctest::Approx(std::log(9.0) / std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("planted uniform instance: leftover vertices join the extra edge") {
  PlantedInstance gi = gen_instance1(5, 2, 7, 9);
  const Hypergraph& h = gi.hypergraph;
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 10);
  CHECK(gi.k == 3);  // floor(5/2) blocks + the leftover edge
  CHECK(is_edge_cover(h, gi.planted_cover));
  // The blocks {1,2} and {3,4} plus {1,5} (leftover 5, padded with vertex 1).
  std::vector<VertexSet> planted_sets;
  for (EdgeId e : gi.planted_cover) {
    planted_sets.push_back(h.edge(e).vertices);
  }
  CHECK(std::find(planted_sets.begin(), planted_sets.end(), VertexSet{1, 2}) !=
        planted_sets.end());
  CHECK(std::find(planted_sets.begin(), planted_sets.end(), VertexSet{3, 4}) !=
        planted_sets.end());
  CHECK(std::find(planted_sets.begin(), planted_sets.end(), VertexSet{1, 5}) !=
        planted_sets.end());

  for (EdgeId e : gi.planted_cover) {
    CHECK(h.edge(e).weight == 1.0);
  }
  for (EdgeId e = 1; e <= h.edge_count(); ++e) {
    if (!set_contains(gi.planted_cover, e)) {
      CHECK(h.edge(e).weight >= 2.0);
      CHECK(h.edge(e).weight <= 9.0);
      CHECK(h.edge(e).weight == std::floor(h.edge(e).weight));  // integer draw
    }
  }

  // Here the plant is the unique optimum.
  OracleResult r = min_weight_edge_cover(h);
  CHECK(r.optimum_value == 3.0);
  CHECK(r.optimum_value == fitness(h, gi.planted_cover));
}

TEST_CASE("planted uniform instance: separation always holds") {
  Rng rng(2718);
  for (int it = 0; it < 20; ++it) {
    int n = 4 + static_cast<int>(rng.below(5));
    int r = 2 + static_cast<int>(rng.below(2));
    if (n <= r) {
      continue;
    }
    PlantedInstance gi = gen_instance1(n, r, rng.next_u64(), 2 + static_cast<int>(rng.below(9)));
    CHECK_FALSE(validate(gi.hypergraph).has_value());
    CHECK(gi.eta_prime_min == static_cast<double>(r));
    CHECK(gi.eta_1_max <= static_cast<double>(r) / 2.0);
    CHECK(gi.eta_1_max > 0.0);
    REQUIRE(gi.beta_star.has_value());
    CHECK(*gi.beta_star > 0.0);
    CHECK(gi.k == n / r + 1);
    CHECK(is_edge_cover(gi.hypergraph, gi.planted_cover));
  }
}

TEST_CASE("planted uniform instance: regeneration is byte-identical") {
  PlantedInstance a = gen_instance1(6, 2, 123, 7);
  PlantedInstance b = gen_instance1(6, 2, 123, 7);
  CHECK(to_hgr_string(a.hypergraph) == to_hgr_string(b.hypergraph));
  CHECK(a.planted_cover == b.planted_cover);

  PlantedInstance c = gen_instance1(6, 2, 124, 7);
  CHECK(to_hgr_string(a.hypergraph) != to_hgr_string(c.hypergraph));
}

TEST_CASE("planted uniform instance: parameter guards") {
  CHECK_THROWS_AS(gen_instance1(4, 1, 0, 5), GenerationError);   // r < 2
  CHECK_THROWS_AS(gen_instance1(3, 4, 0, 5), GenerationError);   // n < r
  CHECK_THROWS_AS(gen_instance1(4, 2, 0, 1), GenerationError);   // rand_max < 2
  CHECK_THROWS_AS(gen_instance1(2, 2, 0, 5), GenerationError);   // pool too small
  CHECK_THROWS_AS(gen_instance1(40, 10, 0, 5), InstanceTooLargeError);
}

TEST_CASE("covering-design instance: aligned case n=4, p=(2,2)") {
  PlantedInstance gi = gen_instance2(4, {2, 2}, 0, 31);
  const Hypergraph& h = gi.hypergraph;
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
  CHECK(gi.k == 2);
  CHECK(gi.planted_cover == EdgeSet{1, 2});
  CHECK(is_edge_cover(h, gi.planted_cover));
  // Two disjoint pairs partition the vertices.
  VertexSet all;
  for (EdgeId e : gi.planted_cover) {
    const VertexSet& vs = h.edge(e).vertices;
    CHECK(vs.size() == 2);
    all.insert(all.end(), vs.begin(), vs.end());
  }
  normalize_set(all);
  CHECK(all == VertexSet{1, 2, 3, 4});
  for (EdgeId e = 1; e <= h.edge_count(); ++e) {
    CHECK(h.edge(e).weight == 1.0);  // unweighted construction
  }
  // The whole edge set is planted, so there is no outside eta.
  CHECK(gi.eta_prime_min == 2.0);
  CHECK(gi.eta_1_max == 0.0);
  CHECK_FALSE(gi.beta_star.has_value());
}

TEST_CASE("covering-design instance: cover size equals the oracle minimum") {
  PlantedInstance gi = gen_instance2(6, {3, 2, 2}, 4, 17);
  const Hypergraph& h = gi.hypergraph;
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 3 + 4);
  CHECK(gi.k == 3);
  CHECK(is_edge_cover(h, gi.planted_cover));
  OracleResult r = min_weight_edge_cover(h);
  CHECK(r.optimum_value == static_cast<double>(gi.k));
}

TEST_CASE("covering-design instance: planted edges disjoint until the last") {
  Rng rng(46);
  for (int it = 0; it < 25; ++it) {
    int n = 5 + static_cast<int>(rng.below(6));
    std::vector<int> p{3, 2, 2, 2};
    int extra = static_cast<int>(rng.below(4));
    PlantedInstance gi = gen_instance2(n, p, extra, rng.next_u64());
    const Hypergraph& h = gi.hypergraph;
    CHECK_FALSE(validate(h).has_value());

    // All planted edges but the last are pairwise disjoint.
    std::set<VertexId> seen;
    for (size_t i = 0; i + 1 < gi.planted_cover.size(); ++i) {
      for (VertexId v : h.edge(gi.planted_cover[i]).vertices) {
        CHECK(seen.insert(v).second);
      }
    }
    CHECK(is_edge_cover(h, gi.planted_cover));

    // Edge sets are pairwise distinct across the whole instance.
    std::set<VertexSet> sets;
    for (EdgeId e = 1; e <= h.edge_count(); ++e) {
      CHECK(sets.insert(h.edge(e).vertices).second);
    }
  }
}

TEST_CASE("covering-design instance: sequence validation and determinism") {
  CHECK_THROWS_AS(gen_instance2(4, {2, 3}, 0, 0), InvalidSequenceError);  // increasing
  CHECK_THROWS_AS(gen_instance2(4, {1}, 0, 0), InvalidSequenceError);     // below 2
  CHECK_THROWS_AS(gen_instance2(4, {5, 2}, 0, 0), InvalidSequenceError);  // above n
  CHECK_THROWS_AS(gen_instance2(4, {}, 0, 0), InvalidSequenceError);      // empty

  PlantedInstance a = gen_instance2(7, {3, 2}, 3, 9);
  PlantedInstance b = gen_instance2(7, {3, 2}, 3, 9);
  CHECK(to_hgr_string(a.hypergraph) == to_hgr_string(b.hypergraph));
  CHECK(a.planted_cover == b.planted_cover);
}

TEST_CASE("covering-design instance: exhausting the distinct-edge pool fails loudly") {
  // n=2 admits a single 2-edge; asking for extras must raise GenerationError.
  CHECK_THROWS_AS(gen_instance2(2, {2}, 5, 0), GenerationError);
}

TEST_CASE("random instance generator") {
  Hypergraph h = gen_random(6, 9, 3, true, 11);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 9);
  CHECK_FALSE(validate(h).has_value());  // coverage repair guarantees validity
  for (EdgeId e = 1; e <= h.edge_count(); ++e) {
    CHECK(h.edge(e).cardinality() >= 1);
    CHECK(h.edge(e).cardinality() <= 3);
    CHECK(h.edge(e).weight >= 1.0);
    CHECK(h.edge(e).weight <= 10.0);
    CHECK(h.edge(e).weight == std::floor(h.edge(e).weight));
  }

  Hypergraph unw = gen_random(5, 6, 2, false, 12);
  for (EdgeId e = 1; e <= unw.edge_count(); ++e) {
    CHECK(unw.edge(e).weight == 1.0);
  }

  CHECK(to_hgr_string(gen_random(6, 9, 3, true, 11)) == to_hgr_string(h));

  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    int n = 2 + static_cast<int>(rng.below(7));
    Hypergraph g = gen_random(n, 1 + static_cast<int>(rng.below(10)), std::min(3, n),
                              true, rng.next_u64());
    CHECK_FALSE(validate(g).has_value());
  }
}
