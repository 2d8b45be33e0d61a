#include <doctest.h>

#include <random>
#include <vector>

#include "hypercore/kg_core.hpp"
#include "hypercore/kgp.hpp"
#include "hypercore/oracle.hpp"
#include "support/instances.hpp"

using namespace hypercore;

namespace {

const std::vector<Threshold>& threshold_grid() {
  static const std::vector<Threshold> grid = {
      Threshold::parse("0"), Threshold::parse("0.25"), Threshold::parse("0.5"),
      Threshold::parse("0.75"), Threshold::parse("1")};
  return grid;
}

}  // namespace

TEST_CASE("npa peels the reference instance to {v6..v9} with strong {e3,e4}") {
  Hypergraph g = toy();
  PeelOutcome out = npa(g, 2, 2, Threshold::parse("0.7"));
  NodeSet want(g.node_count());
  for (int v = 6; v <= 9; ++v) want.insert(toy_node(v));
  CHECK(out.core.nodes == want);
  EdgeSet want_edges(g.edge_count());
  want_edges.insert(toy_edge(3));
  want_edges.insert(toy_edge(4));
  CHECK(out.core.strong_edges == want_edges);
  CHECK(out.report.iterations == 3);
  CHECK(out.report.per_iteration ==
        std::vector<IterationStats>{{3, 2}, {1, 2}, {0, 0}});
  CHECK(out.report.result_nodes == 4);
  CHECK(out.report.result_edges == 2);
}

TEST_CASE("npa trace replays the worked example") {
  Hypergraph g = toy();
  NpaTrace trace;
  npa(g, 2, 2, Threshold::parse("0.7"), &trace);
  REQUIRE(trace.iterations.size() == 3);
  const auto& it1 = trace.iterations[0];
  CHECK(it1.removed_edges ==
        std::vector<std::pair<EdgeId, Fraction>>{{toy_edge(1), {8, 12}}, {toy_edge(6), {2, 5}}});
  CHECK(it1.recomputed_counts ==
        std::vector<std::pair<NodeId, std::int64_t>>{
            {toy_node(5), 0},
            {toy_node(6), 4},
            {toy_node(7), 4},
            {toy_node(8), 4},
            {toy_node(9), 4},
            {toy_node(10), 5},
            {toy_node(11), 0},
            {toy_node(12), 1}});
  CHECK(it1.removed_nodes == std::vector<NodeId>{toy_node(5), toy_node(11), toy_node(12)});
  CHECK(it1.ec_next == std::vector<EdgeId>{toy_edge(2), toy_edge(5)});
  const auto& it2 = trace.iterations[1];
  CHECK(it2.removed_edges ==
        std::vector<std::pair<EdgeId, Fraction>>{{toy_edge(2), {5, 8}}, {toy_edge(5), {1, 2}}});
  CHECK(it2.removed_nodes == std::vector<NodeId>{toy_node(10)});
  CHECK(it2.ec_next == std::vector<EdgeId>{toy_edge(3)});
  const auto& it3 = trace.iterations[2];
  CHECK(it3.removed_edges.empty());
  CHECK(it3.removed_nodes.empty());
  CHECK(it3.ec_next.empty());
}

TEST_CASE("asap trace replays the lazy-counter example") {
  Hypergraph g = toy();
  AsapTrace trace;
  PeelOutcome out = asap(g, 2, 2, Threshold::parse("0.7"), AsapOptions{true, false}, &trace);
  REQUIRE(trace.iterations.size() == 3);
  const auto& it1 = trace.iterations[0];

  std::vector<std::pair<NodeId, std::int64_t>> want_cnt;
  for (int v = 5; v <= 10; ++v) want_cnt.emplace_back(toy_node(v), 1);
  want_cnt.emplace_back(toy_node(11), 2);
  want_cnt.emplace_back(toy_node(12), 2);
  CHECK(it1.edge_cnt_after_edge_phase == want_cnt);

  // Conservative seeds collapse under any pending shift, so every candidate
  // recomputes in the first pass.
  REQUIRE(it1.candidate_events.size() == 8);
  for (const auto& ev : it1.candidate_events) {
    CHECK(ev.edge_lb == 0);
    CHECK(ev.recomputed);
  }
  CHECK(it1.candidate_events[0].removed);       // v5
  CHECK_FALSE(it1.candidate_events[1].removed); // v6
  CHECK(it1.removed_nodes == std::vector<NodeId>{toy_node(5), toy_node(11), toy_node(12)});

  // v12's removal leaves exactly one pending neighbour loss on v10; the
  // node bound of 4 clears it without a recomputation.
  REQUIRE(it1.node_events.size() == 1);
  CHECK(it1.node_events[0].node == toy_node(10));
  CHECK(it1.node_events[0].node_lb == 4);
  CHECK_FALSE(it1.node_events[0].recomputed);
  CHECK_FALSE(it1.node_events[0].removed);

  const auto& it2 = trace.iterations[1];
  // Rebuilt histograms shifted by one pending edge removal still clear k for
  // v6..v9; only v10 recomputes and leaves.
  REQUIRE(it2.candidate_events.size() == 5);
  for (int i = 0; i < 4; ++i) {
    CHECK(it2.candidate_events[i].edge_lb == 3);
    CHECK_FALSE(it2.candidate_events[i].recomputed);
  }
  CHECK(it2.candidate_events[4].node == toy_node(10));
  CHECK(it2.candidate_events[4].edge_lb == 0);
  CHECK(it2.candidate_events[4].removed);
  CHECK(out.report.edge_lb_skips == 4);
  CHECK(out.report.node_lb_skips == 1);

  NodeSet want(g.node_count());
  for (int v = 6; v <= 9; ++v) want.insert(toy_node(v));
  CHECK(out.core.nodes == want);
}

TEST_CASE("npa, asap and the oracle agree on random instances") {
  std::mt19937_64 rng(2201);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 3);
    for (const Threshold& p : threshold_grid()) {
      PeelOutcome direct = npa(g, k, gmin, p);
      PeelOutcome lazy = asap(g, k, gmin, p, AsapOptions{true, false});
      OracleResult want = oracle_kgp(g, k, gmin, p);
      REQUIRE_MESSAGE(direct.core.nodes == want.nodes,
                      "npa nodes diverge at k=" << k << " g=" << gmin << " p=" << p.text()
                                                << "\n" << testsupport::dump_instance(g));
      REQUIRE_MESSAGE(direct.core.strong_edges == want.strong_edges,
                      "npa strong edges diverge at k=" << k << " g=" << gmin << " p=" << p.text()
                                                       << "\n" << testsupport::dump_instance(g));
      REQUIRE(lazy.core.nodes == want.nodes);
      REQUIRE(lazy.core.strong_edges == want.strong_edges);
      // The per-pass removal schedule is part of the equivalence contract.
      REQUIRE(direct.report.iterations == lazy.report.iterations);
      REQUIRE(direct.report.per_iteration == lazy.report.per_iteration);
      REQUIRE(lazy.report.gnbr_calls_total() <= direct.report.gnbr_calls_total());
      REQUIRE(check_maximality(g, k, gmin, p, direct.core.nodes));
    }
  }
}

TEST_CASE("results are nested along each parameter axis") {
  std::mt19937_64 rng(2202);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    for (std::int64_t k = 1; k <= 3; ++k) {
      for (std::int64_t gmin = 1; gmin <= 2; ++gmin) {
        NodeSet prev(0);
        bool first = true;
        for (const Threshold& p : threshold_grid()) {
          NodeSet cur = asap(g, k, gmin, p).core.nodes;
          if (!first) {
            for (NodeId v : cur.to_sorted_vector()) CHECK(prev.contains(v));
          }
          prev = cur;
          first = false;
        }
      }
    }
    Threshold p = Threshold::parse("0.5");
    for (std::int64_t gmin = 1; gmin <= 3; ++gmin) {
      NodeSet prev(0);
      for (std::int64_t k = 1; k <= 4; ++k) {
        NodeSet cur = asap(g, k, gmin, p).core.nodes;
        if (k > 1) {
          for (NodeId v : cur.to_sorted_vector()) CHECK(prev.contains(v));
        }
        prev = cur;
      }
    }
    for (std::int64_t k = 1; k <= 3; ++k) {
      NodeSet prev(0);
      for (std::int64_t gmin = 1; gmin <= 3; ++gmin) {
        NodeSet cur = asap(g, k, gmin, p).core.nodes;
        if (gmin > 1) {
          for (NodeId v : cur.to_sorted_vector()) CHECK(prev.contains(v));
        }
        prev = cur;
      }
    }
  }
}

TEST_CASE("p=0 reduces both algorithms to the degree-style core") {
  std::mt19937_64 rng(2203);
  Threshold p0 = Threshold::parse("0");
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 2);
    NodeSet want = kg_core(g, k, gmin).alive;
    CHECK(npa(g, k, gmin, p0).core.nodes == want);
    CHECK(asap(g, k, gmin, p0).core.nodes == want);
  }
}

TEST_CASE("exact seeding changes the cost profile, never the result") {
  std::mt19937_64 rng(2204);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 2);
    Threshold p = Threshold::parse("0.5");
    PeelOutcome lazy_seed = asap(g, k, gmin, p, AsapOptions{true, false});
    PeelOutcome exact_seed = asap(g, k, gmin, p, AsapOptions{true, true});
    CHECK(lazy_seed.core.nodes == exact_seed.core.nodes);
    CHECK(lazy_seed.core.strong_edges == exact_seed.core.strong_edges);
  }
}

TEST_CASE("degenerate inputs") {
  SUBCASE("graph with no hyperedges") {
    Hypergraph g = Hypergraph::build(3, {}).graph;
    PeelOutcome out = npa(g, 1, 1, Threshold::parse("0.5"));
    CHECK(out.core.nodes.empty());
    CHECK(out.report.iterations == 0);
    PeelOutcome lazy = asap(g, 1, 1, Threshold::parse("0.5"));
    CHECK(lazy.core.nodes.empty());
  }
  SUBCASE("all-singleton hyperedges support nobody") {
    Hypergraph g = Hypergraph::build(2, {{0}, {1}}).graph;
    PeelOutcome out = npa(g, 1, 1, Threshold::parse("0"));
    CHECK(out.core.nodes.empty());
    CHECK(out.core.strong_edges.empty());
  }
  SUBCASE("parameter contract") {
    Hypergraph g = toy();
    CHECK_THROWS_AS(npa(g, 0, 1, Threshold::parse("0.5")), std::invalid_argument);
    CHECK_THROWS_AS(asap(g, 1, 0, Threshold::parse("0.5")), std::invalid_argument);
  }
}

TEST_CASE("iteration counts stay within min(nodes, edges)") {
  std::mt19937_64 rng(2205);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 2);
    Threshold p = threshold_grid()[rng() % threshold_grid().size()];
    std::uint64_t bound = std::min<std::uint64_t>(g.node_count(), g.edge_count());
    CHECK(npa(g, k, gmin, p).report.iterations <= bound);
    CHECK(asap(g, k, gmin, p).report.iterations <= bound);
  }
}
