#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hypercore/kg_core.hpp"
#include "hypercore/oracle.hpp"
#include "support/instances.hpp"

using namespace hypercore;

namespace {

NodeSet relabeled_core(const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                       std::mt19937_64& rng) {
  // Shuffle node ids, peel, and map the result back. Changes every queue
  // order without touching the instance.
  std::vector<NodeId> perm(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<NodeId>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<NodeId> members;
    for (NodeId v : g.edge_members(e)) members.push_back(perm[v]);
    edges.push_back(std::move(members));
  }
  Hypergraph shuffled = Hypergraph::build(g.node_count(), std::move(edges)).graph;
  KgResult r = kg_core(shuffled, k, gmin);
  NodeSet back(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (r.alive.contains(perm[v])) back.insert(v);
  }
  return back;
}

}  // namespace

TEST_CASE("kg_core on the reference instance") {
  Hypergraph g = toy();
  KgResult r = kg_core(g, 2, 2);
  NodeSet want(g.node_count());
  for (int v = 5; v <= 12; ++v) want.insert(toy_node(v));
  CHECK(r.alive == want);
  CHECK(r.nbr_count[toy_node(6)] == 7);
  CHECK(r.nbr_count[toy_node(10)] == 7);
  // One call per node up front plus one per removed node.
  CHECK(r.gnbr_calls == 15 + 7);
}

TEST_CASE("kg_core trivial and empty parameterisations") {
  Hypergraph g = toy();
  SUBCASE("k=1 g=1 keeps every node that shares an edge") {
    KgResult r = kg_core(g, 1, 1);
    CHECK(r.alive.size() == 15);
  }
  SUBCASE("k above any degree empties the core") {
    KgResult r = kg_core(g, 20, 1);
    CHECK(r.alive.empty());
  }
  SUBCASE("g above any support empties the core") {
    KgResult r = kg_core(g, 1, 7);
    CHECK(r.alive.empty());
  }
  SUBCASE("parameter contract") {
    CHECK_THROWS_AS(kg_core(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(kg_core(g, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("kg_core matches the simultaneous-drop oracle on random instances") {
  std::mt19937_64 rng(116);
  for (int trial = 0; trial < 120; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 3);
    KgResult got = kg_core(g, k, gmin);
    NodeSet want = oracle_kg(g, k, gmin);
    REQUIRE_MESSAGE(got.alive == want,
                    "k=" << k << " g=" << gmin << "\n"
                         << testsupport::dump_instance(g));
  }
}

TEST_CASE("kg_core is a fixed point and reports exact neighbour counts") {
  std::mt19937_64 rng(117);
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 2);
    KgResult r = kg_core(g, k, gmin);
    EdgeSet all(g.edge_count(), true);
    for (NodeId v : r.alive.to_sorted_vector()) {
      NbrMap nbrs = g_neighbours(g, v, r.alive, all, gmin);
      CHECK(static_cast<std::int64_t>(nbrs.size()) >= k);
      CHECK(r.nbr_count[v] == static_cast<std::int64_t>(nbrs.size()));
    }
  }
}

TEST_CASE("kg_core result does not depend on peeling order") {
  std::mt19937_64 rng(118);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t gmin = 1 + static_cast<std::int64_t>(rng() % 2);
    NodeSet base = kg_core(g, k, gmin).alive;
    for (int reorder = 0; reorder < 3; ++reorder) {
      CHECK(relabeled_core(g, k, gmin, rng) == base);
    }
  }
}

TEST_CASE("kg_core is monotone in k and g") {
  std::mt19937_64 rng(119);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = testsupport::random_instance(rng);
    NodeSet prev_k(0);
    for (std::int64_t k = 1; k <= 4; ++k) {
      NodeSet cur = kg_core(g, k, 2).alive;
      if (k > 1) {
        for (NodeId v : cur.to_sorted_vector()) CHECK(prev_k.contains(v));
      }
      prev_k = cur;
    }
    NodeSet prev_g(0);
    for (std::int64_t gmin = 1; gmin <= 3; ++gmin) {
      NodeSet cur = kg_core(g, 2, gmin).alive;
      if (gmin > 1) {
        for (NodeId v : cur.to_sorted_vector()) CHECK(prev_g.contains(v));
      }
      prev_g = cur;
    }
  }
}
