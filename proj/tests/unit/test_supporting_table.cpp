#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "hypercore/supporting_table.hpp"

using namespace hypercore;

namespace {

using Hist = std::map<std::int64_t, std::int64_t>;

SupportingTable table_from(const Hist& hist) {
  NbrMap nbrs;
  NodeId next = 0;
  for (const auto& [key, count] : hist) {
    for (std::int64_t i = 0; i < count; ++i) nbrs.push_back({next++, key});
  }
  SupportingTable t;
  t.rebuild(nbrs);
  return t;
}

}  // namespace

TEST_CASE("estimated_size sums the histogram") {
  SupportingTable t = table_from({{2, 3}, {3, 1}, {4, 3}});
  CHECK(t.estimated_size() == 7);
  CHECK(t.histogram() == Hist{{2, 3}, {3, 1}, {4, 3}});
  CHECK(table_from({}).estimated_size() == 0);
}

TEST_CASE("node_lower_bound consumes from the highest key") {
  SupportingTable t = table_from({{2, 3}, {3, 1}, {4, 3}});
  t.bump_node_cnt();
  CHECK(t.node_cnt() == 1);
  CHECK(t.node_lower_bound() == 6);
  CHECK(t.node_cnt() == 0);
  CHECK(t.histogram() == Hist{{2, 3}, {3, 1}, {4, 2}});
  SUBCASE("repeated application keeps consuming") {
    for (int i = 0; i < 3; ++i) t.bump_node_cnt();
    CHECK(t.node_lower_bound() == 3);
    CHECK(t.histogram() == Hist{{2, 3}});
  }
}

TEST_CASE("node_lower_bound empties to zero when over-consumed") {
  SupportingTable t = table_from({{2, 2}});
  for (int i = 0; i < 5; ++i) t.bump_node_cnt();
  CHECK(t.node_lower_bound() == 0);
  CHECK(t.histogram().empty());
  CHECK(t.node_cnt() == 0);
  CHECK(t.node_lower_bound() == 0);
}

TEST_CASE("edge_lower_bound shifts keys down and drops the floor") {
  SupportingTable t = table_from({{2, 3}, {3, 1}, {4, 3}});
  t.bump_edge_cnt();
  t.bump_edge_cnt();
  CHECK(t.edge_cnt() == 2);
  CHECK(t.edge_lower_bound(2) == 3);
  CHECK(t.edge_cnt() == 0);
  CHECK(t.histogram() == Hist{{2, 3}});
  SUBCASE("zero pending shifts is the identity") {
    CHECK(t.edge_lower_bound(2) == 3);
    CHECK(t.histogram() == Hist{{2, 3}});
  }
}

TEST_CASE("edge_touched tracks incident removals across writes") {
  SupportingTable t = table_from({{2, 2}});
  CHECK_FALSE(t.edge_touched());
  t.bump_node_cnt();
  CHECK_FALSE(t.edge_touched());
  t.node_lower_bound();
  CHECK_FALSE(t.edge_touched());
  t.bump_edge_cnt();
  CHECK(t.edge_touched());
  t.edge_lower_bound(2);
  // Applying the shift keeps the table conservative; only a rewrite clears it.
  CHECK(t.edge_touched());
  t.rebuild(NbrMap{{0, 2}});
  CHECK_FALSE(t.edge_touched());
  t.bump_edge_cnt();
  t.seed(2, 5);
  CHECK_FALSE(t.edge_touched());
}

TEST_CASE("seed builds a single-bucket histogram") {
  SupportingTable t;
  t.seed(3, 5);
  CHECK(t.histogram() == Hist{{3, 5}});
  CHECK(t.estimated_size() == 5);
  t.seed(2, 0);
  CHECK(t.histogram().empty());
}

TEST_CASE("rebuild zeroes both counters") {
  SupportingTable t = table_from({{2, 2}});
  t.bump_node_cnt();
  t.bump_edge_cnt();
  t.rebuild(NbrMap{{0, 4}, {1, 2}});
  CHECK(t.node_cnt() == 0);
  CHECK(t.edge_cnt() == 0);
  CHECK(t.histogram() == Hist{{2, 1}, {4, 1}});
}

TEST_CASE("key count never exceeds the distinct support values") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    NbrMap nbrs;
    std::size_t n = rng() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      nbrs.push_back({static_cast<NodeId>(i), 1 + static_cast<std::int64_t>(rng() % 6)});
    }
    SupportingTable t;
    t.rebuild(nbrs);
    CHECK(t.histogram().size() <= nbrs.size());
    CHECK(t.estimated_size() == static_cast<std::int64_t>(nbrs.size()));
    std::int64_t total = 0;
    for (const auto& [key, count] : t.histogram()) {
      CHECK(count >= 1);
      total += count;
    }
    CHECK(total == t.estimated_size());
  }
}

TEST_CASE("lower bounds are sound against explicit removal simulations") {
  // Model: supports per neighbour; removing a node deletes one neighbour,
  // removing an incident hyperedge lowers any subset of supports by one.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t gmin = 2;
    std::vector<std::int64_t> sups;
    std::size_t n = 1 + rng() % 10;
    for (std::size_t i = 0; i < n; ++i) sups.push_back(gmin + static_cast<std::int64_t>(rng() % 5));
    NbrMap nbrs;
    for (std::size_t i = 0; i < sups.size(); ++i) {
      nbrs.push_back({static_cast<NodeId>(i), sups[i]});
    }
    SupportingTable t;
    t.rebuild(nbrs);

    std::int64_t applied_node_removals = 0;
    int node_removals = static_cast<int>(rng() % 3);
    for (int i = 0; i < node_removals && !sups.empty(); ++i) {
      sups.erase(sups.begin() + static_cast<std::ptrdiff_t>(rng() % sups.size()));
      t.bump_node_cnt();
      ++applied_node_removals;
    }
    int edge_removals = static_cast<int>(rng() % 3);
    for (int i = 0; i < edge_removals; ++i) {
      for (auto& s : sups) {
        if (rng() % 2 == 0) s -= 1;
      }
      t.bump_edge_cnt();
    }
    auto truth = [&] {
      std::int64_t c = 0;
      for (auto s : sups) {
        if (s >= gmin) ++c;
      }
      return c;
    };
    // The hyperedge bound defers neighbour-removal staleness to node_cnt,
    // so it may overcount by at most the pending removals.
    std::int64_t lb_edge = t.edge_lower_bound(gmin);
    CHECK(lb_edge - applied_node_removals <= truth());
    std::int64_t lb_node = t.node_lower_bound();
    CHECK(lb_node <= truth());
    if (edge_removals == 0) CHECK(lb_node == truth());
  }
}
