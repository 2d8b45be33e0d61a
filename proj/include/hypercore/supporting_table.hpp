#ifndef HYPERCORE_SUPPORTING_TABLE_HPP
#define HYPERCORE_SUPPORTING_TABLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/types.hpp"

namespace hypercore {

// Histogram of a node's neighbour support values (keys >= the support floor,
// counts >= 1) together with two lazy counters: node_cnt neighbours removed
// and edge_cnt incident hyperedges removed since the histogram was last
// written. Applying a counter mutates the histogram destructively and yields
// a lower bound on the node's current neighbour count.
class SupportingTable {
 public:
  // Histogram {gmin: count}; both counters zeroed. A seeded table
  // understates every key except gmin, which keeps the bounds conservative.
  void seed(std::int64_t gmin, std::int64_t count);

  // Exact histogram of the given neighbour map; both counters zeroed.
  void rebuild(const NbrMap& nbrs);

  void clear();

  void bump_edge_cnt() {
    ++edge_cnt_;
    edge_touched_ = true;
  }
  void bump_node_cnt() { ++node_cnt_; }

  std::int64_t node_cnt() const { return node_cnt_; }
  std::int64_t edge_cnt() const { return edge_cnt_; }

  // Sum of histogram counts; an upper bound on the neighbour count that
  // ignores both lazy counters.
  std::int64_t estimated_size() const { return total_; }

  // Consumes node_cnt: peels that many entries off the highest keys, then
  // returns the remaining sum. Exhausting the histogram yields 0. The result
  // is a lower bound on the current neighbour count, and is exact while no
  // incident hyperedge removal has touched the table since its last write.
  std::int64_t node_lower_bound();

  // Consumes edge_cnt: shifts every key down by it, drops keys below gmin,
  // returns the remaining sum. Each removed incident hyperedge can lower a
  // neighbour's support by at most one, so the shifted histogram never
  // overstates any support value.
  std::int64_t edge_lower_bound(std::int64_t gmin);

  // True when an incident hyperedge removal has been recorded since the last
  // seed or rebuild; while false, node_lower_bound is exact.
  bool edge_touched() const { return edge_touched_; }

  const std::map<std::int64_t, std::int64_t>& histogram() const { return hist_; }

 private:
  std::map<std::int64_t, std::int64_t> hist_;
  std::int64_t total_ = 0;
  std::int64_t node_cnt_ = 0;
  std::int64_t edge_cnt_ = 0;
  bool edge_touched_ = false;
};

// Pending-recheck queue for the lazy peeling phase: nodes ordered by
// node_cnt descending, then node id ascending. Entries carry the count they
// were inserted with; callers reinsert on every count change so the stored
// key always matches the node's current node_cnt.
class RemovalQueue {
 public:
  bool contains(NodeId v) const { return queued_.size() > v && queued_[v] != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void push(NodeId v, std::int64_t node_cnt);
  void remove(NodeId v, std::int64_t node_cnt);
  // Highest-priority node; queue must not be empty.
  NodeId pop();

 private:
  struct Entry {
    std::int64_t node_cnt;
    NodeId node;

    friend bool operator<(const Entry& a, const Entry& b) {
      if (a.node_cnt != b.node_cnt) return a.node_cnt > b.node_cnt;
      return a.node < b.node;
    }
  };

  std::set<Entry> entries_;
  std::vector<std::uint8_t> queued_;
};

}  // namespace hypercore

#endif
