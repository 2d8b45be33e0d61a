#ifndef HYPERCORE_HYPERGRAPH_HPP
#define HYPERCORE_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/types.hpp"

namespace hypercore {

// Immutable hypergraph over dense node ids [0, node_count) and dense edge
// ids [0, edge_count). Member lists are sorted and duplicate-free; no two
// hyperedges share the same member set. The incidence index is the exact
// transpose of the member lists.
class Hypergraph {
 public:
  struct BuildResult;

  // Canonical construction path. Members are deduplicated within each edge;
  // edges whose deduplicated member set repeats an earlier edge are dropped
  // and counted. Empty member lists and out-of-range ids are rejected.
  // labels may be empty, in which case decimal ids are used.
  static BuildResult build(std::size_t node_count,
                           std::vector<std::vector<NodeId>> edge_members,
                           std::vector<std::string> labels = {});

  std::size_t node_count() const { return incidence_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted member list of hyperedge e.
  const std::vector<NodeId>& edge_members(EdgeId e) const { return edges_[e]; }
  std::size_t cardinality(EdgeId e) const { return edges_[e].size(); }

  // Sorted ids of hyperedges containing v.
  const std::vector<EdgeId>& incident_edges(NodeId v) const { return incidence_[v]; }

  bool edge_contains(EdgeId e, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  // Returns node id for a label, or throws std::out_of_range.
  NodeId node_by_label(const std::string& label) const;

  // Full scan of the transpose invariant; used by property tests.
  bool check_consistency() const;

 private:
  std::vector<std::vector<NodeId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
};

struct Hypergraph::BuildResult {
  Hypergraph graph;
  std::size_t duplicate_edges_dropped = 0;
};

struct LoadResult {
  Hypergraph graph;
  std::size_t duplicate_edges_dropped = 0;
};

// Reads one hyperedge per line: whitespace-separated node tokens, '#' starts
// a comment line, blank lines are skipped. Node ids are assigned densely in
// first-appearance order. Repeated tokens within a line collapse, so a line
// may yield a singleton edge, which is retained. A line whose member set
// duplicates an earlier edge is dropped and counted. Binary content raises
// IngestError.
LoadResult load_hypergraph(std::istream& in);
LoadResult load_hypergraph_file(const std::string& path);

// Number of alive hyperedges containing both u and v. Requires u != v.
std::int64_t support(const Hypergraph& g, NodeId u, NodeId v, const EdgeSet& alive_edges);

struct NeighbourSupport {
  NodeId node;
  std::int64_t support;

  friend bool operator==(const NeighbourSupport& a, const NeighbourSupport& b) {
    return a.node == b.node && a.support == b.support;
  }
};

// Neighbour map sorted by node id.
using NbrMap = std::vector<NeighbourSupport>;

// Scratch buffers for g_neighbours, reusable across calls to avoid
// per-call allocation.
class GnbrWorkspace {
 public:
  explicit GnbrWorkspace(std::size_t node_count) : counts_(node_count, 0) {}

  std::vector<std::int64_t>& counts() { return counts_; }
  std::vector<NodeId>& touched() { return touched_; }

 private:
  std::vector<std::int64_t> counts_;
  std::vector<NodeId> touched_;
};

// Nodes u (alive, u != v) whose support with v over the alive hyperedges is
// at least gmin, with their support values. Single pass over the alive
// incident edges of v. Requires v alive and gmin >= 1. When call_counter is
// non-null it is incremented once; algorithm instrumentation threads its
// phase counter through here.
NbrMap g_neighbours(const Hypergraph& g, NodeId v, const NodeSet& alive_nodes,
                    const EdgeSet& alive_edges, std::int64_t gmin, GnbrWorkspace& ws,
                    std::uint64_t* call_counter = nullptr);

// Convenience overload with a throwaway workspace.
NbrMap g_neighbours(const Hypergraph& g, NodeId v, const NodeSet& alive_nodes,
                    const EdgeSet& alive_edges, std::int64_t gmin);

// |node(e) ∩ alive| over the edge's original cardinality. The denominator
// never changes as nodes are peeled.
Fraction fraction(const Hypergraph& g, EdgeId e, const NodeSet& alive_nodes);

enum class EdgeStrength { weak, strong };

// weak iff fraction(e, alive) < p, by exact comparison. Boundary equality
// is strong.
EdgeStrength classify_edge(const Hypergraph& g, EdgeId e, const NodeSet& alive_nodes,
                           const Threshold& p);

}  // namespace hypercore

#endif
