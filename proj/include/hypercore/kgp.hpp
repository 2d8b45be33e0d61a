#ifndef HYPERCORE_KGP_HPP
#define HYPERCORE_KGP_HPP

#include <cstdint>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/report.hpp"
#include "hypercore/types.hpp"

namespace hypercore {

struct PeelParams {
  std::int64_t k = 1;
  std::int64_t g = 1;
  Threshold p = Threshold::parse("0");
};

// Decomposition output. nodes is the maximal set in which every node keeps
// at least k neighbours with support >= g counted over strong_edges only,
// and strong_edges is exactly the set of hyperedges that intersect nodes and
// whose alive fraction is at least p.
struct CoreResult {
  NodeSet nodes;
  EdgeSet strong_edges;
  PeelParams params;
};

struct PeelOutcome {
  CoreResult core;
  RunReport report;
};

// Per-pass trace of the direct peeling algorithm; filled when a trace sink
// is supplied. Node and edge lists are in processing order.
struct NpaIterationTrace {
  std::vector<std::pair<EdgeId, Fraction>> removed_edges;
  std::vector<std::pair<NodeId, std::int64_t>> recomputed_counts;
  std::vector<NodeId> removed_nodes;
  std::vector<EdgeId> ec_next;
};

struct NpaTrace {
  std::vector<NpaIterationTrace> iterations;
};

// Direct algorithm: seed with the degree-style core, then alternate between
// dropping weak hyperedges and cascading node removals, recomputing every
// touched node's neighbour map exactly.
PeelOutcome npa(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                NpaTrace* trace = nullptr);

struct AsapOptions {
  // Cross-check every lower bound against a freshly computed neighbour map
  // (uncounted); a bound above the true value raises std::logic_error.
  // Additionally requires node_lower_bound to be exact whenever the table
  // saw no incident hyperedge removal since its last write.
  bool verify_bounds = false;
  // Seed tables with full histograms instead of single-key conservative
  // ones. Costs one counted neighbour-map call per core node up front.
  bool exact_seed = false;
};

struct AsapCandidateEvent {
  NodeId node;
  std::int64_t edge_lb;
  bool recomputed;
  std::int64_t exact_size;  // -1 when not recomputed
  bool removed;
};

struct AsapNodeEvent {
  NodeId node;
  std::int64_t node_lb;
  bool recomputed;
  std::int64_t exact_size;  // -1 when not recomputed
  bool removed;
};

struct AsapIterationTrace {
  std::vector<std::pair<EdgeId, Fraction>> removed_edges;
  // edge_cnt per pending candidate right after the hyperedge pass, sorted.
  std::vector<std::pair<NodeId, std::int64_t>> edge_cnt_after_edge_phase;
  std::vector<AsapCandidateEvent> candidate_events;
  std::vector<AsapNodeEvent> node_events;
  std::vector<NodeId> removed_nodes;
  std::vector<EdgeId> ec_next;
};

struct AsapTrace {
  std::vector<AsapIterationTrace> iterations;
};

// Lazy algorithm: identical output to npa, but each touched node first goes
// through histogram lower bounds (edge_lower_bound in the candidate phase,
// node_lower_bound in the queue phase); the exact neighbour map is
// recomputed only when the bound falls below k.
PeelOutcome asap(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                 const AsapOptions& options = {}, AsapTrace* trace = nullptr);

}  // namespace hypercore

#endif
