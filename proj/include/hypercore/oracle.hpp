#ifndef HYPERCORE_ORACLE_HPP
#define HYPERCORE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/types.hpp"

namespace hypercore {

// Reference implementations for differential testing. Deliberately naive:
// simultaneous-drop fixed points recomputed from scratch each pass, with
// bitmask membership instead of the production incidence walk. Instances
// are limited to 64 nodes.

// Maximal set where every node keeps >= k neighbours with support >= gmin,
// over the full hyperedge set. Each pass recounts every alive pair and drops
// all violating nodes at once; removal order therefore cannot influence it.
NodeSet oracle_kg(const Hypergraph& g, std::int64_t k, std::int64_t gmin);

struct OracleResult {
  NodeSet nodes;
  EdgeSet strong_edges;
};

// Fixed point of alternating passes: drop every weak hyperedge given the
// current nodes, then drop every node with < k supported neighbours given
// the current hyperedges, until neither pass changes anything. The reported
// hyperedges are the survivors that still intersect the final node set.
OracleResult oracle_kgp(const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                        const Threshold& p);

// True when candidate equals the unique maximal solution; the decomposition
// is unique, so equality with the oracle is the whole check.
bool check_maximality(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                      const NodeSet& candidate);

// Reference 15-node, 6-edge instance used across the test suite. The file
// text is the single source of truth; data/toy.hg carries the same bytes.
const std::string& toy_text();
Hypergraph toy();
// v1..v15 and e1..e6 in file order map to dense ids i-1.
NodeId toy_node(int i);
EdgeId toy_edge(int i);

struct ProofCheck {
  std::string name;
  bool pass;
  std::string detail;
};

// Replays every quoted intermediate value of the reference instance against
// the production algorithms and the oracle: supports, neighbour maps,
// fractions, table contents, per-iteration removal traces, lazy counter
// snapshots, and the final cores. The fixture is trusted only if every
// check passes.
std::vector<ProofCheck> replay_fixture_proof();

std::string format_proof_log(const std::vector<ProofCheck>& checks);

// Greedy shrink: repeatedly deletes single hyperedges, then compacts unused
// nodes, while still_interesting holds. Used to trim failing instances
// before dumping them.
Hypergraph minimize_counterexample(const Hypergraph& g,
                                   const std::function<bool(const Hypergraph&)>& still_interesting);

}  // namespace hypercore

#endif
