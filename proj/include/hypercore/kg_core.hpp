#ifndef HYPERCORE_KG_CORE_HPP
#define HYPERCORE_KG_CORE_HPP

#include <cstdint>
#include <vector>

#include "hypercore/hypergraph.hpp"
#include "hypercore/types.hpp"

namespace hypercore {

struct KgResult {
  NodeSet alive;
  // Exact g-neighbour count per node; meaningful only for alive nodes.
  std::vector<std::int64_t> nbr_count;
  // Neighbour-map computations performed, including the initial pass.
  std::uint64_t gnbr_calls = 0;
};

// Maximal node set in which every node has at least k neighbours with
// support >= gmin, over the full hyperedge set. Iterative peeling: nodes
// below k are queued and removed one at a time; each removal recomputes the
// removed node's exact neighbour map once and decrements the surviving
// neighbours' counts. Hyperedges are never removed here. Requires
// k >= 1, gmin >= 1.
KgResult kg_core(const Hypergraph& g, std::int64_t k, std::int64_t gmin);

}  // namespace hypercore

#endif
