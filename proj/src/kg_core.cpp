#include "hypercore/kg_core.hpp"

#include <deque>
#include <stdexcept>

namespace hypercore {

KgResult kg_core(const Hypergraph& g, std::int64_t k, std::int64_t gmin) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (gmin < 1) throw std::invalid_argument("g must be at least 1");

  const std::size_t n = g.node_count();
  KgResult result{NodeSet(n, true), std::vector<std::int64_t>(n, 0), 0};
  EdgeSet all_edges(g.edge_count(), true);
  GnbrWorkspace ws(n);

  std::deque<NodeId> queue;
  std::vector<std::uint8_t> queued(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    result.nbr_count[v] = static_cast<std::int64_t>(
        g_neighbours(g, v, result.alive, all_edges, gmin, ws, &result.gnbr_calls).size());
    if (result.nbr_count[v] < k) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }

  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    NbrMap nbrs = g_neighbours(g, v, result.alive, all_edges, gmin, ws, &result.gnbr_calls);
    result.alive.remove(v);
    for (const auto& [w, sup] : nbrs) {
      if (queued[w]) continue;
      if (--result.nbr_count[w] < k) {
        queue.push_back(w);
        queued[w] = 1;
      }
    }
  }
  return result;
}

}  // namespace hypercore
