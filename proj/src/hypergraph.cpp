#include "hypercore/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hypercore {

namespace {

// FNV-1a over the sorted member list; used to detect repeated edge sets.
struct EdgeSetHash {
  std::size_t operator()(const std::vector<NodeId>& members) const {
    std::size_t h = 1469598103934665603ull;
    for (NodeId v : members) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Hypergraph::BuildResult Hypergraph::build(std::size_t node_count,
                                          std::vector<std::vector<NodeId>> edge_members,
                                          std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw std::invalid_argument("label count does not match node count");
  }
  Hypergraph g;
  g.incidence_.resize(node_count);
  if (labels.empty()) {
    g.labels_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) g.labels_.push_back(std::to_string(v));
  } else {
    g.labels_ = std::move(labels);
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    auto inserted = g.label_index_.emplace(g.labels_[v], static_cast<NodeId>(v));
    if (!inserted.second) throw std::invalid_argument("duplicate node label: " + g.labels_[v]);
  }

  std::size_t dropped = 0;
  std::unordered_set<std::vector<NodeId>, EdgeSetHash> seen;
  for (auto& members : edge_members) {
    if (members.empty()) throw std::invalid_argument("hyperedge with no members");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.back() >= node_count) throw std::invalid_argument("node id out of range");
    if (!seen.insert(members).second) {
      ++dropped;
      continue;
    }
    EdgeId e = static_cast<EdgeId>(g.edges_.size());
    for (NodeId v : members) g.incidence_[v].push_back(e);
    g.edges_.push_back(std::move(members));
  }
  return BuildResult{std::move(g), dropped};
}

bool Hypergraph::edge_contains(EdgeId e, NodeId v) const {
  const auto& members = edges_[e];
  return std::binary_search(members.begin(), members.end(), v);
}

NodeId Hypergraph::node_by_label(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw std::out_of_range("unknown node label: " + label);
  return it->second;
}

bool Hypergraph::check_consistency() const {
  for (NodeId v = 0; v < node_count(); ++v) {
    if (!std::is_sorted(incidence_[v].begin(), incidence_[v].end())) return false;
    for (EdgeId e : incidence_[v]) {
      if (e >= edge_count() || !edge_contains(e, v)) return false;
    }
  }
  std::size_t member_total = 0;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto& members = edges_[e];
    if (members.empty()) return false;
    if (!std::is_sorted(members.begin(), members.end())) return false;
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;
    if (members.back() >= node_count()) return false;
    member_total += members.size();
  }
  std::size_t incidence_total = 0;
  for (const auto& inc : incidence_) incidence_total += inc.size();
  return member_total == incidence_total;
}

LoadResult load_hypergraph(std::istream& in) {
  std::vector<std::vector<NodeId>> edges;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find('\0') != std::string::npos) {
      throw IngestError("binary content at line " + std::to_string(line_no));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<NodeId> members;
    std::string tok;
    while (tokens >> tok) {
      auto it = ids.find(tok);
      NodeId v;
      if (it == ids.end()) {
        v = static_cast<NodeId>(labels.size());
        ids.emplace(tok, v);
        labels.push_back(tok);
      } else {
        v = it->second;
      }
      members.push_back(v);
    }
    edges.push_back(std::move(members));
  }
  if (in.bad()) throw IngestError("stream error while reading hypergraph");
  std::size_t node_count = labels.size();
  auto built = Hypergraph::build(node_count, std::move(edges), std::move(labels));
  return LoadResult{std::move(built.graph), built.duplicate_edges_dropped};
}

LoadResult load_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open input file: " + path);
  return load_hypergraph(in);
}

std::int64_t support(const Hypergraph& g, NodeId u, NodeId v, const EdgeSet& alive_edges) {
  if (u == v) throw std::invalid_argument("support is defined for distinct nodes");
  std::int64_t count = 0;
  for (EdgeId e : g.incident_edges(u)) {
    if (alive_edges.contains(e) && g.edge_contains(e, v)) ++count;
  }
  return count;
}

NbrMap g_neighbours(const Hypergraph& g, NodeId v, const NodeSet& alive_nodes,
                    const EdgeSet& alive_edges, std::int64_t gmin, GnbrWorkspace& ws,
                    std::uint64_t* call_counter) {
  if (!alive_nodes.contains(v)) throw std::invalid_argument("g_neighbours of a removed node");
  if (gmin < 1) throw std::invalid_argument("g must be at least 1");
  if (call_counter) ++*call_counter;

  auto& counts = ws.counts();
  auto& touched = ws.touched();
  touched.clear();
  for (EdgeId e : g.incident_edges(v)) {
    if (!alive_edges.contains(e)) continue;
    for (NodeId u : g.edge_members(e)) {
      if (u == v || !alive_nodes.contains(u)) continue;
      if (counts[u]++ == 0) touched.push_back(u);
    }
  }
  std::sort(touched.begin(), touched.end());
  NbrMap out;
  for (NodeId u : touched) {
    if (counts[u] >= gmin) out.push_back({u, counts[u]});
    counts[u] = 0;
  }
  return out;
}

NbrMap g_neighbours(const Hypergraph& g, NodeId v, const NodeSet& alive_nodes,
                    const EdgeSet& alive_edges, std::int64_t gmin) {
  GnbrWorkspace ws(g.node_count());
  return g_neighbours(g, v, alive_nodes, alive_edges, gmin, ws, nullptr);
}

Fraction fraction(const Hypergraph& g, EdgeId e, const NodeSet& alive_nodes) {
  const auto& members = g.edge_members(e);
  std::int64_t alive = 0;
  for (NodeId v : members) {
    if (alive_nodes.contains(v)) ++alive;
  }
  return Fraction{alive, static_cast<std::int64_t>(members.size())};
}

EdgeStrength classify_edge(const Hypergraph& g, EdgeId e, const NodeSet& alive_nodes,
                           const Threshold& p) {
  return below(fraction(g, e, alive_nodes), p) ? EdgeStrength::weak : EdgeStrength::strong;
}

}  // namespace hypercore
