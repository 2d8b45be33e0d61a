#include "hypercore/generator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hypercore {

namespace {

void validate(const GenConfig& c) {
  if (c.node_count < 2) throw std::invalid_argument("generator needs at least 2 nodes");
  if (c.cardinality_min < 2) throw std::invalid_argument("cardinality_min must be at least 2");
  if (c.cardinality_min > c.cardinality_max) {
    throw std::invalid_argument("cardinality range is inverted");
  }
  if (c.cardinality_max > c.node_count) {
    throw std::invalid_argument("cardinality_max exceeds node count");
  }
  if (c.skew < 0) throw std::invalid_argument("skew must be non-negative");
}

// One uniform double in [0, 1) from the top 53 bits of the generator.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::vector<NodeId>> sample_edges(const GenConfig& c) {
  validate(c);
  std::mt19937_64 rng(c.seed);

  std::vector<double> prefix(c.node_count);
  double total = 0.0;
  for (std::size_t i = 0; i < c.node_count; ++i) {
    total += std::pow(static_cast<double>(i + 1), -c.skew);
    prefix[i] = total;
  }

  auto draw_node = [&]() {
    double u = unit_draw(rng) * total;
    auto it = std::upper_bound(prefix.begin(), prefix.end(), u);
    if (it == prefix.end()) --it;
    return static_cast<NodeId>(it - prefix.begin());
  };

  std::size_t span = c.cardinality_max - c.cardinality_min + 1;
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(c.edge_count);
  std::vector<std::uint8_t> picked(c.node_count, 0);
  for (std::size_t e = 0; e < c.edge_count; ++e) {
    std::size_t card = c.cardinality_min + static_cast<std::size_t>(rng() % span);
    std::vector<NodeId> members;
    members.reserve(card);
    // Rejection sampling covers all practical shapes; the sweep below only
    // fires when the distribution is too concentrated to yield enough
    // distinct members in bounded time.
    std::size_t attempts = 0;
    std::size_t attempt_cap = 64 * card + 256;
    while (members.size() < card && attempts < attempt_cap) {
      ++attempts;
      NodeId v = draw_node();
      if (!picked[v]) {
        picked[v] = 1;
        members.push_back(v);
      }
    }
    for (NodeId v = 0; members.size() < card; ++v) {
      if (!picked[v]) {
        picked[v] = 1;
        members.push_back(v);
      }
    }
    for (NodeId v : members) picked[v] = 0;
    std::sort(members.begin(), members.end());
    edges.push_back(std::move(members));
  }
  return edges;
}

}  // namespace

Hypergraph gen_hypergraph(const GenConfig& config) {
  return Hypergraph::build(config.node_count, sample_edges(config)).graph;
}

void write_hypergraph(const GenConfig& config, std::ostream& out) {
  for (const auto& members : sample_edges(config)) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out << ' ';
      out << members[i];
    }
    out << '\n';
  }
}

std::string hypergraph_text(const GenConfig& config) {
  std::ostringstream out;
  write_hypergraph(config, out);
  return out.str();
}

}  // namespace hypercore
