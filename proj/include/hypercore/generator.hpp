#ifndef HYPERCORE_GENERATOR_HPP
#define HYPERCORE_GENERATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hypercore/hypergraph.hpp"

namespace hypercore {

// Synthetic instance shape. Cardinalities are uniform on
// [cardinality_min, cardinality_max]; members are drawn without replacement
// with probability proportional to (i+1)^(-skew), so skew 0 is uniform and
// larger values concentrate membership on low-id nodes.
struct GenConfig {
  std::size_t node_count = 1000;
  std::size_t edge_count = 2000;
  std::size_t cardinality_min = 2;
  std::size_t cardinality_max = 8;
  double skew = 1.0;
  std::uint64_t seed = 42;
};

// Deterministic for a fixed config: the same seed always yields the same
// hypergraph and the same emitted bytes. Labels are decimal node ids.
// Duplicate sampled edges collapse, so the built graph may have fewer than
// edge_count hyperedges. Throws std::invalid_argument on an impossible
// shape (cardinality_min < 2, range inverted, or cardinality_max above
// node_count).
Hypergraph gen_hypergraph(const GenConfig& config);

// Same instance in the loader's file format, one hyperedge per line with
// members sorted; duplicates are emitted as sampled and left for the loader
// to drop.
void write_hypergraph(const GenConfig& config, std::ostream& out);

std::string hypergraph_text(const GenConfig& config);

}  // namespace hypercore

#endif
