#ifndef HYPERCORE_REPORT_HPP
#define HYPERCORE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypercore {

struct IterationStats {
  std::uint64_t nodes_removed = 0;
  std::uint64_t edges_removed = 0;

  friend bool operator==(const IterationStats& a, const IterationStats& b) {
    return a.nodes_removed == b.nodes_removed && a.edges_removed == b.edges_removed;
  }
};

// Instrumentation for one decomposition run. Counter semantics: one unit per
// neighbour-map computation, split between the degree-style core phase and
// the fraction peeling loop that follows it. wall times are the only
// non-deterministic fields.
struct RunReport {
  std::string algo;
  std::int64_t k = 0;
  std::int64_t g = 0;
  std::optional<std::string> p_text;

  std::size_t input_nodes = 0;
  std::size_t input_edges = 0;
  std::size_t result_nodes = 0;
  std::size_t result_edges = 0;

  std::uint64_t gnbr_calls_kg = 0;
  std::uint64_t gnbr_calls_post = 0;
  std::uint64_t gnbr_calls_total() const { return gnbr_calls_kg + gnbr_calls_post; }

  // Peeling loop passes that had pending hyperedge rechecks on entry.
  std::uint64_t iterations = 0;
  std::vector<IterationStats> per_iteration;

  // Lower-bound evaluations in the lazy algorithm; a skip is an evaluation
  // that proved the node safe without an exact recomputation.
  std::uint64_t edge_lb_calls = 0;
  std::uint64_t edge_lb_skips = 0;
  std::uint64_t node_lb_calls = 0;
  std::uint64_t node_lb_skips = 0;

  double wall_ms_kg = 0.0;
  double wall_ms_post = 0.0;
  double wall_ms_total = 0.0;
};

// JSON object text with a fixed key order, so identical runs serialize to
// identical bytes. Wall times are the only nondeterministic fields; passing
// include_wall_time = false omits them entirely.
std::string report_to_json(const RunReport& report, bool include_wall_time = true);

// Fraction of all removals (nodes plus hyperedges) that happened within the
// first three peeling passes; 1 when nothing was removed.
double first3_removal_share(const RunReport& report);

struct SweepRow {
  std::string algo;
  std::string varied;
  std::string value;
  std::size_t result_nodes = 0;
  std::size_t result_edges = 0;
  std::uint64_t gnbr_calls = 0;
  std::uint64_t iterations = 0;
  double wall_ms = 0.0;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct BenchRow {
  std::size_t size = 0;
  std::string algo;
  std::size_t result_nodes = 0;
  std::size_t result_edges = 0;
  std::uint64_t gnbr_calls = 0;
  std::uint64_t iterations = 0;
  double median_wall_ms = 0.0;
  double first3_removal_share = 0.0;
};

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace hypercore

#endif
