#include "hypercore/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace hypercore {

namespace {

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", ms);
  return buf;
}

}  // namespace

std::string report_to_json(const RunReport& report, bool include_wall_time) {
  nlohmann::ordered_json out;
  out["algo"] = report.algo;
  out["k"] = report.k;
  out["g"] = report.g;
  if (report.p_text) {
    out["p"] = *report.p_text;
  } else {
    out["p"] = nullptr;
  }
  out["input"] = {{"nodes", report.input_nodes}, {"edges", report.input_edges}};
  out["result"] = {{"nodes", report.result_nodes}, {"strong_edges", report.result_edges}};
  out["gnbr_calls"] = {{"kg_phase", report.gnbr_calls_kg},
                       {"post_phase", report.gnbr_calls_post},
                       {"total", report.gnbr_calls_total()}};
  out["iterations"] = report.iterations;
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (const auto& it : report.per_iteration) {
    per.push_back({{"nodes_removed", it.nodes_removed}, {"edges_removed", it.edges_removed}});
  }
  out["per_iteration"] = std::move(per);
  out["pruning"] = {{"edge_lb_calls", report.edge_lb_calls},
                    {"edge_lb_skips", report.edge_lb_skips},
                    {"node_lb_calls", report.node_lb_calls},
                    {"node_lb_skips", report.node_lb_skips}};
  if (include_wall_time) {
    out["wall_ms"] = {{"kg_phase", report.wall_ms_kg},
                      {"post_phase", report.wall_ms_post},
                      {"total", report.wall_ms_total}};
  }
  return out.dump(2) + "\n";
}

double first3_removal_share(const RunReport& report) {
  std::uint64_t total = 0;
  std::uint64_t first3 = 0;
  for (std::size_t i = 0; i < report.per_iteration.size(); ++i) {
    std::uint64_t removals =
        report.per_iteration[i].nodes_removed + report.per_iteration[i].edges_removed;
    total += removals;
    if (i < 3) first3 += removals;
  }
  return total == 0 ? 1.0 : static_cast<double>(first3) / static_cast<double>(total);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "algo,varied,value,result_nodes,result_edges,gnbr_calls,iterations,wall_ms\n";
  for (const auto& r : rows) {
    out += r.algo + ',' + r.varied + ',' + r.value + ',' + std::to_string(r.result_nodes) + ',' +
           std::to_string(r.result_edges) + ',' + std::to_string(r.gnbr_calls) + ',' +
           std::to_string(r.iterations) + ',' + format_ms(r.wall_ms) + '\n';
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "size,algo,result_nodes,result_edges,gnbr_calls,iterations,median_wall_ms,"
      "first3_removal_share\n";
  for (const auto& r : rows) {
    char share[32];
    std::snprintf(share, sizeof(share), "%.4f", r.first3_removal_share);
    out += std::to_string(r.size) + ',' + r.algo + ',' + std::to_string(r.result_nodes) + ',' +
           std::to_string(r.result_edges) + ',' + std::to_string(r.gnbr_calls) + ',' +
           std::to_string(r.iterations) + ',' + format_ms(r.median_wall_ms) + ',' + share + '\n';
  }
  return out;
}

}  // namespace hypercore
