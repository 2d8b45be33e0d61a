#include "hypercore/kgp.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <utility>

#include "hypercore/kg_core.hpp"
#include "hypercore/supporting_table.hpp"

namespace hypercore {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Edges with at least one alive member.
EdgeSet intersecting_edges(const Hypergraph& g, const NodeSet& alive) {
  EdgeSet out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (NodeId v : g.edge_members(e)) {
      if (alive.contains(v)) {
        out.insert(e);
        break;
      }
    }
  }
  return out;
}

// Dedup worklist with O(1) membership; drain order is sorted for
// deterministic processing.
template <typename Id>
class Worklist {
 public:
  explicit Worklist(std::size_t universe) : in_(universe, 0) {}

  void add(Id id) {
    if (!in_[id]) {
      in_[id] = 1;
      items_.push_back(id);
    }
  }

  bool empty() const { return items_.empty(); }

  std::vector<Id> drain_sorted() {
    std::sort(items_.begin(), items_.end());
    for (Id id : items_) in_[id] = 0;
    return std::exchange(items_, {});
  }

  std::vector<Id> peek_sorted() const {
    std::vector<Id> copy = items_;
    std::sort(copy.begin(), copy.end());
    return copy;
  }

 private:
  std::vector<std::uint8_t> in_;
  std::vector<Id> items_;
};

void check_iteration_bound(const Hypergraph& g, const RunReport& report) {
  std::uint64_t bound = std::min<std::uint64_t>(g.node_count(), g.edge_count());
  if (report.iterations > bound) {
    throw std::logic_error("peeling iterations exceeded min(|V|,|E|)");
  }
}

void fill_common_report(RunReport& report, const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                        const Threshold& p, const CoreResult& core) {
  report.k = k;
  report.g = gmin;
  report.p_text = p.text();
  report.input_nodes = g.node_count();
  report.input_edges = g.edge_count();
  report.result_nodes = core.nodes.size();
  report.result_edges = core.strong_edges.size();
}

}  // namespace

PeelOutcome npa(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                NpaTrace* trace) {
  auto t_total = Clock::now();
  RunReport report;
  report.algo = "npa";

  KgResult kg = kg_core(g, k, gmin);
  report.gnbr_calls_kg = kg.gnbr_calls;
  report.wall_ms_kg = ms_since(t_total);

  auto t_post = Clock::now();
  NodeSet alive = std::move(kg.alive);
  std::vector<std::int64_t> count = std::move(kg.nbr_count);
  EdgeSet alive_edges = intersecting_edges(g, alive);
  GnbrWorkspace ws(g.node_count());

  Worklist<EdgeId> ec(g.edge_count());
  for (EdgeId e : alive_edges.to_sorted_vector()) ec.add(e);
  Worklist<NodeId> vc(g.node_count());
  std::deque<NodeId> queue;
  std::vector<std::uint8_t> queued(g.node_count(), 0);

  while (!ec.empty()) {
    ++report.iterations;
    IterationStats stats;
    NpaIterationTrace* it = nullptr;
    if (trace) it = &trace->iterations.emplace_back();

    for (EdgeId e : ec.drain_sorted()) {
      Fraction f = fraction(g, e, alive);
      if (!below(f, p)) continue;
      for (NodeId u : g.edge_members(e)) {
        if (alive.contains(u)) vc.add(u);
      }
      alive_edges.remove(e);
      ++stats.edges_removed;
      if (it) it->removed_edges.emplace_back(e, f);
    }

    for (NodeId v : vc.drain_sorted()) {
      count[v] = static_cast<std::int64_t>(
          g_neighbours(g, v, alive, alive_edges, gmin, ws, &report.gnbr_calls_post).size());
      if (it) it->recomputed_counts.emplace_back(v, count[v]);
      if (count[v] < k && !queued[v]) {
        queue.push_back(v);
        queued[v] = 1;
      }
    }

    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (EdgeId e : g.incident_edges(v)) {
        if (alive_edges.contains(e)) ec.add(e);
      }
      NbrMap nbrs = g_neighbours(g, v, alive, alive_edges, gmin, ws, &report.gnbr_calls_post);
      alive.remove(v);
      ++stats.nodes_removed;
      if (it) it->removed_nodes.push_back(v);
      for (const auto& [w, sup] : nbrs) {
        if (queued[w]) continue;
        if (--count[w] < k) {
          queue.push_back(w);
          queued[w] = 1;
        }
      }
    }

    report.per_iteration.push_back(stats);
    if (it) it->ec_next = ec.peek_sorted();
  }

  CoreResult core{std::move(alive), std::move(alive_edges), PeelParams{k, gmin, p}};
  fill_common_report(report, g, k, gmin, p, core);
  report.wall_ms_post = ms_since(t_post);
  report.wall_ms_total = ms_since(t_total);
  check_iteration_bound(g, report);
  return PeelOutcome{std::move(core), std::move(report)};
}

namespace {

// Mutable peeling state shared by the candidate and queue phases of the
// lazy algorithm.
struct AsapState {
  const Hypergraph& g;
  std::int64_t k;
  std::int64_t gmin;
  NodeSet alive;
  EdgeSet alive_edges;
  std::vector<SupportingTable> tables;
  RemovalQueue pq;
  Worklist<EdgeId> ec;
  GnbrWorkspace ws;
  GnbrWorkspace verify_ws;
  bool verify_bounds;

  AsapState(const Hypergraph& graph, std::int64_t k_in, std::int64_t g_in, NodeSet alive_in,
            bool verify)
      : g(graph),
        k(k_in),
        gmin(g_in),
        alive(std::move(alive_in)),
        alive_edges(intersecting_edges(graph, alive)),
        tables(graph.node_count()),
        ec(graph.edge_count()),
        ws(graph.node_count()),
        verify_ws(graph.node_count()),
        verify_bounds(verify) {}

  std::int64_t true_nbr_size(NodeId v) {
    return static_cast<std::int64_t>(
        g_neighbours(g, v, alive, alive_edges, gmin, verify_ws, nullptr).size());
  }

  void require_sound(std::int64_t lower_bound, std::int64_t truth, const char* what) {
    if (lower_bound > truth) {
      throw std::logic_error(std::string(what) + " exceeded the true neighbour count");
    }
  }

  // Removes v given its exact neighbour map: queues its alive hyperedges for
  // recheck, drops its table, and records the lost neighbour on every
  // surviving g-neighbour, reprioritising them in the queue.
  void remove_node(NodeId v, const NbrMap& nbrs, IterationStats& stats,
                   std::vector<NodeId>* removed_trace) {
    for (EdgeId e : g.incident_edges(v)) {
      if (alive_edges.contains(e)) ec.add(e);
    }
    alive.remove(v);
    ++stats.nodes_removed;
    if (pq.contains(v)) pq.remove(v, tables[v].node_cnt());
    tables[v].clear();
    for (const auto& [w, sup] : nbrs) {
      if (pq.contains(w)) pq.remove(w, tables[w].node_cnt());
      tables[w].bump_node_cnt();
      pq.push(w, tables[w].node_cnt());
    }
    if (removed_trace) removed_trace->push_back(v);
  }
};

}  // namespace

PeelOutcome asap(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                 const AsapOptions& options, AsapTrace* trace) {
  auto t_total = Clock::now();
  RunReport report;
  report.algo = "asap";

  KgResult kg = kg_core(g, k, gmin);
  report.gnbr_calls_kg = kg.gnbr_calls;
  report.wall_ms_kg = ms_since(t_total);

  auto t_post = Clock::now();
  AsapState st(g, k, gmin, std::move(kg.alive), options.verify_bounds);

  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!st.alive.contains(v)) continue;
    if (options.exact_seed) {
      st.tables[v].rebuild(
          g_neighbours(g, v, st.alive, st.alive_edges, gmin, st.ws, &report.gnbr_calls_post));
    } else {
      st.tables[v].seed(gmin, kg.nbr_count[v]);
    }
  }

  for (EdgeId e : st.alive_edges.to_sorted_vector()) st.ec.add(e);
  Worklist<NodeId> vc(g.node_count());

  while (!st.ec.empty()) {
    ++report.iterations;
    IterationStats stats;
    AsapIterationTrace* it = nullptr;
    if (trace) it = &trace->iterations.emplace_back();

    for (EdgeId e : st.ec.drain_sorted()) {
      Fraction f = fraction(g, e, st.alive);
      if (!below(f, p)) continue;
      std::vector<NodeId> alive_members;
      for (NodeId u : g.edge_members(e)) {
        if (st.alive.contains(u)) alive_members.push_back(u);
      }
      // A weak hyperedge with a single alive member cannot support any
      // surviving pair, so its removal needs no recheck of that member.
      if (alive_members.size() > 1) {
        for (NodeId u : alive_members) {
          st.tables[u].bump_edge_cnt();
          vc.add(u);
        }
      }
      st.alive_edges.remove(e);
      ++stats.edges_removed;
      if (it) it->removed_edges.emplace_back(e, f);
    }

    std::vector<NodeId> candidates = vc.drain_sorted();
    if (it) {
      for (NodeId v : candidates) {
        it->edge_cnt_after_edge_phase.emplace_back(v, st.tables[v].edge_cnt());
      }
    }

    for (NodeId v : candidates) {
      std::int64_t truth = st.verify_bounds ? st.true_nbr_size(v) : 0;
      std::int64_t lb = st.tables[v].edge_lower_bound(gmin);
      ++report.edge_lb_calls;
      // The bound defers neighbour-removal staleness to the queue phase, so
      // up to node_cnt of the counted entries may already be gone.
      if (st.verify_bounds) {
        st.require_sound(lb - st.tables[v].node_cnt(), truth, "edge_lower_bound");
      }
      AsapCandidateEvent ev{v, lb, false, -1, false};
      if (lb < k) {
        NbrMap nbrs =
            g_neighbours(g, v, st.alive, st.alive_edges, gmin, st.ws, &report.gnbr_calls_post);
        ev.recomputed = true;
        ev.exact_size = static_cast<std::int64_t>(nbrs.size());
        if (ev.exact_size < k) {
          st.remove_node(v, nbrs, stats, it ? &it->removed_nodes : nullptr);
          ev.removed = true;
        } else if (st.pq.contains(v)) {
          st.pq.remove(v, st.tables[v].node_cnt());
          st.tables[v].rebuild(nbrs);
          st.pq.push(v, 0);
        } else {
          st.tables[v].rebuild(nbrs);
        }
      } else {
        ++report.edge_lb_skips;
      }
      if (it) it->candidate_events.push_back(ev);
    }

    while (!st.pq.empty()) {
      NodeId v = st.pq.pop();
      std::int64_t truth = st.verify_bounds ? st.true_nbr_size(v) : 0;
      bool node_only_staleness = !st.tables[v].edge_touched();
      std::int64_t lb = st.tables[v].node_lower_bound();
      ++report.node_lb_calls;
      if (st.verify_bounds) {
        st.require_sound(lb, truth, "node_lower_bound");
        if (node_only_staleness && lb != truth) {
          throw std::logic_error("node_lower_bound lost exactness without edge removals");
        }
      }
      AsapNodeEvent ev{v, lb, false, -1, false};
      if (lb < k) {
        NbrMap nbrs =
            g_neighbours(g, v, st.alive, st.alive_edges, gmin, st.ws, &report.gnbr_calls_post);
        ev.recomputed = true;
        ev.exact_size = static_cast<std::int64_t>(nbrs.size());
        if (ev.exact_size < k) {
          st.remove_node(v, nbrs, stats, it ? &it->removed_nodes : nullptr);
          ev.removed = true;
        } else {
          st.tables[v].rebuild(nbrs);
        }
      } else {
        ++report.node_lb_skips;
      }
      if (it) it->node_events.push_back(ev);
    }

    report.per_iteration.push_back(stats);
    if (it) it->ec_next = st.ec.peek_sorted();
  }

  CoreResult core{std::move(st.alive), std::move(st.alive_edges), PeelParams{k, gmin, p}};
  fill_common_report(report, g, k, gmin, p, core);
  report.wall_ms_post = ms_since(t_post);
  report.wall_ms_total = ms_since(t_total);
  check_iteration_bound(g, report);
  return PeelOutcome{std::move(core), std::move(report)};
}

}  // namespace hypercore
