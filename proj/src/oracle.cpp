#include "hypercore/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hypercore/kg_core.hpp"
#include "hypercore/kgp.hpp"
#include "hypercore/supporting_table.hpp"

namespace hypercore {

namespace {

std::vector<std::uint64_t> edge_masks(const Hypergraph& g) {
  if (g.node_count() > 64) {
    throw std::invalid_argument("oracle instances are limited to 64 nodes");
  }
  std::vector<std::uint64_t> masks(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (NodeId v : g.edge_members(e)) masks[e] |= std::uint64_t{1} << v;
  }
  return masks;
}

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::int64_t pair_support(const std::vector<std::uint64_t>& masks,
                          const std::vector<std::uint8_t>& edge_alive, NodeId u, NodeId v) {
  std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  std::int64_t sup = 0;
  for (std::size_t e = 0; e < masks.size(); ++e) {
    if (edge_alive[e] && (masks[e] & both) == both) ++sup;
  }
  return sup;
}

std::int64_t supported_nbr_count(const std::vector<std::uint64_t>& masks,
                                 const std::vector<std::uint8_t>& edge_alive,
                                 std::uint64_t alive_nodes, NodeId v, std::int64_t gmin) {
  std::int64_t count = 0;
  for (std::uint64_t rest = alive_nodes & ~(std::uint64_t{1} << v); rest != 0;
       rest &= rest - 1) {
    NodeId u = static_cast<NodeId>(std::countr_zero(rest));
    if (pair_support(masks, edge_alive, u, v) >= gmin) ++count;
  }
  return count;
}

NodeSet to_node_set(std::size_t n, std::uint64_t bits) {
  NodeSet out(n);
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    out.insert(static_cast<NodeId>(std::countr_zero(rest)));
  }
  return out;
}

}  // namespace

NodeSet oracle_kg(const Hypergraph& g, std::int64_t k, std::int64_t gmin) {
  if (k < 1 || gmin < 1) throw std::invalid_argument("k and g must be at least 1");
  auto masks = edge_masks(g);
  std::vector<std::uint8_t> edge_alive(g.edge_count(), 1);
  std::uint64_t alive = full_mask(g.node_count());
  for (;;) {
    std::uint64_t drop = 0;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      NodeId v = static_cast<NodeId>(std::countr_zero(rest));
      if (supported_nbr_count(masks, edge_alive, alive, v, gmin) < k) {
        drop |= std::uint64_t{1} << v;
      }
    }
    if (drop == 0) break;
    alive &= ~drop;
  }
  return to_node_set(g.node_count(), alive);
}

OracleResult oracle_kgp(const Hypergraph& g, std::int64_t k, std::int64_t gmin,
                        const Threshold& p) {
  if (k < 1 || gmin < 1) throw std::invalid_argument("k and g must be at least 1");
  auto masks = edge_masks(g);
  std::vector<std::uint8_t> edge_alive(g.edge_count(), 1);
  std::uint64_t alive = full_mask(g.node_count());
  for (;;) {
    bool changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!edge_alive[e]) continue;
      Fraction f{std::popcount(masks[e] & alive),
                 static_cast<std::int64_t>(g.cardinality(e))};
      if (below(f, p)) {
        edge_alive[e] = 0;
        changed = true;
      }
    }
    std::uint64_t drop = 0;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      NodeId v = static_cast<NodeId>(std::countr_zero(rest));
      if (supported_nbr_count(masks, edge_alive, alive, v, gmin) < k) {
        drop |= std::uint64_t{1} << v;
      }
    }
    if (drop != 0) {
      alive &= ~drop;
      changed = true;
    }
    if (!changed) break;
  }
  EdgeSet strong(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_alive[e] && (masks[e] & alive) != 0) strong.insert(e);
  }
  return OracleResult{to_node_set(g.node_count(), alive), std::move(strong)};
}

bool check_maximality(const Hypergraph& g, std::int64_t k, std::int64_t gmin, const Threshold& p,
                      const NodeSet& candidate) {
  return oracle_kgp(g, k, gmin, p).nodes == candidate;
}

const std::string& toy_text() {
  static const std::string text =
      "# reference instance: 15 nodes, 6 hyperedges\n"
      "v1 v2 v3 v4 v5 v6 v7 v8 v9 v10 v11 v12\n"
      "v5 v6 v7 v8 v9 v10 v11 v12\n"
      "v6 v7 v8 v9 v10\n"
      "v6 v7 v8 v9\n"
      "v10 v12\n"
      "v11 v12 v13 v14 v15\n";
  return text;
}

Hypergraph toy() {
  std::istringstream in(toy_text());
  return load_hypergraph(in).graph;
}

NodeId toy_node(int i) { return static_cast<NodeId>(i - 1); }
EdgeId toy_edge(int i) { return static_cast<EdgeId>(i - 1); }

namespace {

NodeSet nodes_of(const Hypergraph& g, std::initializer_list<int> vs) {
  NodeSet out(g.node_count());
  for (int v : vs) out.insert(toy_node(v));
  return out;
}

NodeSet node_range(const Hypergraph& g, int lo, int hi) {
  NodeSet out(g.node_count());
  for (int v = lo; v <= hi; ++v) out.insert(toy_node(v));
  return out;
}

std::string show_nodes(const NodeSet& s) {
  std::string out;
  for (NodeId v : s.to_sorted_vector()) {
    if (!out.empty()) out += ' ';
    out += 'v' + std::to_string(v + 1);
  }
  return out.empty() ? "(empty)" : out;
}

std::string show_edges(const EdgeSet& s) {
  std::string out;
  for (EdgeId e : s.to_sorted_vector()) {
    if (!out.empty()) out += ' ';
    out += 'e' + std::to_string(e + 1);
  }
  return out.empty() ? "(empty)" : out;
}

std::string show_nbrs(const NbrMap& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += 'v' + std::to_string(m[i].node + 1) + ':' + std::to_string(m[i].support);
  }
  return out + "}";
}

std::string show_hist(const std::map<std::int64_t, std::int64_t>& h) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, count] : h) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(key) + ':' + std::to_string(count);
  }
  return out + "}";
}

class ProofLog {
 public:
  void check(const std::string& name, bool pass, const std::string& detail) {
    checks_.push_back(ProofCheck{name, pass, detail});
  }

  std::vector<ProofCheck> take() { return std::move(checks_); }

 private:
  std::vector<ProofCheck> checks_;
};

}  // namespace

std::vector<ProofCheck> replay_fixture_proof() {
  ProofLog log;
  std::istringstream in(toy_text());
  LoadResult loaded = load_hypergraph(in);
  const Hypergraph& g = loaded.graph;

  log.check("load-shape",
            g.node_count() == 15 && g.edge_count() == 6 && loaded.duplicate_edges_dropped == 0 &&
                g.check_consistency(),
            "15 nodes, 6 hyperedges, transpose consistent");

  EdgeSet all_edges(g.edge_count(), true);
  NodeSet all_nodes(g.node_count(), true);
  const NodeId v6 = toy_node(6);
  {
    bool ok = support(g, v6, toy_node(7), all_edges) == 4 &&
              support(g, v6, toy_node(10), all_edges) == 3 &&
              support(g, v6, toy_node(5), all_edges) == 2 &&
              support(g, v6, toy_node(11), all_edges) == 2 &&
              support(g, v6, toy_node(12), all_edges) == 2 &&
              support(g, v6, toy_node(1), all_edges) == 1;
    log.check("support-values", ok, "sup(v6,v7)=4 sup(v6,v10)=3 sup(v6,{v5,v11,v12})=2");
  }
  {
    NbrMap got = g_neighbours(g, v6, all_nodes, all_edges, 2);
    NbrMap want = {{toy_node(5), 2},  {toy_node(7), 4},  {toy_node(8), 4}, {toy_node(9), 4},
                   {toy_node(10), 3}, {toy_node(11), 2}, {toy_node(12), 2}};
    log.check("gnbr-v6-full", got == want, show_nbrs(got));
  }
  {
    EdgeSet without(g.edge_count(), true);
    without.remove(toy_edge(1));
    without.remove(toy_edge(6));
    NbrMap got = g_neighbours(g, v6, all_nodes, without, 2);
    NbrMap want = {{toy_node(7), 3}, {toy_node(8), 3}, {toy_node(9), 3}, {toy_node(10), 2}};
    log.check("gnbr-v6-without-e1-e6", got == want, show_nbrs(got));
  }

  Threshold p07 = Threshold::parse("0.7");
  NodeSet survivors = node_range(g, 5, 12);
  {
    Fraction f1 = fraction(g, toy_edge(1), survivors);
    Fraction f6 = fraction(g, toy_edge(6), survivors);
    bool ok = f1.num == 8 && f1.den == 12 && f6.num == 2 && f6.den == 5 &&
              classify_edge(g, toy_edge(1), survivors, p07) == EdgeStrength::weak &&
              classify_edge(g, toy_edge(6), survivors, p07) == EdgeStrength::weak &&
              classify_edge(g, toy_edge(2), survivors, p07) == EdgeStrength::strong;
    log.check("fractions-iter1", ok, "f(e1)=8/12 weak, f(e6)=2/5 weak, f(e2)=8/8 strong at 0.7");
  }
  {
    NodeSet final_core = node_range(g, 6, 9);
    Fraction f3 = fraction(g, toy_edge(3), final_core);
    bool ok = f3.num == 4 && f3.den == 5 &&
              classify_edge(g, toy_edge(3), final_core, Threshold::parse("0.8")) ==
                  EdgeStrength::strong &&
              classify_edge(g, toy_edge(3), final_core, Threshold::parse("0.81")) ==
                  EdgeStrength::weak;
    log.check("boundary-equality-strong", ok, "f(e3)=4/5: strong at 0.8, weak at 0.81");
  }

  {
    SupportingTable t;
    t.rebuild(g_neighbours(g, v6, all_nodes, all_edges, 2));
    std::map<std::int64_t, std::int64_t> want{{2, 3}, {3, 1}, {4, 3}};
    log.check("table-v6", t.histogram() == want && t.estimated_size() == 7,
              show_hist(t.histogram()) + " est 7");
  }
  {
    SupportingTable t;
    t.rebuild(g_neighbours(g, v6, all_nodes, all_edges, 2));
    t.bump_node_cnt();
    std::int64_t lb = t.node_lower_bound();
    std::map<std::int64_t, std::int64_t> want{{2, 3}, {3, 1}, {4, 2}};
    log.check("node-lb-consumes-max-key", lb == 6 && t.histogram() == want,
              "lb 6, hist " + show_hist(t.histogram()));
  }
  {
    SupportingTable t;
    t.seed(2, 2);
    for (int i = 0; i < 3; ++i) t.bump_node_cnt();
    log.check("node-lb-exhaustion", t.node_lower_bound() == 0 && t.histogram().empty(),
              "over-consumed table empties to 0");
  }
  {
    SupportingTable t;
    t.rebuild(g_neighbours(g, v6, all_nodes, all_edges, 2));
    t.bump_edge_cnt();
    t.bump_edge_cnt();
    std::int64_t lb = t.edge_lower_bound(2);
    std::map<std::int64_t, std::int64_t> want{{2, 3}};
    log.check("edge-lb-shifts-keys", lb == 3 && t.histogram() == want,
              "lb 3, hist " + show_hist(t.histogram()));
  }
  {
    SupportingTable t;
    t.rebuild(NbrMap{{toy_node(7), 3}, {toy_node(8), 3}, {toy_node(9), 3}, {toy_node(10), 2}});
    std::map<std::int64_t, std::int64_t> want{{2, 1}, {3, 3}};
    log.check("update-from-nbr-map", t.histogram() == want, show_hist(t.histogram()));
  }

  {
    KgResult kg = kg_core(g, 2, 2);
    NodeSet want = node_range(g, 5, 12);
    bool ok = kg.alive == want && kg.nbr_count[v6] == 7 && oracle_kg(g, 2, 2) == want;
    log.check("kg-core-2-2", ok, show_nodes(kg.alive) + ", count(v6)=7, oracle agrees");
  }

  NpaTrace npa_trace;
  PeelOutcome direct = npa(g, 2, 2, p07, &npa_trace);
  {
    bool ok = npa_trace.iterations.size() == 3;
    if (ok) {
      const auto& it1 = npa_trace.iterations[0];
      std::vector<std::pair<EdgeId, Fraction>> want_edges{{toy_edge(1), {8, 12}},
                                                          {toy_edge(6), {2, 5}}};
      std::vector<std::pair<NodeId, std::int64_t>> want_counts{
          {toy_node(5), 0}, {toy_node(6), 4},  {toy_node(7), 4},  {toy_node(8), 4},
          {toy_node(9), 4}, {toy_node(10), 5}, {toy_node(11), 0}, {toy_node(12), 1}};
      std::vector<NodeId> want_removed{toy_node(5), toy_node(11), toy_node(12)};
      std::vector<EdgeId> want_ec{toy_edge(2), toy_edge(5)};
      ok = it1.removed_edges == want_edges && it1.recomputed_counts == want_counts &&
           it1.removed_nodes == want_removed && it1.ec_next == want_ec;
    }
    log.check("npa-iteration-1", ok,
              "weak {e1:8/12, e6:2/5}; counts v5:0 v6..v9:4 v10:5 v11:0 v12:1; "
              "removed {v5,v11,v12}; recheck {e2,e5}");
  }
  {
    bool ok = npa_trace.iterations.size() == 3;
    if (ok) {
      const auto& it2 = npa_trace.iterations[1];
      std::vector<std::pair<EdgeId, Fraction>> want_edges{{toy_edge(2), {5, 8}},
                                                          {toy_edge(5), {1, 2}}};
      std::vector<NodeId> want_removed{toy_node(10)};
      std::vector<EdgeId> want_ec{toy_edge(3)};
      ok = it2.removed_edges == want_edges && it2.removed_nodes == want_removed &&
           it2.ec_next == want_ec;
    }
    log.check("npa-iteration-2", ok, "weak {e2:5/8, e5:1/2}; removed {v10}; recheck {e3}");
  }
  {
    bool ok = npa_trace.iterations.size() == 3 && npa_trace.iterations[2].removed_edges.empty() &&
              npa_trace.iterations[2].removed_nodes.empty() &&
              direct.core.strong_edges.contains(toy_edge(3));
    log.check("npa-iteration-3", ok, "e3 rechecked at 4/5 and survives; nothing removed");
  }

  AsapTrace asap_trace;
  PeelOutcome lazy = asap(g, 2, 2, p07, AsapOptions{true, false}, &asap_trace);
  {
    bool ok = asap_trace.iterations.size() == 3;
    if (ok) {
      const auto& it1 = asap_trace.iterations[0];
      std::vector<std::pair<NodeId, std::int64_t>> want_cnt;
      for (int v = 5; v <= 10; ++v) want_cnt.emplace_back(toy_node(v), 1);
      want_cnt.emplace_back(toy_node(11), 2);
      want_cnt.emplace_back(toy_node(12), 2);
      ok = it1.edge_cnt_after_edge_phase == want_cnt && it1.candidate_events.size() == 8;
      if (ok) {
        for (const auto& ev : it1.candidate_events) {
          ok = ok && ev.edge_lb == 0 && ev.recomputed;
        }
        std::vector<NodeId> want_removed{toy_node(5), toy_node(11), toy_node(12)};
        ok = ok && it1.removed_nodes == want_removed;
      }
    }
    log.check("asap-edge-phase-counters", ok,
              "edge_cnt 1 for v5..v10, 2 for v11,v12; seeded bounds collapse to 0; "
              "removed {v5,v11,v12}");
  }
  {
    bool ok = asap_trace.iterations.size() == 3;
    if (ok) {
      const auto& it1 = asap_trace.iterations[0];
      ok = it1.node_events.size() == 1;
      if (ok) {
        const auto& ev = it1.node_events[0];
        ok = ev.node == toy_node(10) && ev.node_lb == 4 && !ev.recomputed && !ev.removed;
      }
    }
    log.check("asap-node-phase-keeps-v10", ok,
              "after v12's removal node_cnt(v10)=1; node bound 4 >= k without recompute");
  }

  OracleResult oracle = oracle_kgp(g, 2, 2, p07);
  {
    NodeSet want_nodes = node_range(g, 6, 9);
    EdgeSet want_edges(g.edge_count());
    want_edges.insert(toy_edge(3));
    want_edges.insert(toy_edge(4));
    bool ok = direct.core.nodes == want_nodes && direct.core.strong_edges == want_edges &&
              lazy.core.nodes == want_nodes && lazy.core.strong_edges == want_edges &&
              oracle.nodes == want_nodes && oracle.strong_edges == want_edges;
    log.check("final-core-2-2-0.7", ok,
              "nodes {" + show_nodes(direct.core.nodes) + "}, strong {" +
                  show_edges(direct.core.strong_edges) + "}; npa = asap = oracle");
  }
  {
    std::vector<IterationStats> want{{3, 2}, {1, 2}, {0, 0}};
    bool ok = direct.report.per_iteration == want && lazy.report.per_iteration == want &&
              direct.report.iterations == 3 && lazy.report.iterations == 3;
    log.check("per-iteration-profile", ok, "removals (3n,2e), (1n,2e), (0,0) for both algorithms");
  }
  {
    bool ok = check_maximality(g, 2, 2, p07, direct.core.nodes) &&
              !check_maximality(g, 2, 2, p07, nodes_of(g, {6, 7}));
    log.check("maximality", ok, "result maximal; {v6,v7} is not");
  }
  {
    Threshold p0 = Threshold::parse("0");
    PeelOutcome d0 = npa(g, 2, 2, p0);
    PeelOutcome l0 = asap(g, 2, 2, p0, AsapOptions{true, false});
    OracleResult o0 = oracle_kgp(g, 2, 2, p0);
    NodeSet want = node_range(g, 5, 12);
    bool ok = d0.core.nodes == want && l0.core.nodes == want && o0.nodes == want &&
              d0.core.strong_edges.size() == 6 && l0.core.strong_edges == d0.core.strong_edges &&
              o0.strong_edges == d0.core.strong_edges;
    log.check("p-zero-collapses", ok, "p=0 keeps the degree-style core and all 6 hyperedges");
  }
  {
    Threshold p1 = Threshold::parse("1");
    PeelOutcome d1 = npa(g, 2, 2, p1);
    PeelOutcome l1 = asap(g, 2, 2, p1, AsapOptions{true, false});
    OracleResult o1 = oracle_kgp(g, 2, 2, p1);
    bool ok = d1.core.nodes.empty() && l1.core.nodes.empty() && o1.nodes.empty() &&
              d1.core.strong_edges.empty() && l1.core.strong_edges.empty() &&
              o1.strong_edges.empty();
    log.check("p-one-empties", ok, "p=1 peels the reference instance to nothing");
  }

  return log.take();
}

std::string format_proof_log(const std::vector<ProofCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "ok   " : "FAIL ";
    out += c.name;
    out += ": ";
    out += c.detail;
    out += '\n';
  }
  return out;
}

Hypergraph minimize_counterexample(
    const Hypergraph& g, const std::function<bool(const Hypergraph&)>& still_interesting) {
  std::vector<std::vector<NodeId>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge_members(e));
  std::vector<std::string> labels;
  for (NodeId v = 0; v < g.node_count(); ++v) labels.push_back(g.label(v));

  auto rebuild = [&](const std::vector<std::vector<NodeId>>& es) {
    return Hypergraph::build(labels.size(), es, labels).graph;
  };

  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<std::vector<NodeId>> fewer = edges;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      if (still_interesting(rebuild(fewer))) {
        edges = std::move(fewer);
        shrunk = true;
        break;
      }
    }
  }

  std::vector<std::uint8_t> used(labels.size(), 0);
  for (const auto& members : edges) {
    for (NodeId v : members) used[v] = 1;
  }
  std::vector<NodeId> remap(labels.size(), 0);
  std::vector<std::string> kept_labels;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (used[v]) {
      remap[v] = static_cast<NodeId>(kept_labels.size());
      kept_labels.push_back(labels[v]);
    }
  }
  std::vector<std::vector<NodeId>> remapped = edges;
  for (auto& members : remapped) {
    for (NodeId& v : members) v = remap[v];
  }
  Hypergraph compacted = Hypergraph::build(kept_labels.size(), remapped, kept_labels).graph;
  if (still_interesting(compacted)) return compacted;
  return rebuild(edges);
}

}  // namespace hypercore
