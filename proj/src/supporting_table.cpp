#include "hypercore/supporting_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercore {

void SupportingTable::seed(std::int64_t gmin, std::int64_t count) {
  hist_.clear();
  if (count > 0) hist_[gmin] = count;
  total_ = count;
  node_cnt_ = 0;
  edge_cnt_ = 0;
  edge_touched_ = false;
}

void SupportingTable::rebuild(const NbrMap& nbrs) {
  hist_.clear();
  for (const auto& [node, sup] : nbrs) ++hist_[sup];
  total_ = static_cast<std::int64_t>(nbrs.size());
  node_cnt_ = 0;
  edge_cnt_ = 0;
  edge_touched_ = false;
}

void SupportingTable::clear() {
  hist_.clear();
  total_ = 0;
  node_cnt_ = 0;
  edge_cnt_ = 0;
  edge_touched_ = false;
}

std::int64_t SupportingTable::node_lower_bound() {
  std::int64_t c = node_cnt_;
  node_cnt_ = 0;
  while (c > 0 && !hist_.empty()) {
    auto last = std::prev(hist_.end());
    std::int64_t take = std::min(c, last->second);
    last->second -= take;
    total_ -= take;
    c -= take;
    if (last->second == 0) hist_.erase(last);
  }
  return total_;
}

std::int64_t SupportingTable::edge_lower_bound(std::int64_t gmin) {
  std::int64_t shift = edge_cnt_;
  edge_cnt_ = 0;
  if (shift == 0) return total_;
  std::map<std::int64_t, std::int64_t> shifted;
  std::int64_t total = 0;
  for (const auto& [key, count] : hist_) {
    if (key - shift >= gmin) {
      shifted.emplace(key - shift, count);
      total += count;
    }
  }
  hist_ = std::move(shifted);
  total_ = total;
  return total_;
}

void RemovalQueue::push(NodeId v, std::int64_t node_cnt) {
  if (queued_.size() <= v) queued_.resize(v + 1, 0);
  if (queued_[v]) throw std::logic_error("node already queued");
  entries_.insert(Entry{node_cnt, v});
  queued_[v] = 1;
}

void RemovalQueue::remove(NodeId v, std::int64_t node_cnt) {
  if (!contains(v)) throw std::logic_error("node not queued");
  entries_.erase(Entry{node_cnt, v});
  queued_[v] = 0;
}

NodeId RemovalQueue::pop() {
  if (entries_.empty()) throw std::logic_error("pop from empty queue");
  Entry top = *entries_.begin();
  entries_.erase(entries_.begin());
  queued_[top.node] = 0;
  return top.node;
}

}  // namespace hypercore
