#ifndef HYPERCORE_TYPES_HPP
#define HYPERCORE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hypercore {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Set over a dense id range [0, universe). Membership test, insert and
// remove are O(1); enumeration scans the universe.
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t universe, bool full = false)
      : bits_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

  bool contains(std::uint32_t id) const { return bits_[id] != 0; }

  void insert(std::uint32_t id) {
    if (!bits_[id]) {
      bits_[id] = 1;
      ++count_;
    }
  }

  void remove(std::uint32_t id) {
    if (bits_[id]) {
      bits_[id] = 0;
      --count_;
    }
  }

  std::size_t size() const { return count_; }
  std::size_t universe_size() const { return bits_.size(); }
  bool empty() const { return count_ == 0; }

  std::vector<std::uint32_t> to_sorted_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t id = 0; id < bits_.size(); ++id) {
      if (bits_[id]) out.push_back(id);
    }
    return out;
  }

  friend bool operator==(const DenseSet& a, const DenseSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

using NodeSet = DenseSet;
using EdgeSet = DenseSet;

// Raised when a text stream cannot be understood as a hypergraph file.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypercore

#endif
