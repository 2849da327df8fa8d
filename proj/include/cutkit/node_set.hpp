#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cutkit {

using NodeId = std::uint32_t;

/// Fixed-universe bitset of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static NodeSet full(std::size_t universe) {
    NodeSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<NodeId>(i));
    return s;
  }
  static NodeSet of(std::size_t universe, std::initializer_list<NodeId> ids) {
    NodeSet s(universe);
    for (NodeId v : ids) s.insert(v);
    return s;
  }
  static NodeSet of(std::size_t universe, const std::vector<NodeId>& ids) {
    NodeSet s(universe);
    for (NodeId v : ids) s.insert(v);
    return s;
  }
  static NodeSet from_mask(std::size_t universe, std::uint64_t mask) {
    NodeSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask & low_mask(universe < 64 ? universe : 64);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(NodeId v) const { return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u); }
  void insert(NodeId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Low 64 bits; meaningful when universe <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  NodeSet complement() const {
    NodeSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  NodeSet& operator|=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  NodeSet& operator-=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  bool subset_of(const NodeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const NodeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or universe() when empty.
  NodeId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return static_cast<NodeId>(n_);
  }

  bool operator==(const NodeSet& o) const = default;

  /// Orders by sorted member list, lexicographically.
  std::strong_ordering operator<=>(const NodeSet& o) const {
    auto a = members();
    auto b = o.members();
    return a <=> b;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= low_mask(n_ % 64);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace cutkit
