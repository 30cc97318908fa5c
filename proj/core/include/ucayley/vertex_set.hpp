#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ucayley/bitset.hpp"

namespace ucayley {

using Vertex = std::uint32_t;

/// Canonical set of vertex (or ring element) indices: strictly increasing.
/// The bitset view is materialized on demand via to_bitset().
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}
  explicit VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  static VertexSet from_bitset(const DynBitset& bits) {
    VertexSet out;
    out.items_.reserve(bits.count());
    bits.for_each([&](std::size_t v) { out.items_.push_back(static_cast<Vertex>(v)); });
    return out;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  std::span<const Vertex> elements() const { return items_; }

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  bool is_subset_of(const VertexSet& o) const {
    return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end());
  }

  DynBitset to_bitset(std::size_t universe) const {
    DynBitset bits(universe);
    for (Vertex v : items_) bits.set(v);
    return bits;
  }

  VertexSet intersection(const VertexSet& o) const {
    std::vector<Vertex> out;
    std::set_intersection(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  VertexSet with(Vertex v) const {
    std::vector<Vertex> out = items_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return VertexSet(std::move(out));
  }
  VertexSet without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(items_.size());
    for (Vertex x : items_) {
      if (x != v) out.push_back(x);
    }
    return from_sorted(std::move(out));
  }

  /// "{0,2,4}"
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(items_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  static VertexSet from_sorted(std::vector<Vertex> items) {
    VertexSet out;
    out.items_ = std::move(items);
    return out;
  }

  std::vector<Vertex> items_;
};

/// Facet order used throughout: by size, then lexicographic.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace ucayley
