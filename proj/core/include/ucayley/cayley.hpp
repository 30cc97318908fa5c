#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucayley/bitset.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/vertex_set.hpp"

namespace ucayley {

/// Simple undirected graph with one adjacency bitset per vertex.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(std::size_t n);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  const DynBitset& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  /// Adds {u,v}; self-loops are rejected.
  void add_edge(Vertex u, Vertex v);

  /// Sorted list of edges with u < v.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  /// Optional per-vertex labels (ring element descriptions).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const UGraph& a, const UGraph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<DynBitset> adj_;
  std::vector<std::string> labels_;
};

struct GraphLimits {
  std::size_t max_vertices = std::size_t{1} << 14;
};

/// Unitary Cayley graph: x ~ y iff x - y is a unit. Throws CapacityError
/// above limits.max_vertices.
UGraph build_graph(const RingHandle& r, const GraphLimits& limits = {});

/// Conjunction (tensor) product; vertex (a, b) has index a * |V(g2)| + b.
UGraph conjunction_product(const UGraph& g1, const UGraph& g2);

/// Relabels vertices: vertex v of g becomes perm[v].
UGraph relabel(const UGraph& g, const std::vector<Vertex>& perm);

/// True iff v -> v + c is an automorphism of Γ(R), checked for the given c.
bool translation_is_automorphism(const RingHandle& r, const UGraph& g, Elem c);

/// Deterministic DOT text: nodes in index order, edges "u -- v" with u < v.
std::string export_dot(const UGraph& g, const std::string& name = "G");

/// True iff no two members are adjacent.
bool is_independent(const UGraph& g, const VertexSet& s);
/// True iff independent and every outside vertex has a neighbor inside.
bool is_maximal_independent(const UGraph& g, const VertexSet& s);

}  // namespace ucayley
