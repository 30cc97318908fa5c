#include "ucayley/cayley.hpp"

#include <sstream>
#include <stdexcept>

#include "ucayley/error.hpp"

namespace ucayley {

UGraph::UGraph(std::size_t n) : adj_(n, DynBitset(n)) {}

std::size_t UGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void UGraph::add_edge(Vertex u, Vertex v) {
  if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw DomainError("add_edge: self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<Vertex, Vertex>> UGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (std::size_t v = adj_[u].find_next(u + 1); v < adj_.size(); v = adj_[u].find_next(v + 1)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

std::optional<std::size_t> UGraph::regular_degree() const {
  if (adj_.empty()) return 0;
  const std::size_t d = adj_[0].count();
  for (const auto& row : adj_) {
    if (row.count() != d) return std::nullopt;
  }
  return d;
}

void UGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adj_.size()) throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

UGraph build_graph(const RingHandle& r, const GraphLimits& limits) {
  if (r.order() > limits.max_vertices) {
    throw CapacityError("graph of " + r.name() + " would have " + std::to_string(r.order()) +
                        " vertices; cap is " + std::to_string(limits.max_vertices));
  }
  const auto n = static_cast<Elem>(r.order());
  UGraph g(n);
  const auto units = r.units();
  for (Elem x = 0; x < n; ++x) {
    for (Elem u : units) {
      const Elem y = r.add(x, u);
      // y - x = u is a unit; the reverse difference -u is one too.
      if (y != x) g.add_edge(x, y);
    }
  }
  return g;
}

UGraph conjunction_product(const UGraph& g1, const UGraph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  UGraph g(n1 * n2);
  for (const auto& [a, c] : g1.edges()) {
    for (Vertex b = 0; b < n2; ++b) {
      const auto& nb = g2.neighbors(b);
      nb.for_each([&](std::size_t d) {
        // Each unordered pair {(a,b),(c,d)} with a~c, b~d; add_edge is idempotent.
        g.add_edge(static_cast<Vertex>(a * n2 + b), static_cast<Vertex>(c * n2 + d));
      });
    }
  }
  return g;
}

UGraph relabel(const UGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: permutation size mismatch");
  UGraph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool translation_is_automorphism(const RingHandle& r, const UGraph& g, Elem c) {
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(r.add(u, c), r.add(v, c))) return false;
  }
  return true;
}

std::string export_dot(const UGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (!g.labels().empty()) os << " [label=\"" << g.labels()[v] << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

bool is_independent(const UGraph& g, const VertexSet& s) {
  const DynBitset bits = s.to_bitset(g.vertex_count());
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(bits)) return false;
  }
  return true;
}

bool is_maximal_independent(const UGraph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  const DynBitset bits = s.to_bitset(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!bits.test(v) && !g.neighbors(v).intersects(bits)) return false;
  }
  return true;
}

}  // namespace ucayley
