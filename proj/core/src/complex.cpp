#include "ucayley/complex.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ucayley/error.hpp"

namespace ucayley {

Complex::Complex(std::size_t vertex_count, std::vector<VertexSet> faces) : n_(vertex_count) {
  std::sort(faces.begin(), faces.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    for (Vertex v : f) {
      if (v >= n_) throw std::out_of_range("Complex: face vertex out of range");
    }
    const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& g) { return f.is_subset_of(g); });
    if (!covered) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
}

Complex Complex::from_facets(std::size_t vertex_count, std::vector<VertexSet> facets) {
  Complex c;
  c.n_ = vertex_count;
  c.facets_ = std::move(facets);
  std::sort(c.facets_.begin(), c.facets_.end(), canonical_less);
  return c;
}

int Complex::dim() const {
  if (facets_.empty()) return -1;
  return static_cast<int>(facets_.back().size()) - 1;
}

bool Complex::contains_face(const VertexSet& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return s.is_subset_of(f); });
}

Complex independence_complex(const UGraph& g, const Budget& budget) {
  MaximalSets all = collect_maximal_independent(g, budget);
  if (all.stats.status != SearchStatus::complete) {
    throw BudgetExceeded("independence complex: maximal independent set enumeration exceeded its budget");
  }
  return Complex::from_facets(g.vertex_count(), std::move(all.sets));
}

bool is_pure(const Complex& c) {
  const auto& f = c.facets();
  return f.empty() || f.front().size() == f.back().size();
}

namespace {

// Calls fn on every k-subset of `items`, in lexicographic order.
template <typename Fn>
void for_each_subset(std::span<const Vertex> items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(subset);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Complex pure_skeleton(const Complex& c, int d, std::size_t max_faces) {
  if (d < 0 || d > c.dim()) {
    throw DomainError("pure_skeleton: dimension " + std::to_string(d) + " outside [0, " + std::to_string(c.dim()) + "]");
  }
  const auto k = static_cast<std::size_t>(d) + 1;
  std::set<VertexSet> faces;
  for (const auto& f : c.facets()) {
    if (f.size() < k) continue;
    for_each_subset(f.elements(), k, [&](const std::vector<Vertex>& s) {
      faces.insert(VertexSet(s));
      if (faces.size() > max_faces) throw CapacityError("pure_skeleton: more than " + std::to_string(max_faces) + " faces");
    });
  }
  return Complex::from_facets(c.vertex_count(), std::vector<VertexSet>(faces.begin(), faces.end()));
}

Codim1Result codim1_connected(const Complex& c) {
  if (!is_pure(c)) throw DomainError("codim1_connected: complex is not pure");
  const std::size_t t = c.facet_count();
  std::vector<std::size_t> parent(t);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Two facets are adjacent iff they share a ridge (a facet minus one vertex).
  std::map<VertexSet, std::size_t> ridge_owner;
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet& f = c.facets()[i];
    for (Vertex v : f) {
      auto [it, inserted] = ridge_owner.emplace(f.without(v), i);
      if (!inserted) {
        const std::size_t a = find(it->second), b = find(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < t; ++i) groups[find(i)].push_back(i);
  Codim1Result r;
  for (auto& [root, members] : groups) r.components.push_back(std::move(members));
  r.connected = r.components.size() <= 1;
  return r;
}

std::string to_string(ShellingStatus s) {
  switch (s) {
    case ShellingStatus::found: return "found";
    case ShellingStatus::none_exists: return "none_exists";
    case ShellingStatus::not_found_within_budget: return "not_found_within_budget";
  }
  return "?";
}

namespace {

class ShellingSearch {
 public:
  ShellingSearch(const Complex& c, const Budget& budget)
      : c_(c), budget_(budget), start_(std::chrono::steady_clock::now()) {
    for (const auto& f : c.facets()) bits_.push_back(f.to_bitset(c.vertex_count()));
    used_.assign(c.facet_count(), false);
  }

  // Facet f attaches to the prior facets iff every F \ G (G prior) contains a
  // vertex v for which F - {v} lies in some prior facet.
  bool attaches(std::size_t f, const std::vector<std::size_t>& prior) const {
    if (prior.empty()) return true;
    DynBitset ridge_vertices(c_.vertex_count());
    std::vector<DynBitset> diffs;
    diffs.reserve(prior.size());
    for (std::size_t g : prior) {
      DynBitset diff = bits_[f];
      diff.subtract(bits_[g]);
      if (diff.count() == 1) ridge_vertices |= diff;
      diffs.push_back(std::move(diff));
    }
    for (const auto& diff : diffs) {
      if (!diff.intersects(ridge_vertices)) return false;
    }
    return true;
  }

  bool search() {
    if (order_.size() == c_.facet_count()) return true;
    for (std::size_t f = 0; f < c_.facet_count(); ++f) {
      if (used_[f]) continue;
      if (!tick()) return false;
      if (!attaches(f, order_)) continue;
      used_[f] = true;
      order_.push_back(f);
      if (search()) return true;
      order_.pop_back();
      used_[f] = false;
      if (stopped_) return false;
    }
    return false;
  }

  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) stopped_ = true;
    if (budget_.max_seconds > 0 && (nodes_ & 255) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.max_seconds) stopped_ = true;
    }
    return !stopped_;
  }

  const Complex& c_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<DynBitset> bits_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

ShellingResult find_shelling(const Complex& c, const Budget& budget) {
  if (!is_pure(c)) throw DomainError("find_shelling: complex is not pure");
  ShellingResult r;
  if (c.facet_count() >= 2 && c.dim() >= 1 && !codim1_connected(c).connected) {
    r.status = ShellingStatus::none_exists;
    r.reason = "pure complex not connected in codimension 1";
    return r;
  }
  ShellingSearch s(c, budget);
  const bool found = s.search();
  r.nodes = s.nodes();
  if (found) {
    if (!verify_shelling(c, s.order())) throw std::logic_error("find_shelling: produced order fails verification");
    r.status = ShellingStatus::found;
    r.order = s.order();
    r.reason = "backtracking search";
  } else if (!s.stopped() && c.facet_count() <= kExhaustiveShellingFacets) {
    r.status = ShellingStatus::none_exists;
    r.reason = "exhaustive search over all facet orders";
  } else {
    r.status = ShellingStatus::not_found_within_budget;
    r.reason = s.stopped() ? "budget exhausted" : "search exhausted above the exhaustive-proof facet limit";
  }
  return r;
}

bool verify_shelling(const Complex& c, const std::vector<std::size_t>& order) {
  const std::size_t t = c.facet_count();
  if (order.size() != t) return false;
  std::vector<bool> seen(t, false);
  for (std::size_t f : order) {
    if (f >= t || seen[f]) return false;
    seen[f] = true;
  }
  // Independent replay: collect the intersections F_i ∩ F_j (j < i) and check
  // that every inclusion-maximal one has size |F_i| - 1.
  for (std::size_t i = 1; i < t; ++i) {
    const VertexSet& fi = c.facets()[order[i]];
    std::vector<VertexSet> meets;
    for (std::size_t j = 0; j < i; ++j) meets.push_back(fi.intersection(c.facets()[order[j]]));
    for (const auto& m : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(),
                                        [&](const VertexSet& o) { return o.size() > m.size() && m.is_subset_of(o); });
      if (maximal && m.size() + 1 != fi.size()) return false;
    }
  }
  return true;
}

std::vector<VertexSet> minimal_nonfaces(const Complex& c, std::size_t max_faces) {
  const std::size_t n = c.vertex_count();
  std::vector<DynBitset> facet_bits;
  for (const auto& f : c.facets()) facet_bits.push_back(f.to_bitset(n));
  auto is_face = [&](const std::vector<Vertex>& s) {
    DynBitset b(n);
    for (Vertex v : s) b.set(v);
    return std::any_of(facet_bits.begin(), facet_bits.end(), [&](const DynBitset& f) { return b.is_subset_of(f); });
  };

  std::vector<VertexSet> out;
  std::set<std::vector<Vertex>> level;
  std::vector<Vertex> vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (is_face({v})) {
      level.insert({v});
      vertices.push_back(v);
    } else {
      out.push_back(VertexSet{v});
    }
  }
  std::size_t total = level.size();
  while (!level.empty()) {
    std::set<std::vector<Vertex>> next;
    for (const auto& s : level) {
      for (Vertex v : vertices) {
        if (v <= s.back()) continue;
        std::vector<Vertex> t = s;
        t.push_back(v);
        // Every maximal proper subset must be a face for t to be a candidate.
        bool boundary_ok = true;
        for (std::size_t drop = 0; drop + 1 < t.size() && boundary_ok; ++drop) {
          std::vector<Vertex> sub;
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (i != drop) sub.push_back(t[i]);
          }
          boundary_ok = level.count(sub) > 0;
        }
        if (!boundary_ok) continue;
        if (is_face(t)) {
          next.insert(std::move(t));
          if (++total > max_faces) throw CapacityError("minimal_nonfaces: face count exceeds cap");
        } else {
          out.push_back(VertexSet(std::move(t)));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

std::string ideal_text(std::size_t n, const std::vector<VertexSet>& generators, const std::string& what) {
  std::ostringstream os;
  os << "-- " << what << ": " << n << " variables x_0..x_" << (n == 0 ? 0 : n - 1) << ", " << generators.size()
     << " generators\n";
  os << "S = QQ[x_0..x_" << (n == 0 ? 0 : n - 1) << "];\n";
  if (generators.empty()) {
    os << "I = ideal(0_S);\n";
    return os.str();
  }
  os << "I = ideal(\n";
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t i = 0; i < generators[g].size(); ++i) {
      if (i) os << "*";
      os << "x_" << generators[g][i];
    }
    os << (g + 1 < generators.size() ? ",\n" : "\n");
  }
  os << ");\n";
  return os.str();
}

}  // namespace

std::string export_stanley_reisner(const UGraph& g, const ExportLimits& limits) {
  if (g.vertex_count() > limits.max_variables) throw CapacityError("ideal export: too many variables");
  std::vector<VertexSet> gens;
  for (const auto& [u, v] : g.edges()) gens.push_back(VertexSet{u, v});
  return ideal_text(g.vertex_count(), gens, "edge ideal");
}

std::string export_stanley_reisner(const Complex& c, const ExportLimits& limits) {
  if (c.vertex_count() > limits.max_variables) throw CapacityError("ideal export: too many variables");
  return ideal_text(c.vertex_count(), minimal_nonfaces(c), "Stanley-Reisner ideal");
}

}  // namespace ucayley
