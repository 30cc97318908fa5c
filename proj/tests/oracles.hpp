#pragma once

// Brute-force reference implementations used only by tests. Each one follows
// a textbook definition and shares no algorithm with the library code it
// checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ucayley/cayley.hpp"
#include "ucayley/complex.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/vertex_set.hpp"

namespace oracle {

using ucayley::Complex;
using ucayley::Elem;
using ucayley::MatrixElem;
using ucayley::RingHandle;
using ucayley::UGraph;
using ucayley::Vertex;
using ucayley::VertexSet;

// Leibniz: sum over permutations of sign * prod a_{i,p(i)}.
inline Elem leibniz_det(const RingHandle& base, const MatrixElem& m) {
  const unsigned n = m.size();
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  Elem total = base.zero();
  do {
    int inversions = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    Elem term = base.one();
    for (unsigned i = 0; i < n; ++i) term = base.mul(term, m.at(i, p[i]));
    total = inversions % 2 ? base.sub(total, term) : base.add(total, term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Two-sided inverse by exhaustive search.
inline bool unit_by_search(const RingHandle& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y) {
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
  }
  return false;
}

inline bool nilpotent(const RingHandle& r, Elem x) {
  Elem p = x;
  for (std::uint64_t i = 0; i <= r.order(); ++i) {
    if (p == 0) return true;
    p = r.mul(p, x);
  }
  return false;
}

// For a finite ring, J(R) is the largest nil left ideal: x in J iff R*x is nil.
inline VertexSet radical_by_nilpotence(const RingHandle& r) {
  std::vector<Vertex> out;
  for (Elem x = 0; x < r.order(); ++x) {
    bool nil = true;
    for (Elem y = 0; y < r.order() && nil; ++y) nil = nilpotent(r, r.mul(y, x));
    if (nil) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

// Γ(R) straight from the definition, with units found by search.
inline UGraph graph_by_definition(const RingHandle& r) {
  std::vector<bool> unit(r.order());
  for (Elem x = 0; x < r.order(); ++x) unit[x] = unit_by_search(r, x);
  UGraph g(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    for (Elem y = x + 1; y < r.order(); ++y) {
      if (unit[r.sub(x, y)]) g.add_edge(x, y);
    }
  }
  return g;
}

inline std::vector<std::uint32_t> adjacency_masks(const UGraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

inline VertexSet from_mask(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v) {
    if (mask >> v & 1) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

// All maximal independent sets by scanning every subset (N <= 22), sorted.
inline std::vector<VertexSet> maximal_independent_by_subsets(const UGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true, maximal = true;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1) && (adj[v] & mask)) independent = false;
      if (!(mask >> v & 1) && !(adj[v] & mask)) maximal = false;
    }
    if (independent && maximal) out.push_back(from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t alpha_by_subsets(const UGraph& g) {
  std::size_t best = 0;
  for (const auto& s : maximal_independent_by_subsets(g)) best = std::max(best, s.size());
  return best;
}

inline bool face_of(const std::vector<VertexSet>& facets, const VertexSet& s) {
  return std::any_of(facets.begin(), facets.end(), [&](const VertexSet& f) { return s.is_subset_of(f); });
}

inline VertexSet subset_by_mask(const VertexSet& f, std::uint32_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mask >> i & 1) out.push_back(f[i]);
  }
  return VertexSet(std::move(out));
}

// Shelling condition by definition: for each i > 1 the faces of F_i lying in
// <F_1..F_{i-1}> form a complex whose facets all have size |F_i| - 1.
inline bool is_shelling_by_definition(const Complex& c, const std::vector<std::size_t>& order) {
  if (order.size() != c.facet_count()) return false;
  std::vector<std::size_t> seen = order;
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != i) return false;
  }
  std::vector<VertexSet> prior;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const VertexSet& f = c.facets()[order[step]];
    if (step > 0) {
      std::vector<VertexSet> common;
      for (std::uint32_t mask = 0; mask < (1u << f.size()); ++mask) {
        const VertexSet s = subset_by_mask(f, mask);
        if (face_of(prior, s)) common.push_back(s);
      }
      for (const auto& s : common) {
        const bool maximal =
            std::none_of(common.begin(), common.end(), [&](const VertexSet& t) { return t.size() > s.size() && s.is_subset_of(t); });
        if (maximal && s.size() + 1 != f.size()) return false;
      }
    }
    prior.push_back(f);
  }
  return true;
}

// Minimal non-faces by scanning every subset of the vertex set (N <= 16).
inline std::vector<VertexSet> minimal_nonfaces_by_subsets(const Complex& c) {
  std::vector<VertexSet> out;
  const std::size_t n = c.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const VertexSet s = from_mask(mask);
    if (face_of(c.facets(), s)) continue;
    bool minimal = true;
    for (Vertex v : s) minimal = minimal && face_of(c.facets(), s.without(v));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), ucayley::canonical_less);
  return out;
}

inline UGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  UGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
