#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "ucayley/cayley.hpp"
#include "ucayley/error.hpp"

using namespace ucayley;

namespace {

UGraph complete(std::size_t n) {
  UGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("build_graph examples") {
  const UGraph z4 = build_graph(make_ring("Z(4)"));
  CHECK(z4.edges() == EdgeList{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(build_graph(make_ring("GF(3)")) == complete(3));
  const UGraph z6 = build_graph(make_ring("Z(6)"));
  CHECK(z6.edges() == EdgeList{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  GraphLimits tiny{10};
  CHECK_THROWS_AS(build_graph(make_ring("M(2,GF(2))"), tiny), CapacityError);
}

TEST_CASE("graph basics") {
  UGraph g(3);
  g.add_edge(2, 0);
  CHECK(g.adjacent(0, 2));
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.regular_degree().has_value());
  CHECK_THROWS(g.add_edge(1, 1));
}

TEST_CASE("conjunction_product examples") {
  const UGraph z2 = build_graph(make_ring("Z(2)"));
  const UGraph z3 = build_graph(make_ring("Z(3)"));
  const UGraph tensor = conjunction_product(z2, z3);
  std::vector<Vertex> crt(6);
  for (Vertex x = 0; x < 6; ++x) crt[(x % 2) * 3 + x % 3] = x;
  CHECK(relabel(tensor, crt) == build_graph(make_ring("Z(6)")));
  CHECK(conjunction_product(complete(4), UGraph(3)).edge_count() == 0);
  const UGraph k22 = conjunction_product(complete(2), complete(2));
  CHECK(k22.edges() == EdgeList{{0, 3}, {1, 2}});
}

TEST_CASE("export_dot examples") {
  CHECK(export_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  const std::string empty = export_dot(UGraph(3));
  CHECK(empty.find("--") == std::string::npos);
  CHECK(empty.find("  2;") != std::string::npos);
  const std::string z4 = export_dot(build_graph(make_ring("Z(4)")));
  CHECK(std::count(z4.begin(), z4.end(), '\n') == 2 + 4 + 4);
}

TEST_CASE("independence predicates") {
  const UGraph c6 = build_graph(make_ring("Z(6)"));
  CHECK(is_independent(c6, {0, 3}));
  CHECK(is_maximal_independent(c6, {0, 3}));
  CHECK_FALSE(is_maximal_independent(c6, {0, 2}));
  CHECK_FALSE(is_independent(c6, {0, 1}));
}

TEST_CASE("graph properties on random rings") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const RingHandle r = make_ring(gen::random_spec(rng, 256));
    INFO(r.name());
    const UGraph g = build_graph(r);
    CHECK(g == oracle::graph_by_definition(r));
    CHECK(g.regular_degree() == (r.order() == 1 ? 0 : r.unit_count()));
    for (int k = 0; k < 5; ++k) {
      CHECK(translation_is_automorphism(r, g, static_cast<Elem>(gen::pick(rng, 0, r.order() - 1))));
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v : VertexSet::from_bitset(g.neighbors(u))) CHECK(g.adjacent(v, u));
    }
  }
}

TEST_CASE("product rings give conjunction products") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    const RingSpec a = gen::random_spec(rng, 16), b = gen::random_spec(rng, 16);
    const RingHandle ra = make_ring(a), rb = make_ring(b);
    const RingHandle p = make_ring(product_ring({a, b}));
    INFO(p.name());
    std::vector<Vertex> perm(p.order());
    for (Elem x = 0; x < ra.order(); ++x) {
      for (Elem y = 0; y < rb.order(); ++y) {
        const Elem parts[] = {x, y};
        perm[x * rb.order() + y] = p.from_components(parts);
      }
    }
    CHECK(relabel(conjunction_product(build_graph(ra), build_graph(rb)), perm) == build_graph(p));
  }
}

}  // TEST_SUITE
