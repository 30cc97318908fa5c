#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "ucayley/error.hpp"
#include "ucayley/ring.hpp"

using namespace ucayley;

TEST_SUITE("algebra-properties") {

TEST_CASE("spec text round-trips") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const RingSpec s = gen::random_spec(rng, 1 << 12);
    CHECK(parse_spec(to_string(s)) == s);
    CHECK(make_ring(s).order() == *spec_order(s));
  }
}

TEST_CASE("ring axioms on sampled triples") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const RingSpec s = gen::random_spec(rng, 512);
    const RingHandle r = make_ring(s);
    INFO(to_string(s));
    const auto any = [&] { return static_cast<Elem>(gen::pick(rng, 0, r.order() - 1)); };
    for (int k = 0; k < 200; ++k) {
      const Elem a = any(), b = any(), c = any();
      CHECK(r.add(a, b) == r.add(b, a));
      CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
      CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
      CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
      CHECK(r.add(a, r.neg(a)) == r.zero());
      CHECK(r.mul(r.one(), a) == a);
    }
  }
}

TEST_CASE("unit flags match inverse search") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const RingHandle r = make_ring(gen::random_spec(rng, 256));
    INFO(r.name());
    std::size_t count = 0;
    for (Elem x = 0; x < r.order(); ++x) {
      const bool unit = oracle::unit_by_search(r, x);
      CHECK(r.is_unit(x) == unit);
      count += unit;
    }
    CHECK(r.unit_count() == count);
  }
}

TEST_CASE("units are closed under negation and two-sided unit multiplication") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const RingHandle r = make_ring(gen::random_spec(rng, 1 << 12));
    const auto units = r.units();
    INFO(r.name());
    for (int k = 0; k < 200; ++k) {
      const Elem x = static_cast<Elem>(gen::pick(rng, 0, r.order() - 1));
      const Elem u = units[gen::pick(rng, 0, units.size() - 1)];
      const Elem v = units[gen::pick(rng, 0, units.size() - 1)];
      CHECK(r.is_unit(x) == r.is_unit(r.neg(x)));
      CHECK(r.is_unit(x) == r.is_unit(r.mul(r.mul(u, x), v)));
    }
  }
}

TEST_CASE("unit count of M_n(F_q) follows the product formula") {
  for (const auto& [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 7}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}}) {
    const RingHandle r = make_ring(matrix_ring(n, galois_field(q)));
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    std::uint64_t want = 1, qi = 1;
    for (unsigned i = 0; i < n; ++i, qi *= q) want *= qn - qi;
    CHECK(r.unit_count() == want);
  }
}

TEST_CASE("non-units of M_2(F) have a zero first row or a dependent second row") {
  for (std::uint64_t q : {2u, 3u}) {
    const RingHandle r = make_ring(matrix_ring(2, galois_field(q)));
    const RingHandle& f = r.base();
    for (Elem x = 0; x < r.order(); ++x) {
      const MatrixElem m = r.to_matrix(x);
      bool shaped = m.at(0, 0) == 0 && m.at(0, 1) == 0;
      for (Elem alpha = 0; alpha < q && !shaped; ++alpha) {
        shaped = m.at(1, 0) == f.mul(alpha, m.at(0, 0)) && m.at(1, 1) == f.mul(alpha, m.at(0, 1));
      }
      CHECK(!r.is_unit(x) == shaped);
    }
  }
}

TEST_CASE("structured radical matches both scans") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const RingHandle r = make_ring(gen::random_spec(rng, 128));
    INFO(r.name());
    const VertexSet j = jacobson_radical_structured(r);
    CHECK(j == jacobson_radical_bruteforce(r));
    CHECK(j == oracle::radical_by_nilpotence(r));
    CHECK(is_two_sided_ideal(r, j));
  }
}

TEST_CASE("det is multilinear in rows") {
  std::mt19937_64 rng(6);
  for (const char* base : {"Z(4)", "GF(3)", "GF(8)", "Z(12)"}) {
    const RingHandle b = make_ring(base);
    for (int t = 0; t < 50; ++t) {
      const unsigned n = static_cast<unsigned>(gen::pick(rng, 1, 4));
      const unsigned row = static_cast<unsigned>(gen::pick(rng, 0, n - 1));
      MatrixElem u = gen::random_matrix(rng, n, b.order());
      MatrixElem v = u, sum = u;
      for (unsigned j = 0; j < n; ++j) {
        v.at(row, j) = static_cast<Elem>(gen::pick(rng, 0, b.order() - 1));
        sum.at(row, j) = b.add(u.at(row, j), v.at(row, j));
      }
      CHECK(det(b, sum) == b.add(det(b, u), det(b, v)));
    }
  }
}

TEST_CASE("quotient by the radical is a ring homomorphism image") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const RingHandle r = make_ring(gen::random_spec(rng, 128));
    const QuotientRing q = quotient_ring(r, jacobson_radical(r));
    INFO(r.name());
    CHECK(q.ring.order() * jacobson_radical(r).size() == r.order());
    for (int k = 0; k < 100; ++k) {
      const Elem a = static_cast<Elem>(gen::pick(rng, 0, r.order() - 1));
      const Elem b = static_cast<Elem>(gen::pick(rng, 0, r.order() - 1));
      CHECK(q.projection[r.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
      CHECK(q.projection[r.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
    }
    CHECK(jacobson_radical_bruteforce(q.ring) == VertexSet{0});
  }
}

}  // TEST_SUITE
