#include <algorithm>

#include "ucayley/error.hpp"
#include "ucayley/ring.hpp"

namespace ucayley {

namespace {

bool in_radical(const RingHandle& r, Elem a) {
  const RingSpec& spec = *r.spec();
  if (const auto* z = std::get_if<IntegersModSpec>(&spec.node)) {
    std::uint64_t squarefree = 1;
    for (auto p : prime_divisors(z->modulus)) squarefree *= p;
    return a % squarefree == 0;
  }
  if (spec.is_galois_field()) return a == 0;
  if (r.is_matrix_ring()) {
    const MatrixElem m = r.to_matrix(a);
    const unsigned n = m.size();
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        if (r.is_triangular()) {
          // Off-diagonal entries are unconstrained; the base is a field.
          if (i == j && m.at(i, j) != 0) return false;
        } else if (!in_radical(r.base(), m.at(i, j))) {
          return false;
        }
      }
    }
    return true;
  }
  const auto parts = r.components(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!in_radical(r.factor(i), parts[i])) return false;
  }
  return true;
}

}  // namespace

VertexSet jacobson_radical_structured(const RingHandle& r) {
  if (!r.spec()) throw DomainError("structured radical needs a ring spec; " + r.name() + " has none");
  std::vector<Vertex> out;
  for (std::uint64_t a = 0; a < r.order(); ++a) {
    if (in_radical(r, static_cast<Elem>(a))) out.push_back(static_cast<Vertex>(a));
  }
  return VertexSet(std::move(out));
}

VertexSet jacobson_radical_bruteforce(const RingHandle& r, const RingLimits& limits) {
  if (r.order() > limits.max_bruteforce_radical) {
    throw CapacityError("quasi-regularity scan limited to rings of order " +
                        std::to_string(limits.max_bruteforce_radical) + "; " + r.name() + " has order " +
                        std::to_string(r.order()));
  }
  const auto n = static_cast<Elem>(r.order());
  const Elem one = r.one();
  std::vector<Vertex> out;
  for (Elem x = 0; x < n; ++x) {
    bool quasi_regular = true;
    for (Elem y = 0; y < n && quasi_regular; ++y) {
      quasi_regular = r.is_unit(r.sub(one, r.mul(y, x)));
    }
    if (quasi_regular) out.push_back(x);
  }
  return VertexSet(std::move(out));
}

VertexSet jacobson_radical(const RingHandle& r, const RingLimits& limits) {
  if (r.spec()) return jacobson_radical_structured(r);
  return jacobson_radical_bruteforce(r, limits);
}

bool is_two_sided_ideal(const RingHandle& r, const VertexSet& ideal) {
  if (ideal.empty() || !ideal.contains(0)) return false;
  if (ideal.elements().back() >= r.order()) return false;
  for (Vertex a : ideal) {
    for (Vertex b : ideal) {
      if (!ideal.contains(r.sub(a, b))) return false;
    }
  }
  for (std::uint64_t x = 0; x < r.order(); ++x) {
    const auto e = static_cast<Elem>(x);
    for (Vertex a : ideal) {
      if (!ideal.contains(r.mul(e, a)) || !ideal.contains(r.mul(a, e))) return false;
    }
  }
  return true;
}

QuotientRing quotient_ring(const RingHandle& r, const VertexSet& ideal, const RingLimits& limits) {
  if (!is_two_sided_ideal(r, ideal)) {
    throw DomainError("quotient_ring: the given set is not a two-sided ideal of " + r.name());
  }
  const std::uint64_t k = r.order() / ideal.size();
  if (k > limits.max_table_order) {
    throw CapacityError("quotient of order " + std::to_string(k) + " exceeds the table-ring cap");
  }
  const auto n = static_cast<Elem>(r.order());
  constexpr Elem kUnassigned = ~Elem{0};
  QuotientRing q;
  q.projection.assign(n, kUnassigned);
  // Scanning in index order makes each coset's smallest element its representative.
  for (Elem x = 0; x < n; ++x) {
    if (q.projection[x] != kUnassigned) continue;
    const auto coset = static_cast<Elem>(q.representative.size());
    q.representative.push_back(x);
    for (Vertex j : ideal) q.projection[r.add(x, j)] = coset;
  }
  const auto kk = static_cast<Elem>(q.representative.size());
  std::vector<Elem> add_table(std::size_t{kk} * kk), mul_table(std::size_t{kk} * kk);
  for (Elem a = 0; a < kk; ++a) {
    for (Elem b = 0; b < kk; ++b) {
      add_table[std::size_t{a} * kk + b] = q.projection[r.add(q.representative[a], q.representative[b])];
      mul_table[std::size_t{a} * kk + b] = q.projection[r.mul(q.representative[a], q.representative[b])];
    }
  }
  std::string name = r.name() + "/" + (ideal.size() == r.order() ? std::string("R") : "I" + std::to_string(ideal.size()));
  q.ring = make_table_ring(std::move(name), std::move(add_table), std::move(mul_table), q.projection[r.one()]);
  return q;
}

}  // namespace ucayley
