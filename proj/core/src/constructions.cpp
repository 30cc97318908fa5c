#include "ucayley/constructions.hpp"

#include <algorithm>
#include <set>

#include "ucayley/error.hpp"
#include "ucayley/indsets.hpp"

namespace ucayley {

namespace {

// 1-based residue of x mod n in 1..n.
unsigned wrap(long long x, unsigned n) {
  const long long m = ((x % n) + n) % n;
  return m == 0 ? n : static_cast<unsigned>(m);
}

bool matrix_less(const MatrixElem& a, const MatrixElem& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end());
}

}  // namespace

MatrixElem reduced_diagonal(const ReducedDiagonalSpec& spec, const RingHandle& field) {
  const unsigned n = spec.n;
  if (n < 1 || spec.k < 1 || spec.k > n || spec.l < 1 || spec.l > n) {
    throw std::out_of_range("reduced_diagonal: need 1 <= k, l <= n");
  }
  if (spec.coeffs.size() != n - 1) throw std::invalid_argument("reduced_diagonal: expected n-1 coefficients");
  for (Elem a : spec.coeffs) {
    if (a >= field.order()) throw std::out_of_range("reduced_diagonal: coefficient outside the field");
  }
  MatrixElem m(n);
  for (unsigned i = 1; i <= n; ++i) {
    if (i == spec.l) continue;
    const unsigned j = wrap(static_cast<long long>(i) + spec.k, n);
    const unsigned sub = wrap(static_cast<long long>(i) - spec.l, n);
    m.at(i - 1, j - 1) = spec.coeffs[sub - 1];
  }
  return m;
}

std::vector<MatrixElem> d_family(unsigned n, const RingHandle& field) {
  if (n < 1) throw std::out_of_range("d_family: n >= 1");
  const std::uint64_t q = field.order();
  std::uint64_t combos = 1;
  for (unsigned i = 0; i + 1 < n; ++i) combos *= q;
  std::vector<MatrixElem> out;
  for (unsigned k = 1; k <= n; ++k) {
    for (std::uint64_t code = 0; code < combos; ++code) {
      ReducedDiagonalSpec s{n, k, k, std::vector<Elem>(n - 1)};
      std::uint64_t c = code;
      for (unsigned i = 0; i + 1 < n; ++i) {
        s.coeffs[i] = static_cast<Elem>(c % q);
        c /= q;
      }
      out.push_back(reduced_diagonal(s, field));
    }
  }
  std::sort(out.begin(), out.end(), matrix_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MatrixElem row_mix(const MatrixElem& a, const MatrixElem& d, const VertexSet& rows_from_d) {
  if (a.size() != d.size()) throw DomainError("row_mix: size mismatch");
  const unsigned n = a.size();
  MatrixElem out = a;
  for (Vertex i : rows_from_d) {
    if (i >= n) throw std::out_of_range("row_mix: row index out of range");
    for (unsigned j = 0; j < n; ++j) out.at(i, j) = d.at(i, j);
  }
  return out;
}

MatrixElem avoidance_partner(const MatrixElem& a, const RingHandle& field) {
  const unsigned n = a.size();
  if (n <= 1) throw DomainError("avoidance_partner: needs n > 1");
  if (a.is_zero()) throw DomainError("avoidance_partner: A must be nonzero");
  unsigned row = 0, col = 0;
  bool hit = false;
  for (unsigned i = 0; i < n && !hit; ++i) {
    for (unsigned j = 0; j < n && !hit; ++j) {
      if (a.at(i, j) != 0) {
        row = i;
        col = j;
        hit = true;
      }
    }
  }
  const unsigned k = wrap(static_cast<long long>(col) - row, n);
  MatrixElem zeroed = a;
  for (unsigned j = 0; j < n; ++j) zeroed.at(row, j) = 0;
  const MatrixElem d = reduced_diagonal({n, k, row + 1, std::vector<Elem>(n - 1, field.one())}, field);
  return matrix_sub(field, zeroed, d);
}

bool has_doubled_diagonal_zeros(const MatrixElem& a) {
  const unsigned n = a.size();
  for (unsigned k = 1; k <= n; ++k) {
    if (a.at(k - 1, wrap(2LL * k, n) - 1) != 0) return false;
  }
  return true;
}

MatrixElem permuted_identity(unsigned n, const RingHandle& field) {
  if (n < 2) throw std::out_of_range("permuted_identity: n >= 2");
  MatrixElem m(n);
  for (unsigned i = 0; i + 2 < n; ++i) m.at(i, i) = field.one();
  m.at(n - 2, n - 1) = field.one();
  m.at(n - 1, n - 2) = field.one();
  return m;
}

VertexSet zero_row_family(const RingHandle& matrix_ring, unsigned row) {
  const unsigned n = matrix_ring.matrix_size();
  if (row >= n) throw std::out_of_range("zero_row_family: row out of range");
  std::vector<Vertex> out;
  for (std::uint64_t x = 0; x < matrix_ring.order(); ++x) {
    const MatrixElem m = matrix_ring.to_matrix(static_cast<Elem>(x));
    const auto r = m.row(row);
    if (std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; })) out.push_back(static_cast<Vertex>(x));
  }
  return VertexSet(std::move(out));
}

VertexSet to_vertex_set(const RingHandle& matrix_ring, const std::vector<MatrixElem>& matrices) {
  std::vector<Vertex> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(matrix_ring.from_matrix(m));
  return VertexSet(std::move(out));
}

ProductWitness product_witness(const RingHandle& r, unsigned n, const RingHandle& field, const GraphLimits& limits) {
  if (n <= 1) throw DomainError("product_witness: needs n > 1");
  if (!field.spec() || !field.spec()->is_field()) throw DomainError("product_witness: field handle must come from a field spec");
  const RingHandle mat = make_ring(matrix_ring(n, *field.spec()));
  const auto fiber = static_cast<Vertex>(mat.order());
  if (r.order() * fiber > limits.max_vertices) {
    throw CapacityError("product_witness: product graph exceeds the vertex cap");
  }
  ProductWitness w;
  w.base_maximal = greedy_extend(build_graph(r, limits), {});
  std::vector<Vertex> witness, full;
  for (std::uint64_t x = 0; x < r.order(); ++x) witness.push_back(static_cast<Vertex>(x) * fiber);
  for (Vertex m : w.base_maximal) {
    for (Vertex a = 0; a < fiber; ++a) {
      full.push_back(m * fiber + a);
      if (!mat.is_unit(a)) witness.push_back(m * fiber + a);
    }
  }
  w.witness = VertexSet(std::move(witness));
  w.full_fiber = VertexSet(std::move(full));
  return w;
}

std::vector<VertexSet> refutation_seeds(const RingHandle& r, const GraphLimits& limits) {
  if (!r.spec()) return {};
  const RingSpec& spec = *r.spec();
  if (const auto* m = std::get_if<MatrixSpec>(&spec.node); m && m->size >= 3 && m->base->is_field()) {
    return {to_vertex_set(r, d_family(m->size, r.base())), zero_row_family(r, 0)};
  }
  if (const auto* p = std::get_if<ProductSpec>(&spec.node); p && p->factors.size() == 2) {
    const auto* last = std::get_if<MatrixSpec>(&p->factors[1].node);
    if (last && last->size >= 2 && last->base->is_field()) {
      const ProductWitness w = product_witness(r.factor(0), last->size, r.factor(1).base(), limits);
      return {w.witness, w.full_fiber};
    }
  }
  return {};
}

}  // namespace ucayley
