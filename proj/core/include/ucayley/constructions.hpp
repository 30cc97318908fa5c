#pragma once

#include <vector>

#include "ucayley/cayley.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/vertex_set.hpp"

namespace ucayley {

/// Parameters of the reduced k-diagonal matrix D_{k,l}(a_1..a_{n-1}).
/// `k` and `l` are 1-based (1..n); coeffs[i-1] holds a_i.
struct ReducedDiagonalSpec {
  unsigned n = 1;
  unsigned k = 1;
  unsigned l = 1;
  std::vector<Elem> coeffs;
};

/// Entry (i,j) (1-based) is a_{i-l} when j - i ≡ k (mod n) and i ≠ l, else 0;
/// subscripts are taken mod n with representatives 1..n. Row l is zero.
MatrixElem reduced_diagonal(const ReducedDiagonalSpec& spec, const RingHandle& field);

/// D_k(a) = D_{k,k}(a) over all k and all coefficient vectors, deduplicated
/// (the zero matrix appears once) and sorted by matrix-ring index order.
/// Size n*(q^(n-1) - 1) + 1.
std::vector<MatrixElem> d_family(unsigned n, const RingHandle& field);

/// Rows listed in `rows_from_d` (0-based) come from d, the rest from a.
MatrixElem row_mix(const MatrixElem& a, const MatrixElem& d, const VertexSet& rows_from_d);

/// For nonzero A (n > 1): a non-unit B with A - B invertible. Uses the first
/// nonzero entry a_ij in row-major order, k = j - i mod n (0 -> n), and
/// B = A' - D_{k,i}(1..1) where A' is A with row i zeroed.
MatrixElem avoidance_partner(const MatrixElem& a, const RingHandle& field);

/// True iff entries (k, 2k mod n), 1-based with 0 -> n, are zero for all k.
bool has_doubled_diagonal_zeros(const MatrixElem& a);

/// diag(I_{n-2}, [[0,1],[1,0]]); requires n >= 2.
MatrixElem permuted_identity(unsigned n, const RingHandle& field);

/// Matrices with row `row` (0-based) equal to zero, as indices of `matrix_ring`.
VertexSet zero_row_family(const RingHandle& matrix_ring, unsigned row);

/// Indices of `matrices` in `matrix_ring`.
VertexSet to_vertex_set(const RingHandle& matrix_ring, const std::vector<MatrixElem>& matrices);

struct ProductWitness {
  /// N = (R × {0}) ∪ (M × X), X the non-units of M_n(F).
  VertexSet witness;
  /// M × M_n(F), a maximal set of size |M| q^(n^2).
  VertexSet full_fiber;
  /// M = greedy_extend(Γ(R), ∅).
  VertexSet base_maximal;
};

/// Sets in Γ(R × M_n(F)) with vertex (r, A) at index r * q^(n^2) + A, which is
/// the element order of prod(R, M(n,F)). Requires n > 1 and a spec for `field`.
ProductWitness product_witness(const RingHandle& r, unsigned n, const RingHandle& field,
                               const GraphLimits& limits = {});

/// Seeds for is_well_covered that refute well-coveredness quickly:
/// for M(n,F), n >= 3: D and a zero-row family; for prod(R, M(n,F)), n >= 2:
/// N and M × M_n(F). Empty for every other ring.
std::vector<VertexSet> refutation_seeds(const RingHandle& r, const GraphLimits& limits = {});

}  // namespace ucayley
