#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucayley/ring_spec.hpp"
#include "ucayley/vertex_set.hpp"

namespace ucayley {

/// Element index in a ring's canonical enumeration 0..order-1.
using Elem = std::uint32_t;

struct RingLimits {
  std::uint64_t max_order = std::uint64_t{1} << 20;
  /// Largest ring for the O(|R|^2) quasi-regularity radical scan.
  std::uint64_t max_bruteforce_radical = std::uint64_t{1} << 12;
  /// Largest quotient realized as add/mul tables.
  std::uint64_t max_table_order = std::uint64_t{1} << 12;
};

/// n x n matrix of base-ring element indices, stored row-major.
/// Row and column indices are 0-based.
class MatrixElem {
 public:
  MatrixElem() = default;
  explicit MatrixElem(unsigned n) : n_(n), entries_(std::size_t{n} * n, 0) {}
  MatrixElem(unsigned n, std::vector<Elem> entries);

  unsigned size() const { return n_; }
  Elem at(unsigned i, unsigned j) const { return entries_[std::size_t{i} * n_ + j]; }
  Elem& at(unsigned i, unsigned j) { return entries_[std::size_t{i} * n_ + j]; }
  std::span<const Elem> row(unsigned i) const {
    return std::span<const Elem>(entries_).subspan(std::size_t{i} * n_, n_);
  }
  std::span<const Elem> entries() const { return entries_; }
  bool is_zero() const;

  /// "a,b;c,d"
  std::string to_string() const;
  /// Inverse of to_string(); whitespace ignored.
  static MatrixElem parse(std::string_view text);

  friend bool operator==(const MatrixElem&, const MatrixElem&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Elem> entries_;
};

namespace detail {
class RingImpl;
}

/// Immutable finite ring with exact arithmetic on canonical element indices.
///
/// Indexing is a mixed-radix encoding of the structured element with the first
/// digit most significant: row-major entries for M(n,S); the upper-triangular
/// entries (i <= j), row-major, for T(n,F); component order for prod(...);
/// coefficient i of the residue polynomial as base-p digit i for GF(p^k).
/// Index 0 is always the additive zero.
///
/// Handles are cheap to copy and safe to share across threads.
class RingHandle {
 public:
  RingHandle() = default;

  /// Structured description; empty for table-backed quotient rings.
  const std::optional<RingSpec>& spec() const;
  std::string name() const;

  std::uint64_t order() const;
  Elem zero() const { return 0; }
  Elem one() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;

  bool is_unit(Elem a) const;
  std::size_t unit_count() const;
  /// Units in increasing index order.
  std::span<const Elem> units() const;
  bool is_commutative() const;

  /// Human-readable element text: "3", "x^2+1", "1,0;0,1", "(1,2)", "[5]".
  std::string describe(Elem a) const;

  // M(n,S) and T(n,F).
  bool is_matrix_ring() const;
  bool is_triangular() const;
  unsigned matrix_size() const;
  const RingHandle& base() const;
  MatrixElem to_matrix(Elem a) const;
  Elem from_matrix(const MatrixElem& m) const;
  /// Determinant of a matrix-ring element, as a base-ring index.
  Elem det(Elem a) const;

  // prod(...)
  bool is_product() const;
  std::size_t factor_count() const;
  const RingHandle& factor(std::size_t i) const;
  std::vector<Elem> components(Elem a) const;
  Elem from_components(std::span<const Elem> parts) const;

  bool valid() const { return static_cast<bool>(state_); }
  friend bool operator==(const RingHandle& a, const RingHandle& b) { return a.state_ == b.state_; }

  struct State;  // defined in ring.cpp

 private:
  explicit RingHandle(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  void check(Elem a) const;
  const detail::RingImpl& impl() const;

  std::shared_ptr<const State> state_;

  friend RingHandle make_ring(const RingSpec&, const RingLimits&);
  friend RingHandle make_table_ring(std::string, std::vector<Elem>, std::vector<Elem>, Elem);
};

/// Builds the ring described by `spec`. Throws CapacityError above limits.max_order.
RingHandle make_ring(const RingSpec& spec, const RingLimits& limits = {});
inline RingHandle make_ring(std::string_view text, const RingLimits& limits = {}) {
  return make_ring(parse_spec(text), limits);
}

/// Ring from explicit k x k addition and multiplication tables (row-major).
/// The tables are trusted to describe a ring with zero at index 0.
RingHandle make_table_ring(std::string name, std::vector<Elem> add_table, std::vector<Elem> mul_table,
                           Elem one);

/// Order implied by a spec, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> spec_order(const RingSpec& spec);

/// Coefficients c_0..c_k of the monic irreducible polynomial that defines
/// GF(p^k): the smallest one when the non-leading coefficients are read as
/// a base-p number with c_0 least significant.
std::vector<std::uint32_t> irreducible_modulus(std::uint32_t p, unsigned k);

// Matrix arithmetic over an explicit commutative base ring.
MatrixElem matrix_add(const RingHandle& base, const MatrixElem& a, const MatrixElem& b);
MatrixElem matrix_sub(const RingHandle& base, const MatrixElem& a, const MatrixElem& b);
MatrixElem matrix_mul(const RingHandle& base, const MatrixElem& a, const MatrixElem& b);
MatrixElem identity_matrix(const RingHandle& base, unsigned n);
/// Cofactor expansion along the first row; no division, so valid over any
/// commutative base. Throws DomainError for a non-commutative base.
Elem det(const RingHandle& base, const MatrixElem& a);
/// True iff det(a) is a unit of the base.
bool is_invertible(const RingHandle& base, const MatrixElem& a);

// Jacobson radical.
/// Structured rule when the ring has a spec, quasi-regularity scan otherwise.
VertexSet jacobson_radical(const RingHandle& r, const RingLimits& limits = {});
/// J(Z(m)) = multiples of the squarefree part, J(GF) = 0, J(M(n,S)) = M(n,J(S)),
/// J(T(n,F)) = zero-diagonal elements, J(prod) = product. Requires a spec.
VertexSet jacobson_radical_structured(const RingHandle& r);
/// x in J iff 1 - r*x is a unit for every r. Throws CapacityError above
/// limits.max_bruteforce_radical.
VertexSet jacobson_radical_bruteforce(const RingHandle& r, const RingLimits& limits = {});

struct QuotientRing {
  RingHandle ring;
  /// element of the parent -> coset index
  std::vector<Elem> projection;
  /// coset index -> smallest parent element in the coset
  std::vector<Elem> representative;
};

/// True iff `ideal` is a two-sided ideal of r.
bool is_two_sided_ideal(const RingHandle& r, const VertexSet& ideal);

/// R/I on coset representatives, numbered by smallest representative.
/// Throws DomainError if `ideal` is not a two-sided ideal.
QuotientRing quotient_ring(const RingHandle& r, const VertexSet& ideal, const RingLimits& limits = {});

}  // namespace ucayley
