#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ucayley/cayley.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/vertex_set.hpp"

namespace ucayley {

/// Simplicial complex on vertices 0..N-1 given by its facets, stored in
/// canonical order (size, then lexicographic). The complex {∅} has the single
/// facet ∅; the void complex has no facets.
class Complex {
 public:
  Complex() = default;
  /// Keeps only the inclusion-maximal sets among `faces`.
  Complex(std::size_t vertex_count, std::vector<VertexSet> faces);
  /// `facets` must already be an antichain; only sorts.
  static Complex from_facets(std::size_t vertex_count, std::vector<VertexSet> facets);

  std::size_t vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }
  /// Largest facet size minus one (-1 for {∅} and the void complex).
  int dim() const;
  bool contains_face(const VertexSet& s) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> facets_;
};

/// ind(G): facets are the maximal independent sets. Throws BudgetExceeded
/// if enumeration does not finish.
Complex independence_complex(const UGraph& g, const Budget& budget = {});

bool is_pure(const Complex& c);

/// Δ^[d]: all d-dimensional faces. Throws DomainError unless 0 <= d <= dim,
/// CapacityError beyond `max_faces`.
Complex pure_skeleton(const Complex& c, int d, std::size_t max_faces = 2'000'000);

struct Codim1Result {
  bool connected = true;
  /// Facet indices per component, each sorted; components ordered by first index.
  std::vector<std::vector<std::size_t>> components;
};

/// Facet graph with F ~ G iff |F ∩ G| = |F| - 1. Throws DomainError for
/// a non-pure complex.
Codim1Result codim1_connected(const Complex& c);

enum class ShellingStatus { found, none_exists, not_found_within_budget };
std::string to_string(ShellingStatus s);

struct ShellingResult {
  ShellingStatus status = ShellingStatus::not_found_within_budget;
  /// Facet indices in shelling order (status == found).
  std::vector<std::size_t> order;
  std::string reason;
  std::uint64_t nodes = 0;
};

/// Largest facet count for which an exhausted backtracking search counts as
/// a proof that no shelling exists.
inline constexpr std::size_t kExhaustiveShellingFacets = 8;

/// Backtracking search for a shelling of a pure complex. A complex that is
/// not connected in codimension 1 is rejected without search. Throws
/// DomainError for a non-pure complex.
ShellingResult find_shelling(const Complex& c, const Budget& budget = {});

/// Replays `order` and checks that each facet meets the union of its
/// predecessors in a pure complex of dimension one less.
bool verify_shelling(const Complex& c, const std::vector<std::size_t>& order);

/// Minimal non-faces, in canonical order. Throws CapacityError beyond `max_faces`.
std::vector<VertexSet> minimal_nonfaces(const Complex& c, std::size_t max_faces = 2'000'000);

struct ExportLimits {
  std::size_t max_variables = std::size_t{1} << 14;
};

/// Edge ideal of g as a Macaulay2 ideal, one x_i*x_j generator per line.
std::string export_stanley_reisner(const UGraph& g, const ExportLimits& limits = {});
/// Stanley–Reisner ideal of c (minimal non-faces as squarefree monomials).
std::string export_stanley_reisner(const Complex& c, const ExportLimits& limits = {});

}  // namespace ucayley
