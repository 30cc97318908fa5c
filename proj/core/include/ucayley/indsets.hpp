#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ucayley/cayley.hpp"
#include "ucayley/ring.hpp"
#include "ucayley/structure.hpp"
#include "ucayley/vertex_set.hpp"

namespace ucayley {

/// Search limits; zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

enum class SearchStatus { complete, budget_exhausted };
std::string to_string(SearchStatus s);

struct EnumerationStats {
  SearchStatus status = SearchStatus::complete;
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
};

/// Streams every maximal independent set of g exactly once (Bron–Kerbosch
/// with Tomita pivoting on the complement; pivot = candidate with the most
/// non-neighbours in P, lowest index on ties). The stream order is
/// deterministic. Sets emitted before a budget trip are valid; the stats
/// report the trip.
EnumerationStats enumerate_maximal_independent(const UGraph& g, const Budget& budget,
                                               const std::function<void(const VertexSet&)>& sink);

struct MaximalSets {
  /// Sorted lexicographically, independent of thread count.
  std::vector<VertexSet> sets;
  EnumerationStats stats;
};

/// Collects all maximal independent sets; threads > 1 splits the search tree
/// at the top-level branches.
MaximalSets collect_maximal_independent(const UGraph& g, const Budget& budget = {}, unsigned threads = 1);

struct AlphaResult {
  std::size_t alpha = 0;
  /// False when the budget tripped; alpha is then a lower bound.
  bool exact = true;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound maximum independent set with greedy colouring bounds.
AlphaResult maximum_independent_set(const UGraph& g, const Budget& budget = {});
/// Throws BudgetExceeded if the search does not finish.
std::size_t independence_number(const UGraph& g, const Budget& budget = {});

/// Adds the lowest eligible vertex until maximal. Throws DomainError if
/// `seed` is not independent.
VertexSet greedy_extend(const UGraph& g, const VertexSet& seed);

struct WellCoveredReport {
  Answer answer = Answer::inconclusive;
  /// Largest maximal independent set size seen; exact iff alpha_exact.
  std::size_t alpha = 0;
  bool alpha_exact = false;
  /// Lexicographically smallest maximal set of minimum size (when answer == no).
  std::optional<VertexSet> witness_small;
  /// A maximal set of size alpha.
  std::optional<VertexSet> witness_large;
  /// size -> number of maximal independent sets; filled only when fully enumerated.
  std::map<std::size_t, std::uint64_t> counts;
  bool fully_enumerated = false;
  std::uint64_t nodes = 0;
};

struct WellCoveredOptions {
  Budget budget;
  /// Independent seed sets tried with greedy_extend before enumeration. When
  /// two seeds extend to maximal sets of different sizes the report is "no"
  /// without enumeration.
  std::vector<VertexSet> seeds;
  unsigned threads = 1;
};

WellCoveredReport is_well_covered(const UGraph& g, const WellCoveredOptions& options = {});

/// A + J = {a + j : a in A, j in J}.
VertexSet radical_saturate(const RingHandle& r, const VertexSet& radical, const VertexSet& a);

}  // namespace ucayley
