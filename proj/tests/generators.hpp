#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "ucayley/ring.hpp"
#include "ucayley/ring_spec.hpp"

namespace gen {

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline ucayley::RingSpec random_field(std::mt19937_64& rng) {
  static const std::uint64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
  const std::uint64_t q = qs[pick(rng, 0, 6)];
  if (q == 4 || q == 8 || q == 9 || pick(rng, 0, 1)) return ucayley::galois_field(q);
  return ucayley::integers_mod(q);
}

inline ucayley::RingSpec random_commutative(std::mt19937_64& rng, std::uint64_t max_order) {
  for (;;) {
    ucayley::RingSpec s;
    switch (pick(rng, 0, 2)) {
      case 0: s = ucayley::integers_mod(pick(rng, 2, 20)); break;
      case 1: s = random_field(rng); break;
      default: {
        std::vector<ucayley::RingSpec> fs;
        const auto k = pick(rng, 2, 3);
        for (std::uint64_t i = 0; i < k; ++i) fs.push_back(ucayley::integers_mod(pick(rng, 2, 5)));
        s = ucayley::product_ring(std::move(fs));
      }
    }
    if (*ucayley::spec_order(s) <= max_order) return s;
  }
}

// A ring spec of order at most `max_order`, drawn from every constructor.
inline ucayley::RingSpec random_spec(std::mt19937_64& rng, std::uint64_t max_order) {
  for (;;) {
    ucayley::RingSpec s;
    switch (pick(rng, 0, 4)) {
      case 0: s = random_commutative(rng, max_order); break;
      case 1: s = ucayley::matrix_ring(static_cast<unsigned>(pick(rng, 1, 2)), random_commutative(rng, 4)); break;
      case 2: s = ucayley::triangular_ring(static_cast<unsigned>(pick(rng, 1, 3)), random_field(rng)); break;
      case 3: {
        std::vector<ucayley::RingSpec> fs = {random_commutative(rng, 6), random_spec(rng, 16)};
        s = ucayley::product_ring(std::move(fs));
        break;
      }
      default: s = random_field(rng);
    }
    const auto order = ucayley::spec_order(s);
    if (order && *order <= max_order) return s;
  }
}

inline ucayley::MatrixElem random_matrix(std::mt19937_64& rng, unsigned n, std::uint64_t q) {
  ucayley::MatrixElem m(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m.at(i, j) = static_cast<ucayley::Elem>(pick(rng, 0, q - 1));
  }
  return m;
}

}  // namespace gen
