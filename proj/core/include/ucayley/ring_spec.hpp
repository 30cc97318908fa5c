#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ucayley {

struct RingSpec;

struct IntegersModSpec {
  std::uint64_t modulus = 1;
};

struct GaloisFieldSpec {
  std::uint64_t order = 2;
};

struct MatrixSpec {
  unsigned size = 1;
  std::shared_ptr<const RingSpec> base;
};

// Upper triangular matrices over a field.
struct TriangularSpec {
  unsigned size = 1;
  std::shared_ptr<const RingSpec> base;
};

struct ProductSpec {
  std::vector<RingSpec> factors;
};

/// Structured description of a finite ring:
///   spec := Z(m) | GF(q) | M(n,spec) | T(n,spec) | prod(spec{,spec})
/// Instances built through parse_spec() or the factory helpers below always
/// satisfy the constructor constraints.
struct RingSpec {
  std::variant<IntegersModSpec, GaloisFieldSpec, MatrixSpec, TriangularSpec, ProductSpec> node;

  bool is_integers_mod() const { return std::holds_alternative<IntegersModSpec>(node); }
  bool is_galois_field() const { return std::holds_alternative<GaloisFieldSpec>(node); }
  bool is_matrix() const { return std::holds_alternative<MatrixSpec>(node); }
  bool is_triangular() const { return std::holds_alternative<TriangularSpec>(node); }
  bool is_product() const { return std::holds_alternative<ProductSpec>(node); }

  /// Z(m), GF(q), or prod(...) of commutative specs.
  bool is_commutative_base() const;
  /// GF(q), or Z(p) with p prime.
  bool is_field() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);
};

RingSpec integers_mod(std::uint64_t m);
RingSpec galois_field(std::uint64_t q);
RingSpec matrix_ring(unsigned n, RingSpec base);
RingSpec triangular_ring(unsigned n, RingSpec base);
RingSpec product_ring(std::vector<RingSpec> factors);

/// Parses the ring-spec grammar. Whitespace is ignored everywhere.
/// Throws SpecSyntaxError (with offset) or SpecConstraintError.
RingSpec parse_spec(std::string_view text);

/// Canonical text form, e.g. "M(2,GF(2))"; parse_spec(to_string(s)) == s.
std::string to_string(const RingSpec& spec);

// Small number-theory helpers shared across the library.
bool is_prime(std::uint64_t n);
/// Returns {p, k} with q == p^k, or {0, 0} when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t m);

}  // namespace ucayley
