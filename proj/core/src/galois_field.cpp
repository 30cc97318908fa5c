#include "galois_field.hpp"

#include <stdexcept>

#include "ucayley/ring.hpp"

namespace ucayley {

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 first

// Remainder of a modulo monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = (lead * b[i]) % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool has_factor_of_degree(const Poly& f, std::uint32_t p, unsigned d) {
  // Try every monic polynomial of degree d.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly g(d + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[d] = 1;
    const Poly r = poly_mod(f, g, p);
    bool zero = true;
    for (auto x : r) zero = zero && x == 0;
    if (zero) return true;
  }
  return false;
}

}  // namespace

std::vector<std::uint32_t> irreducible_modulus(std::uint32_t p, unsigned k) {
  if (k == 0 || !is_prime(p)) throw std::invalid_argument("irreducible_modulus: need prime p and k >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    bool irreducible = true;
    for (unsigned d = 1; d <= k / 2 && irreducible; ++d) {
      irreducible = !has_factor_of_degree(f, p, d);
    }
    if (irreducible) return f;
  }
  throw std::logic_error("irreducible_modulus: none found");
}

namespace detail {

GaloisField::GaloisField(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  modulus_ = irreducible_modulus(p, k);
  if (q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    mul_table_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = add_slow(a, b);
        mul_table_[std::size_t{a} * q_ + b] = mul_slow(a, b);
      }
    }
  }
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t a = 0;
  for (unsigned i = k_; i-- > 0;) a = a * p_ + d[i];
  return a;
}

std::uint32_t GaloisField::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  auto da = digits(a);
  const auto db = digits(b);
  for (unsigned i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

std::uint32_t GaloisField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
  }
  auto r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  return add_slow(a, b);
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  auto d = digits(a);
  for (auto& x : d) x = x == 0 ? 0 : p_ - x;
  return from_digits(d);
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
  return mul_slow(a, b);
}

std::string GaloisField::describe(std::uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail
}  // namespace ucayley
