#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ucayley::detail {

// GF(p^k) as Z_p[x] / (f), f the irreducible_modulus(p, k). Element index is
// the residue's coefficient vector read as a base-p number, c_0 least significant.
class GaloisField {
 public:
  GaloisField(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::string describe(std::uint32_t a) const;

 private:
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;  // c_0..c_k, c_k = 1
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
};

}  // namespace ucayley::detail
