#include "ucayley/ring_spec.hpp"

#include <cctype>
#include <limits>

#include "ucayley/error.hpp"

namespace ucayley {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool RingSpec::is_commutative_base() const {
  if (is_integers_mod() || is_galois_field()) return true;
  if (const auto* p = std::get_if<ProductSpec>(&node)) {
    for (const auto& f : p->factors) {
      if (!f.is_commutative_base()) return false;
    }
    return true;
  }
  return false;
}

bool RingSpec::is_field() const {
  if (is_galois_field()) return true;
  if (const auto* z = std::get_if<IntegersModSpec>(&node)) return is_prime(z->modulus);
  return false;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          return lhs.modulus == rhs.modulus;
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          return lhs.order == rhs.order;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return lhs.factors == rhs.factors;
        } else {
          return lhs.size == rhs.size && *lhs.base == *rhs.base;
        }
      },
      a.node);
}

RingSpec integers_mod(std::uint64_t m) {
  if (m < 1) throw SpecConstraintError("Z(m) requires m >= 1");
  return RingSpec{IntegersModSpec{m}};
}

RingSpec galois_field(std::uint64_t q) {
  if (prime_power(q).first == 0) {
    throw SpecConstraintError("GF(q) requires a prime power q; " + std::to_string(q) +
                              " is not a prime power");
  }
  return RingSpec{GaloisFieldSpec{q}};
}

RingSpec matrix_ring(unsigned n, RingSpec base) {
  if (n < 1) throw SpecConstraintError("M(n,S) requires n >= 1");
  if (!base.is_commutative_base()) {
    throw SpecConstraintError("M(n,S) requires a commutative base (Z, GF, or prod of these); got " +
                              to_string(base));
  }
  return RingSpec{MatrixSpec{n, std::make_shared<const RingSpec>(std::move(base))}};
}

RingSpec triangular_ring(unsigned n, RingSpec base) {
  if (n < 1) throw SpecConstraintError("T(n,S) requires n >= 1");
  if (!base.is_field()) {
    throw SpecConstraintError("T(n,S) requires a field base (GF(q) or Z(p), p prime); got " +
                              to_string(base));
  }
  return RingSpec{TriangularSpec{n, std::make_shared<const RingSpec>(std::move(base))}};
}

RingSpec product_ring(std::vector<RingSpec> factors) {
  if (factors.empty()) throw SpecConstraintError("prod(...) requires at least one factor");
  return RingSpec{ProductSpec{std::move(factors)}};
}

std::string to_string(const RingSpec& spec) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          return "Z(" + std::to_string(node.modulus) + ")";
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          return "GF(" + std::to_string(node.order) + ")";
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          return "M(" + std::to_string(node.size) + "," + to_string(*node.base) + ")";
        } else if constexpr (std::is_same_v<T, TriangularSpec>) {
          return "T(" + std::to_string(node.size) + "," + to_string(*node.base) + ")";
        } else {
          std::string out = "prod(";
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            if (i) out += ",";
            out += to_string(node.factors[i]);
          }
          return out + ")";
        }
      },
      spec.node);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    RingSpec spec = parse_spec_node();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SpecSyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer literal too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer");
    return value;
  }

  unsigned matrix_size() {
    const std::size_t at = (skip_ws(), pos_);
    const std::uint64_t n = number();
    if (n > 64) {
      pos_ = at;
      fail("matrix size too large");
    }
    return static_cast<unsigned>(n);
  }

  RingSpec parse_spec_node() {
    skip_ws();
    // "GF" must be tried before single-letter constructors.
    if (try_consume("GF")) {
      expect('(');
      const std::uint64_t q = number();
      expect(')');
      return galois_field(q);
    }
    if (try_consume("prod")) {
      expect('(');
      std::vector<RingSpec> factors;
      factors.push_back(parse_spec_node());
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        factors.push_back(parse_spec_node());
        skip_ws();
      }
      expect(')');
      return product_ring(std::move(factors));
    }
    if (try_consume("Z")) {
      expect('(');
      const std::uint64_t m = number();
      expect(')');
      return integers_mod(m);
    }
    const bool is_m = try_consume("M");
    if (is_m || try_consume("T")) {
      expect('(');
      const unsigned n = matrix_size();
      expect(',');
      RingSpec base = parse_spec_node();
      expect(')');
      return is_m ? matrix_ring(n, std::move(base)) : triangular_ring(n, std::move(base));
    }
    fail("expected one of Z(, GF(, M(, T(, prod(");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace ucayley
