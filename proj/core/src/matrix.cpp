#include <bit>
#include <cctype>
#include <stdexcept>

#include "ucayley/error.hpp"
#include "ucayley/ring.hpp"

namespace ucayley {

MatrixElem::MatrixElem(unsigned n, std::vector<Elem> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != std::size_t{n} * n) throw std::invalid_argument("MatrixElem: expected n*n entries");
}

bool MatrixElem::is_zero() const {
  for (Elem e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

std::string MatrixElem::to_string() const {
  std::string out;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) out += ";";
    for (unsigned j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += std::to_string(at(i, j));
    }
  }
  return out;
}

MatrixElem MatrixElem::parse(std::string_view text) {
  std::vector<std::vector<Elem>> rows(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("matrix text: empty entry");
    rows.back().push_back(static_cast<Elem>(std::stoul(token)));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',') {
      flush();
    } else if (c == ';') {
      flush();
      rows.emplace_back();
    } else {
      throw std::invalid_argument(std::string("matrix text: unexpected character '") + c + "'");
    }
  }
  flush();
  const auto n = static_cast<unsigned>(rows.size());
  std::vector<Elem> entries;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix text: rows must have n entries for n rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return MatrixElem(n, std::move(entries));
}

namespace {
void same_size(const MatrixElem& a, const MatrixElem& b) {
  if (a.size() != b.size()) throw DomainError("matrix size mismatch");
}
}  // namespace

MatrixElem matrix_add(const RingHandle& base, const MatrixElem& a, const MatrixElem& b) {
  same_size(a, b);
  MatrixElem out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) {
    for (unsigned j = 0; j < a.size(); ++j) out.at(i, j) = base.add(a.at(i, j), b.at(i, j));
  }
  return out;
}

MatrixElem matrix_sub(const RingHandle& base, const MatrixElem& a, const MatrixElem& b) {
  same_size(a, b);
  MatrixElem out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) {
    for (unsigned j = 0; j < a.size(); ++j) out.at(i, j) = base.sub(a.at(i, j), b.at(i, j));
  }
  return out;
}

MatrixElem matrix_mul(const RingHandle& base, const MatrixElem& a, const MatrixElem& b) {
  same_size(a, b);
  const unsigned n = a.size();
  MatrixElem out(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < n; ++k) acc = base.add(acc, base.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

MatrixElem identity_matrix(const RingHandle& base, unsigned n) {
  MatrixElem out(n);
  for (unsigned i = 0; i < n; ++i) out.at(i, i) = base.one();
  return out;
}

Elem det(const RingHandle& base, const MatrixElem& a) {
  if (!base.is_commutative()) throw DomainError("determinant requires a commutative base ring");
  const unsigned n = a.size();
  if (n == 0) return base.one();
  if (n > 20) throw CapacityError("determinant: matrix too large for cofactor expansion");
  // Laplace expansion row by row; minors are keyed by the set of used columns,
  // so each minor is expanded once.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Elem> memo(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> known(std::size_t{1} << n, 0);
  memo[full] = base.one();
  known[full] = 1;
  auto minor = [&](auto&& self, std::uint32_t used) -> Elem {
    if (known[used]) return memo[used];
    const auto row = static_cast<unsigned>(std::popcount(used));
    Elem acc = 0;
    unsigned position = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (used & (std::uint32_t{1} << j)) continue;
      const Elem entry = a.at(row, j);
      if (entry != 0) {
        Elem term = base.mul(entry, self(self, used | (std::uint32_t{1} << j)));
        acc = (position % 2 == 0) ? base.add(acc, term) : base.sub(acc, term);
      }
      ++position;
    }
    known[used] = 1;
    memo[used] = acc;
    return acc;
  };
  return minor(minor, 0);
}

bool is_invertible(const RingHandle& base, const MatrixElem& a) { return base.is_unit(det(base, a)); }

}  // namespace ucayley
