#include "ucayley/ring.hpp"

#include <numeric>
#include <stdexcept>

#include "galois_field.hpp"
#include "ring_impl.hpp"
#include "ucayley/error.hpp"

namespace ucayley {

struct RingHandle::State {
  std::optional<RingSpec> spec;
  std::string name;
  std::unique_ptr<detail::RingImpl> impl;
  std::vector<std::uint8_t> unit_flags;
  std::vector<Elem> units;
};

namespace {

class IntegersModImpl final : public detail::RingImpl {
 public:
  explicit IntegersModImpl(std::uint64_t m) : m_(m) {}
  std::uint64_t order() const override { return m_; }
  Elem one() const override { return static_cast<Elem>(1 % m_); }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % m_); }
  Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(m_ - a); }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % m_); }
  bool is_unit(Elem a) const override { return std::gcd(std::uint64_t{a}, m_) == 1 || m_ == 1; }
  bool commutative() const override { return true; }
  std::string describe(Elem a) const override { return std::to_string(a); }

 private:
  std::uint64_t m_;
};

class GaloisFieldImpl final : public detail::RingImpl {
 public:
  GaloisFieldImpl(std::uint32_t p, unsigned k) : field_(p, k) {}
  std::uint64_t order() const override { return field_.order(); }
  Elem one() const override { return 1; }
  Elem add(Elem a, Elem b) const override { return field_.add(a, b); }
  Elem neg(Elem a) const override { return field_.neg(a); }
  Elem mul(Elem a, Elem b) const override { return field_.mul(a, b); }
  bool is_unit(Elem a) const override { return a != 0; }
  bool commutative() const override { return true; }
  std::string describe(Elem a) const override { return field_.describe(a); }

 private:
  detail::GaloisField field_;
};

}  // namespace

namespace detail {

// M(n,S), or T(n,F) when `triangular`: only entries with i <= j are stored.
class MatrixImpl final : public RingImpl {
 public:
  MatrixImpl(unsigned n, RingHandle base, bool triangular)
      : n_(n), base_(std::move(base)), triangular_(triangular), radix_(base_.order()) {
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) {
        if (!triangular_ || i <= j) positions_.push_back(i * n_ + j);
      }
    }
    order_ = 1;
    for (std::size_t i = 0; i < positions_.size(); ++i) order_ *= radix_;
    MatrixElem id = identity_matrix(base_, n_);
    one_ = encode(id);
  }

  unsigned size() const { return n_; }
  bool triangular() const { return triangular_; }
  const RingHandle& base() const { return base_; }

  MatrixElem decode(Elem a) const {
    std::vector<Elem> entries(std::size_t{n_} * n_, 0);
    std::uint64_t x = a;
    for (std::size_t k = positions_.size(); k-- > 0;) {
      entries[positions_[k]] = static_cast<Elem>(x % radix_);
      x /= radix_;
    }
    return MatrixElem(n_, std::move(entries));
  }

  Elem encode(const MatrixElem& m) const {
    if (m.size() != n_) throw DomainError("matrix size mismatch");
    const auto entries = m.entries();
    if (triangular_) {
      for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < i; ++j) {
          if (entries[i * n_ + j] != 0) throw DomainError("entry below the diagonal in a T(n,F) element");
        }
      }
    }
    std::uint64_t x = 0;
    for (unsigned pos : positions_) {
      if (entries[pos] >= radix_) throw std::out_of_range("matrix entry outside the base ring");
      x = x * radix_ + entries[pos];
    }
    return static_cast<Elem>(x);
  }

  std::uint64_t order() const override { return order_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return encode(matrix_add(base_, decode(a), decode(b))); }
  Elem neg(Elem a) const override {
    MatrixElem m = decode(a);
    MatrixElem out(n_);
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) out.at(i, j) = base_.neg(m.at(i, j));
    }
    return encode(out);
  }
  Elem mul(Elem a, Elem b) const override { return encode(matrix_mul(base_, decode(a), decode(b))); }
  bool is_unit(Elem a) const override { return is_invertible(base_, decode(a)); }
  bool commutative() const override {
    if (n_ == 1) return base_.is_commutative();
    return base_.order() == 1;
  }
  std::string describe(Elem a) const override { return decode(a).to_string(); }

 private:
  unsigned n_;
  RingHandle base_;
  bool triangular_;
  std::uint64_t radix_;
  std::vector<unsigned> positions_;
  std::uint64_t order_ = 1;
  Elem one_ = 0;
};

class ProductImpl final : public RingImpl {
 public:
  explicit ProductImpl(std::vector<RingHandle> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (const auto& f : factors_) order_ *= f.order();
    std::vector<Elem> ones;
    for (const auto& f : factors_) ones.push_back(f.one());
    one_ = encode(ones);
  }

  const std::vector<RingHandle>& factors() const { return factors_; }

  std::vector<Elem> decode(Elem a) const {
    std::vector<Elem> parts(factors_.size());
    std::uint64_t x = a;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      parts[i] = static_cast<Elem>(x % factors_[i].order());
      x /= factors_[i].order();
    }
    return parts;
  }

  Elem encode(std::span<const Elem> parts) const {
    if (parts.size() != factors_.size()) throw DomainError("component count mismatch");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (parts[i] >= factors_[i].order()) throw std::out_of_range("component outside its factor");
      x = x * factors_[i].order() + parts[i];
    }
    return static_cast<Elem>(x);
  }

  std::uint64_t order() const override { return order_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return zip(a, b, [](const RingHandle& f, Elem x, Elem y) { return f.add(x, y); }); }
  Elem mul(Elem a, Elem b) const override { return zip(a, b, [](const RingHandle& f, Elem x, Elem y) { return f.mul(x, y); }); }
  Elem neg(Elem a) const override {
    auto parts = decode(a);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factors_[i].neg(parts[i]);
    return encode(parts);
  }
  bool is_unit(Elem a) const override {
    const auto parts = decode(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!factors_[i].is_unit(parts[i])) return false;
    }
    return true;
  }
  bool commutative() const override {
    for (const auto& f : factors_) {
      if (!f.is_commutative()) return false;
    }
    return true;
  }
  std::string describe(Elem a) const override {
    const auto parts = decode(a);
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      const std::string s = factors_[i].describe(parts[i]);
      out += factors_[i].is_matrix_ring() ? "[" + s + "]" : s;
    }
    return out + ")";
  }

 private:
  template <typename Op>
  Elem zip(Elem a, Elem b, Op op) const {
    auto pa = decode(a);
    const auto pb = decode(b);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = op(factors_[i], pa[i], pb[i]);
    return encode(pa);
  }

  std::vector<RingHandle> factors_;
  std::uint64_t order_ = 1;
  Elem one_ = 0;
};

class TableImpl final : public RingImpl {
 public:
  TableImpl(std::vector<Elem> add, std::vector<Elem> mul, Elem one)
      : add_(std::move(add)), mul_(std::move(mul)), one_(one) {
    std::size_t k = 0;
    while (k * k < add_.size()) ++k;
    if (k * k != add_.size() || mul_.size() != add_.size() || k == 0) {
      throw std::invalid_argument("table ring: tables must be k x k");
    }
    k_ = k;
    neg_.assign(k_, 0);
    for (Elem a = 0; a < k_; ++a) {
      for (Elem b = 0; b < k_; ++b) {
        if (add_[a * k_ + b] == 0) {
          neg_[a] = b;
          break;
        }
      }
    }
    commutative_ = true;
    for (Elem a = 0; a < k_ && commutative_; ++a) {
      for (Elem b = a + 1; b < k_; ++b) {
        if (mul_[a * k_ + b] != mul_[b * k_ + a]) {
          commutative_ = false;
          break;
        }
      }
    }
  }

  std::uint64_t order() const override { return k_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return add_[a * k_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * k_ + b]; }
  bool is_unit(Elem a) const override {
    for (Elem b = 0; b < k_; ++b) {
      if (mul_[a * k_ + b] == one_ && mul_[b * k_ + a] == one_) return true;
    }
    return false;
  }
  bool commutative() const override { return commutative_; }
  std::string describe(Elem a) const override { return "[" + std::to_string(a) + "]"; }

 private:
  std::vector<Elem> add_, mul_, neg_;
  Elem one_;
  std::size_t k_ = 0;
  bool commutative_ = true;
};

}  // namespace detail

std::optional<std::uint64_t> spec_order(const RingSpec& spec) {
  auto mul_checked = [](std::uint64_t a, std::uint64_t b) -> std::optional<std::uint64_t> {
    if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
    return a * b;
  };
  auto pow_checked = [&](std::uint64_t base, std::uint64_t e) -> std::optional<std::uint64_t> {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      auto next = mul_checked(r, base);
      if (!next) return std::nullopt;
      r = *next;
    }
    return r;
  };
  return std::visit(
      [&](const auto& node) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          return node.modulus;
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          return node.order;
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          auto b = spec_order(*node.base);
          if (!b) return std::nullopt;
          return pow_checked(*b, std::uint64_t{node.size} * node.size);
        } else if constexpr (std::is_same_v<T, TriangularSpec>) {
          auto b = spec_order(*node.base);
          if (!b) return std::nullopt;
          return pow_checked(*b, std::uint64_t{node.size} * (node.size + 1) / 2);
        } else {
          std::uint64_t r = 1;
          for (const auto& f : node.factors) {
            auto o = spec_order(f);
            if (!o) return std::nullopt;
            auto next = mul_checked(r, *o);
            if (!next) return std::nullopt;
            r = *next;
          }
          return r;
        }
      },
      spec.node);
}

namespace {

void fill_units(RingHandle::State& st) {
  const std::uint64_t n = st.impl->order();
  st.unit_flags.assign(n, 0);
  for (std::uint64_t a = 0; a < n; ++a) {
    if (st.impl->is_unit(static_cast<Elem>(a))) {
      st.unit_flags[a] = 1;
      st.units.push_back(static_cast<Elem>(a));
    }
  }
}

}  // namespace

RingHandle make_ring(const RingSpec& spec, const RingLimits& limits) {
  const auto order = spec_order(spec);
  if (!order || *order > limits.max_order) {
    throw CapacityError("ring " + to_string(spec) + " exceeds the cardinality cap of " +
                        std::to_string(limits.max_order) + " elements");
  }
  auto st = std::make_shared<RingHandle::State>();
  st->spec = spec;
  st->name = to_string(spec);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, IntegersModSpec>) {
          st->impl = std::make_unique<IntegersModImpl>(node.modulus);
        } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
          const auto [p, k] = prime_power(node.order);
          st->impl = std::make_unique<GaloisFieldImpl>(static_cast<std::uint32_t>(p), k);
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          st->impl = std::make_unique<detail::MatrixImpl>(node.size, make_ring(*node.base, limits), false);
        } else if constexpr (std::is_same_v<T, TriangularSpec>) {
          st->impl = std::make_unique<detail::MatrixImpl>(node.size, make_ring(*node.base, limits), true);
        } else {
          std::vector<RingHandle> factors;
          for (const auto& f : node.factors) factors.push_back(make_ring(f, limits));
          st->impl = std::make_unique<detail::ProductImpl>(std::move(factors));
        }
      },
      spec.node);
  fill_units(*st);
  return RingHandle(std::move(st));
}

RingHandle make_table_ring(std::string name, std::vector<Elem> add_table, std::vector<Elem> mul_table, Elem one) {
  auto st = std::make_shared<RingHandle::State>();
  st->name = std::move(name);
  st->impl = std::make_unique<detail::TableImpl>(std::move(add_table), std::move(mul_table), one);
  fill_units(*st);
  return RingHandle(std::move(st));
}

const std::optional<RingSpec>& RingHandle::spec() const { return state_->spec; }
std::string RingHandle::name() const { return state_->name; }
std::uint64_t RingHandle::order() const { return state_->impl->order(); }
Elem RingHandle::one() const { return state_->impl->one(); }
const detail::RingImpl& RingHandle::impl() const { return *state_->impl; }

void RingHandle::check(Elem a) const {
  if (a >= order()) {
    throw std::out_of_range("element index " + std::to_string(a) + " out of range for " + name() +
                            " (order " + std::to_string(order()) + ")");
  }
}

Elem RingHandle::add(Elem a, Elem b) const {
  check(a);
  check(b);
  return impl().add(a, b);
}
Elem RingHandle::sub(Elem a, Elem b) const {
  check(a);
  check(b);
  return impl().add(a, impl().neg(b));
}
Elem RingHandle::neg(Elem a) const {
  check(a);
  return impl().neg(a);
}
Elem RingHandle::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  return impl().mul(a, b);
}
bool RingHandle::is_unit(Elem a) const {
  check(a);
  return state_->unit_flags[a] != 0;
}
std::size_t RingHandle::unit_count() const { return state_->units.size(); }
std::span<const Elem> RingHandle::units() const { return state_->units; }
bool RingHandle::is_commutative() const { return impl().commutative(); }
std::string RingHandle::describe(Elem a) const {
  check(a);
  return impl().describe(a);
}

bool RingHandle::is_matrix_ring() const { return dynamic_cast<const detail::MatrixImpl*>(&impl()) != nullptr; }
bool RingHandle::is_triangular() const {
  const auto* m = dynamic_cast<const detail::MatrixImpl*>(&impl());
  return m && m->triangular();
}

namespace {
const detail::MatrixImpl& as_matrix(const detail::RingImpl& impl, const std::string& name) {
  const auto* m = dynamic_cast<const detail::MatrixImpl*>(&impl);
  if (!m) throw DomainError(name + " is not a matrix ring");
  return *m;
}
const detail::ProductImpl& as_product(const detail::RingImpl& impl, const std::string& name) {
  const auto* p = dynamic_cast<const detail::ProductImpl*>(&impl);
  if (!p) throw DomainError(name + " is not a product ring");
  return *p;
}
}  // namespace

unsigned RingHandle::matrix_size() const { return as_matrix(impl(), name()).size(); }
const RingHandle& RingHandle::base() const { return as_matrix(impl(), name()).base(); }
MatrixElem RingHandle::to_matrix(Elem a) const {
  const auto& m = as_matrix(impl(), name());
  check(a);
  return m.decode(a);
}
Elem RingHandle::from_matrix(const MatrixElem& x) const { return as_matrix(impl(), name()).encode(x); }
Elem RingHandle::det(Elem a) const {
  const auto& m = as_matrix(impl(), name());
  check(a);
  return ucayley::det(m.base(), m.decode(a));
}

bool RingHandle::is_product() const { return dynamic_cast<const detail::ProductImpl*>(&impl()) != nullptr; }
std::size_t RingHandle::factor_count() const { return as_product(impl(), name()).factors().size(); }
const RingHandle& RingHandle::factor(std::size_t i) const { return as_product(impl(), name()).factors().at(i); }
std::vector<Elem> RingHandle::components(Elem a) const {
  const auto& p = as_product(impl(), name());
  check(a);
  return p.decode(a);
}
Elem RingHandle::from_components(std::span<const Elem> parts) const {
  return as_product(impl(), name()).encode(parts);
}

}  // namespace ucayley
