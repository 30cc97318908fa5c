#pragma once

#include <string>
#include <vector>

#include "ucayley/ring.hpp"

namespace ucayley::detail {

class RingImpl {
 public:
  virtual ~RingImpl() = default;
  virtual std::uint64_t order() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual bool is_unit(Elem a) const = 0;
  virtual bool commutative() const = 0;
  virtual std::string describe(Elem a) const = 0;
};

}  // namespace ucayley::detail
