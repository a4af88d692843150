#pragma once

#include "cluq/ints.hpp"

namespace cluq {

// Element of the tropical semifield P: an integer exponent vector over the
// frozen variables x_{n+1}..x_m.
struct TropMonomial {
  VecI e;

  TropMonomial() = default;
  explicit TropMonomial(size_t nfrozen) : e(nfrozen, Int(0)) {}
  explicit TropMonomial(VecI exps) : e(std::move(exps)) {}

  size_t size() const { return e.size(); }
  bool is_one() const {
    for (const Int& x : e)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const TropMonomial& o) const { return e == o.e; }
};

// Auxiliary addition (3): componentwise minimum of exponent vectors.
inline TropMonomial trop_add(const TropMonomial& u, const TropMonomial& v) {
  require(u.size() == v.size(), Errc::DimensionMismatch, "tropical addition width");
  TropMonomial r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r.e[i] = u.e[i] < v.e[i] ? u.e[i] : v.e[i];
  return r;
}

// Group multiplication: exponents add.
inline TropMonomial trop_mul(const TropMonomial& u, const TropMonomial& v) {
  require(u.size() == v.size(), Errc::DimensionMismatch, "tropical product width");
  TropMonomial r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r.e[i] = u.e[i] + v.e[i];
  return r;
}

}  // namespace cluq
