#pragma once

#include "cluq/laurent.hpp"
#include "cluq/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cluq {

// Element of the ambient field F as a reduced fraction of Laurent polynomials.
// Canonical form: numerator and denominator share no polynomial factor, the
// denominator has min-exponent zero in every variable (so a monomial
// denominator is a positive integer), positive leading coefficient, and the
// integer contents are coprime.
class RatExpr {
 public:
  RatExpr() = default;
  explicit RatExpr(size_t nvars)
      : num_(LaurentPoly(nvars)), den_(LaurentPoly::constant(nvars, 1)) {}
  RatExpr(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require(num_.nvars() == den_.nvars(), Errc::DimensionMismatch, "fraction width");
    normalize();
  }

  static RatExpr zero(size_t nvars) { return RatExpr(nvars); }
  static RatExpr one(size_t nvars) { return constant(nvars, 1); }
  static RatExpr constant(size_t nvars, const Int& c) {
    return RatExpr(LaurentPoly::constant(nvars, c), LaurentPoly::constant(nvars, 1));
  }
  static RatExpr variable(size_t nvars, size_t j) {
    return RatExpr(LaurentPoly::variable(nvars, j), LaurentPoly::constant(nvars, 1));
  }
  static RatExpr monomial(size_t nvars, const Exp& e) {
    return RatExpr(LaurentPoly::monomial(nvars, e, 1), LaurentPoly::constant(nvars, 1));
  }

  size_t nvars() const { return num_.nvars(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b) {
    return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b) {
    require(!b.is_zero(), Errc::DivisionByZero, "division by zero expression");
    return RatExpr(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatExpr operator-() const {
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
  }
  bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatExpr pow(const Int& k) const {
    require(abs_int(k) <= Int(1000000), Errc::TermBudgetExceeded, "exponent too large");
    long e = k.convert_to<long>();
    if (e == 0) return one(nvars());
    RatExpr base = e > 0 ? *this : one(nvars()) / *this;
    unsigned long a = e > 0 ? e : -e;
    RatExpr r = one(nvars());
    while (a) {
      if (a & 1) r = r * base;
      a >>= 1;
      if (a) base = base * base;
    }
    return r;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    require(!den_.is_zero(), Errc::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(nvars(), 1);
      return;
    }
    // Pull the pure monomial content of both sides into a single shift that is
    // reapplied to the numerator at the end.
    Exp sn = num_.min_exp(), sd = den_.min_exp();
    Exp neg(sn.size());
    for (size_t i = 0; i < sn.size(); ++i) neg[i] = -sn[i];
    num_.shift_exponents(neg);
    for (size_t i = 0; i < sd.size(); ++i) neg[i] = -sd[i];
    den_.shift_exponents(neg);

    if (!den_.is_constant()) {
      if (auto q = try_divide(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(nvars(), 1);
      } else {
        LaurentPoly g = gcd_poly(num_, den_);
        if (!g.is_one()) {
          num_ = *try_divide(num_, g);
          den_ = *try_divide(den_, g);
        }
      }
    }
    Int c = gcd_int(num_.content(), den_.content());
    if (c != 1) {
      num_.divide_content(c);
      den_.divide_content(c);
    }
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Exp back(sn.size());
    for (size_t i = 0; i < sn.size(); ++i) back[i] = sn[i] - sd[i];
    num_.shift_exponents(back);
  }

  LaurentPoly num_, den_;
};

// Membership test for the tropical semifield: e must be a single Laurent
// monomial with coefficient 1 supported on the frozen variables x_{n+1}..x_m.
inline std::optional<TropMonomial> as_coefficient(const RatExpr& e, size_t n_mutable) {
  if (e.is_zero()) return std::nullopt;
  if (!e.den().is_one()) return std::nullopt;
  if (!e.num().is_monomial()) return std::nullopt;
  if (e.num().leading_coeff() != 1) return std::nullopt;
  const Exp& ex = e.num().leading_exp();
  require(n_mutable <= ex.size(), Errc::DimensionMismatch, "mutable count");
  for (size_t i = 0; i < n_mutable; ++i)
    if (ex[i] != 0) return std::nullopt;
  return TropMonomial(VecI(ex.begin() + n_mutable, ex.end()));
}

// Witness for x = t*y with t in P; avoids normalizing the quotient by
// comparing the cross products termwise.
inline std::optional<TropMonomial> proportional(const RatExpr& x, const RatExpr& y,
                                                size_t n_mutable) {
  require(!y.is_zero(), Errc::DivisionByZero, "proportionality against zero");
  LaurentPoly a = x.num() * y.den();
  LaurentPoly b = y.num() * x.den();
  if (a.is_zero()) return std::nullopt;
  if (a.term_count() != b.term_count()) return std::nullopt;
  const Exp& ea = a.leading_exp();
  const Exp& eb = b.leading_exp();
  if (a.leading_coeff() != b.leading_coeff()) return std::nullopt;
  Exp t(ea.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = ea[i] - eb[i];
  for (size_t i = 0; i < n_mutable; ++i)
    if (t[i] != 0) return std::nullopt;
  LaurentPoly shifted = b;
  shifted.shift_exponents(t);
  if (!(shifted == a)) return std::nullopt;
  return TropMonomial(VecI(t.begin() + n_mutable, t.end()));
}

// Evaluate e at the given images of the ambient variables. Per-variable
// powers are cached across terms.
inline RatExpr eval_at(const RatExpr& e, const std::vector<RatExpr>& images) {
  require(images.size() == e.nvars(), Errc::DimensionMismatch, "evaluation arity");
  size_t out_vars = images.empty() ? 0 : images.front().nvars();
  std::vector<std::map<ExpInt, RatExpr>> cache(images.size());
  auto power = [&](size_t j, ExpInt k) -> const RatExpr& {
    auto it = cache[j].find(k);
    if (it == cache[j].end()) it = cache[j].emplace(k, images[j].pow(k)).first;
    return it->second;
  };
  auto eval_poly = [&](const LaurentPoly& p) {
    RatExpr acc = RatExpr::zero(out_vars);
    for (auto& [ex, c] : p.terms()) {
      RatExpr term = RatExpr::constant(out_vars, c);
      for (size_t j = 0; j < images.size(); ++j)
        if (ex[j] != 0) term = term * power(j, ex[j]);
      acc = acc + term;
    }
    return acc;
  };
  return eval_poly(e.num()) / eval_poly(e.den());
}

// Exact field arithmetic entry point used by the CLI and tests.
enum class RatOp { Add, Sub, Mul, Div };
inline RatExpr rat_arith(const RatExpr& a, const RatExpr& b, RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  fail(Errc::DimensionMismatch, "bad op");
}

}  // namespace cluq
