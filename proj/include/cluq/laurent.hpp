#pragma once

#include "cluq/ints.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace cluq {

// Exponent vector of a Laurent monomial; negative entries allowed. Exponents
// are checked 64-bit: matrix entries stay unbounded, and any exponent leaving
// the guarded range raises TermBudgetExceeded instead of wrapping.
using ExpInt = long long;
using Exp = std::vector<ExpInt>;

inline constexpr ExpInt kExpLimit = 1LL << 40;

inline ExpInt to_exp(const Int& x) {
  require(abs_int(x) <= Int(kExpLimit), Errc::TermBudgetExceeded, "exponent too large");
  return x.convert_to<ExpInt>();
}

inline Exp to_exp_vec(const VecI& v) {
  Exp e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = to_exp(v[i]);
  return e;
}

inline VecI from_exp_vec(const Exp& e) { return VecI(e.begin(), e.end()); }

// Graded lexicographic, descending, so that map::begin() is the leading term.
struct TermOrder {
  bool operator()(const Exp& a, const Exp& b) const {
    ExpInt da = 0, db = 0;
    for (ExpInt x : a) da += x;
    for (ExpInt x : b) db += x;
    if (da != db) return da > db;
    return a > b;
  }
};

// Term-count budget for polynomial arithmetic. Guards runaway expansions.
inline size_t& term_cap() {
  static size_t cap = size_t(1) << 22;
  return cap;
}

class LaurentPoly {
 public:
  using Terms = std::map<Exp, Int, TermOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(size_t nvars, const Int& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
  }
  static LaurentPoly monomial(size_t nvars, const Exp& e, const Int& c) {
    require(e.size() == nvars, Errc::DimensionMismatch, "monomial exponent width");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }
  // Variable x_{j+1} (0-based index j).
  static LaurentPoly variable(size_t nvars, size_t j) {
    Exp e(nvars, 0);
    e.at(j) = 1;
    return monomial(nvars, e, 1);
  }

  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (ExpInt e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

  const Exp& leading_exp() const { return terms_.begin()->first; }
  const Int& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    require(terms_.size() <= term_cap(), Errc::TermBudgetExceeded, "term budget exceeded");
  }

  LaurentPoly operator-() const {
    LaurentPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "poly add width");
    LaurentPoly r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "poly sub width");
    LaurentPoly r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require(a.nvars_ == b.nvars_, Errc::DimensionMismatch, "poly mul width");
    LaurentPoly r(a.nvars_);
    Exp e(a.nvars_, 0);
    for (auto& [ea, ca] : a.terms_) {
      for (auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    LaurentPoly r(a.nvars_);
    if (c == 0) return r;
    for (auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  LaurentPoly pow(unsigned long k) const {
    LaurentPoly r = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  // gcd of all coefficients; positive, 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (auto& [e, c] : terms_) {
      g = gcd_int(g, c);
      if (g == 1) break;
    }
    return g;
  }
  void divide_content(const Int& g) {
    if (g == 1) return;
    Terms t;
    for (auto& [e, c] : terms_) t.emplace(e, c / g);
    terms_ = std::move(t);
  }

  // Componentwise minimum exponent over the support; zero vector for 0.
  Exp min_exp() const {
    Exp v(nvars_, 0);
    bool first = true;
    for (auto& [e, c] : terms_) {
      if (first) {
        v = e;
        first = false;
      } else {
        for (size_t i = 0; i < nvars_; ++i)
          if (e[i] < v[i]) v[i] = e[i];
      }
    }
    return v;
  }
  // Multiply by x^shift.
  void shift_exponents(const Exp& shift) {
    require(shift.size() == nvars_, Errc::DimensionMismatch, "shift width");
    Terms t;
    for (auto& [e, c] : terms_) {
      Exp e2 = e;
      for (size_t i = 0; i < nvars_; ++i) e2[i] += shift[i];
      t.emplace(std::move(e2), c);
    }
    terms_ = std::move(t);
  }

  // Degree in variable v (max exponent); -1 meaningless for Laurent input, callers
  // use it on exponent-shifted polynomials only. Returns 0 for the zero poly.
  ExpInt degree_in(size_t v) const {
    ExpInt d = 0;
    bool first = true;
    for (auto& [e, c] : terms_) {
      if (first || e[v] > d) d = e[v];
      first = false;
    }
    return d;
  }

  // Coefficient of x_v^d, as a polynomial with the v-exponent zeroed.
  LaurentPoly coeff_of(size_t v, ExpInt d) const {
    LaurentPoly r(nvars_);
    for (auto& [e, c] : terms_) {
      if (e[v] == d) {
        Exp e2 = e;
        e2[v] = 0;
        r.terms_.emplace(std::move(e2), c);
      }
    }
    return r;
  }

  // Drop all variables with index >= keep (sets them to 1) and merge terms.
  LaurentPoly restrict_vars(size_t keep) const {
    LaurentPoly r(keep);
    for (auto& [e, c] : terms_) {
      Exp e2(e.begin(), e.begin() + keep);
      r.add_term(e2, c);
    }
    return r;
  }

  // Extend the ambient variable count; new exponents are zero.
  LaurentPoly extend_vars(size_t nvars) const {
    require(nvars >= nvars_, Errc::DimensionMismatch, "extend width");
    LaurentPoly r(nvars);
    for (auto& [e, c] : terms_) {
      Exp e2 = e;
      e2.resize(nvars, 0);
      r.terms_.emplace(std::move(e2), c);
    }
    return r;
  }

  // Deterministic printing: terms in descending graded-lex order joined by '+',
  // each `c*x<i>^<e>` with zero-exponent factors omitted.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
      if (!first) os << "+";
      first = false;
      os << c;
      for (size_t i = 0; i < nvars_; ++i)
        if (e[i] != 0) os << "*x" << (i + 1) << "^" << e[i];
    }
    return os.str();
  }

 private:
  size_t nvars_ = 0;
  Terms terms_;
};

// Exact division of Laurent polynomials; nullopt when not divisible.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "poly division by zero");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  // Work on exponent-shifted copies so the support lives in N^m and the
  // leading-term elimination loop terminates.
  LaurentPoly A = a, B = b;
  Exp sa = A.min_exp(), sb = B.min_exp();
  Exp neg(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) neg[i] = -sa[i];
  A.shift_exponents(neg);
  for (size_t i = 0; i < sb.size(); ++i) neg[i] = -sb[i];
  B.shift_exponents(neg);

  LaurentPoly q(a.nvars());
  Exp e(a.nvars());
  while (!A.is_zero()) {
    const Exp& le = A.leading_exp();
    const Int& lc = A.leading_coeff();
    const Exp& be = B.leading_exp();
    if (lc % B.leading_coeff() != 0) return std::nullopt;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = le[i] - be[i];
      if (e[i] < 0) return std::nullopt;
    }
    LaurentPoly t = LaurentPoly::monomial(a.nvars(), e, lc / B.leading_coeff());
    q = q + t;
    A = A - t * B;
  }
  // Undo the shifts: a/b = x^(sa-sb) * (A/B).
  Exp back(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) back[i] = sa[i] - sb[i];
  q.shift_exponents(back);
  return q;
}

namespace detail {

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Content of p with respect to variable v: gcd of its v-coefficients.
inline LaurentPoly content_in(const LaurentPoly& p, size_t v) {
  LaurentPoly g(p.nvars());
  std::map<ExpInt, LaurentPoly> coeffs;
  for (auto& [e, c] : p.terms()) {
    auto it = coeffs.find(e[v]);
    if (it == coeffs.end()) it = coeffs.emplace(e[v], LaurentPoly(p.nvars())).first;
    Exp e2 = e;
    e2[v] = 0;
    it->second.add_term(e2, c);
  }
  for (auto& [d, c] : coeffs) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of A by B in variable v; requires deg_v(A) >= deg_v(B) >= 1.
inline LaurentPoly prem(LaurentPoly A, const LaurentPoly& B, size_t v) {
  ExpInt db = B.degree_in(v);
  LaurentPoly lcb = B.coeff_of(v, db);
  ExpInt e = A.degree_in(v) - db + 1;
  while (!A.is_zero() && A.degree_in(v) >= db) {
    ExpInt da = A.degree_in(v);
    LaurentPoly lca = A.coeff_of(v, da);
    Exp mono(A.nvars(), 0);
    mono[v] = da - db;
    LaurentPoly shifted = B * lca;
    shifted.shift_exponents(mono);
    A = A * lcb - shifted;
    e -= 1;
  }
  while (e > 0) {
    A = A * lcb;
    e -= 1;
  }
  return A;
}

// gcd of polynomials with nonnegative exponents, full integer content included,
// canonical: min-exponents zero, positive leading coefficient.
inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto canon = [](LaurentPoly p) {
    if (p.is_zero()) return p;
    Exp s = p.min_exp();
    for (ExpInt& x : s) x = -x;
    p.shift_exponents(s);
    if (p.leading_coeff() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return canon(b);
  if (b.is_zero()) return canon(a);

  LaurentPoly A = canon(a), B = canon(b);
  Int ca = A.content(), cb = B.content();
  Int c = gcd_int(ca, cb);
  A.divide_content(ca);
  B.divide_content(cb);

  if (A.is_monomial() || B.is_monomial()) {
    Exp ea = A.min_exp(), eb = B.min_exp();
    Exp e(ea.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] < eb[i] ? ea[i] : eb[i];
    return LaurentPoly::monomial(A.nvars(), e, c);
  }
  if (A == B) return canon(A * c);
  if (auto q = try_divide(A, B)) {
    (void)q;
    return canon(B * c);
  }
  if (auto q = try_divide(B, A)) {
    (void)q;
    return canon(A * c);
  }

  // Pick the first variable appearing in either polynomial.
  size_t v = 0;
  bool found = false;
  for (; v < A.nvars(); ++v) {
    if (A.degree_in(v) > 0 || B.degree_in(v) > 0) {
      found = true;
      break;
    }
  }
  if (!found) return LaurentPoly::constant(A.nvars(), c);  // both constants

  if (A.degree_in(v) == 0) {
    LaurentPoly g = poly_gcd(A, content_in(B, v));
    return canon(g * c);
  }
  if (B.degree_in(v) == 0) {
    LaurentPoly g = poly_gcd(B, content_in(A, v));
    return canon(g * c);
  }

  LaurentPoly contA = content_in(A, v), contB = content_in(B, v);
  LaurentPoly gc = poly_gcd(contA, contB);
  LaurentPoly P = *try_divide(A, contA);
  LaurentPoly Q = *try_divide(B, contB);
  if (P.degree_in(v) < Q.degree_in(v)) std::swap(P, Q);

  // Primitive PRS.
  while (true) {
    LaurentPoly r = prem(P, Q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      // Co-prime in v: the gcd is the content part only.
      return canon(gc * c);
    }
    P = Q;
    LaurentPoly cr = content_in(r, v);
    Q = *try_divide(r, cr);
  }
  LaurentPoly cq = content_in(Q, v);
  Q = *try_divide(Q, cq);
  return canon(gc * Q * c);
}

}  // namespace detail

// gcd over Z of two Laurent polynomials, up to units: canonical result has
// min-exponent zero in every variable, positive leading coefficient, and
// carries the gcd of the integer contents.
inline LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b) {
  require(a.nvars() == b.nvars(), Errc::DimensionMismatch, "gcd width");
  return detail::poly_gcd(a, b);
}

}  // namespace cluq
