#pragma once

#include "cluq/matrix.hpp"
#include "cluq/ratexpr.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {

// Labeled seed: cluster variables expressed in the root seed's coordinates,
// the extended matrix, and the mutation path from the root. Frozen variables
// are the ambient generators x_{n+1}..x_m and never change.
struct LabeledSeed {
  ExtMatrix B;
  std::vector<RatExpr> cluster;  // n expressions over m ambient variables
  std::vector<int> path;         // 0-based directions from the root

  int n() const { return B.n; }
  int m() const { return B.m(); }
};

inline LabeledSeed root_seed(const ExtMatrix& B) {
  LabeledSeed s;
  s.B = B;
  for (int i = 0; i < B.n; ++i) s.cluster.push_back(RatExpr::variable(B.m(), i));
  return s;
}

// Ambient variable j (0-based; j >= n picks a frozen generator).
inline RatExpr ambient_variable(const LabeledSeed& s, int j) {
  if (j < s.n()) return s.cluster[j];
  return RatExpr::variable(s.m(), j);
}

// Exchange relation (1): x_k' = (prod x_j^{[b_jk]+} + prod x_j^{[-b_jk]+}) / x_k.
inline LabeledSeed mutate_seed(const LabeledSeed& s, int k) {
  require(k >= 0 && k < s.n(), Errc::DirectionOutOfRange, "mutation direction out of range");
  RatExpr plus = RatExpr::one(s.m());
  RatExpr minus = RatExpr::one(s.m());
  for (int j = 0; j < s.m(); ++j) {
    const Int& b = s.B.at(j, k);
    if (b > 0) plus = plus * ambient_variable(s, j).pow(b);
    else if (b < 0) minus = minus * ambient_variable(s, j).pow(-b);
  }
  LabeledSeed r;
  r.B = mutate_matrix(s.B, k);
  r.cluster = s.cluster;
  r.cluster[k] = (plus + minus) / s.cluster[k];
  r.path = s.path;
  r.path.push_back(k);
  return r;
}

inline LabeledSeed mutate_seed_path(LabeledSeed s, const std::vector<int>& path) {
  for (int k : path) s = mutate_seed(s, k);
  return s;
}

struct YVariables {
  std::vector<TropMonomial> y;  // coefficient monomials over the frozen part
  std::vector<RatExpr> yhat;    // hatted Y-variables in root coordinates
};

// Definition (5): y_i over the frozen rows, yhat_i including the principal rows.
inline YVariables y_variables(const LabeledSeed& s) {
  YVariables Y;
  const int n = s.n(), m = s.m();
  for (int i = 0; i < n; ++i) {
    VecI f(m - n);
    for (int r = n; r < m; ++r) f[r - n] = s.B.at(r, i);
    Y.y.emplace_back(std::move(f));
  }
  for (int i = 0; i < n; ++i) {
    Exp mono(m, 0);
    for (int r = n; r < m; ++r) mono[r] = to_exp(s.B.at(r, i));
    RatExpr v = RatExpr::monomial(m, mono);
    for (int j = 0; j < n; ++j) {
      const Int& b = s.B.at(j, i);
      if (b != 0) v = v * s.cluster[j].pow(b);
    }
    Y.yhat.push_back(std::move(v));
  }
  return Y;
}

struct SeedProportionality {
  bool proportional = false;
  std::vector<std::optional<TropMonomial>> witnesses;  // per cluster variable
  bool yhat_equal = false;
  bool principal_equal = false;
};

// Proportionality of labeled seeds: x_i pairwise proportional, hatted
// Y-variables equal exactly, principal parts equal.
inline SeedProportionality seed_proportional(const LabeledSeed& s, const LabeledSeed& t) {
  require(s.n() == t.n() && s.m() == t.m(), Errc::DimensionMismatch, "seed shapes differ");
  SeedProportionality R;
  R.principal_equal = s.B.principal_equal(t.B);
  bool vars_ok = true;
  for (int i = 0; i < s.n(); ++i) {
    R.witnesses.push_back(proportional(s.cluster[i], t.cluster[i], s.n()));
    if (!R.witnesses.back()) vars_ok = false;
  }
  YVariables ys = y_variables(s), yt = y_variables(t);
  R.yhat_equal = true;
  for (int i = 0; i < s.n(); ++i)
    if (!(ys.yhat[i] == yt.yhat[i])) R.yhat_equal = false;
  R.proportional = vars_ok && R.yhat_equal && R.principal_equal;
  return R;
}

// Simultaneous relabeling of the exchangeable indices: permutes the cluster
// tuple and the matrix; the path no longer tracks the root and is cleared.
inline LabeledSeed relabel_seed(const LabeledSeed& s, const std::vector<int>& sigma) {
  LabeledSeed r;
  r.B = relabel(s.B, sigma);
  for (int i = 0; i < s.n(); ++i) r.cluster.push_back(s.cluster[sigma[i]]);
  return r;
}

// Sets every frozen variable to 1: drops the frozen rows and restricts the
// cluster expressions to the first n ambient variables.
inline LabeledSeed specialize_trivial(const LabeledSeed& s) {
  LabeledSeed r;
  r.B = s.B.principal_part();
  r.path = s.path;
  for (const RatExpr& x : s.cluster)
    r.cluster.emplace_back(x.num().restrict_vars(s.n()), x.den().restrict_vars(s.n()));
  return r;
}

// Seed JSON export; the path is emitted 1-based to match the CLI convention.
inline std::string seed_to_json(const LabeledSeed& s) {
  std::ostringstream os;
  os << "{\"n\":" << s.n() << ", \"m\":" << s.m() << ", \"matrix\":[";
  for (int j = 0; j < s.m(); ++j) {
    if (j) os << ",";
    os << "[" << join_ints(s.B.rows[j], ",") << "]";
  }
  os << "], \"path\":[";
  for (size_t i = 0; i < s.path.size(); ++i) {
    if (i) os << ",";
    os << (s.path[i] + 1);
  }
  os << "], \"cluster\":[";
  for (int i = 0; i < s.n(); ++i) {
    if (i) os << ",";
    os << "\"" << s.cluster[i].str() << "\"";
  }
  os << "]}";
  return os.str();
}

}  // namespace cluq
