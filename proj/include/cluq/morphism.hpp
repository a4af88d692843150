#pragma once

#include "cluq/hnf.hpp"
#include "cluq/seed.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {

// Variable-to-monomial substitution Psi(x_j) = prod_i xbar_i^{m_ij}, where
// xbar runs over the target seed's cluster variables and frozen generators.
// Column j of `M` holds the exponents of the image of x_j.
struct MonomialMap {
  std::vector<VecI> M;  // mbar x m
  LabeledSeed source;   // seed of the source algebra (usually its root)
  LabeledSeed target;   // seed with Psi(source) proportional to it

  size_t rows() const { return M.size(); }
  size_t cols() const { return M.empty() ? 0 : M[0].size(); }
};

inline MonomialMap identity_map(const LabeledSeed& s) {
  MonomialMap f;
  f.source = s;
  f.target = s;
  f.M.assign(s.m(), VecI(s.m(), Int(0)));
  for (int i = 0; i < s.m(); ++i) f.M[i][i] = 1;
  return f;
}

// Images of the ambient variables under the map, in the target root coordinates.
inline std::vector<RatExpr> map_images(const MonomialMap& f) {
  std::vector<RatExpr> images;
  const size_t m = f.cols();
  for (size_t j = 0; j < m; ++j) {
    RatExpr img = RatExpr::one(f.target.m());
    for (size_t i = 0; i < f.rows(); ++i)
      if (f.M[i][j] != 0) img = img * ambient_variable(f.target, (int)i).pow(f.M[i][j]);
    images.push_back(std::move(img));
  }
  return images;
}

// The field homomorphism determined by the map, applied to e.
inline RatExpr substitute(const MonomialMap& f, const RatExpr& e) {
  require(e.nvars() == f.cols(), Errc::DimensionMismatch, "substitute arity");
  return eval_at(e, map_images(f));
}

// Quasi-homomorphism between seeds per the matrix criterion: principal parts
// agree and Lat(t) is contained in Lat(s). The matrix comes from the block
// solve and is canonical.
inline std::optional<MonomialMap> quasi_hom_between(const LabeledSeed& s, const LabeledSeed& t) {
  require(s.n() == t.n(), Errc::DimensionMismatch, "rank mismatch");
  if (!s.B.principal_equal(t.B)) return std::nullopt;
  auto sol = solve_block_matrix(s.B, t.B);
  if (!sol) return std::nullopt;
  MonomialMap f;
  f.M = std::move(sol->M);
  f.source = s;
  f.target = t;
  return f;
}

struct QuasiHomCheck {
  std::vector<std::optional<TropMonomial>> cluster_witnesses;
  std::vector<bool> yhat_equal;
  bool principal_equal = false;
  bool pass = false;
};

// Full symbolic verification of Psi(s) proportional to t. The map's columns
// index the variables of the source seed s, so Psi(x_{i;s}) is read off the
// matrix directly and Psi(yhat_{i;s}) = prod_j images[j]^{B_s[j][i]}.
inline QuasiHomCheck verify_quasi_hom(const MonomialMap& f, const LabeledSeed& s,
                                      const LabeledSeed& t) {
  require(f.cols() == (size_t)s.m(), Errc::DimensionMismatch, "map arity vs source seed");
  QuasiHomCheck R;
  auto images = map_images(f);
  bool ok = true;
  for (int i = 0; i < s.n(); ++i) {
    R.cluster_witnesses.push_back(proportional(images[i], t.cluster[i], t.n()));
    if (!R.cluster_witnesses.back()) ok = false;
  }
  YVariables yt = y_variables(t);
  for (int i = 0; i < s.n(); ++i) {
    RatExpr img = RatExpr::one(t.m());
    for (int j = 0; j < s.m(); ++j)
      if (s.B.at(j, i) != 0) img = img * images[j].pow(s.B.at(j, i));
    R.yhat_equal.push_back(img == yt.yhat[i]);
    if (!R.yhat_equal.back()) ok = false;
  }
  R.principal_equal = s.B.principal_equal(t.B);
  R.pass = ok && R.principal_equal;
  return R;
}

// Composition f of g: first apply g, then f; exponent matrices multiply.
inline MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  require(f.cols() == g.rows(), Errc::DimensionMismatch, "composition arity");
  MonomialMap h;
  h.M = mat_mul(f.M, g.M);
  h.source = g.source;
  h.target = f.target;
  return h;
}

// Psi proportional to the identity: Psi(source) is seed-proportional to the
// source seed itself.
inline bool proportional_to_identity(const MonomialMap& f) {
  return verify_quasi_hom(f, f.source, f.source).pass;
}

enum class MapKind {
  ClusterAutomorphism,
  WeakClusterAutomorphism,
  QuasiAutomorphismOnly,
  NotQuasi,
};

struct MapClass {
  MapKind kind = MapKind::NotQuasi;
  bool direct = false;   // matrix relabeling with the same sign exists
  bool inverse = false;  // relabeling onto the negated matrix exists
  bool exhaustive_weak_check = false;  // sample covered the whole (finite) graph
};

// Classification per the block-matrix criteria: cluster automorphism iff
// M1 = 0 and M2 is a permutation matrix; weak iff M1 = 0 and the frozen blocks
// satisfy B2' = s * M2 * B2 at every sampled seed, where s is +1 for a direct
// pairing (equal principal parts) and -1 for an inverse pairing (negated
// principal parts, as for the order-two map of the seven-variable example);
// quasi only via lattice equality.
inline MapClass classify(const MonomialMap& f, const std::vector<std::vector<int>>& sample_paths,
                         bool samples_exhaustive = false) {
  MapClass R;
  auto m1 = BlockSolution{f.M, {}, f.source.n()}.m1();
  auto m2 = BlockSolution{f.M, {}, f.source.n()}.m2();
  bool m1_zero = true;
  for (auto& row : m1)
    for (auto& x : row)
      if (x != 0) m1_zero = false;

  int sign = 0;
  if (f.target.B.principal_equal(f.source.B)) sign = 1;
  else if (f.target.B.principal_equal(negate_matrix(f.source.B))) sign = -1;

  auto frozen_block = [](const ExtMatrix& B) {
    return std::vector<VecI>(B.rows.begin() + B.n, B.rows.end());
  };
  auto scaled = [&](std::vector<VecI> rows) {
    if (sign < 0)
      for (auto& r : rows)
        for (auto& x : r) x = -x;
    return rows;
  };

  if (m1_zero && is_permutation_matrix(m2) && sign != 0) {
    R.kind = MapKind::ClusterAutomorphism;
    R.direct = matrices_isomorphic(f.source.B, f.target.B, true).has_value();
    R.inverse = matrices_isomorphic(f.source.B, negate_matrix(f.target.B), true).has_value();
    return R;
  }
  if (m1_zero && sign != 0) {
    bool weak = true;
    for (const auto& path : sample_paths) {
      ExtMatrix Bs = mutate_matrix_path(f.source.B, path);
      ExtMatrix Bt = mutate_matrix_path(f.target.B, path);
      if (frozen_block(Bt) != scaled(mat_mul(m2, frozen_block(Bs)))) {
        weak = false;
        break;
      }
    }
    if (weak) {
      R.kind = MapKind::WeakClusterAutomorphism;
      R.exhaustive_weak_check = samples_exhaustive;
      auto Ps = f.source.B.principal_part();
      auto Pt = f.target.B.principal_part();
      R.direct = matrices_isomorphic(Ps, Pt, true).has_value();
      R.inverse = matrices_isomorphic(Ps, negate_matrix(Pt), true).has_value();
      return R;
    }
  }
  if (f.source.B.principal_equal(f.target.B) && lat_equal(f.source.B, f.target.B)) {
    R.kind = MapKind::QuasiAutomorphismOnly;
    return R;
  }
  R.kind = MapKind::NotQuasi;
  return R;
}

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::ClusterAutomorphism: return "ClusterAutomorphism";
    case MapKind::WeakClusterAutomorphism: return "WeakClusterAutomorphism";
    case MapKind::QuasiAutomorphismOnly: return "QuasiAutomorphismOnly";
    case MapKind::NotQuasi: return "NotQuasi";
  }
  return "?";
}

// Map text format: one line per source variable, `x<j> -> <monomial>`.
inline std::string format_map_text(const MonomialMap& f) {
  std::ostringstream os;
  for (size_t j = 0; j < f.cols(); ++j) {
    Exp e(f.rows());
    for (size_t i = 0; i < f.rows(); ++i) e[i] = to_exp(f.M[i][j]);
    os << "x" << (j + 1) << " -> " << LaurentPoly::monomial(f.rows(), e, 1).str() << "\n";
  }
  return os.str();
}

// Parses the exponent matrix of a map over `mbar` target variables.
inline std::vector<VecI> parse_map_text(const std::string& text, size_t mbar) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<size_t, VecI>> cols;
  while (std::getline(is, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string lhs, arrow, rhs;
    require(bool(ls >> lhs >> arrow >> rhs), Errc::ParseError, "bad map line");
    require(lhs.size() > 1 && lhs[0] == 'x' && arrow == "->", Errc::ParseError, "bad map line");
    size_t j = std::stoul(lhs.substr(1));
    require(j >= 1, Errc::ParseError, "bad map variable index");
    VecI e(mbar, Int(0));
    // monomial syntax: c*x<i>^<e>*... with coefficient 1
    std::istringstream ms(rhs);
    std::string factor;
    bool first_factor = true;
    while (std::getline(ms, factor, '*')) {
      if (first_factor) {
        require(factor == "1", Errc::ParseError, "map image must have coefficient 1");
        first_factor = false;
        continue;
      }
      size_t caret = factor.find('^');
      require(factor.size() > 1 && factor[0] == 'x' && caret != std::string::npos,
              Errc::ParseError, "bad monomial factor");
      size_t i = std::stoul(factor.substr(1, caret - 1));
      require(i >= 1 && i <= mbar, Errc::ParseError, "map image variable out of range");
      try {
        e[i - 1] = Int(factor.substr(caret + 1));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad exponent in map image");
      }
    }
    require(!first_factor, Errc::ParseError, "empty map image");
    cols.emplace_back(j - 1, std::move(e));
  }
  require(!cols.empty(), Errc::ParseError, "empty map file");
  size_t m = 0;
  for (auto& [j, e] : cols) m = std::max(m, j + 1);
  std::vector<VecI> M(mbar, VecI(m, Int(0)));
  for (auto& [j, e] : cols)
    for (size_t i = 0; i < mbar; ++i) M[i][j] = e[i];
  return M;
}

}  // namespace cluq
