#pragma once

#include "cluq/explorer.hpp"
#include "cluq/morphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {

// One direct cluster automorphism of A_triv, realized as a permutation of the
// finite set of cluster variables. `sigma` relabels the target seed's matrix
// back onto the root matrix; the induced permutation comes from substituting
// every cluster variable through the map x_i -> target.cluster[sigma(i)].
struct SeedSymmetry {
  std::string target_key;
  std::vector<int> sigma;
  std::vector<int> induced;  // permutation of the variable universe
};

struct GroupReport {
  size_t order = 0;
  std::map<size_t, size_t> element_orders;  // order -> count
  bool abelian = false;
  bool cyclic = false;
  std::vector<size_t> generator_indices;
  bool closure_verified = false;
};

namespace detail {

inline std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline size_t perm_order(const std::vector<int>& p) {
  size_t n = p.size();
  std::vector<char> seen(n, 0);
  size_t ord = 1;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline GroupReport analyze_group(const std::vector<std::vector<int>>& perms) {
  GroupReport R;
  R.order = perms.size();
  std::set<std::vector<int>> table(perms.begin(), perms.end());
  R.closure_verified = true;
  R.abelian = true;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      auto ab = compose_perm(a, b);
      if (!table.count(ab)) R.closure_verified = false;
      if (ab != compose_perm(b, a)) R.abelian = false;
    }
  for (const auto& p : perms) ++R.element_orders[perm_order(p)];
  R.cyclic = R.element_orders.count(R.order) > 0 || R.order <= 1;
  // greedy generator witnesses
  if (!perms.empty()) {
    size_t idn = perms[0].size();
    std::vector<int> id(idn);
    for (size_t i = 0; i < idn; ++i) id[i] = (int)i;
    auto closure_of = [&](const std::vector<size_t>& gens) {
      std::set<std::vector<int>> closed{id};
      std::vector<std::vector<int>> frontier{id};
      while (!frontier.empty()) {
        auto g = frontier.back();
        frontier.pop_back();
        for (size_t gi : gens) {
          auto h = compose_perm(g, perms[gi]);
          if (closed.insert(h).second) frontier.push_back(h);
        }
      }
      return closed;
    };
    std::set<std::vector<int>> generated{id};
    for (size_t i = 0; i < perms.size() && generated.size() < R.order; ++i) {
      if (generated.count(perms[i])) continue;
      R.generator_indices.push_back(i);
      generated = closure_of(R.generator_indices);
    }
  }
  return R;
}

}  // namespace detail

struct AutGroup {
  std::vector<SeedSymmetry> elements;
  GroupReport report;
  std::vector<std::string> variable_universe;  // canonical strings, sorted
  ExchangeGraph graph;                         // exchange graph of A_triv
};

// Enumerates Aut^+(A_triv): all pairs (seed in the exchange graph, principal
// relabeling sigma) with relabel(B', sigma) == B_root. Each pair acts on the
// full set of cluster variables by substitution.
inline AutGroup direct_automorphisms_triv(const LabeledSeed& root, size_t cap = 1000000,
                                          bool include_inverse = false) {
  require(root.m() == root.n(), Errc::DimensionMismatch,
          "direct_automorphisms_triv expects trivial coefficients");
  AutGroup G;
  G.graph = explore(root, cap, KeyMode::Symbolic);
  require(G.graph.finite, Errc::NotFinite, "exchange graph not finite within cap");

  std::set<std::string> vars;
  for (auto& [key, seed] : G.graph.nodes)
    for (auto& x : seed.cluster) vars.insert(x.str());
  G.variable_universe.assign(vars.begin(), vars.end());
  auto var_index = [&](const std::string& s) {
    auto it = std::lower_bound(G.variable_universe.begin(), G.variable_universe.end(), s);
    require(it != G.variable_universe.end() && *it == s, Errc::NotFinite,
            "image is not a cluster variable");
    return (int)(it - G.variable_universe.begin());
  };

  // The automorphism determined by (target seed, sigma) sends the seed at
  // path w to the relabeled target mutated along w, slot for slot; the whole
  // variable permutation is read off by replaying every node's path on the
  // relabeled target.
  std::set<std::vector<int>> seen;
  for (auto& [key, seed] : G.graph.nodes) {
    std::vector<ExtMatrix> targets{seed.B};
    if (include_inverse) targets.push_back(negate_matrix(seed.B));
    for (size_t ti = 0; ti < targets.size(); ++ti) {
      for (const auto& sigma : principal_relabelings(root.B, targets[ti])) {
        LabeledSeed relabeled = relabel_seed(seed, sigma);
        if (ti == 1) relabeled.B = negate_matrix(relabeled.B);
        std::vector<int> induced(G.variable_universe.size(), -1);
        for (auto& [key2, src] : G.graph.nodes) {
          LabeledSeed img = mutate_seed_path(relabeled, src.path);
          for (int i = 0; i < root.n(); ++i)
            induced[var_index(src.cluster[i].str())] = var_index(img.cluster[i].str());
        }
        if (seen.insert(induced).second) {
          G.elements.push_back(SeedSymmetry{key, sigma, induced});
        }
      }
    }
  }
  std::vector<std::vector<int>> perms;
  for (auto& e : G.elements) perms.push_back(e.induced);
  G.report = detail::analyze_group(perms);
  return G;
}

enum class StarCondition { FiniteType, SkewSymmetric, NonDegenerate, Unknown };

inline StarCondition check_star_condition(const ExtMatrix& B, bool finite_by_enumeration) {
  if (finite_by_enumeration) return StarCondition::FiniteType;
  if (is_skew_symmetric(B.principal_part())) return StarCondition::SkewSymmetric;
  if (lattice_rank(B.principal_part()) == (size_t)B.n) return StarCondition::NonDegenerate;
  return StarCondition::Unknown;
}

struct QAut0Result {
  AutGroup aut_triv;                   // ambient Aut^+(A_triv)
  std::vector<size_t> lifted;          // indices into aut_triv.elements that lift
  GroupReport report;                  // group structure of QAut_0
  size_t subgroup_index = 0;           // index of QAut_0 in Aut^+(A_triv)
  StarCondition star = StarCondition::Unknown;
};

// QAut_0(A) for a coefficient-bearing algebra with finite exchange graph:
// filter the direct automorphisms of A_triv by the lattice criterion on the
// full matrices (Lat(sigma(B'_full)) == Lat(B_full)).
inline QAut0Result qaut0_group(const LabeledSeed& root_full, size_t cap = 1000000) {
  QAut0Result R;
  LabeledSeed root_triv = specialize_trivial(root_full);
  root_triv.path.clear();
  R.aut_triv = direct_automorphisms_triv(root_triv, cap);
  R.star = check_star_condition(root_full.B, R.aut_triv.graph.finite);
  require(R.star != StarCondition::Unknown, Errc::StarConditionUnknown,
          "no star condition applies");

  std::vector<std::vector<int>> perms;
  for (size_t i = 0; i < R.aut_triv.elements.size(); ++i) {
    const SeedSymmetry& e = R.aut_triv.elements[i];
    const LabeledSeed& target_triv = R.aut_triv.graph.nodes.at(e.target_key);
    ExtMatrix B_full = mutate_matrix_path(root_full.B, target_triv.path);
    if (lat_equal(relabel(B_full, e.sigma), root_full.B)) {
      R.lifted.push_back(i);
      perms.push_back(e.induced);
    }
  }
  R.report = detail::analyze_group(perms);
  R.subgroup_index = R.report.order == 0 ? 0 : R.aut_triv.report.order / R.report.order;
  return R;
}

// A seed map for relation checking: the images of the ambient variables in
// root coordinates. Generators come from (mutation path, relabeling) pairs or
// from monomial maps.
struct SeedMap {
  std::vector<RatExpr> images;  // length m
};

inline SeedMap seed_map_from_path(const LabeledSeed& root, const std::vector<int>& path,
                                  const std::vector<int>& sigma) {
  LabeledSeed t = mutate_seed_path(root, path);
  SeedMap f;
  for (int i = 0; i < root.n(); ++i) f.images.push_back(t.cluster[sigma[i]]);
  for (int j = root.n(); j < root.m(); ++j)
    f.images.push_back(RatExpr::variable(root.m(), j));
  return f;
}

inline SeedMap seed_map_from_monomial_map(const MonomialMap& f) {
  return SeedMap{map_images(f)};
}

inline SeedMap compose_seed_maps(const SeedMap& f, const SeedMap& g) {
  // first g, then f
  SeedMap h;
  for (const RatExpr& img : g.images) h.images.push_back(eval_at(img, f.images));
  return h;
}

struct RelationReport {
  struct Entry {
    std::string name;
    bool holds = false;
  };
  std::vector<Entry> entries;
  bool all_hold = true;
};

// Evaluates word pairs (as generator index sequences, applied right to left)
// and tests whether both sides agree as seed maps. With exact = false the
// comparison is proportionality on the cluster variables.
inline RelationReport relation_check(const LabeledSeed& root,
                                     const std::vector<SeedMap>& generators,
                                     const std::vector<std::pair<std::vector<int>, std::vector<int>>>& relations,
                                     const std::vector<std::string>& names, bool exact = true) {
  auto eval_word = [&](const std::vector<int>& word) {
    SeedMap acc;
    for (int j = 0; j < root.m(); ++j) acc.images.push_back(RatExpr::variable(root.m(), j));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = compose_seed_maps(generators.at(*it), acc);
    return acc;
  };
  RelationReport R;
  for (size_t r = 0; r < relations.size(); ++r) {
    SeedMap lhs = eval_word(relations[r].first);
    SeedMap rhs = eval_word(relations[r].second);
    bool ok = true;
    for (int i = 0; i < root.n() && ok; ++i) {
      if (exact) ok = lhs.images[i] == rhs.images[i];
      else ok = proportional(lhs.images[i], rhs.images[i], root.n()).has_value();
    }
    R.entries.push_back({names.size() > r ? names[r] : "relation", ok});
    if (!ok) R.all_hold = false;
  }
  return R;
}

inline std::string group_report_json(const GroupReport& g, size_t subgroup_index) {
  std::ostringstream os;
  os << "{\"order\":" << g.order << ", \"abelian\":" << (g.abelian ? "true" : "false")
     << ", \"cyclic\":" << (g.cyclic ? "true" : "false") << ", \"element_orders\":{";
  bool first = true;
  for (auto& [ord, count] : g.element_orders) {
    if (!first) os << ",";
    first = false;
    os << "\"" << ord << "\":" << count;
  }
  os << "}, \"subgroup_index_in_aut_triv\":" << subgroup_index << "}";
  return os.str();
}

}  // namespace cluq
