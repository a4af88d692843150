#pragma once

#include "cluq/explorer.hpp"
#include "cluq/fixtures.hpp"
#include "cluq/groups.hpp"
#include "cluq/morphism.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cluq {
namespace examples {

struct CheckList {
  std::string name;
  std::vector<std::pair<std::string, bool>> checks;

  void add(const std::string& what, bool ok) { checks.emplace_back(what, ok); }
  bool all_pass() const {
    for (auto& [w, ok] : checks)
      if (!ok) return false;
    return true;
  }
  std::string to_json() const {
    std::ostringstream os;
    os << "{\"example\":\"" << name << "\", \"pass\":" << (all_pass() ? "true" : "false")
       << ", \"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
      if (i) os << ",";
      os << "{\"check\":\"" << checks[i].first
         << "\",\"ok\":" << (checks[i].second ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
  }
};

// All BFS paths of a finite exchange graph, for exhaustive weak-automorphism
// sampling.
inline std::vector<std::vector<int>> all_paths(const ExchangeGraph& G) {
  std::vector<std::vector<int>> paths;
  for (auto& [key, seed] : G.nodes) paths.push_back(seed.path);
  return paths;
}

// The A2 quasi-automorphism that has no genuine inverse: Psi, its
// quasi-inverse Phi, and the non-unimodular frozen block.
inline CheckList run_nongroup() {
  CheckList R;
  R.name = "nongroup";
  LabeledSeed root = root_seed(fixtures::nongroup());
  LabeledSeed sp = mutate_seed_path(root, {0, 1});

  const size_t m = 3;
  RatExpr x1 = RatExpr::variable(m, 0), x2 = RatExpr::variable(m, 1),
          x3 = RatExpr::variable(m, 2);
  RatExpr x1p = (x2 + x3.pow(3)) / x1;
  RatExpr x2p = (x2 + x3.pow(3) + x1 * x3.pow(3)) / (x1 * x2);
  R.add("x1' = (x2+x3^3)/x1", sp.cluster[0] == x1p);
  R.add("x2' = (x2+x3^3+x1*x3^3)/(x1*x2)", sp.cluster[1] == x2p);
  R.add("B' has frozen row (0,-3)",
        sp.B == fixtures::from_rows(2, {{0, 1}, {-1, 0}, {0, -3}}));

  YVariables y0 = y_variables(root);
  R.add("yhat = (x2^-1 x3^3, x1)",
        y0.yhat[0] == x2.pow(-1) * x3.pow(3) && y0.yhat[1] == x1);
  YVariables y1 = y_variables(sp);
  R.add("yhat' = (x2'^-1, x1' x3^-3)",
        y1.yhat[0] == RatExpr::one(m) / x2p && y1.yhat[1] == x1p * x3.pow(-3));

  MonomialMap psi{fixtures::nongroup_psi_matrix(), root, sp};
  auto vp = verify_quasi_hom(psi, root, sp);
  bool witnesses_ok = vp.cluster_witnesses[0] && vp.cluster_witnesses[1] &&
                      vp.cluster_witnesses[0]->e == VecI{Int(-3)} &&
                      vp.cluster_witnesses[1]->e == VecI{Int(6)};
  R.add("Psi is a quasi-homomorphism (witnesses x3^-3, x3^6)", vp.pass && witnesses_ok);

  MonomialMap phi{fixtures::nongroup_phi_matrix(), sp, root};
  R.add("Phi is a quasi-homomorphism", verify_quasi_hom(phi, sp, root).pass);

  MonomialMap phipsi = compose(phi, psi);
  R.add("Phi o Psi proportional to identity", proportional_to_identity(phipsi));

  auto m2 = BlockSolution{psi.M, {}, 2}.m2();
  R.add("Psi frozen block (2) is not unimodular", m2 == std::vector<VecI>{{Int(2)}} &&
                                                      !is_unimodular(m2));
  MonomialMap psipsi = compose(psi, psi);
  auto m2sq = BlockSolution{psipsi.M, {}, 2}.m2();
  R.add("Psi o Psi frozen block is (4)", m2sq == std::vector<VecI>{{Int(4)}});

  auto qh = quasi_hom_between(root, sp);
  R.add("quasi_hom_between(Sigma, Sigma') exists and verifies",
        qh.has_value() && verify_quasi_hom(*qh, root, sp).pass);

  auto sol = solve_block_matrix(root.B, sp.B);
  bool coset_ok = false;
  if (sol) {
    // the paper's exponent row solves M*B = B' and differs from the canonical
    // solution by a kernel element
    VecI paper{Int(-3), Int(6), Int(2)};
    VecI diff(3);
    for (int i = 0; i < 3; ++i) diff[i] = paper[i] - sol->M[2][i];
    std::vector<VecI> MB = mat_mul({paper}, root.B.rows);
    coset_ok = span_contains(sol->kernel, 3, diff) && MB[0] == sp.B.rows[2];
  }
  R.add("paper's Psi row (-3,6,2) lies in the canonical solution coset", coset_ok);
  return R;
}

// The seven-variable A2 example: tau (order 5) and sigma (order 2) are weak
// cluster automorphisms but not cluster automorphisms; <tau, sigma> is the
// dihedral group of order 10.
inline CheckList run_weakaut_a2() {
  CheckList R;
  R.name = "weakaut-a2";
  LabeledSeed root = root_seed(fixtures::weakaut_a2());
  const size_t m = 7;
  auto x = [&](int j) { return RatExpr::variable(m, j - 1); };

  RatExpr x1p = (x(3).pow(2) * x(4) * x(7) + x(5) * x(2)) / x(1);
  RatExpr x2p = (x(3) * x(4) * x(1) + x(6) * x(7)) / x(2);
  RatExpr x1pp =
      (x(3).pow(2) * x(4) * x(6) * x(7) + x(3).pow(3) * x(4).pow(2) * x(1) + x(5) * x(6) * x(2)) /
      (x(1) * x(2));

  ExchangeGraph G = explore(root, 100, KeyMode::Symbolic);
  R.add("exchange graph is the pentagon", G.finite && G.node_count() == 5);

  std::set<std::string> vars;
  for (auto& [k, s] : G.nodes)
    for (auto& v : s.cluster) vars.insert(v.str());
  std::set<std::string> expected{x(1).str(), x(2).str(), x1p.str(), x2p.str(), x1pp.str()};
  R.add("the five cluster variables match the printed formulas", vars == expected);

  // tau: target seed is mu_1(Sigma) relabeled by the swap (1 2)
  LabeledSeed tau_target = relabel_seed(mutate_seed(root, 0), {1, 0});
  MonomialMap tau{fixtures::weakaut_tau_matrix(), root, tau_target};
  R.add("tau is a quasi-homomorphism onto the relabeled mu_1 seed",
        verify_quasi_hom(tau, root, tau_target).pass);

  // sigma pairs the seed with its swap-relabeling, whose principal part is
  // the negated matrix: an inverse-type pairing, M*B = -B_target.
  LabeledSeed sigma_target = relabel_seed(root, {1, 0});
  MonomialMap sigma{fixtures::weakaut_sigma_matrix(), root, sigma_target};
  std::vector<VecI> MB = mat_mul(sigma.M, root.B.rows);
  std::vector<VecI> negT;
  for (auto& r : sigma_target.B.rows) {
    VecI nr = r;
    for (auto& x : nr) x = -x;
    negT.push_back(std::move(nr));
  }
  R.add("sigma satisfies the inverse pairing relation M*B = -B'", MB == negT);

  // induced permutations of the five cluster variables, by full substitution
  std::vector<RatExpr> five{x(1), x(2), x1p, x2p, x1pp};
  auto act = [&](const MonomialMap& f, const RatExpr& v) {
    return eval_at(v, map_images(f));
  };
  auto perm_of = [&](const MonomialMap& f) {
    std::vector<int> p(5, -1);
    for (int i = 0; i < 5; ++i) {
      RatExpr img = act(f, five[i]);
      for (int j = 0; j < 5; ++j)
        if (img == five[j]) p[i] = j;
    }
    return p;
  };
  std::vector<int> pt = perm_of(tau), ps = perm_of(sigma);
  // printed: x1 -> x2 -> x1' -> x1'' -> x2' -> x1
  R.add("tau acts as the printed 5-cycle", pt == std::vector<int>({1, 2, 4, 0, 3}));
  R.add("sigma acts as the printed involution", ps == std::vector<int>({1, 0, 3, 2, 4}));

  // weak automorphisms have seed-independent matrices, so powers compose by
  // matrix products read in root coordinates
  MonomialMap tau_rooted{tau.M, root, root};
  MonomialMap tau5 = tau_rooted;
  for (int i = 0; i < 4; ++i) tau5 = compose(tau_rooted, tau5);
  R.add("tau^5 proportional to identity", proportional_to_identity(tau5));
  MonomialMap sigma_rooted{sigma.M, root, root};
  R.add("sigma^2 proportional to identity",
        proportional_to_identity(compose(sigma_rooted, sigma_rooted)));

  // tau sigma = sigma tau^{-1} on the cluster variables
  auto compose_perm = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
  };
  std::vector<int> pti(5);
  for (int i = 0; i < 5; ++i) pti[pt[i]] = i;
  R.add("tau sigma = sigma tau^-1 on cluster variables",
        compose_perm(pt, ps) == compose_perm(ps, pti));

  auto paths = all_paths(G);
  MapClass ct = classify(tau, paths, true);
  MapClass cs = classify(sigma, paths, true);
  R.add("tau classified WeakClusterAutomorphism",
        ct.kind == MapKind::WeakClusterAutomorphism);
  R.add("sigma classified WeakClusterAutomorphism",
        cs.kind == MapKind::WeakClusterAutomorphism);
  R.add("tau is not a cluster automorphism (B' incong +-B)",
        !matrices_isomorphic(root.B, tau_target.B, true) &&
            !matrices_isomorphic(root.B, negate_matrix(tau_target.B), true));
  return R;
}

// A3 with one frozen row: mutation produces a lattice-equal matrix that is not
// isomorphic to the original, so a quasi-automorphism exists but no direct
// cluster automorphism.
inline CheckList run_cex1() {
  CheckList R;
  R.name = "cex1";
  LabeledSeed root = root_seed(fixtures::cex1());
  LabeledSeed sp = mutate_seed_path(root, {1, 0, 2});
  ExtMatrix expected =
      fixtures::from_rows(3, {{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}, {0, 0, -1}});
  R.add("mu_3 mu_1 mu_2 reproduces the printed B'", sp.B == expected);
  R.add("Lat(B) = Lat(B')", lat_equal(root.B, sp.B));
  auto qh = quasi_hom_between(root, sp);
  R.add("a quasi-homomorphism Sigma -> Sigma' exists",
        qh.has_value() && verify_quasi_hom(*qh, root, sp).pass);
  R.add("no direct relabeling of B' equals B", !matrices_isomorphic(root.B, sp.B, true));

  // the printed map f: x_i -> x_i', x_4 -> x_4^{-1}
  std::vector<VecI> f_rows(4, VecI(4, Int(0)));
  for (int i = 0; i < 3; ++i) f_rows[i][i] = 1;
  f_rows[3][3] = -1;
  MonomialMap f{f_rows, root, sp};
  R.add("f is a quasi-homomorphism", verify_quasi_hom(f, root, sp).pass);
  ExchangeGraph G = explore(root, 1000, KeyMode::Symbolic);
  MapClass cf = classify(f, all_paths(G), true);
  R.add("f classified QuasiAutomorphismOnly", cf.kind == MapKind::QuasiAutomorphismOnly);
  return R;
}

// D4 with one frozen row: the swap of x2, x3 is a direct cluster automorphism
// of A_triv that does not lift; QAut_0 has index 3 in Aut^+(A_triv).
inline CheckList run_cex2(bool with_groups = true) {
  CheckList R;
  R.name = "cex2";
  LabeledSeed root = root_seed(fixtures::cex2());
  std::vector<int> swap23{0, 2, 1, 3};
  LabeledSeed sp = relabel_seed(root, swap23);
  R.add("B' frozen row is (0,0,1,0)", sp.B.rows[4] == VecI({Int(0), Int(0), Int(1), Int(0)}));
  R.add("(0,0,1,0) is not in the row span of B", !span_contains(root.B, sp.B.rows[4]));
  R.add("Lat(B) != Lat(B')", !lat_equal(root.B, sp.B));
  R.add("no quasi-homomorphism maps Sigma near Sigma'", !quasi_hom_between(root, sp));
  if (with_groups) {
    QAut0Result q = qaut0_group(root, 100000);
    R.add("Aut+(A_triv) has order 24", q.aut_triv.report.order == 24);
    std::map<size_t, size_t> z4s3{{1, 1}, {2, 7}, {3, 2}, {4, 8}, {6, 2}, {12, 4}};
    R.add("Aut+(A_triv) has the Z4 x S3 element-order profile",
          q.aut_triv.report.element_orders == z4s3);
    R.add("QAut_0 has order 8", q.report.order == 8);
    std::map<size_t, size_t> z4z2{{1, 1}, {2, 3}, {4, 4}};
    R.add("QAut_0 has the Z4 x Z2 element-order profile", q.report.element_orders == z4z2);
    R.add("QAut_0 has index 3", q.subgroup_index == 3);
  }
  return R;
}

inline CheckList run_example(const std::string& name, bool heavy = true) {
  if (name == "nongroup") return run_nongroup();
  if (name == "weakaut-a2") return run_weakaut_a2();
  if (name == "cex1") return run_cex1();
  if (name == "cex2") return run_cex2(heavy);
  fail(Errc::ParseError, "unknown example: " + name);
}

inline std::vector<std::string> example_names() {
  return {"nongroup", "weakaut-a2", "cex1", "cex2"};
}

}  // namespace examples
}  // namespace cluq
