#pragma once

#include "cluq/hnf.hpp"
#include "cluq/seed.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace cluq {

enum class KeyMode { Symbolic, MatrixOnly, Auto };

// Canonical key of the unlabeled seed behind a labeled seed. Symbolic mode
// uses the sorted multiset of canonical cluster-variable encodings (clusters
// determine seeds in geometric type); matrix-only mode uses the
// lexicographically minimal relabeled matrix with sorted frozen rows.
inline std::string seed_key_symbolic(const LabeledSeed& s) {
  std::vector<std::string> parts;
  for (const RatExpr& x : s.cluster) parts.push_back(x.str());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (auto& p : parts) {
    key += p;
    key += "|";
  }
  return key;
}

inline std::string matrix_key_string(const ExtMatrix& B, const std::vector<int>& sigma) {
  ExtMatrix R = relabel(B, sigma);
  std::vector<VecI> frozen = R.frozen_rows();
  std::sort(frozen.begin(), frozen.end());
  std::ostringstream os;
  for (int i = 0; i < R.n; ++i) os << join_ints(R.rows[i]) << ";";
  for (auto& f : frozen) os << join_ints(f) << ";";
  return os.str();
}

inline std::string seed_key_matrix_only(const ExtMatrix& B) {
  // minimal over simultaneous principal relabelings, pruned by row invariants
  const int n = B.n;
  std::vector<std::string> invariants(n);
  for (int i = 0; i < n; ++i) {
    VecI row = B.rows[i];
    VecI col(n);
    for (int j = 0; j < n; ++j) col[j] = B.at(j, i);
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    invariants[i] = join_ints(row) + "/" + join_ints(col);
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return invariants[a] < invariants[b]; });
  std::optional<std::string> best;
  std::vector<int> sigma;
  std::vector<char> used(n, 0);
  // enumerate candidates grouped by invariant class; classes are interchangeable
  std::function<void()> dfs = [&]() {
    if ((int)sigma.size() == n) {
      std::string key = matrix_key_string(B, sigma);
      if (!best || key < *best) best = key;
      return;
    }
    size_t pos = sigma.size();
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (invariants[c] != invariants[order[pos]]) continue;
      used[c] = 1;
      sigma.push_back(c);
      dfs();
      sigma.pop_back();
      used[c] = 0;
    }
  };
  dfs();
  return *best;
}

inline std::string seed_key(const LabeledSeed& s, KeyMode mode) {
  if (mode == KeyMode::Auto) mode = s.n() <= 6 ? KeyMode::Symbolic : KeyMode::MatrixOnly;
  return mode == KeyMode::Symbolic ? seed_key_symbolic(s) : seed_key_matrix_only(s.B);
}

struct ExchangeGraph {
  std::map<std::string, LabeledSeed> nodes;  // key -> representative labeled seed
  std::map<std::string, std::vector<std::pair<int, std::string>>> edges;  // key -> (dir, key)
  bool finite = false;
  bool cap_hit = false;
  KeyMode mode = KeyMode::Symbolic;

  size_t node_count() const { return nodes.size(); }
  size_t edge_count() const {
    std::set<std::pair<std::string, std::string>> uniq;
    for (auto& [k, nbrs] : edges)
      for (auto& [dir, k2] : nbrs) uniq.emplace(std::min(k, k2), std::max(k, k2));
    return uniq.size();
  }
};

// Breadth-first closure under all n mutations with key deduplication.
// Deterministic: FIFO frontier, directions ascending.
inline ExchangeGraph explore(const LabeledSeed& root, size_t cap = 1000000,
                             KeyMode mode = KeyMode::Auto) {
  require(cap >= 1, Errc::DimensionMismatch, "cap must be positive");
  if (mode == KeyMode::Auto) mode = root.n() <= 6 ? KeyMode::Symbolic : KeyMode::MatrixOnly;
  ExchangeGraph G;
  G.mode = mode;
  auto key_of = [&](const LabeledSeed& s) { return seed_key(s, mode); };
  std::deque<std::string> frontier;
  std::string root_key = key_of(root);
  G.nodes.emplace(root_key, root);
  frontier.push_back(root_key);
  while (!frontier.empty()) {
    std::string key = frontier.front();
    frontier.pop_front();
    LabeledSeed s = G.nodes.at(key);
    for (int k = 0; k < s.n(); ++k) {
      LabeledSeed t = mutate_seed(s, k);
      std::string tkey = key_of(t);
      auto it = G.nodes.find(tkey);
      if (it == G.nodes.end()) {
        if (G.nodes.size() >= cap) {
          G.cap_hit = true;
          G.finite = false;
          return G;
        }
        G.nodes.emplace(tkey, t);
        frontier.push_back(tkey);
      }
      G.edges[key].emplace_back(k, tkey);
    }
  }
  G.finite = true;
  return G;
}

// Bipartition of the principal quiver into sources and sinks; rows that are
// entirely zero count as sinks.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartite_check(
    const ExtMatrix& B) {
  std::vector<int> sources, sinks;
  for (int i = 0; i < B.n; ++i) {
    bool has_pos = false, has_neg = false;
    for (int j = 0; j < B.n; ++j) {
      if (B.at(i, j) > 0) has_pos = true;
      if (B.at(i, j) < 0) has_neg = true;
    }
    if (has_pos && has_neg) return std::nullopt;
    if (has_pos) sources.push_back(i);
    else sinks.push_back(i);
  }
  return std::make_pair(sources, sinks);
}

// tau = tau_+ tau_-: mutate at all sinks, then at all sinks of the result
// (the original sources). The inverse runs sources first. Mutations within a
// half-step commute, so ascending order is canonical.
inline ExtMatrix tau_apply_matrix(ExtMatrix B, const Int& power) {
  const bool inverse = power < 0;
  const Int reps = abs_int(power);
  for (Int i = 0; i < reps; ++i) {
    for (int half = 0; half < 2; ++half) {
      auto parts = bipartite_check(B);
      require(parts.has_value(), Errc::NotBipartite, "tau requires a bipartite principal part");
      const std::vector<int>& set = inverse ? parts->first : parts->second;
      for (int k : set) B = mutate_matrix(B, k);
    }
  }
  return B;
}

inline LabeledSeed tau_apply(LabeledSeed s, const Int& power) {
  const bool inverse = power < 0;
  const Int reps = abs_int(power);
  for (Int i = 0; i < reps; ++i) {
    for (int half = 0; half < 2; ++half) {
      auto parts = bipartite_check(s.B);
      require(parts.has_value(), Errc::NotBipartite, "tau requires a bipartite principal part");
      const std::vector<int>& set = inverse ? parts->first : parts->second;
      for (int k : set) s = mutate_seed(s, k);
    }
  }
  return s;
}

struct TauLatReport {
  std::vector<std::pair<Int, bool>> results;  // (power, lat_equal)
  bool all_pass = true;
};

inline TauLatReport tau_lat_invariance(const ExtMatrix& B, const Int& lo, const Int& hi) {
  TauLatReport R;
  for (Int p = lo; p <= hi; ++p) {
    bool ok = lat_equal(B, tau_apply_matrix(B, p));
    R.results.emplace_back(p, ok);
    if (!ok) R.all_pass = false;
  }
  return R;
}

// FNV-1a of the canonical key; used for DOT node names.
inline std::string key_hash(const std::string& key) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

inline std::string graph_to_dot(const ExchangeGraph& G) {
  std::set<std::tuple<std::string, std::string, int>> printed;
  std::ostringstream os;
  os << "graph {\n";
  for (auto& [k, nbrs] : G.edges)
    for (auto& [dir, k2] : nbrs) {
      std::string a = key_hash(k), b = key_hash(k2);
      auto key = std::make_tuple(std::min(a, b), std::max(a, b), dir);
      if (printed.count(key)) continue;
      printed.insert(key);
      os << "  \"" << a << "\" -- \"" << b << "\" [label=\"" << (dir + 1) << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string graph_census_json(const ExchangeGraph& G) {
  std::ostringstream os;
  os << "{\"nodes\":" << G.node_count() << ",\"finite\":" << (G.finite ? "true" : "false")
     << ",\"cap_hit\":" << (G.cap_hit ? "true" : "false") << "}";
  return os.str();
}

}  // namespace cluq
