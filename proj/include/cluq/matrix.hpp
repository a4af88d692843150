#pragma once

#include "cluq/ints.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {

struct SkewSymmetrizer {
  VecI d;  // n positive integers, gcd 1 within each connected component
  bool operator==(const SkewSymmetrizer& o) const { return d == o.d; }
};

// Extended exchange matrix: m x n integer matrix whose first n rows form the
// skew-symmetrizable principal part; rows n..m-1 are frozen rows.
struct ExtMatrix {
  int n = 0;
  std::vector<VecI> rows;

  ExtMatrix() = default;
  ExtMatrix(int n_, std::vector<VecI> rows_) : n(n_), rows(std::move(rows_)) {
    require(n >= 1, Errc::DimensionMismatch, "rank must be at least 1");
    require((int)rows.size() >= n, Errc::DimensionMismatch, "need at least n rows");
    for (auto& r : rows)
      require((int)r.size() == n, Errc::DimensionMismatch, "row width must equal n");
  }

  int m() const { return (int)rows.size(); }
  int frozen_count() const { return m() - n; }
  const Int& at(int j, int i) const { return rows[j][i]; }
  Int& at(int j, int i) { return rows[j][i]; }

  ExtMatrix principal_part() const {
    return ExtMatrix(n, std::vector<VecI>(rows.begin(), rows.begin() + n));
  }
  std::vector<VecI> frozen_rows() const {
    return std::vector<VecI>(rows.begin() + n, rows.end());
  }
  bool principal_equal(const ExtMatrix& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (rows[i] != o.rows[i]) return false;
    return true;
  }
  bool operator==(const ExtMatrix& o) const { return n == o.n && rows == o.rows; }
};

// Component-wise minimal positive diagonal D with D*B_principal skew-symmetric.
// Ratio constraints d_i/d_j = -b_ji/b_ij are propagated along the nonzero
// entries and checked for consistency.
inline SkewSymmetrizer find_skew_symmetrizer(const ExtMatrix& B) {
  const int n = B.n;
  for (int i = 0; i < n; ++i)
    require(B.at(i, i) == 0, Errc::NotSkewSymmetrizable, "nonzero diagonal entry");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Int& a = B.at(i, j);
      const Int& b = B.at(j, i);
      if ((a == 0) != (b == 0))
        fail(Errc::NotSkewSymmetrizable, "entry/transpose zero pattern mismatch");
      if (a != 0 && ((a > 0) == (b > 0)))
        fail(Errc::NotSkewSymmetrizable, "sign condition b_ij*b_ji <= 0 violated");
    }
  }
  std::vector<Rat> ratio(n, Rat(0));
  std::vector<int> comp(n, -1);
  SkewSymmetrizer sym;
  sym.d.assign(n, Int(0));
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<int> queue{start};
    std::vector<int> members;
    comp[start] = ncomp;
    ratio[start] = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (B.at(i, j) == 0) continue;
        // d_i * b_ij = -d_j * b_ji  =>  d_j = d_i * b_ij / (-b_ji)
        Rat rj = ratio[i] * Rat(B.at(i, j)) / Rat(-B.at(j, i));
        if (comp[j] < 0) {
          comp[j] = ncomp;
          ratio[j] = rj;
          queue.push_back(j);
        } else if (ratio[j] != rj) {
          fail(Errc::NotSkewSymmetrizable, "inconsistent symmetrizer ratios on a cycle");
        }
      }
    }
    Int l = 1;
    for (int i : members) l = lcm_int(l, boost::multiprecision::denominator(ratio[i]));
    Int g = 0;
    for (int i : members) {
      Int v = boost::multiprecision::numerator(ratio[i] * Rat(l));
      sym.d[i] = v;
      g = gcd_int(g, v);
    }
    for (int i : members) sym.d[i] /= g;
    ++ncomp;
  }
  return sym;
}

inline bool is_skew_symmetric(const ExtMatrix& B) {
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j)
      if (B.at(i, j) != -B.at(j, i)) return false;
  return true;
}

// Matrix mutation (2) in direction k (0-based, 0 <= k < n).
inline ExtMatrix mutate_matrix(const ExtMatrix& B, int k) {
  require(k >= 0 && k < B.n, Errc::DirectionOutOfRange, "mutation direction out of range");
  ExtMatrix R = B;
  for (int j = 0; j < B.m(); ++j) {
    for (int i = 0; i < B.n; ++i) {
      if (i == k || j == k) {
        R.at(j, i) = -B.at(j, i);
      } else {
        R.at(j, i) = B.at(j, i) + pos_part(-B.at(j, k)) * B.at(k, i) +
                     B.at(j, k) * pos_part(B.at(k, i));
      }
    }
  }
  return R;
}

inline ExtMatrix mutate_matrix_path(ExtMatrix B, const std::vector<int>& path) {
  for (int k : path) B = mutate_matrix(B, k);
  return B;
}

// Relabel: sigma permutes the exchangeable indices simultaneously on rows and
// columns; frozen rows keep their order but columns are permuted.
// result(i, j) = B(sigma(i), sigma(j)) on the principal part.
inline ExtMatrix relabel(const ExtMatrix& B, const std::vector<int>& sigma) {
  require((int)sigma.size() == B.n, Errc::DimensionMismatch, "relabeling size");
  ExtMatrix R = B;
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j) R.at(i, j) = B.at(sigma[i], sigma[j]);
  for (int r = B.n; r < B.m(); ++r)
    for (int j = 0; j < B.n; ++j) R.at(r, j) = B.at(r, sigma[j]);
  return R;
}

inline ExtMatrix negate_matrix(const ExtMatrix& B) {
  ExtMatrix R = B;
  for (auto& row : R.rows)
    for (auto& x : row) x = -x;
  return R;
}

struct IsoWitness {
  std::vector<int> sigma;       // principal relabeling, result(i,j) = B2(sigma i, sigma j)
  std::vector<int> frozen_map;  // frozen row r of B matches frozen row frozen_map[r] of B2
  bool negated = false;         // witness found against -B2
};

namespace detail {

// All principal relabelings sigma with relabel(B2, sigma) == B1 on the
// principal part; invariant-based candidate pruning, lexicographic order.
inline void enumerate_principal_relabelings(const ExtMatrix& B1, const ExtMatrix& B2,
                                            const std::function<bool(const std::vector<int>&)>& emit) {
  const int n = B1.n;
  auto invariant = [&](const ExtMatrix& B, int i) {
    VecI row(B.rows[i]);
    VecI col(n);
    for (int j = 0; j < n; ++j) col[j] = B.at(j, i);
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    std::ostringstream os;
    os << join_ints(row) << "/" << join_ints(col);
    return os.str();
  };
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    std::string inv1 = invariant(B1, i);
    for (int p = 0; p < n; ++p)
      if (invariant(B2, p) == inv1) candidates[i].push_back(p);
    if (candidates[i].empty()) return;
  }
  std::vector<int> sigma(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i == n) return emit(sigma);
    for (int p : candidates[i]) {
      if (used[p]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (B2.at(p, sigma[j]) != B1.at(i, j)) ok = false;
        if (ok && B2.at(sigma[j], p) != B1.at(j, i)) ok = false;
      }
      if (!ok) continue;
      sigma[i] = p;
      used[p] = 1;
      if (dfs(i + 1)) return true;
      used[p] = 0;
      sigma[i] = -1;
    }
    return false;
  };
  dfs(0);
}

// Match frozen rows of B1 against column-permuted frozen rows of B2 as
// multisets; deterministic bijection or nullopt.
inline std::optional<std::vector<int>> match_frozen(const ExtMatrix& B1, const ExtMatrix& B2,
                                                    const std::vector<int>& sigma) {
  int f = B1.frozen_count();
  if (f != B2.frozen_count()) return std::nullopt;
  std::vector<VecI> want = B1.frozen_rows();
  std::vector<VecI> have(f, VecI(B1.n));
  for (int r = 0; r < f; ++r)
    for (int j = 0; j < B1.n; ++j) have[r][j] = B2.at(B2.n + r, sigma[j]);
  std::vector<int> result(f, -1);
  std::vector<char> used(f, 0);
  for (int r = 0; r < f; ++r) {
    bool found = false;
    for (int s = 0; s < f && !found; ++s) {
      if (!used[s] && have[s] == want[r]) {
        result[r] = s;
        used[s] = 1;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return result;
}

}  // namespace detail

// Searches for a relabeling witness with relabel(B2, sigma) == B1, including a
// bijection of the frozen rows; with direct=false the negated matrix -B2 is
// tried as well. Deterministic: lexicographically least sigma.
inline std::optional<IsoWitness> matrices_isomorphic(const ExtMatrix& B1, const ExtMatrix& B2,
                                                     bool direct = true) {
  require(B1.n == B2.n, Errc::DimensionMismatch, "rank mismatch");
  require(B1.m() == B2.m(), Errc::DimensionMismatch, "row count mismatch");
  std::optional<IsoWitness> result;
  auto search = [&](const ExtMatrix& target, bool negated) {
    detail::enumerate_principal_relabelings(B1, target, [&](const std::vector<int>& sigma) {
      auto fm = detail::match_frozen(B1, target, sigma);
      if (!fm) return false;  // keep searching
      result = IsoWitness{sigma, *fm, negated};
      return true;
    });
  };
  search(B2, false);
  if (!result && !direct) search(negate_matrix(B2), true);
  return result;
}

// All principal-part relabelings sigma with relabel(B2, sigma) principal ==
// B1 principal (frozen rows ignored); used by the symmetry enumeration.
inline std::vector<std::vector<int>> principal_relabelings(const ExtMatrix& B1,
                                                           const ExtMatrix& B2) {
  std::vector<std::vector<int>> all;
  detail::enumerate_principal_relabelings(B1.principal_part(), B2.principal_part(),
                                          [&](const std::vector<int>& sigma) {
                                            all.push_back(sigma);
                                            return false;
                                          });
  return all;
}

// Matrix text format: line 1 = "n m"; lines 2..m+1 = n integers each;
// '#'-prefixed lines are comments.
inline ExtMatrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(is, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    data.push_back(line);
  }
  require(!data.empty(), Errc::ParseError, "empty matrix file");
  std::istringstream head(data[0]);
  long n = 0, m = 0;
  require(bool(head >> n >> m), Errc::ParseError, "matrix header must be 'n m'");
  require(n >= 1 && m >= n, Errc::ParseError, "matrix header requires m >= n >= 1");
  require((long)data.size() == m + 1, Errc::ParseError, "matrix row count mismatch");
  std::vector<VecI> rows;
  for (long r = 0; r < m; ++r) {
    std::istringstream rs(data[r + 1]);
    VecI row;
    std::string tok;
    while (rs >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad integer '" + tok + "' in matrix row");
      }
    }
    require((long)row.size() == n, Errc::ParseError, "matrix row width mismatch");
    rows.push_back(std::move(row));
  }
  ExtMatrix B((int)n, std::move(rows));
  find_skew_symmetrizer(B);  // validates the principal part
  return B;
}

inline std::string format_matrix_text(const ExtMatrix& B) {
  std::ostringstream os;
  os << B.n << " " << B.m() << "\n";
  for (const auto& row : B.rows) os << join_ints(row) << "\n";
  return os.str();
}

}  // namespace cluq
