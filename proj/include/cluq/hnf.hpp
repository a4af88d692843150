#pragma once

#include "cluq/matrix.hpp"

#include <optional>
#include <vector>

namespace cluq {

// Row-style Hermite normal form of an integer row lattice: positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows removed.
// Canonical: two row sets generate the same lattice iff their HnfBasis agree.
struct HnfBasis {
  size_t width = 0;
  std::vector<VecI> rows;
  bool operator==(const HnfBasis& o) const { return width == o.width && rows == o.rows; }
};

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct HnfResult {
  std::vector<VecI> h;          // full row set after reduction (zero rows kept)
  std::vector<VecI> transform;  // unimodular U with U * input = h
  std::vector<size_t> pivot_rows, pivot_cols;
};

inline HnfResult hnf_full(const std::vector<VecI>& input, size_t width) {
  HnfResult R;
  R.h = input;
  const size_t m = input.size();
  R.transform.assign(m, VecI(m, Int(0)));
  for (size_t i = 0; i < m; ++i) R.transform[i][i] = 1;

  auto row_sub = [&](size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < width; ++c) R.h[dst][c] -= q * R.h[src][c];
    for (size_t c = 0; c < m; ++c) R.transform[dst][c] -= q * R.transform[src][c];
  };
  auto row_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(R.h[a], R.h[b]);
    std::swap(R.transform[a], R.transform[b]);
  };
  auto row_negate = [&](size_t r) {
    for (auto& x : R.h[r]) x = -x;
    for (auto& x : R.transform[r]) x = -x;
  };

  size_t r = 0;
  for (size_t c = 0; c < width && r < m; ++c) {
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (R.h[i][c] == 0) continue;
        if (best == m || abs_int(R.h[i][c]) < abs_int(R.h[best][c])) best = i;
      }
      if (best == m) break;
      row_swap(r, best);
      bool others = false;
      for (size_t i = r + 1; i < m; ++i) {
        if (R.h[i][c] == 0) continue;
        row_sub(i, r, R.h[i][c] / R.h[r][c]);
        if (R.h[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (R.h[r][c] == 0) continue;
    if (R.h[r][c] < 0) row_negate(r);
    for (size_t i = 0; i < r; ++i) row_sub(i, r, floor_div(R.h[i][c], R.h[r][c]));
    R.pivot_rows.push_back(r);
    R.pivot_cols.push_back(c);
    ++r;
  }
  return R;
}

}  // namespace detail

inline HnfBasis hnf(const std::vector<VecI>& rows, size_t width) {
  for (auto& r : rows)
    require(r.size() == width, Errc::DimensionMismatch, "hnf row width");
  auto R = detail::hnf_full(rows, width);
  HnfBasis H;
  H.width = width;
  for (size_t i = 0; i < R.pivot_rows.size(); ++i) H.rows.push_back(R.h[i]);
  return H;
}

inline HnfBasis hnf(const ExtMatrix& B) { return hnf(B.rows, B.n); }

inline size_t lattice_rank(const ExtMatrix& B) { return hnf(B).rows.size(); }

// Membership of v in the row lattice, by exact pivot reduction.
inline bool span_contains(const std::vector<VecI>& rows, size_t width, const VecI& v) {
  require(v.size() == width, Errc::DimensionMismatch, "span query width");
  HnfBasis H = hnf(rows, width);
  VecI w = v;
  for (const auto& row : H.rows) {
    size_t c = 0;
    while (c < width && row[c] == 0) ++c;
    if (w[c] % row[c] != 0) continue;
    Int q = w[c] / row[c];
    for (size_t i = 0; i < width; ++i) w[i] -= q * row[i];
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

inline bool span_contains(const ExtMatrix& B, const VecI& v) {
  return span_contains(B.rows, B.n, v);
}

// Lat(B) == Lat(B2): canonical HNF equality of the full row sets.
inline bool lat_equal(const ExtMatrix& B, const ExtMatrix& B2) {
  require(B.n == B2.n, Errc::DimensionMismatch, "lattice width mismatch");
  return hnf(B) == hnf(B2);
}

inline bool lat_contains(const ExtMatrix& outer, const ExtMatrix& inner) {
  require(outer.n == inner.n, Errc::DimensionMismatch, "lattice width mismatch");
  for (const auto& row : inner.rows)
    if (!span_contains(outer, row)) return false;
  return true;
}

// Solve x * A = v over the integers. The canonical solution has its entries
// reduced against the HNF of the kernel lattice.
struct RowSolver {
  size_t m = 0, width = 0;
  detail::HnfResult R;
  HnfBasis kernel_hnf;

  explicit RowSolver(const std::vector<VecI>& rows, size_t w) : m(rows.size()), width(w) {
    R = detail::hnf_full(rows, w);
    std::vector<VecI> kernel;
    for (size_t i = R.pivot_rows.size(); i < m; ++i) kernel.push_back(R.transform[i]);
    kernel_hnf = hnf(kernel, m);
  }

  std::optional<VecI> solve(const VecI& v) const {
    require(v.size() == width, Errc::DimensionMismatch, "solve width");
    VecI w = v;
    VecI x(m, Int(0));
    for (size_t k = 0; k < R.pivot_rows.size(); ++k) {
      size_t c = R.pivot_cols[k];
      if (w[c] == 0) continue;
      if (w[c] % R.h[k][c] != 0) return std::nullopt;
      Int q = w[c] / R.h[k][c];
      for (size_t i = 0; i < width; ++i) w[i] -= q * R.h[k][i];
      for (size_t i = 0; i < m; ++i) x[i] += q * R.transform[k][i];
    }
    for (const Int& t : w)
      if (t != 0) return std::nullopt;
    // canonical coset representative
    for (const auto& krow : kernel_hnf.rows) {
      size_t c = 0;
      while (c < m && krow[c] == 0) ++c;
      Int q = detail::floor_div(x[c], krow[c]);
      for (size_t i = 0; i < m; ++i) x[i] -= q * krow[i];
    }
    return x;
  }
};

// Block solve of Lemma "M_Psi": an m x m integer matrix of shape (I 0; M1 M2)
// with M * B = B2. The top rows are the standard basis vectors (principal
// parts must agree); each frozen row of B2 is expressed as an integer
// combination of the rows of B, chosen canonically.
struct BlockSolution {
  std::vector<VecI> M;          // m x m
  std::vector<VecI> kernel;     // HNF basis of { x : x*B = 0 }
  int n = 0;

  std::vector<VecI> m1() const {
    std::vector<VecI> out;
    for (size_t r = n; r < M.size(); ++r) out.emplace_back(M[r].begin(), M[r].begin() + n);
    return out;
  }
  std::vector<VecI> m2() const {
    std::vector<VecI> out;
    for (size_t r = n; r < M.size(); ++r) out.emplace_back(M[r].begin() + n, M[r].end());
    return out;
  }
};

inline std::optional<BlockSolution> solve_block_matrix(const ExtMatrix& B, const ExtMatrix& B2) {
  require(B.n == B2.n && B.m() == B2.m(), Errc::DimensionMismatch, "block solve shape");
  require(B.principal_equal(B2), Errc::PrincipalPartsDiffer, "principal parts differ");
  const size_t m = B.m();
  BlockSolution S;
  S.n = B.n;
  RowSolver solver(B.rows, B.n);
  for (int i = 0; i < B.n; ++i) {
    VecI e(m, Int(0));
    e[i] = 1;
    S.M.push_back(std::move(e));
  }
  for (int r = B.n; r < B2.m(); ++r) {
    auto x = solver.solve(B2.rows[r]);
    if (!x) return std::nullopt;
    S.M.push_back(std::move(*x));
  }
  S.kernel = solver.kernel_hnf.rows;
  return S;
}

inline std::vector<VecI> mat_mul(const std::vector<VecI>& A, const std::vector<VecI>& B) {
  size_t k = A.empty() ? 0 : A[0].size();
  require(k == B.size(), Errc::DimensionMismatch, "matrix product shape");
  size_t cols = B.empty() ? 0 : B[0].size();
  std::vector<VecI> C(A.size(), VecI(cols, Int(0)));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (size_t j = 0; j < cols; ++j) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

// |det| = 1 test via HNF == identity; square integer matrices only.
inline bool is_unimodular(const std::vector<VecI>& A) {
  if (A.empty()) return true;
  size_t k = A.size();
  for (auto& r : A)
    if (r.size() != k) return false;
  HnfBasis H = hnf(A, k);
  if (H.rows.size() != k) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (H.rows[i][j] != Int(i == j ? 1 : 0)) return false;
  return true;
}

inline bool is_permutation_matrix(const std::vector<VecI>& A) {
  size_t k = A.size();
  std::vector<char> col_used(k, 0);
  for (auto& row : A) {
    if (row.size() != k) return false;
    int ones = 0;
    for (size_t j = 0; j < k; ++j) {
      if (row[j] == 0) continue;
      if (row[j] != 1 || col_used[j]) return false;
      col_used[j] = 1;
      ++ones;
    }
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace cluq
