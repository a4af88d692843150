#pragma once

#include "cluq/matrix.hpp"
#include "cluq/morphism.hpp"
#include "cluq/seed.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {
namespace fixtures {

inline ExtMatrix from_rows(int n, const std::vector<std::vector<long>>& rows) {
  std::vector<VecI> R;
  for (auto& r : rows) R.emplace_back(r.begin(), r.end());
  return ExtMatrix(n, R);
}

// A2 with one frozen variable and a triple arrow; QAut(A) fails to be a group.
inline ExtMatrix nongroup() { return from_rows(2, {{0, 1}, {-1, 0}, {3, 0}}); }

// A2 with five frozen variables carrying a weak cluster automorphism of order 5.
inline ExtMatrix weakaut_a2() {
  return from_rows(2, {{0, 1}, {-1, 0}, {2, 1}, {1, 1}, {-1, 0}, {0, -1}, {1, -1}});
}

// A3 with one frozen row; lattice-equal non-isomorphic matrices under mutation.
inline ExtMatrix cex1() {
  return from_rows(3, {{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}, {0, 0, 1}});
}

// D4 with one frozen row; the relabeled seed is not lattice-equal.
inline ExtMatrix cex2() {
  return from_rows(4, {{0, 1, 1, -1}, {-1, 0, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

// Extend by principal coefficients: stack the n x n identity under B.
inline ExtMatrix with_principal_coefficients(const ExtMatrix& P) {
  std::vector<VecI> rows(P.rows.begin(), P.rows.begin() + P.n);
  for (int i = 0; i < P.n; ++i) {
    VecI e(P.n, Int(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return ExtMatrix(P.n, rows);
}

// Psi of the non-group example: x1 -> x1'x3^-3, x2 -> x2'x3^6, x3 -> x3^2.
inline std::vector<VecI> nongroup_psi_matrix() {
  std::vector<std::vector<long>> rows = {{1, 0, 0}, {0, 1, 0}, {-3, 6, 2}};
  std::vector<VecI> R;
  for (auto& r : rows) R.emplace_back(r.begin(), r.end());
  return R;
}

// Phi, its quasi-inverse: x1' -> x1 x3^6, x2' -> x2 x3^-3, x3 -> x3^2.
inline std::vector<VecI> nongroup_phi_matrix() {
  std::vector<std::vector<long>> rows = {{1, 0, 0}, {0, 1, 0}, {6, -3, 2}};
  std::vector<VecI> R;
  for (auto& r : rows) R.emplace_back(r.begin(), r.end());
  return R;
}

// The weak automorphism tau of the seven-variable A2 example.
inline std::vector<VecI> weakaut_tau_matrix() {
  std::vector<std::vector<long>> rows = {
      {1, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0, 0},  {0, 0, 1, -1, 0, 0, 2},
      {0, 0, 1, -1, 0, 0, 1}, {0, 0, -1, 2, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 0}};
  std::vector<VecI> R;
  for (auto& r : rows) R.emplace_back(r.begin(), r.end());
  return R;
}

// The weak automorphism sigma of the same example.
inline std::vector<VecI> weakaut_sigma_matrix() {
  std::vector<std::vector<long>> rows = {
      {1, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 2, 0},
      {0, 0, 0, 0, 1, 1, 0},  {0, 0, -1, 2, 0, 0, 0}, {0, 0, 1, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1}};
  std::vector<VecI> R;
  for (auto& r : rows) R.emplace_back(r.begin(), r.end());
  return R;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string fixture_dir() {
  if (const char* env = std::getenv("CLUQ_FIXTURES")) return env;
#ifdef CLUQ_FIXTURE_DIR
  return CLUQ_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

inline ExtMatrix load_matrix(const std::string& path) { return parse_matrix_text(read_file(path)); }

}  // namespace fixtures
}  // namespace cluq
