#pragma once

#include "cluq/explorer.hpp"
#include "cluq/hnf.hpp"

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cluq {

enum class TypeFamily { A, B, C, D, E6, E7, E8, F4, G2, AffA, AffD, AffE6, AffE7, AffE8, Rank2 };

// Standard fixture: family plus rank n, or (p, q) for AffA, or (s, t) for
// rank 2. Orientations are fixed to one bipartite representative per family
// (AffA uses the cyclic orientation with a unique source and sink).
struct TypeSpec {
  TypeFamily family = TypeFamily::A;
  int rank = 0;   // n; for AffD the total vertex count n (type is AffD_{n-1})
  int p = 0, q = 0;
  Int s, t;

  std::string name() const {
    std::ostringstream os;
    switch (family) {
      case TypeFamily::A: os << "A" << rank; break;
      case TypeFamily::B: os << "B" << rank; break;
      case TypeFamily::C: os << "C" << rank; break;
      case TypeFamily::D: os << "D" << rank; break;
      case TypeFamily::E6: os << "E6"; break;
      case TypeFamily::E7: os << "E7"; break;
      case TypeFamily::E8: os << "E8"; break;
      case TypeFamily::F4: os << "F4"; break;
      case TypeFamily::G2: os << "G2"; break;
      case TypeFamily::AffA: os << "AffA:" << p << "," << q; break;
      case TypeFamily::AffD: os << "AffD:" << (rank - 1); break;
      case TypeFamily::AffE6: os << "AffE6"; break;
      case TypeFamily::AffE7: os << "AffE7"; break;
      case TypeFamily::AffE8: os << "AffE8"; break;
      case TypeFamily::Rank2: os << "R2:" << s << "," << t; break;
    }
    return os.str();
  }
};

namespace detail {

inline std::vector<VecI> zero_rows(int n) { return std::vector<VecI>(n, VecI(n, Int(0))); }

// Alternating chain orientation on vertices lo..hi (1-based): odd vertices are
// sources (+1 on both neighbors), even vertices sinks (-1).
inline void chain_alternating(std::vector<VecI>& rows, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) {
    int sign = (i % 2 == 1) ? 1 : -1;
    if (i - 1 >= lo) rows[i - 1][i - 2] = sign;
    if (i + 1 <= hi) rows[i - 1][i] = sign;
  }
}

inline void set_edge(std::vector<VecI>& rows, int from, int to, const Int& p = 1,
                     const Int& q = 1) {
  rows[from - 1][to - 1] = p;
  rows[to - 1][from - 1] = -q;
}

}  // namespace detail

inline ExtMatrix standard_matrix(const TypeSpec& ts) {
  using detail::chain_alternating;
  using detail::set_edge;
  using detail::zero_rows;
  switch (ts.family) {
    case TypeFamily::A: {
      require(ts.rank >= 2, Errc::UnsupportedType, "A rank >= 2");
      auto rows = zero_rows(ts.rank);
      chain_alternating(rows, 1, ts.rank);
      return ExtMatrix(ts.rank, rows);
    }
    case TypeFamily::B: {
      require(ts.rank >= 2, Errc::UnsupportedType, "B rank >= 2");
      auto rows = zero_rows(ts.rank);
      chain_alternating(rows, 1, ts.rank);
      rows[0][1] = 2;  // valued edge (2,1) at the head
      return ExtMatrix(ts.rank, rows);
    }
    case TypeFamily::C: {
      require(ts.rank >= 2, Errc::UnsupportedType, "C rank >= 2");
      auto rows = zero_rows(ts.rank);
      chain_alternating(rows, 1, ts.rank);
      rows[1][0] = -2;  // valued edge (1,2) at the head
      return ExtMatrix(ts.rank, rows);
    }
    case TypeFamily::D: {
      require(ts.rank >= 4, Errc::UnsupportedType, "D rank >= 4");
      const int n = ts.rank;
      auto rows = zero_rows(n);
      rows[0][1] = rows[0][2] = rows[0][3] = 1;
      rows[1][0] = rows[2][0] = rows[3][0] = -1;
      if (n >= 5) {
        rows[3][4] = -1;
        chain_alternating(rows, 5, n);
        rows[4][3] = 1;
      }
      return ExtMatrix(n, rows);
    }
    case TypeFamily::E6: {
      auto rows = zero_rows(6);
      chain_alternating(rows, 1, 5);
      set_edge(rows, 3, 6);  // 3 is a source in the alternating chain
      return ExtMatrix(6, rows);
    }
    case TypeFamily::E7: {
      // exchange matrix as printed for the finite-type case analysis
      std::vector<VecI> rows = {
          {0, 1, 1, 1, 0, 0, 0},  {-1, 0, 0, 0, -1, 0, 0}, {-1, 0, 0, 0, 0, 0, 0},
          {-1, 0, 0, 0, 0, -1, 0}, {0, 1, 0, 0, 0, 0, 0},  {0, 0, 0, 1, 0, 0, 1},
          {0, 0, 0, 0, 0, -1, 0}};
      std::vector<VecI> R;
      for (auto& r : rows) R.emplace_back(r.begin(), r.end());
      return ExtMatrix(7, R);
    }
    case TypeFamily::E8: {
      auto rows = zero_rows(8);
      chain_alternating(rows, 1, 7);
      set_edge(rows, 3, 8);
      return ExtMatrix(8, rows);
    }
    case TypeFamily::F4: {
      auto rows = zero_rows(4);
      chain_alternating(rows, 1, 4);
      rows[2][1] = 2;  // valued edge (2,1) in the middle
      return ExtMatrix(4, rows);
    }
    case TypeFamily::G2: {
      auto rows = zero_rows(2);
      rows[0][1] = 1;
      rows[1][0] = -3;
      return ExtMatrix(2, rows);
    }
    case TypeFamily::AffA: {
      require(ts.p >= 1 && ts.q >= 1 && ts.p + ts.q >= 3, Errc::UnsupportedType,
              "AffA needs p, q >= 1 and p+q >= 3");
      const int n = ts.p + ts.q;
      auto rows = zero_rows(n);
      for (int i = 1; i <= ts.p; ++i) set_edge(rows, i, i + 1);
      set_edge(rows, 1, n);
      for (int j = ts.p + 2; j <= n; ++j) set_edge(rows, j, j - 1);
      return ExtMatrix(n, rows);
    }
    case TypeFamily::AffD: {
      const int n = ts.rank;
      require(n >= 5, Errc::UnsupportedType, "AffD needs at least 5 vertices");
      auto rows = zero_rows(n);
      if (n == 5) {  // 4-legged star
        for (int j = 2; j <= 5; ++j) set_edge(rows, 1, j);
        return ExtMatrix(n, rows);
      }
      rows[0][1] = rows[0][2] = 1;
      rows[1][0] = rows[2][0] = -1;
      set_edge(rows, 1, 4);
      chain_alternating(rows, 5, n - 2);
      if (n >= 7) {  // chain edge 4-5; vertex 4 is a sink, 5 a source
        rows[3][4] = -1;
        rows[4][3] = 1;
      }
      // hub n-2 forks to n-1 and n; orientation follows the chain parity
      const int hub = n - 2;
      Int sign = (hub % 2 == 1) ? 1 : -1;
      rows[hub - 1][n - 2] = sign;
      rows[n - 2][hub - 1] = -sign;
      rows[hub - 1][n - 1] = sign;
      rows[n - 1][hub - 1] = -sign;
      return ExtMatrix(n, rows);
    }
    case TypeFamily::AffE6: {
      auto rows = zero_rows(7);
      set_edge(rows, 1, 2);
      set_edge(rows, 1, 3);
      set_edge(rows, 1, 4);
      set_edge(rows, 5, 2);
      set_edge(rows, 6, 3);
      set_edge(rows, 7, 4);
      return ExtMatrix(7, rows);
    }
    case TypeFamily::AffE7: {
      auto rows = zero_rows(8);
      set_edge(rows, 1, 2);
      set_edge(rows, 1, 3);
      set_edge(rows, 1, 4);
      set_edge(rows, 5, 2);
      set_edge(rows, 5, 6);
      set_edge(rows, 7, 4);
      set_edge(rows, 7, 8);
      return ExtMatrix(8, rows);
    }
    case TypeFamily::AffE8: {
      auto rows = zero_rows(9);
      set_edge(rows, 1, 2);
      set_edge(rows, 1, 3);
      set_edge(rows, 1, 4);
      set_edge(rows, 5, 2);
      set_edge(rows, 6, 4);
      set_edge(rows, 6, 7);
      set_edge(rows, 8, 7);
      set_edge(rows, 8, 9);
      return ExtMatrix(9, rows);
    }
    case TypeFamily::Rank2: {
      require(ts.s >= 1 && ts.t >= 1, Errc::UnsupportedType, "rank 2 needs positive s, t");
      auto rows = zero_rows(2);
      rows[0][1] = ts.s;
      rows[1][0] = -ts.t;
      return ExtMatrix(2, rows);
    }
  }
  fail(Errc::UnsupportedType, "unhandled type");
}

enum class Move { TauInv, Tau, R1, R2 };

inline const char* move_name(Move m) {
  switch (m) {
    case Move::TauInv: return "tau_inv";
    case Move::Tau: return "tau";
    case Move::R1: return "r1";
    case Move::R2: return "r2";
  }
  return "?";
}

namespace detail {

// beta' = -beta - sum c_i alpha_i over the rows alpha_i of the principal part.
inline VecI combine(const ExtMatrix& P, const VecI& beta, const VecI& coeff) {
  VecI out(beta.size());
  for (size_t i = 0; i < beta.size(); ++i) out[i] = -beta[i];
  for (int r = 0; r < P.n; ++r) {
    if (coeff[r] == 0) continue;
    for (int j = 0; j < P.n; ++j) out[j] -= coeff[r] * P.at(r, j);
  }
  return out;
}

inline VecI combine_plus(const ExtMatrix& P, const VecI& beta, const VecI& coeff) {
  VecI out(beta.size());
  for (size_t i = 0; i < beta.size(); ++i) out[i] = -beta[i];
  for (int r = 0; r < P.n; ++r) {
    if (coeff[r] == 0) continue;
    for (int j = 0; j < P.n; ++j) out[j] += coeff[r] * P.at(r, j);
  }
  return out;
}

}  // namespace detail

// Closed-form frozen-row transforms. Finite families implement the tau^{-1}
// identities with [b]_+ brackets; affine families the tau identities with
// [-b]_+ brackets; rank 2 implements both directions. Returns nullopt when no
// closed form is implemented for the (type, move) pair (oracle-only cases).
inline std::optional<VecI> beta_prime_predicted(const TypeSpec& ts, const VecI& beta, Move move) {
  ExtMatrix P = standard_matrix(ts);
  require((int)beta.size() == P.n, Errc::DimensionMismatch, "beta width");
  const int n = P.n;
  auto b = [&](int i) -> Int {  // 1-based, zero out of range
    return (i >= 1 && i <= n) ? beta[i - 1] : Int(0);
  };
  auto nb = [&](int i) { return pos_part(-((i >= 1 && i <= n) ? beta[i - 1] : Int(0))); };
  VecI c(n, Int(0));

  switch (ts.family) {
    case TypeFamily::A: {
      if (move != Move::TauInv || n % 2 == 0) return std::nullopt;
      for (int i = 1; i <= n; i += 2) c[i - 1] = pos_part(b(i));
      for (int i = 2; i <= n - 1; i += 2)
        c[i - 1] = pos_part(b(i) + pos_part(b(i - 1)) + pos_part(b(i + 1)));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::B: {
      if (move != Move::TauInv) return std::nullopt;
      // paper convention: the frozen row is (b_1/2, b_2, ..., b_n)
      auto bb = [&](int i) -> Int {
        if (i < 1 || i > n) return 0;
        return i == 1 ? Int(2 * beta[0]) : beta[i - 1];
      };
      c[0] = pos_part(bb(1)) / 2;
      for (int i = 3; i <= n; i += 2) c[i - 1] = pos_part(bb(i));
      for (int i = 2; i <= n; i += 2)
        c[i - 1] = pos_part(bb(i) + pos_part(bb(i - 1)) + pos_part(bb(i + 1)));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::C: {
      if (move != Move::TauInv) return std::nullopt;
      for (int i = 1; i <= n; i += 2) c[i - 1] = pos_part(b(i));
      for (int i = 2; i <= n; i += 2)
        c[i - 1] = pos_part(b(i) + pos_part(b(i - 1)) + pos_part(b(i + 1)));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::D: {
      if (move != Move::TauInv || n % 2 == 0 || n < 5) return std::nullopt;
      c[0] = pos_part(b(1));
      c[1] = pos_part(b(2) + pos_part(b(1)));
      c[2] = pos_part(b(3) + pos_part(b(1)));
      c[3] = pos_part(b(4) + pos_part(b(1)) + pos_part(b(5)));
      for (int i = 5; i <= n; i += 2) c[i - 1] = pos_part(b(i));
      for (int i = 6; i <= n - 1; i += 2)
        c[i - 1] = pos_part(b(i) + pos_part(b(i - 1)) + pos_part(b(i + 1)));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::E7: {
      if (move != Move::TauInv) return std::nullopt;
      c[0] = pos_part(b(1));
      c[1] = pos_part(b(2) + pos_part(b(1)) + pos_part(b(5)));
      c[2] = pos_part(b(3) + pos_part(b(1)));
      c[3] = pos_part(b(4) + pos_part(b(1)) + pos_part(b(6)));
      c[4] = pos_part(b(5));
      c[5] = pos_part(b(6));
      c[6] = pos_part(b(7) + pos_part(b(6)));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::G2: {
      TypeSpec r2{TypeFamily::Rank2, 2, 0, 0, Int(1), Int(3)};
      return beta_prime_predicted(r2, beta, move);
    }
    case TypeFamily::Rank2: {
      if (move == Move::Tau) {
        c[0] = pos_part(-b(1) + ts.t * nb(2));
        c[1] = nb(2);
        return detail::combine(P, beta, c);
      }
      if (move == Move::TauInv) {
        c[0] = pos_part(b(1));
        c[1] = pos_part(b(2) + ts.s * pos_part(b(1)));
        return detail::combine(P, beta, c);
      }
      return std::nullopt;
    }
    case TypeFamily::AffD: {
      if (move != Move::Tau) return std::nullopt;
      if (n == 5) {
        Int acc = -b(1);
        for (int j = 2; j <= 5; ++j) {
          acc += nb(j);
          c[j - 1] = nb(j);
        }
        c[0] = pos_part(acc);
        return detail::combine(P, beta, c);
      }
      c[0] = pos_part(-b(1) + nb(2) + nb(3) + nb(4));
      c[2] = nb(3);
      for (int i = 2; i <= (n - 1) / 2; ++i) c[2 * i - 1] = nb(2 * i);
      c[1] = nb(2);
      if (n % 2 == 1) {
        for (int k = 2; k <= (n - 5) / 2; ++k)
          c[2 * k] = pos_part(-b(2 * k + 1) + nb(2 * k) + nb(2 * k + 2));
        c[n - 3] = pos_part(-b(n - 2) + nb(n - 3) + nb(n - 1) + nb(n));
        c[n - 1] = nb(n);
      } else {
        for (int k = 2; k <= (n - 4) / 2; ++k)
          c[2 * k] = pos_part(-b(2 * k + 1) + nb(2 * k) + nb(2 * k + 2));
        c[n - 2] = pos_part(-b(n - 1) + nb(n - 2));
        c[n - 1] = pos_part(-b(n) + nb(n - 2));
      }
      return detail::combine(P, beta, c);
    }
    case TypeFamily::AffE6: {
      if (move != Move::Tau) return std::nullopt;
      c[0] = pos_part(-b(1) + nb(2) + nb(3) + nb(4));
      c[1] = nb(2);
      c[2] = nb(3);
      c[3] = nb(4);
      c[4] = pos_part(-b(5) + nb(2));
      c[5] = pos_part(-b(6) + nb(3));
      c[6] = pos_part(-b(7) + nb(4));
      return detail::combine(P, beta, c);
    }
    case TypeFamily::AffE7: {
      if (move != Move::Tau) return std::nullopt;
      c[0] = pos_part(-b(1) + nb(2) + nb(3) + nb(4));
      c[1] = nb(2);
      c[2] = nb(3);
      c[3] = nb(4);
      c[4] = pos_part(-b(5) + nb(2) + nb(6));
      c[5] = nb(6);
      c[6] = pos_part(-b(7) + nb(4) + nb(8));
      c[7] = nb(8);
      return detail::combine(P, beta, c);
    }
    case TypeFamily::AffE8: {
      if (move != Move::Tau) return std::nullopt;
      c[0] = pos_part(-b(1) + nb(2) + nb(3) + nb(4));
      c[1] = nb(2);
      c[2] = nb(3);
      c[3] = nb(4);
      c[4] = pos_part(-b(5) + nb(2));
      c[5] = pos_part(-b(6) + nb(4) + nb(7));
      c[6] = nb(7);
      c[7] = pos_part(-b(8) + nb(7) + nb(9));
      c[8] = nb(9);
      return detail::combine(P, beta, c);
    }
    case TypeFamily::AffA: {
      if (move != Move::R1) return std::nullopt;
      if (ts.p % 2 != 0 || ts.q % 2 != 1) return std::nullopt;  // printed parity only
      const int p = ts.p, q = ts.q;
      // inductive { b_{p+i} } list
      std::vector<Int> curly(q + 1);  // curly[i] = {b_{p+i}}, 1-based
      curly[q] = b(p + q) + pos_part(b(1));
      for (int i = q - 1; i >= 1; --i) curly[i] = b(p + i) + pos_part(curly[i + 1]);
      VecI out(n);
      auto set = [&](int j, const Int& v) { out[j - 1] = v; };
      set(1, b(2) + pos_part(b(1)));
      for (int i = 2; i <= p - 1; ++i) set(i, b(i + 1));
      set(p, curly[1]);
      if (q >= 2) {
        set(p + 1, -curly[2]);
        for (int i = 2; i <= q - 1; ++i) set(p + i, -curly[i + 1] + pos_part(curly[i]));
        set(p + q, -b(1) + pos_part(curly[q]));
      } else {
        // q = 1: the move is a single mutation at the source, so the rotated
        // entry is plain -b_1.
        set(p + q, -b(1));
      }
      return out;
    }
    default: return std::nullopt;
  }
}

// Ground truth: apply the literal mutation sequence for the move to the
// stacked matrix (standard principal part + beta as a single frozen row).
inline VecI beta_prime_oracle(const TypeSpec& ts, const VecI& beta, Move move) {
  ExtMatrix P = standard_matrix(ts);
  require((int)beta.size() == P.n, Errc::DimensionMismatch, "beta width");
  std::vector<VecI> rows = P.rows;
  rows.push_back(beta);
  ExtMatrix B(P.n, rows);
  if (move == Move::Tau || move == Move::TauInv) {
    ExtMatrix R = tau_apply_matrix(B, move == Move::Tau ? Int(1) : Int(-1));
    require(R.principal_part() == P.principal_part(), Errc::UnsupportedMove,
            "tau did not preserve the principal part");
    return R.rows[P.n];
  }
  require(ts.family == TypeFamily::AffA, Errc::UnsupportedMove, "r-moves only for AffA");
  const int p = ts.p, q = ts.q, n = P.n;
  ExtMatrix R = B;
  std::vector<int> sigma(n);
  if (move == Move::R1) {
    R = mutate_matrix(R, 0);
    for (int j = p + q; j >= p + 2; --j) R = mutate_matrix(R, j - 1);
    for (int i = 0; i < n; ++i) sigma[i] = (i + 1) % n;
  } else {
    for (int j = 1; j <= p; ++j) R = mutate_matrix(R, j - 1);
    for (int i = 0; i < n; ++i) sigma[i] = (i + n - 1) % n;
  }
  R = relabel(R, sigma);
  require(R.principal_part() == P.principal_part(), Errc::UnsupportedMove,
          "r-move relabeling did not restore the principal part");
  return R.rows[n];
}

struct FormulaReport {
  std::string type;
  std::string move;
  size_t trials = 0;
  bool pass = true;
  bool oracle_only = false;  // no closed form; only lattice equality checked
  struct Failure {
    VecI beta, predicted, oracle;
    bool lat_ok = true;
  };
  std::optional<Failure> first_failure;
};

// Draws `trials` random frozen rows with entries in [-9, 9] (deterministic in
// `seed`; per-trial derived engines), asserting predictor == oracle exactly
// and Lat(B) == Lat(B').
inline FormulaReport verify_formula(const TypeSpec& ts, Move move, size_t trials,
                                    unsigned long long seed) {
  FormulaReport rep;
  rep.type = ts.name();
  rep.move = move_name(move);
  rep.trials = trials;
  ExtMatrix P = standard_matrix(ts);
  for (size_t trial = 0; trial < trials && rep.pass; ++trial) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + trial + 1);
    std::uniform_int_distribution<int> dist(-9, 9);
    VecI beta(P.n);
    for (auto& x : beta) x = dist(rng);
    VecI oracle = beta_prime_oracle(ts, beta, move);
    auto predicted = beta_prime_predicted(ts, beta, move);
    std::vector<VecI> rows = P.rows;
    rows.push_back(beta);
    std::vector<VecI> rows2 = P.rows;
    rows2.push_back(oracle);
    bool lat_ok = hnf(rows, P.n) == hnf(rows2, P.n);
    bool pred_ok = !predicted || *predicted == oracle;
    if (!predicted) rep.oracle_only = true;
    if (!lat_ok || !pred_ok) {
      rep.pass = false;
      rep.first_failure =
          FormulaReport::Failure{beta, predicted ? *predicted : VecI{}, oracle, lat_ok};
    }
  }
  return rep;
}

inline std::string formula_report_json(const FormulaReport& r) {
  std::ostringstream os;
  os << "{\"type\":\"" << r.type << "\", \"move\":\"" << r.move << "\", \"trials\":" << r.trials
     << ", \"pass\":" << (r.pass ? "true" : "false");
  if (r.oracle_only) os << ", \"oracle_only\":true";
  os << ", \"first_failure\":";
  if (!r.first_failure) {
    os << "null";
  } else {
    os << "{\"beta\":[" << join_ints(r.first_failure->beta, ",") << "],\"predicted\":["
       << join_ints(r.first_failure->predicted, ",") << "],\"oracle\":["
       << join_ints(r.first_failure->oracle, ",") << "]}";
  }
  os << "}";
  return os.str();
}

// Secondary route for the AffA r1 lift, as printed: beta' = -beta + sum a_k
// alpha_k with coefficients a_1..a_{p+q-2}, a_{p+q} mixing b and b' terms.
// Verified against the oracle and *reported*; discrepancies are not corrected
// (the printed list holds for q = 3 but not for larger odd q).
struct AkCrossCheck {
  size_t trials = 0;
  size_t matches = 0;
  bool applicable = false;
};

inline AkCrossCheck affa_ak_crosscheck(const TypeSpec& ts, size_t trials,
                                       unsigned long long seed) {
  AkCrossCheck R;
  if (ts.family != TypeFamily::AffA || ts.p % 2 != 0 || ts.q % 2 != 1 || ts.q < 3) return R;
  R.applicable = true;
  R.trials = trials;
  const int p = ts.p, q = ts.q, n = p + q;
  ExtMatrix P = standard_matrix(ts);
  for (size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + trial + 1);
    std::uniform_int_distribution<int> dist(-9, 9);
    VecI beta(n);
    for (auto& x : beta) x = dist(rng);
    VecI bp = beta_prime_oracle(ts, beta, Move::R1);
    auto S = [&](int i) { return beta[i - 1] + bp[i - 1]; };
    VecI a(n, Int(0));
    a[0] = S(p + q);
    Int top_even = 0;
    for (int i = 1; i <= p / 2; ++i) top_even += S(2 * i);
    Int bot_even = 0;
    for (int i = 1; i <= (q - 1) / 2; ++i) bot_even += S(p + 2 * i);
    for (int k = 1; k <= p / 2; ++k) {
      Int odd_pref = 0;
      for (int i = 1; i <= k; ++i) odd_pref += S(2 * i - 1);
      if (2 * k - 1 < n) a[2 * k - 1] = -odd_pref + top_even - bot_even - S(p + q);
      Int even_pref = 0;
      for (int i = 1; i <= k; ++i) even_pref += S(2 * i);
      if (2 * k < n) a[2 * k] = -even_pref + S(p + q);
    }
    for (int k = 1; k <= (q - 1) / 2; ++k) {
      Int bot_odd_pref = 0;
      for (int i = 1; i <= k; ++i) bot_odd_pref += S(p + 2 * i - 1);
      a[p + 2 * k - 1] = bot_odd_pref - top_even + bot_even + S(p + q);
      Int bot_even_pref = 0;
      for (int i = 1; i <= k; ++i) bot_even_pref += S(p + 2 * i);
      if (p + 2 * k < n) a[p + 2 * k] = bot_even_pref - top_even + S(p + q);
    }
    a[p + q - 2] = 0;  // alpha_{p+q-1} is absent from the printed combination
    VecI out(n);
    for (int i = 0; i < n; ++i) out[i] = -beta[i];
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) out[j] += a[r] * P.at(r, j);
    if (out == bp) ++R.matches;
  }
  return R;
}

// Number of clusters (exchange-graph nodes) of a finite type; the generalized
// Catalan closed forms, used as the independent census oracle.
inline Int cluster_count(TypeFamily family, int n) {
  auto binom = [](int a, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  switch (family) {
    case TypeFamily::A: return binom(2 * (n + 1), n + 1) / (n + 2);  // Catalan(n+1)
    case TypeFamily::B:
    case TypeFamily::C: return binom(2 * n, n);
    case TypeFamily::D: return binom(2 * n - 2, n - 1) * (3 * n - 2) / n;
    case TypeFamily::E6: return 833;
    case TypeFamily::E7: return 4160;
    case TypeFamily::E8: return 25080;
    case TypeFamily::F4: return 105;
    case TypeFamily::G2: return 8;
    default: fail(Errc::UnsupportedType, "cluster count is for finite families");
  }
}

}  // namespace cluq
