#pragma once

#include "cluq/matrix.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cluq {

// Iced valued quiver: arrow i -> j with value pair (p, q) encodes b_ij = p and
// b_ji = -q between mutable vertices; arrows touching a frozen vertex carry
// p = q = |entry|. No arrows between two frozen vertices.
struct QuiverArrow {
  int from = 0, to = 0;  // 0-based vertex ids; ids >= n_mutable are frozen
  Int p, q;
};

struct ValuedQuiver {
  int n_mutable = 0;
  int n_frozen = 0;
  std::vector<QuiverArrow> arrows;
};

inline ValuedQuiver quiver_of(const ExtMatrix& B) {
  ValuedQuiver Q;
  Q.n_mutable = B.n;
  Q.n_frozen = B.frozen_count();
  for (int i = 0; i < B.n; ++i)
    for (int j = i + 1; j < B.n; ++j) {
      if (B.at(i, j) > 0) Q.arrows.push_back({i, j, B.at(i, j), -B.at(j, i)});
      else if (B.at(i, j) < 0) Q.arrows.push_back({j, i, B.at(j, i), -B.at(i, j)});
    }
  for (int r = B.n; r < B.m(); ++r)
    for (int i = 0; i < B.n; ++i) {
      const Int& v = B.at(r, i);
      if (v > 0) Q.arrows.push_back({r, i, v, v});
      else if (v < 0) Q.arrows.push_back({i, r, -v, -v});
    }
  return Q;
}

inline ExtMatrix matrix_of(const ValuedQuiver& Q) {
  const int n = Q.n_mutable, m = Q.n_mutable + Q.n_frozen;
  require(n >= 1, Errc::MalformedQuiver, "quiver needs a mutable vertex");
  std::vector<VecI> rows(m, VecI(n, Int(0)));
  std::vector<std::vector<char>> seen(m, std::vector<char>(m, 0));
  for (const auto& a : Q.arrows) {
    require(a.from >= 0 && a.from < m && a.to >= 0 && a.to < m && a.from != a.to,
            Errc::MalformedQuiver, "arrow endpoint out of range");
    require(a.from < n || a.to < n, Errc::MalformedQuiver, "arrow between frozen vertices");
    require(a.p >= 1 && a.q >= 1, Errc::MalformedQuiver, "arrow values must be positive");
    require(!seen[a.from][a.to] && !seen[a.to][a.from], Errc::MalformedQuiver,
            "duplicate arrow between a vertex pair");
    seen[a.from][a.to] = 1;
    if (a.from < n && a.to < n) {
      rows[a.from][a.to] = a.p;
      rows[a.to][a.from] = -a.q;
    } else if (a.from >= n) {
      require(a.p == a.q, Errc::MalformedQuiver, "frozen arrow values must agree");
      rows[a.from][a.to] = a.p;
    } else {
      require(a.p == a.q, Errc::MalformedQuiver, "frozen arrow values must agree");
      rows[a.to][a.from] = -a.q;
    }
  }
  ExtMatrix B(n, std::move(rows));
  try {
    find_skew_symmetrizer(B);
  } catch (const Error&) {
    fail(Errc::MalformedQuiver, "quiver principal part not skew-symmetrizable");
  }
  return B;
}

// Text format: "v <count_mutable> <count_frozen>" then one line
// "a <i> <j> <p> <q>" per arrow i -> j with values (p, q); 1-based ids.
inline ValuedQuiver parse_quiver_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  ValuedQuiver Q;
  bool have_header = false;
  while (std::getline(is, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      require(!have_header, Errc::ParseError, "duplicate quiver header");
      require(bool(ls >> Q.n_mutable >> Q.n_frozen), Errc::ParseError, "bad quiver header");
      have_header = true;
    } else if (tag == "a") {
      require(have_header, Errc::ParseError, "arrow before quiver header");
      long i, j;
      std::string p, q;
      require(bool(ls >> i >> j >> p >> q), Errc::ParseError, "bad arrow line");
      QuiverArrow a;
      a.from = (int)i - 1;
      a.to = (int)j - 1;
      try {
        a.p = Int(p);
        a.q = Int(q);
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad arrow values");
      }
      Q.arrows.push_back(a);
    } else {
      fail(Errc::ParseError, "unknown quiver line tag '" + tag + "'");
    }
  }
  require(have_header, Errc::ParseError, "missing quiver header");
  return Q;
}

inline std::string format_quiver_text(const ValuedQuiver& Q) {
  std::ostringstream os;
  os << "v " << Q.n_mutable << " " << Q.n_frozen << "\n";
  for (const auto& a : Q.arrows)
    os << "a " << (a.from + 1) << " " << (a.to + 1) << " " << a.p << " " << a.q << "\n";
  return os.str();
}

}  // namespace cluq
