#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluq {

// Exact integers everywhere; entries grow under mutation and must not overflow.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using VecI = std::vector<Int>;

inline Int pos_part(const Int& x) { return x > 0 ? x : Int(0); }  // [x]_+

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string to_string(const Int& x) { return x.str(); }

enum class Errc {
  NotSkewSymmetrizable,
  DirectionOutOfRange,
  DimensionMismatch,
  DivisionByZero,
  MalformedQuiver,
  PrincipalPartsDiffer,
  NotBipartite,
  UnsupportedType,
  UnsupportedMove,
  UnsupportedParity,
  NotFinite,
  StarConditionUnknown,
  TermBudgetExceeded,
  ParseError,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

inline std::string join_ints(const VecI& v, const char* sep = " ") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace cluq
