#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vinlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(what);
}

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// floor(p/q) for q > 0 handled by cpp_int division toward zero fix-up.
inline Int floor_div(const Int& p, const Int& q) {
  Int d = p / q, r = p % q;
  if (r != 0 && ((r < 0) != (q < 0))) --d;
  return d;
}

inline Int ceil_div(const Int& p, const Int& q) { return -floor_div(-p, q); }

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(num(r), den(r)); }

inline Int isqrt_floor(const Int& n) {
  require(n >= 0, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline Int gcd_vec(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

inline int lex_compare(const IntVec& a, const IntVec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IntVec scale(const IntVec& a, const Int& k) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

inline IntVec negate(const IntVec& a) { return scale(a, -1); }

inline bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

// Divides out the gcd of the coordinates; fixes sign so the first nonzero
// entry is positive when `canonical_sign` is set.
inline IntVec primitive_part(IntVec v, bool canonical_sign = false) {
  Int g = gcd_vec(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  if (canonical_sign) {
    for (const Int& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace vinlab
