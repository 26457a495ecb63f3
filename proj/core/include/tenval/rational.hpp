#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tenval {

using Rat = mpq_class;
using Int = mpz_class;

using VecQ = std::vector<Rat>;
using VecZ = std::vector<Int>;

template <class S>
using VecT = std::vector<S>;

// Strict weak ordering usable as a comparator for std::map<Rat, ...>.
struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()) < 0; }
};

inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }
inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

// Parses "p", "-p", or "p/q" into a canonical rational. Whitespace is not
// accepted; the denominator must be nonzero.
inline Rat parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::string s(text);
  for (char ch : s) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw std::invalid_argument("invalid rational literal: " + s);
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("invalid rational literal: " + s);
  if (sign(Rat(r.get_den())) == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Formats canonically: integers as "p", others as "p/q" with q > 0.
inline std::string format_rational(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

// Converts an exact rational into the active scalar type. Exact evaluation
// keeps the value as-is; the floating mode goes through a single rounding.
template <class S>
S scalar_cast(const Rat& r);

template <>
inline Rat scalar_cast<Rat>(const Rat& r) {
  return r;
}

template <>
inline double scalar_cast<double>(const Rat& r) {
  return to_double(r);
}

template <class S>
VecT<S> vector_cast(const VecQ& v) {
  VecT<S> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(scalar_cast<S>(x));
  return out;
}

}  // namespace tenval
