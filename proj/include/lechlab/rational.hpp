#ifndef LECHLAB_RATIONAL_HPP
#define LECHLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace lechlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat ratio(int64_t p, int64_t q) { return Rat(BigInt(p), BigInt(q)); }

/// Canonical "p/q" rendering; integers print without the denominator.
inline std::string ratStr(const Rat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline int64_t toInt64(const BigInt& v) {
  return static_cast<int64_t>(v);
}

/// ceil(p/q) for q > 0.
inline BigInt ceilDiv(const BigInt& p, const BigInt& q) {
  BigInt d = p / q;
  if (p % q != 0 && ((p > 0) == (q > 0))) ++d;
  return d;
}

}  // namespace lechlab

#endif
