#ifndef LECHLAB_EXPONENTS_HPP
#define LECHLAB_EXPONENTS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace lechlab {

/// Exponent of a monomial in d ambient variables. All entries >= 0.
using Exp = int32_t;
using ExpVec = std::vector<Exp>;

/// a >= b componentwise, i.e. x^b divides x^a.
inline bool dominates(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline ExpVec vecAdd(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline int64_t totalDegree(const ExpVec& a) {
  return std::accumulate(a.begin(), a.end(), int64_t{0});
}

/// Plain lexicographic order: -1, 0, +1.
inline int lexCompare(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

/// Degree first, then lex. A linear extension of divisibility.
inline int gradedLexCompare(const ExpVec& a, const ExpVec& b) {
  const int64_t da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da < db ? -1 : 1;
  return lexCompare(a, b);
}

}  // namespace lechlab

#endif
