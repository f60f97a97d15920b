#ifndef LECHLAB_TESTS_UTIL_HPP
#define LECHLAB_TESTS_UTIL_HPP

#include <vector>

#include "lechlab/format.hpp"
#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rng.hpp"

namespace lechlab::testutil {

inline MonomialIdeal mi(int dim, std::vector<ExpVec> gens) {
  return MonomialIdeal::make(dim, std::move(gens));
}

inline MonomialIdeal parse2(const std::string& text) {
  return parseIdeal(text, RingSpec::poly(2));
}

inline MonomialIdeal parse3(const std::string& text) {
  return parseIdeal(text, RingSpec::poly(3));
}

/// Random finite-colength monomial ideal: pure powers in every variable
/// plus a few interior generators.
inline MonomialIdeal randomPrimary(Rng& rng, int dim, int maxExp, int extra) {
  std::vector<ExpVec> gens;
  for (int i = 0; i < dim; ++i) {
    ExpVec v(dim, 0);
    v[i] = static_cast<Exp>(rng.uniform(1, maxExp));
    gens.push_back(v);
  }
  for (int k = 0; k < extra; ++k) {
    ExpVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = static_cast<Exp>(rng.uniform(0, maxExp));
    gens.push_back(v);
  }
  return MonomialIdeal::make(dim, std::move(gens));
}

}  // namespace lechlab::testutil

#endif
