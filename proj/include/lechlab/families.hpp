#ifndef LECHLAB_FAMILIES_HPP
#define LECHLAB_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"

namespace lechlab {

struct FamilySides {
  BigInt sideA, sideB;
};

/// The two closed forms for the colength of the power-family ideal
/// built from a graded family with the given increments l_j =
/// l(I_j/I_{j+1}), j = 0..N-1:
///   sideA = sum_j l_j C(k(N-j)+r-1, r)
///   sideB = sum_n l(R/I_{N-n}) (C(k(n+1)+r-1, r) - C(kn+r-1, r))
/// An algebraic identity: the two always agree.
FamilySides familyColengthIdentity(const std::vector<int64_t>& increments,
                                   int64_t k, int r);

/// The concrete power-family ideal sum_n closure(I^{N-n}) (t_1..t_r)^{kn}
/// in d + r variables, with the closure powers as the graded family.
MonomialIdeal buildPowerFamilyIdeal(const MonomialIdeal& I, int N, int64_t k,
                                    int r);

/// Increments of the closure-power family of I up to index N.
std::vector<int64_t> closurePowerIncrements(const MonomialIdeal& I, int N);

}  // namespace lechlab

#endif
