#ifndef LECHLAB_ADJOIN_HPP
#define LECHLAB_ADJOIN_HPP

#include <cstdint>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rees.hpp"

namespace lechlab {

/// (I, T^m) in d+1 variables, the series variable last.
MonomialIdeal adjoinPower(const MonomialIdeal& I, int64_t m);

/// The expansion sum_k I^{k/a} T^{n-k} of the n/a-th rational power of
/// (I, T^a), assembled from the rational powers of I alone. Equals the
/// rational power computed directly in d+1 variables.
MonomialIdeal expandAdjointPower(const MonomialIdeal& I, int64_t a, int64_t n);

/// l(R/I^{j/rho}) through the facet description.
int64_t colengthRationalPower(const MonomialIdeal& I, const ReesData& rd,
                              int64_t j, int64_t rho);

/// Closed form for the colength of the (nm+r)/m-th rational power of
/// (I, T^m) when the Rees period rho of I divides m, 0 <= r < m:
/// with s = ceil(r rho / m) and t = s m / rho - r,
///   sum_{h<s} sum_{k<=n} (m/rho) l(R/I^{(k rho + h)/rho})
/// + sum_{h>=s} sum_{k<n} (m/rho) l(R/I^{(k rho + h)/rho})
/// + (m/rho - t) l(R/I^{(n rho + s)/rho}).
int64_t colengthAdjoinRational(const MonomialIdeal& I, int64_t m, int64_t n,
                               int64_t r);

/// Closed form (m/rho) sum_{j=0}^{rho n} l(R/I^{j/rho}) for the
/// colength of the closure of (I, T^m)^n; requires rho | m.
int64_t colengthAdjoinClosure(const MonomialIdeal& I, int64_t m, int64_t n);

}  // namespace lechlab

#endif
