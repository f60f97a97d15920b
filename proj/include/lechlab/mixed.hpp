#ifndef LECHLAB_MIXED_HPP
#define LECHLAB_MIXED_HPP

#include <cstdint>
#include <vector>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

struct Mixed2DResult {
  int64_t value = 0;
  bool inputsWereClosed = true;
};

/// e(I|J) in two variables by the length formula
///   l(R/IJ) - l(R/I) - l(R/J)
/// on the integral closures; the formula needs closed inputs, so
/// non-closed ones are closed first and the result says so.
Mixed2DResult mixedMultiplicity2d(const MonomialIdeal& I, const MonomialIdeal& J);

struct MixedOptions {
  int maxGrid = 16;
};

/// All mixed multiplicities [e(I), e(I^[d-1]|J^[1]), ..., e(J)] from the
/// bivariate colength table of I^n J^m, read off by iterated finite
/// differences once the table is polynomial. Polynomial and arrangement
/// models. Endpoints are cross-checked against the power profiles.
std::vector<int64_t> mixedMultiplicitiesGeneral(const MonomialIdeal& I,
                                                const MonomialIdeal& J,
                                                const RingSpec& spec,
                                                const MixedOptions& opts = {});

struct MumfordBound {
  Rat bound;
  int64_t exact = 0;
  MonomialIdeal assembled = MonomialIdeal::zero(1);
};

/// Mixed-multiplicity upper bound for the multiplicity of the graded
/// ideal assembled from a nested chain along a new series variable:
///   sum_k (r_{k+1} - r_k) sum_i e(chain_k^[i] | chain_{k+1}^[d-i]),
/// with mixed multiplicities against the unit ideal vanishing except
/// e(I^[d] | R^[0]) = e(I). Also assembles the ideal and computes its
/// exact multiplicity; bound >= exact.
MumfordBound mumford43Bound(const std::vector<MonomialIdeal>& chain,
                            const std::vector<int64_t>& breakpoints,
                            const RingSpec& spec);

}  // namespace lechlab

#endif
