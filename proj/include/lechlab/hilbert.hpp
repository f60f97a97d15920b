#ifndef LECHLAB_HILBERT_HPP
#define LECHLAB_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

/// Colengths of powers, the multiplicity read off the d-th finite
/// difference, and the first Hilbert coefficient e1 recovered from the
/// (d-1)-st difference once the profile is polynomial.
struct HSProfile {
  std::vector<int64_t> lengths;  // lengths[i] = colength of the (i+1)-st power
  bool stabilized = false;
  int64_t multiplicity = 0;
  int64_t e1 = 0;
};

struct HSOptions {
  int window = 3;    // consecutive equal d-th differences required
  int maxPower = 40;
};

/// Hilbert-Samuel profile of I in the given ring. Powers are ordinary
/// powers for polynomial and arrangement rings; the cusp ring profiles
/// the integral closures of powers (same multiplicity, and their counts
/// are polynomial in n). A profile that fails to stabilize within
/// maxPower raises ResourceError carrying the partial profile message.
/// For 2-dimensional polynomial and cusp rings the multiplicity is
/// cross-checked against twice the Newton-polygon covolume.
HSProfile hsMultiplicity(const MonomialIdeal& I, const RingSpec& spec,
                         const HSOptions& opts = {});

/// Area between the axes and the Newton polygon of a finite-colength
/// ideal in two variables. Twice this is the multiplicity.
Rat covolume2d(const MonomialIdeal& I);

}  // namespace lechlab

#endif
