#ifndef LECHLAB_REES_HPP
#define LECHLAB_REES_HPP

#include <cstdint>
#include <vector>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"

namespace lechlab {

/// A bounded facet of the Newton polyhedron: primitive integer normal
/// with positive entries on the bounded directions and support value
/// v = min over generators of <normal, g> (always > 0).
struct Facet {
  ExpVec normal;
  int64_t value = 0;
};

struct ReesData {
  std::vector<Facet> facets;
  int64_t period = 1;  // lcm of the facet values
};

struct ReesOptions {
  /// Fourier-Motzkin intermediate inequality budget (d >= 3 only).
  int64_t fmRowBudget = 100'000;
};

/// Bounded-facet description of conv(gens) + orthant. Exact staircase
/// hull in dimension 2, Fourier-Motzkin elimination for d >= 3.
/// Requires finite colength. Exceeding the elimination budget raises
/// ResourceError, never a wrong answer.
ReesData reesData(const MonomialIdeal& I, const ReesOptions& opts = {});

/// The (b/a)-th rational power: the canonical ideal of all lattice
/// points v with <w_i, v> >= (b/a) value_i for every bounded facet.
/// Well-defined under fraction reduction; b = 0 yields the unit ideal.
MonomialIdeal rationalPower(const MonomialIdeal& I, int64_t b, int64_t a,
                            const ReesOptions& opts = {});

/// Same, with a precomputed facet description of I.
MonomialIdeal rationalPowerWithFacets(const MonomialIdeal& I, const ReesData& rd,
                                      int64_t b, int64_t a);

}  // namespace lechlab

#endif
