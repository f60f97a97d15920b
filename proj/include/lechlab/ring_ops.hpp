#ifndef LECHLAB_RING_OPS_HPP
#define LECHLAB_RING_OPS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lechlab/hilbert.hpp"
#include "lechlab/monomial_ideal.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

/// Finiteness of the quotient-ring colength of I in the model.
bool ringFiniteColength(const MonomialIdeal& I, const RingSpec& spec);

/// Count of ring monomials outside I. Polynomial rings delegate to
/// colength; arrangement quotients count monomials outside both I and
/// the intersection of the primes; the cusp ring counts monomials
/// t^b x^a with b != 1.
int64_t ringColength(const MonomialIdeal& I, const RingSpec& spec);

/// Multiplicity of I in the model. Arrangement quotients go through the
/// associativity formula (sum over top-dimensional primes of the
/// restricted polynomial multiplicities); the cusp ring profiles
/// closures of powers. Results are memoized.
int64_t ringMultiplicity(const MonomialIdeal& I, const RingSpec& spec);

/// Power-colength profile taken directly in the ring model, the
/// cross-check path for the associativity route.
HSProfile ringPowerProfile(const MonomialIdeal& I, const RingSpec& spec,
                           const HSOptions& opts = {});

/// The intersection of the arrangement's coordinate primes, as a
/// squarefree monomial ideal in the ambient coordinates.
MonomialIdeal definingIntersection(const RingSpec& spec);

/// direct = ring colength over the arrangement on the given primes;
/// alternating = the signed sum over nonempty prime subsets of the
/// ambient colengths of I + (sum of the chosen primes). Two independent
/// code paths; they agree.
std::pair<int64_t, int64_t> inclusionExclusionSides(
    const MonomialIdeal& I, const std::vector<std::vector<int>>& primes);

/// Integral closure in the ring model: Newton closure for polynomial
/// rings, ring generators of the closure of I + defining ideal for
/// arrangements, semigroup points of the Newton polyhedron for the cusp.
MonomialIdeal ringClosure(const MonomialIdeal& I, const RingSpec& spec);

/// Closedness test given the standard monomials of I (the ring monomials
/// outside it); avoids building the closure.
bool isRingClosedGivenStandard(const MonomialIdeal& I, const RingSpec& spec,
                               const std::vector<ExpVec>& standard);

bool ringEquidimensional(const RingSpec& spec);

}  // namespace lechlab

#endif
