#ifndef LECHLAB_NEWTON_HPP
#define LECHLAB_NEWTON_HPP

#include <vector>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"

namespace lechlab {

/// Membership of a rational point v >= 0 in the Newton polyhedron
/// conv(gens) + R_{>=0}^d, decided by exact LP feasibility of
///   exists lambda >= 0, sum lambda = 1, sum lambda_j g_j <= v.
bool newtonContains(const MonomialIdeal& I, const std::vector<Rat>& v);

/// Convenience overload for lattice points.
bool newtonContains(const MonomialIdeal& I, const ExpVec& v);

/// Integral closure of a nonzero monomial ideal: the canonical antichain
/// of lattice points of the Newton polyhedron. Candidates are enumerated
/// inside the generator bounding box, which contains every minimal
/// lattice point of the polyhedron. Idempotent; contains I.
MonomialIdeal integralClosure(const MonomialIdeal& I);

}  // namespace lechlab

#endif
