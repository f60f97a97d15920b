#ifndef LECHLAB_SIMPLEX_HPP
#define LECHLAB_SIMPLEX_HPP

#include <vector>

#include "lechlab/rational.hpp"

namespace lechlab {

/// Exact feasibility test for { x >= 0 : A x = b } over the rationals.
/// Phase-I simplex with Bland's rule, so it always terminates. Sized for
/// the small dense systems arising from Newton-polyhedron membership.
bool lpFeasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace lechlab

#endif
