#ifndef LECHLAB_FORMAT_HPP
#define LECHLAB_FORMAT_HPP

#include <string>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

/// Monomial grammar shared by every module: generators separated by
/// commas, each generator a `*`-joined product of `var^exp` tokens
/// (exponent omitted means 1). Variables are the ring's declared names
/// or positional x0..x9. "1" is the unit ideal, "0" the zero ideal.
MonomialIdeal parseIdeal(const std::string& text, const RingSpec& spec);

/// Canonical rendering; round-trips through parseIdeal.
std::string printIdeal(const MonomialIdeal& I, const RingSpec& spec);

std::string printMonomial(const ExpVec& v, const RingSpec& spec);

}  // namespace lechlab

#endif
