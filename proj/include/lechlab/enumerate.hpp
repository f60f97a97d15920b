#ifndef LECHLAB_ENUMERATE_HPP
#define LECHLAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "lechlab/monomial_ideal.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

struct EnumOptions {
  int64_t visitCap = 5'000'000;  // downsets walked before giving up
  bool closedOnly = true;        // emit only integrally closed ideals
};

struct EnumStats {
  int64_t visited = 0;    // downsets walked (closed or not)
  int64_t emitted = 0;    // ideals handed to the callback
  bool exhaustive = true; // false when the visit cap was hit
};

/// Walks every finite-colength monomial ideal of the ring model with
/// ring colength <= maxColength, each exactly once, in a deterministic
/// order (staircase refinement along a graded-lex linear extension).
/// With closedOnly, only integrally closed ideals reach the callback;
/// refinement still continues underneath non-closed ones. The callback
/// receives the canonical ideal and its ring colength; returning false
/// stops the walk early.
EnumStats enumerateIdeals(
    const RingSpec& spec, int maxColength, const EnumOptions& opts,
    const std::function<bool(const MonomialIdeal&, int64_t)>& fn);

}  // namespace lechlab

#endif
