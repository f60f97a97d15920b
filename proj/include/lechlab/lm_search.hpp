#ifndef LECHLAB_LM_SEARCH_HPP
#define LECHLAB_LM_SEARCH_HPP

#include <optional>

#include "lechlab/enumerate.hpp"
#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

/// e(I) / (dim! * colength) over the ring model, exact.
Rat lmRatio(const MonomialIdeal& I, const RingSpec& spec);

struct SearchReport {
  Rat bestRatio;
  MonomialIdeal witness;
  int budget = 0;
  int64_t idealsVisited = 0;  // integrally closed ideals scored
  bool exhaustive = true;
  std::optional<MonomialIdeal> ceilingViolated;  // first in walk order
  std::vector<MonomialIdeal> maximizers;         // all attaining bestRatio
};

/// Maximizes lmRatio over every integrally closed ideal of ring
/// colength <= budget. Deterministic; ties broken by the lex-smallest
/// canonical witness. A configured ceiling records the first violator.
SearchReport lmSearch(const RingSpec& spec, int budget,
                      std::optional<Rat> ceiling = std::nullopt,
                      const EnumOptions& opts = {});

}  // namespace lechlab

#endif
