#include "lechlab/lm_search.hpp"

#include "lechlab/errors.hpp"
#include "lechlab/ring_ops.hpp"

namespace lechlab {

namespace {
BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

Rat lmRatio(const MonomialIdeal& I, const RingSpec& spec) {
  const int64_t len = ringColength(I, spec);
  if (len == 0) throw InputError("lm ratio of the unit ideal");
  const int64_t mult = ringMultiplicity(I, spec);
  return Rat(BigInt(mult), factorial(spec.krullDim()) * len);
}

SearchReport lmSearch(const RingSpec& spec, int budget,
                      std::optional<Rat> ceiling, const EnumOptions& opts) {
  if (budget < 1) throw InputError("search budget must be >= 1");
  SearchReport rep;
  rep.budget = budget;
  rep.bestRatio = 0;
  rep.witness = MonomialIdeal::zero(spec.totalCoords());
  const BigInt dimFact = factorial(spec.krullDim());

  EnumOptions eopts = opts;
  eopts.closedOnly = true;
  const EnumStats stats = enumerateIdeals(
      spec, budget, eopts,
      [&](const MonomialIdeal& I, int64_t len) {
        const int64_t mult = ringMultiplicity(I, spec);
        const Rat ratio(BigInt(mult), dimFact * len);
        if (ratio > rep.bestRatio) {
          rep.bestRatio = ratio;
          rep.witness = I;
          rep.maximizers.clear();
          rep.maximizers.push_back(I);
        } else if (ratio == rep.bestRatio) {
          if (rep.maximizers.size() < 64) rep.maximizers.push_back(I);
          if (idealLexLess(I, rep.witness)) rep.witness = I;
        }
        if (ceiling && ratio > *ceiling && !rep.ceilingViolated)
          rep.ceilingViolated = I;
        return true;
      });
  rep.idealsVisited = stats.emitted;
  rep.exhaustive = stats.exhaustive;
  return rep;
}

}  // namespace lechlab
