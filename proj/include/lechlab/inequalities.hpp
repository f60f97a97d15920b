#ifndef LECHLAB_INEQUALITIES_HPP
#define LECHLAB_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lechlab/enumerate.hpp"
#include "lechlab/monomial_ideal.hpp"
#include "lechlab/rational.hpp"
#include "lechlab/ring_spec.hpp"

namespace lechlab {

/// Unsigned Stirling numbers: kind 1 counts permutations by cycles,
/// kind 2 counts set partitions by blocks. Requires 0 <= k <= n <= 20.
int64_t stirling(int kind, int n, int k);

enum class Ineq {
  Lech,            // e(I) <= d! e(R) l(R/I), any model
  Mumford2D,       // 2 variables: e(I) <= 2 l - l(+x)
  Optimal3D,       // 3 variables: e <= 6l - 3l(+x1) - 3l(+x2) + l(+x1,x2)
  Skew3D,          // 3 variables: e <= 15/2 l - 5 l(+z)
  Mixed2DA,        // e(I|J) <= l(R/I) + l(R/J) - l(R/(I,x)), I subset J
  Mixed2DB,        // e(I|J) <= l(R/I)/2 + 3 l(R/J)
  InclExclDiluted, // one fixed variable, 2^-k diluted projection sum
  WeakInclExcl,    // (k+1)^-1 diluted projection sum
  BestLechConj,    // Stirling-coefficient bound in d+1 variables
  HsvCoord,        // Stirling chain over coordinate-subset restrictions
  SncSemistable,   // arrangement + adjoined: e <= dim! l
  ConeSemistable,  // polygonal cone arrangements + adjoined: e <= dim! l
  DilutedIeSets,   // abstract finite set systems chain
};

std::string ineqName(Ineq id);
Ineq ineqFromName(const std::string& name);

/// Finite set system: subsets of {0..universe-1} as bitmasks; the
/// ambient set is their union.
struct SetSystem {
  int universe = 0;
  std::vector<uint64_t> subsets;
};

struct VerifyInputs {
  RingSpec spec = RingSpec::poly(1);
  MonomialIdeal I = MonomialIdeal::zero(1);
  std::optional<MonomialIdeal> J;     // Mixed entries
  std::vector<int> axes;              // role-asymmetric coordinates
  std::optional<SetSystem> sets;      // DilutedIeSets
};

struct VerificationReport {
  std::string id;
  Rat lhs, rhs;
  bool holds = false;
  bool equality = false;
  Rat slack;
  bool autoClosed = false;  // Mixed entries close non-closed inputs
  std::string inputsEcho;
  /// Extra named values (chain members, strictness witnesses).
  std::vector<std::pair<std::string, Rat>> details;
};

VerificationReport verify(Ineq id, const VerifyInputs& in);

/// True when the entry's preconditions restrict it to integrally closed
/// ideals; hunts widen to all monomial ideals otherwise.
bool ineqRequiresClosed(Ineq id);

struct HuntResult {
  std::optional<MonomialIdeal> counterexample;
  int64_t checked = 0;
  bool exhaustive = true;
};

/// Applies verify over the enumeration of the ring model's ideals up to
/// the colength budget; returns the first failure in walk order.
HuntResult searchCounterexample(Ineq id, const RingSpec& spec, int budget,
                                const EnumOptions& opts = {});

}  // namespace lechlab

#endif
