#include "lechlab/ring_ops.hpp"

#include <algorithm>

#include "lechlab/errors.hpp"
#include "lechlab/newton.hpp"
#include "lechlab/rees.hpp"

namespace lechlab {

namespace {

void checkDim(const MonomialIdeal& I, const RingSpec& spec) {
  if (I.dim != spec.totalCoords())
    throw InputError("ideal dimension does not match the ring");
}

// Top-dimensional primes (minimal cardinality).
std::vector<std::vector<int>> topPrimes(const RingSpec& spec) {
  const size_t target = spec.minPrimeSize();
  std::vector<std::vector<int>> out;
  for (const auto& p : spec.primes)
    if (p.size() == target) out.push_back(p);
  return out;
}

}  // namespace

bool ringEquidimensional(const RingSpec& spec) {
  if (spec.kind != RingKind::Arrangement) return true;
  for (const auto& p : spec.primes)
    if (static_cast<int>(p.size()) != spec.minPrimeSize()) return false;
  return true;
}

bool ringFiniteColength(const MonomialIdeal& I, const RingSpec& spec) {
  checkDim(I, spec);
  switch (spec.kind) {
    case RingKind::Poly:
    case RingKind::Cusp:
      return isFiniteColength(I);
    case RingKind::Arrangement: {
      for (const auto& p : spec.primes)
        if (!isFiniteColength(restrictModuloVars(I, p))) return false;
      return true;
    }
  }
  return false;
}

int64_t ringColength(const MonomialIdeal& I, const RingSpec& spec) {
  checkDim(I, spec);
  if (spec.kind == RingKind::Poly) return colength(I);
  if (!ringFiniteColength(I, spec))
    throw InputError("ring colength is infinite");
  if (I.dim == 0) return I.isZero() ? 1 : 0;

  const ExpVec base = I.generatorBox();
  std::vector<int64_t> box(I.dim);
  int64_t vol = 1;
  for (int i = 0; i < I.dim; ++i) {
    box[i] = std::max<int64_t>(base[i], 1);
    vol *= box[i];
    if (vol > 10'000'000)
      throw ResourceError("ring colength bounding box exceeds the cap");
  }
  ExpVec v(I.dim, 0);
  int64_t count = 0;
  for (;;) {
    if (spec.isRingMonomial(v) && !I.contains(v)) ++count;
    int i = 0;
    while (i < I.dim) {
      if (++v[i] < box[i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == I.dim) break;
  }
  return count;
}

HSProfile ringPowerProfile(const MonomialIdeal& I, const RingSpec& spec,
                           const HSOptions& opts) {
  return hsMultiplicity(I, spec, opts);
}

int64_t ringMultiplicity(const MonomialIdeal& I, const RingSpec& spec) {
  checkDim(I, spec);
  if (!ringFiniteColength(I, spec))
    throw InputError("multiplicity needs finite colength in the ring");
  if (I.isUnit()) return 0;
  switch (spec.kind) {
    case RingKind::Poly:
    case RingKind::Cusp:
      return hsMultiplicity(I, spec).multiplicity;
    case RingKind::Arrangement: {
      // Associativity formula: only top-dimensional primes contribute.
      int64_t total = 0;
      for (const auto& p : topPrimes(spec)) {
        const MonomialIdeal rest = restrictModuloVars(I, p);
        const RingSpec sub = RingSpec::poly(spec.totalCoords() -
                                            static_cast<int>(p.size()));
        total += hsMultiplicity(rest, sub).multiplicity;
      }
      return total;
    }
  }
  return 0;
}

MonomialIdeal definingIntersection(const RingSpec& spec) {
  if (spec.kind != RingKind::Arrangement)
    throw InputError("defining intersection only exists for arrangements");
  const int n = spec.totalCoords();
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& p : spec.primes) {
    std::vector<ExpVec> primeGens;
    for (int c : p) {
      ExpVec v(n, 0);
      v[c] = 1;
      primeGens.push_back(v);
    }
    // intersection of monomial ideals: pairwise componentwise max
    std::vector<ExpVec> inter;
    for (const ExpVec& a : acc.gens)
      for (const ExpVec& b : primeGens) {
        ExpVec m(n);
        for (int i = 0; i < n; ++i) m[i] = std::max(a[i], b[i]);
        inter.push_back(std::move(m));
      }
    acc = MonomialIdeal::make(n, std::move(inter));
  }
  return acc;
}

std::pair<int64_t, int64_t> inclusionExclusionSides(
    const MonomialIdeal& I, const std::vector<std::vector<int>>& primes) {
  const RingSpec spec = RingSpec::arrangement(I.dim, primes);
  const int64_t direct = ringColength(I, spec);

  // Alternating sum over nonempty subsets of the primes of the ambient
  // colengths of I + (union of the chosen coordinates).
  const size_t s = spec.primes.size();
  if (s > 20) throw InputError("too many primes for subset enumeration");
  BigInt alternating = 0;
  for (uint32_t mask = 1; mask < (1u << s); ++mask) {
    std::vector<bool> kill(I.dim, false);
    int bits = 0;
    for (size_t j = 0; j < s; ++j)
      if (mask & (1u << j)) {
        ++bits;
        for (int c : spec.primes[j]) kill[c] = true;
      }
    std::vector<int> vars;
    for (int i = 0; i < I.dim; ++i)
      if (kill[i]) vars.push_back(i);
    const int64_t len = colength(restrictModuloVars(I, vars));
    if (bits % 2)
      alternating += len;
    else
      alternating -= len;
  }
  return {direct, toInt64(alternating)};
}

MonomialIdeal ringClosure(const MonomialIdeal& I, const RingSpec& spec) {
  checkDim(I, spec);
  switch (spec.kind) {
    case RingKind::Poly:
      return integralClosure(I);
    case RingKind::Arrangement: {
      const MonomialIdeal cl =
          integralClosure(idealSum(I, definingIntersection(spec)));
      std::vector<ExpVec> gens;
      for (const ExpVec& g : cl.gens)
        if (spec.isRingMonomial(g)) gens.push_back(g);
      return MonomialIdeal::make(I.dim, std::move(gens));
    }
    case RingKind::Cusp: {
      if (I.isZero()) throw InputError("integral closure of the zero ideal");
      const ExpVec base = I.generatorBox();
      ExpVec box = base;
      box[0] = static_cast<Exp>(box[0] + 1);  // semigroup gap slack
      int64_t vol = 1;
      for (int i = 0; i < I.dim; ++i) {
        vol *= box[i] + 1;
        if (vol > 10'000'000)
          throw ResourceError("cusp closure candidate box exceeds the cap");
      }
      std::vector<ExpVec> members;
      ExpVec v(I.dim, 0);
      for (;;) {
        if (v[0] != 1) {
          bool known = false;
          for (const ExpVec& u : members)
            if (dominates(v, u)) { known = true; break; }
          if (known || newtonContains(I, v)) members.push_back(v);
        }
        int i = 0;
        while (i < I.dim) {
          if (++v[i] <= box[i]) break;
          v[i] = 0;
          ++i;
        }
        if (i == I.dim) break;
      }
      return MonomialIdeal::make(I.dim, std::move(members));
    }
  }
  throw InputError("unknown ring kind");
}

bool isRingClosedGivenStandard(const MonomialIdeal& I, const RingSpec& spec,
                               const std::vector<ExpVec>& standard) {
  switch (spec.kind) {
    case RingKind::Poly:
    case RingKind::Cusp: {
      for (const ExpVec& p : standard)
        if (newtonContains(I, p)) return false;
      return true;
    }
    case RingKind::Arrangement: {
      const MonomialIdeal J = idealSum(I, definingIntersection(spec));
      for (const ExpVec& p : standard)
        if (newtonContains(J, p)) return false;
      return true;
    }
  }
  return true;
}

}  // namespace lechlab
