#include "lechlab/mixed.hpp"

#include <sstream>

#include "lechlab/errors.hpp"
#include "lechlab/hilbert.hpp"
#include "lechlab/newton.hpp"
#include "lechlab/ring_ops.hpp"

namespace lechlab {

namespace {

int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return toInt64(r);
}

// Mixed finite difference D_n^a D_m^b f at the grid point (n, m),
// 1-based indices into f.
int64_t mixedDiff(const std::vector<std::vector<int64_t>>& f, int a, int b,
                  int n, int m) {
  BigInt s = 0;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      BigInt term = BigInt(binom(a, i)) * binom(b, j) *
                    f[n - i - 1][m - j - 1];
      if ((i + j) % 2) s -= term; else s += term;
    }
  return toInt64(s);
}

}  // namespace

Mixed2DResult mixedMultiplicity2d(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim != 2 || J.dim != 2)
    throw InputError("2-variable mixed multiplicity needs dimension 2");
  if (!isFiniteColength(I) || !isFiniteColength(J))
    throw InputError("mixed multiplicity needs finite colengths");
  const MonomialIdeal Ic = integralClosure(I);
  const MonomialIdeal Jc = integralClosure(J);
  Mixed2DResult r;
  r.inputsWereClosed = (Ic == I) && (Jc == J);
  r.value = colength(idealProduct(Ic, Jc)) - colength(Ic) - colength(Jc);
  return r;
}

std::vector<int64_t> mixedMultiplicitiesGeneral(const MonomialIdeal& I,
                                                const MonomialIdeal& J,
                                                const RingSpec& spec,
                                                const MixedOptions& opts) {
  if (spec.kind == RingKind::Cusp)
    throw InputError("general mixed multiplicities: cusp model not supported");
  if (!ringFiniteColength(I, spec) || !ringFiniteColength(J, spec))
    throw InputError("mixed multiplicities need finite colengths");
  const int d = spec.krullDim();
  if (d < 1) throw InputError("mixed multiplicities need dimension >= 1");

  const int64_t eI = ringMultiplicity(I, spec);
  const int64_t eJ = ringMultiplicity(J, spec);

  // f[n-1][m-1] = colength of I^n J^m, grown until every mixed
  // difference is constant on the top corner and the endpoints match
  // the power profiles.
  std::vector<MonomialIdeal> powI{I}, powJ{J};
  std::vector<std::vector<int64_t>> f;
  auto ensure = [&](int G) {
    while (static_cast<int>(powI.size()) < G)
      powI.push_back(idealProduct(powI.back(), I));
    while (static_cast<int>(powJ.size()) < G)
      powJ.push_back(idealProduct(powJ.back(), J));
    f.assign(G, std::vector<int64_t>(G, 0));
    for (int n = 1; n <= G; ++n)
      for (int m = 1; m <= G; ++m)
        f[n - 1][m - 1] =
            ringColength(idealProduct(powI[n - 1], powJ[m - 1]), spec);
  };

  for (int G = d + 3; G <= opts.maxGrid; ++G) {
    ensure(G);
    std::vector<int64_t> e(d + 1);
    bool stable = true;
    for (int k = 0; k <= d && stable; ++k) {
      // entry k is e(I^[d-k] | J^[k]) = D_n^{d-k} D_m^k f
      const int a = d - k, b = k;
      const int64_t ref = mixedDiff(f, a, b, G, G);
      for (int dn = 0; dn <= 1 && stable; ++dn)
        for (int dm = 0; dm <= 1 && stable; ++dm) {
          if (G - dn - a < 1 || G - dm - b < 1) { stable = false; break; }
          if (mixedDiff(f, a, b, G - dn, G - dm) != ref) stable = false;
        }
      e[k] = ref;
    }
    if (stable && e[0] == eI && e[d] == eJ) return e;
  }
  throw ResourceError("mixed multiplicity grid did not stabilize");
}

MumfordBound mumford43Bound(const std::vector<MonomialIdeal>& chain,
                            const std::vector<int64_t>& breakpoints,
                            const RingSpec& spec) {
  if (chain.size() != breakpoints.size() || chain.size() < 2)
    throw InputError("chain and breakpoints must align, length >= 2");
  if (breakpoints.front() != 0)
    throw InputError("breakpoints must start at 0");
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (breakpoints[i] >= breakpoints[i + 1])
      throw InputError("breakpoints must strictly increase");
  if (!chain.back().isUnit())
    throw InputError("the chain must end with the unit ideal");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!chain[i + 1].contains(chain[i]))
      throw InputError("chain is not nested");

  const int64_t N = breakpoints.back();

  Rat bound = 0;
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    const int64_t width = breakpoints[k + 1] - breakpoints[k];
    int64_t inner;
    if (chain[k + 1].isUnit()) {
      inner = chain[k].isUnit() ? 0 : ringMultiplicity(chain[k], spec);
    } else {
      const std::vector<int64_t> mm =
          mixedMultiplicitiesGeneral(chain[k], chain[k + 1], spec);
      inner = 0;
      for (int64_t v : mm) inner += v;
    }
    bound += Rat(width) * inner;
  }

  // Assemble sum chain_j T^j + T^N over the model with one adjoined
  // variable; the component at degree j is the chain ideal at the last
  // breakpoint <= j.
  const RingSpec bigSpec = spec.withAdjoined(1);
  const int bigDim = spec.totalCoords() + 1;
  std::vector<ExpVec> gens;
  for (int64_t j = 0; j < N; ++j) {
    size_t idx = 0;
    for (size_t k = 0; k < breakpoints.size(); ++k)
      if (breakpoints[k] <= j) idx = k;
    for (const ExpVec& g : chain[idx].gens) {
      ExpVec v = g;
      v.push_back(static_cast<Exp>(j));
      gens.push_back(std::move(v));
    }
  }
  ExpVec tn(bigDim, 0);
  tn[bigDim - 1] = static_cast<Exp>(N);
  gens.push_back(tn);
  MumfordBound out;
  out.assembled = MonomialIdeal::make(bigDim, std::move(gens));
  out.exact = ringMultiplicity(out.assembled, bigSpec);
  out.bound = bound;
  return out;
}

}  // namespace lechlab
