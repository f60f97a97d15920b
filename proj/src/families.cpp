#include "lechlab/families.hpp"

#include <functional>

#include "lechlab/errors.hpp"
#include "lechlab/rees.hpp"

namespace lechlab {

namespace {
BigInt binomBig(const BigInt& n, int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}
}  // namespace

FamilySides familyColengthIdentity(const std::vector<int64_t>& increments,
                                   int64_t k, int r) {
  if (increments.empty()) throw InputError("family needs at least one increment");
  if (increments[0] < 1) throw InputError("family needs l_0 >= 1");
  if (k < 0 || r < 1) throw InputError("family needs k >= 0 and r >= 1");
  const int64_t N = static_cast<int64_t>(increments.size());

  FamilySides out;
  out.sideA = 0;
  for (int64_t j = 0; j < N; ++j)
    out.sideA += BigInt(increments[j]) * binomBig(k * (N - j) + r - 1, r);

  out.sideB = 0;
  for (int64_t n = 0; n < N; ++n) {
    BigInt len = 0;  // l(R/I_{N-n})
    for (int64_t j = 0; j < N - n; ++j) len += increments[j];
    out.sideB += len * (binomBig(k * (n + 1) + r - 1, r) -
                        binomBig(k * n + r - 1, r));
  }
  return out;
}

std::vector<int64_t> closurePowerIncrements(const MonomialIdeal& I, int N) {
  if (!isFiniteColength(I)) throw InputError("family needs finite colength");
  std::vector<int64_t> lens{0};  // l(R/I_0) = 0
  const ReesData rd = reesData(I);
  for (int n = 1; n <= N; ++n)
    lens.push_back(colength(rationalPowerWithFacets(I, rd, n, 1)));
  std::vector<int64_t> inc;
  for (int n = 0; n < N; ++n) inc.push_back(lens[n + 1] - lens[n]);
  return inc;
}

MonomialIdeal buildPowerFamilyIdeal(const MonomialIdeal& I, int N, int64_t k,
                                    int r) {
  if (N < 1 || k < 1 || r < 1)
    throw InputError("power family needs N, k, r >= 1");
  if (!isFiniteColength(I)) throw InputError("family needs finite colength");
  const int d = I.dim;
  const int big = d + r;
  const ReesData rd = reesData(I);

  std::vector<ExpVec> gens;
  // t-block monomials of degree kn, odometer over compositions.
  auto appendBlock = [&](const MonomialIdeal& comp, int64_t deg) {
    std::vector<ExpVec> tParts;
    ExpVec t(r, 0);
    t[0] = static_cast<Exp>(deg);
    // enumerate all r-part compositions of deg
    std::function<void(int, int64_t, ExpVec&)> rec = [&](int pos, int64_t left,
                                                         ExpVec& cur) {
      if (pos == r - 1) {
        cur[pos] = static_cast<Exp>(left);
        tParts.push_back(cur);
        return;
      }
      for (int64_t v = 0; v <= left; ++v) {
        cur[pos] = static_cast<Exp>(v);
        rec(pos + 1, left - v, cur);
      }
    };
    ExpVec cur(r, 0);
    rec(0, deg, cur);
    for (const ExpVec& g : comp.gens)
      for (const ExpVec& tp : tParts) {
        ExpVec v = g;
        v.insert(v.end(), tp.begin(), tp.end());
        gens.push_back(std::move(v));
      }
  };

  for (int n = 0; n <= N; ++n) {
    const MonomialIdeal comp =
        n == N ? MonomialIdeal::unit(d)
               : rationalPowerWithFacets(I, rd, N - n, 1);
    appendBlock(comp, static_cast<int64_t>(k) * n);
  }
  return MonomialIdeal::make(big, std::move(gens));
}

}  // namespace lechlab
