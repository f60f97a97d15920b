#include "lechlab/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "lechlab/errors.hpp"
#include "lechlab/rees.hpp"
#include "lechlab/ring_ops.hpp"

namespace lechlab {

namespace {

// Binomial C(n, k) as int64 for the small parameters in play.
int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return toInt64(r);
}

// Last entry of the k-th finite difference of f at the tail, exact.
int64_t finiteDifference(const std::vector<int64_t>& f, int k, size_t at) {
  BigInt s = 0;
  for (int i = 0; i <= k; ++i) {
    BigInt term = binom(k, i) * BigInt(f[at - i]);
    if (i % 2) s -= term; else s += term;
  }
  return toInt64(s);
}

// Counts semigroup points outside the n-fold dilation of the Newton
// polyhedron described by `rd`: box scan with exact facet tests. When
// sgGap is true the coordinate-0 value 1 is skipped (the cusp line).
int64_t countOutsideScaled(const MonomialIdeal& I, const ReesData& rd, int64_t n,
                           bool sgGap) {
  const ExpVec base = I.generatorBox();
  std::vector<int64_t> box(I.dim);
  int64_t vol = 1;
  for (int i = 0; i < I.dim; ++i) {
    box[i] = int64_t(base[i]) * n + 1;
    vol *= box[i] + 1;
    if (vol > 30'000'000)
      throw ResourceError("scaled staircase box exceeds the cap");
  }
  std::vector<int64_t> v(I.dim, 0);
  int64_t count = 0;
  for (;;) {
    if (!(sgGap && v[0] == 1)) {
      bool outside = false;
      for (const Facet& f : rd.facets) {
        int64_t s = 0;
        for (int i = 0; i < I.dim; ++i) s += int64_t(f.normal[i]) * v[i];
        if (s < n * f.value) { outside = true; break; }
      }
      if (outside) ++count;
    }
    int i = 0;
    while (i < I.dim) {
      if (++v[i] <= box[i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == I.dim) break;
  }
  return count;
}

std::mutex gCacheMutex;
std::map<std::string, HSProfile> gCache;

HSProfile profileFromLengths(std::function<int64_t(int64_t)> lengthOf, int d,
                             const HSOptions& opts) {
  HSProfile prof;
  for (int64_t n = 1; n <= opts.maxPower; ++n) {
    prof.lengths.push_back(lengthOf(n));
    if (prof.lengths.size() >= 2 &&
        prof.lengths.back() <= prof.lengths[prof.lengths.size() - 2])
      throw InputError("power colengths are not strictly increasing");
    const size_t N = prof.lengths.size();
    if (static_cast<int>(N) < d + opts.window) continue;
    bool stable = true;
    int64_t ref = 0;
    for (int w = 0; w < opts.window; ++w) {
      const int64_t diff = finiteDifference(prof.lengths, d, N - 1 - w);
      if (w == 0) ref = diff;
      else if (diff != ref) { stable = false; break; }
    }
    if (!stable) continue;
    prof.stabilized = true;
    prof.multiplicity = ref;
    // e1 from the (d-1)-st difference of e0*C(n+d-1, d) - lengths.
    std::vector<int64_t> q(N);
    for (size_t i = 0; i < N; ++i) {
      const int64_t n1 = static_cast<int64_t>(i) + 1;
      q[i] = ref * binom(n1 + d - 1, d) - prof.lengths[i];
    }
    prof.e1 = d >= 1 ? finiteDifference(q, d - 1, N - 1) : 0;
    return prof;
  }
  std::ostringstream os;
  os << "Hilbert-Samuel profile did not stabilize within " << opts.maxPower
     << " powers (partial lengths:";
  for (int64_t v : prof.lengths) os << ' ' << v;
  os << ")";
  throw ResourceError(os.str());
}

}  // namespace

Rat covolume2d(const MonomialIdeal& I) {
  if (I.dim != 2) throw InputError("covolume is a 2-variable computation");
  if (!isFiniteColength(I)) throw InputError("covolume needs finite colength");
  if (I.isUnit()) return Rat(0);
  // Lower hull, endpoints on both axes; trapezoid sum.
  std::vector<ExpVec> pts = I.gens;
  std::sort(pts.begin(), pts.end(), [](const ExpVec& a, const ExpVec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  std::vector<ExpVec> hull;
  for (const ExpVec& p : pts) {
    if (!hull.empty() && hull.back()[0] == p[0]) continue;
    while (hull.size() >= 2) {
      const ExpVec& a = hull[hull.size() - 2];
      const ExpVec& b = hull[hull.size() - 1];
      const int64_t cross = int64_t(b[0] - a[0]) * (p[1] - a[1]) -
                            int64_t(b[1] - a[1]) * (p[0] - a[0]);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  Rat area = 0;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    area += Rat(BigInt(hull[i + 1][0] - hull[i][0]) *
                    BigInt(hull[i][1] + hull[i + 1][1]),
                BigInt(2));
  }
  return area;
}

HSProfile hsMultiplicity(const MonomialIdeal& I, const RingSpec& spec,
                         const HSOptions& opts) {
  if (static_cast<int>(I.dim) != spec.totalCoords())
    throw InputError("ideal dimension does not match the ring");
  const int d = spec.krullDim();
  if (d < 1) throw InputError("multiplicity needs dimension >= 1");
  if (!ringFiniteColength(I, spec))
    throw InputError("multiplicity needs finite colength in the ring");
  if (I.isUnit()) return HSProfile{{0}, true, 0, 0};

  std::ostringstream keyos;
  keyos << spec.str() << '#' << I.rawKey() << '#' << opts.window << '#'
        << opts.maxPower;
  const std::string key = keyos.str();
  {
    std::lock_guard<std::mutex> lock(gCacheMutex);
    auto it = gCache.find(key);
    if (it != gCache.end()) return it->second;
  }

  HSProfile prof;
  if (spec.kind == RingKind::Cusp) {
    const ReesData rd = reesData(I);
    prof = profileFromLengths(
        [&](int64_t n) { return countOutsideScaled(I, rd, n, true); }, d, opts);
    if (d == 2) {
      const Rat cov = covolume2d(I);
      if (Rat(prof.multiplicity) != 2 * cov)
        throw ResourceError("cusp profile disagrees with the covolume check");
    }
  } else {
    std::vector<MonomialIdeal> powers;  // powers[n-1] = I^n
    auto lengthOf = [&](int64_t n) {
      while (static_cast<int64_t>(powers.size()) < n) {
        powers.push_back(powers.empty() ? I : idealProduct(powers.back(), I));
      }
      return ringColength(powers[n - 1], spec);
    };
    prof = profileFromLengths(lengthOf, d, opts);
    if (spec.kind == RingKind::Poly && spec.totalCoords() == 2) {
      const Rat cov = covolume2d(I);
      if (Rat(prof.multiplicity) != 2 * cov)
        throw ResourceError("profile disagrees with the covolume cross-check");
    }
  }

  std::lock_guard<std::mutex> lock(gCacheMutex);
  gCache.emplace(key, prof);
  return prof;
}

}  // namespace lechlab
