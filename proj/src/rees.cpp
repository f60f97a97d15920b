#include "lechlab/rees.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lechlab/errors.hpp"

namespace lechlab {

namespace {

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

// Lower-left convex hull of the generator points of a 2-D staircase,
// from (0, ymax-intercept) to (xmax-intercept, 0). Gens sorted by x.
std::vector<ExpVec> lowerHull2d(std::vector<ExpVec> pts) {
  std::sort(pts.begin(), pts.end(), [](const ExpVec& a, const ExpVec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  std::vector<ExpVec> hull;
  for (const ExpVec& p : pts) {
    // keep only the lowest point per x
    if (!hull.empty() && hull.back()[0] == p[0]) continue;
    while (hull.size() >= 2) {
      const ExpVec& a = hull[hull.size() - 2];
      const ExpVec& b = hull[hull.size() - 1];
      // cross of (b-a) x (p-a); drop b when not a strict right turn
      const int64_t cross = int64_t(b[0] - a[0]) * (p[1] - a[1]) -
                            int64_t(b[1] - a[1]) * (p[0] - a[0]);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

ReesData reesData2d(const MonomialIdeal& I) {
  const std::vector<ExpVec> hull = lowerHull2d(I.gens);
  ReesData rd;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const int64_t dx = hull[i + 1][0] - hull[i][0];
    const int64_t dy = hull[i][1] - hull[i + 1][1];
    const int64_t g = std::gcd(dx, dy);
    Facet f;
    f.normal = {static_cast<Exp>(dy / g), static_cast<Exp>(dx / g)};
    int64_t val = INT64_MAX;
    for (const ExpVec& p : I.gens)
      val = std::min<int64_t>(val, int64_t(f.normal[0]) * p[0] + int64_t(f.normal[1]) * p[1]);
    f.value = val;
    rd.facets.push_back(std::move(f));
  }
  return rd;
}

struct Row {
  std::vector<BigInt> a;  // coefficients, a . x >= c
  BigInt c;
};

void normalizeRow(Row& r) {
  BigInt g = 0;
  for (const BigInt& v : r.a) g = gcd(g, abs(v));
  g = gcd(g, abs(r.c));
  if (g > 1) {
    for (BigInt& v : r.a) v /= g;
    r.c /= g;
  }
}

// Fourier-Motzkin elimination of the first `elim` variables from
// { x : a . x >= c }. Rows are kept integral and gcd-normalized.
std::vector<Row> fourierMotzkin(std::vector<Row> rows, size_t elim, int64_t budget) {
  for (size_t var = 0; var < elim; ++var) {
    std::vector<Row> pos, neg, zero;
    for (Row& r : rows) {
      if (r.a[var] > 0)
        pos.push_back(std::move(r));
      else if (r.a[var] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::vector<Row> next = std::move(zero);
    std::map<std::vector<BigInt>, BigInt> seen;
    auto push = [&](Row r) {
      normalizeRow(r);
      std::vector<BigInt> key = r.a;
      key.push_back(0);  // separator
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(std::move(key), r.c);
        next.push_back(std::move(r));
      } else if (r.c > it->second) {
        it->second = r.c;  // keep the tighter bound
        for (Row& q : next)
          if (q.a == r.a) { q.c = r.c; break; }
      }
    };
    for (Row& r : next) {
      std::vector<BigInt> key = r.a;
      key.push_back(0);
      seen.emplace(std::move(key), r.c);
    }
    for (const Row& p : pos) {
      for (const Row& n : neg) {
        Row r;
        r.a.resize(p.a.size());
        const BigInt pc = p.a[var], nc = -n.a[var];
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = nc * p.a[i] + pc * n.a[i];
        r.c = nc * p.c + pc * n.c;
        push(std::move(r));
        if (static_cast<int64_t>(next.size()) > budget)
          throw ResourceError("Fourier-Motzkin elimination budget exceeded");
      }
    }
    rows = std::move(next);
  }
  return rows;
}

// Rank of a small rational matrix, by Gaussian elimination.
size_t ratRank(std::vector<std::vector<Rat>> M) {
  size_t rank = 0;
  const size_t rows = M.size();
  if (rows == 0) return 0;
  const size_t cols = M[0].size();
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      const Rat f = M[r][c] / M[rank][c];
      for (size_t k = c; k < cols; ++k) M[r][k] -= f * M[rank][k];
    }
    ++rank;
  }
  return rank;
}

// A supporting inequality <w, x> >= val is a facet exactly when its face
// has affine dimension d-1. The face is spanned by the minimizing
// generators together with the rays e_i with w_i = 0.
bool isFacet(const MonomialIdeal& I, const ExpVec& w, const BigInt& val) {
  std::vector<ExpVec> minimizers;
  for (const ExpVec& g : I.gens) {
    BigInt s = 0;
    for (int i = 0; i < I.dim; ++i) s += BigInt(w[i]) * g[i];
    if (s == val) minimizers.push_back(g);
  }
  if (minimizers.empty()) return false;
  std::vector<std::vector<Rat>> M;
  for (size_t j = 1; j < minimizers.size(); ++j) {
    std::vector<Rat> row(I.dim);
    for (int i = 0; i < I.dim; ++i)
      row[i] = Rat(minimizers[j][i] - minimizers[0][i]);
    M.push_back(std::move(row));
  }
  for (int i = 0; i < I.dim; ++i) {
    if (w[i] == 0) {
      std::vector<Rat> row(I.dim, Rat(0));
      row[i] = 1;
      M.push_back(std::move(row));
    }
  }
  return ratRank(std::move(M)) == static_cast<size_t>(I.dim) - 1;
}

ReesData reesDataFm(const MonomialIdeal& I, const ReesOptions& opts) {
  const size_t m = I.gens.size();
  const size_t d = I.dim;
  // Variables (lambda_1..lambda_m, v_1..v_d); constraints of
  // conv(gens) + orthant as a projection.
  std::vector<Row> rows;
  for (size_t i = 0; i < d; ++i) {
    Row r;
    r.a.assign(m + d, 0);
    for (size_t j = 0; j < m; ++j) r.a[j] = -BigInt(I.gens[j][i]);
    r.a[m + i] = 1;
    r.c = 0;
    rows.push_back(std::move(r));  // v_i - sum lambda_j g_ji >= 0
  }
  for (size_t j = 0; j < m; ++j) {
    Row r;
    r.a.assign(m + d, 0);
    r.a[j] = 1;
    r.c = 0;
    rows.push_back(std::move(r));  // lambda_j >= 0
  }
  {
    Row r1, r2;
    r1.a.assign(m + d, 0);
    r2.a.assign(m + d, 0);
    for (size_t j = 0; j < m; ++j) {
      r1.a[j] = 1;
      r2.a[j] = -1;
    }
    r1.c = 1;
    r2.c = -1;
    rows.push_back(std::move(r1));  // sum lambda >= 1
    rows.push_back(std::move(r2));  // sum lambda <= 1
  }

  rows = fourierMotzkin(std::move(rows), m, opts.fmRowBudget);

  ReesData rd;
  std::map<ExpVec, bool> emitted;
  for (Row& r : rows) {
    // facet candidate in v only: strip lambda slots (all zero now)
    ExpVec w(d, 0);
    bool positive = true;
    for (size_t i = 0; i < d; ++i) {
      const BigInt& coeff = r.a[m + i];
      if (coeff < 0) { positive = false; break; }
      if (coeff > static_cast<int64_t>(1) << 30)
        throw ResourceError("facet normal exceeds the integer range");
      w[i] = static_cast<Exp>(toInt64(coeff));
    }
    if (!positive) continue;
    // support value recomputed from the generators; facets of the
    // polyhedron satisfy min <w, g> = c, redundant rows satisfy >=.
    BigInt val = 0;
    bool first = true;
    for (const ExpVec& g : I.gens) {
      BigInt s = 0;
      for (size_t i = 0; i < d; ++i) s += BigInt(w[i]) * g[i];
      if (first || s < val) { val = s; first = false; }
    }
    if (val <= 0 || val != r.c) continue;  // unbounded direction or slack row
    if (emitted.count(w)) continue;
    emitted[w] = true;
    if (!isFacet(I, w, val)) continue;  // supporting but lower-dimensional
    Facet f;
    f.normal = w;
    f.value = toInt64(val);
    rd.facets.push_back(std::move(f));
  }
  return rd;
}

}  // namespace

ReesData reesData(const MonomialIdeal& I, const ReesOptions& opts) {
  if (!isFiniteColength(I))
    throw InputError("Rees data requires finite colength");
  if (I.isUnit()) return ReesData{{}, 1};

  ReesData rd;
  if (I.dim == 1) {
    Facet f;
    f.normal = {1};
    f.value = I.gens[0][0];
    rd.facets.push_back(f);
  } else if (I.dim == 2) {
    rd = reesData2d(I);
  } else {
    rd = reesDataFm(I, opts);
  }
  int64_t period = 1;
  for (const Facet& f : rd.facets) period = lcm64(period, f.value);
  rd.period = period;
  return rd;
}

MonomialIdeal rationalPowerWithFacets(const MonomialIdeal& I, const ReesData& rd,
                                      int64_t b, int64_t a) {
  if (a <= 0) throw InputError("rational power needs a positive denominator");
  if (b < 0) throw InputError("rational power needs a non-negative numerator");
  if (b == 0) return MonomialIdeal::unit(I.dim);
  const int64_t g = std::gcd(b, a);
  b /= g;
  a /= g;

  const ExpVec genBox = I.generatorBox();
  ExpVec box(I.dim);
  int64_t vol = 1;
  for (int i = 0; i < I.dim; ++i) {
    box[i] = static_cast<Exp>(toInt64(ceilDiv(BigInt(b) * genBox[i], BigInt(a))));
    vol *= box[i] + 1;
    if (vol > 10'000'000)
      throw ResourceError("rational power candidate box exceeds the cap");
  }

  std::vector<ExpVec> members;
  ExpVec v(I.dim, 0);
  for (;;) {
    bool in = true;
    for (const Facet& f : rd.facets) {
      BigInt s = 0;
      for (int i = 0; i < I.dim; ++i) s += BigInt(f.normal[i]) * v[i];
      // <w, v> >= (b/a) value  <=>  a <w, v> >= b value, exactly
      if (a * s < BigInt(b) * f.value) { in = false; break; }
    }
    if (in) members.push_back(v);

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

MonomialIdeal rationalPower(const MonomialIdeal& I, int64_t b, int64_t a,
                            const ReesOptions& opts) {
  if (a <= 0) throw InputError("rational power needs a positive denominator");
  if (b == 0) return MonomialIdeal::unit(I.dim);
  const ReesData rd = reesData(I, opts);
  return rationalPowerWithFacets(I, rd, b, a);
}

}  // namespace lechlab
