#include "lechlab/adjoin.hpp"

#include "lechlab/errors.hpp"

namespace lechlab {

MonomialIdeal adjoinPower(const MonomialIdeal& I, int64_t m) {
  if (m < 1) throw InputError("adjoined power needs m >= 1");
  std::vector<ExpVec> gens;
  for (const ExpVec& g : I.gens) {
    ExpVec v = g;
    v.push_back(0);
    gens.push_back(std::move(v));
  }
  ExpVec t(I.dim + 1, 0);
  t[I.dim] = static_cast<Exp>(m);
  gens.push_back(std::move(t));
  return MonomialIdeal::make(I.dim + 1, std::move(gens));
}

MonomialIdeal expandAdjointPower(const MonomialIdeal& I, int64_t a, int64_t n) {
  if (a < 1 || n < 1) throw InputError("expansion needs a, n >= 1");
  if (!isFiniteColength(I)) throw InputError("expansion needs finite colength");
  const ReesData rd = reesData(I);
  std::vector<ExpVec> gens;
  for (int64_t k = 0; k <= n; ++k) {
    const MonomialIdeal part =
        k == 0 ? MonomialIdeal::unit(I.dim) : rationalPowerWithFacets(I, rd, k, a);
    for (const ExpVec& g : part.gens) {
      ExpVec v = g;
      v.push_back(static_cast<Exp>(n - k));
      gens.push_back(std::move(v));
    }
  }
  return MonomialIdeal::make(I.dim + 1, std::move(gens));
}

int64_t colengthRationalPower(const MonomialIdeal& I, const ReesData& rd,
                              int64_t j, int64_t rho) {
  if (j == 0) return 0;
  return colength(rationalPowerWithFacets(I, rd, j, rho));
}

int64_t colengthAdjoinRational(const MonomialIdeal& I, int64_t m, int64_t n,
                               int64_t r) {
  if (m < 1 || n < 1) throw InputError("needs m, n >= 1");
  if (r < 0 || r >= m) throw InputError("needs 0 <= r < m");
  const ReesData rd = reesData(I);
  const int64_t rho = rd.period;
  if (m % rho != 0)
    throw InputError("the formula needs the Rees period to divide m");
  const int64_t s = (r * rho + m - 1) / m;  // ceil(r rho / m)
  const int64_t t = s * (m / rho) - r;
  const int64_t w = m / rho;

  int64_t total = 0;
  for (int64_t h = 0; h < s; ++h)
    for (int64_t k = 0; k <= n; ++k)
      total += w * colengthRationalPower(I, rd, k * rho + h, rho);
  for (int64_t h = s; h < rho; ++h)
    for (int64_t k = 0; k < n; ++k)
      total += w * colengthRationalPower(I, rd, k * rho + h, rho);
  total += (w - t) * colengthRationalPower(I, rd, n * rho + s, rho);
  return total;
}

int64_t colengthAdjoinClosure(const MonomialIdeal& I, int64_t m, int64_t n) {
  if (m < 1 || n < 1) throw InputError("needs m, n >= 1");
  const ReesData rd = reesData(I);
  const int64_t rho = rd.period;
  if (m % rho != 0)
    throw InputError("the formula needs the Rees period to divide m");
  int64_t total = 0;
  for (int64_t j = 0; j <= rho * n; ++j)
    total += colengthRationalPower(I, rd, j, rho);
  return (m / rho) * total;
}

}  // namespace lechlab
