#include "lechlab/newton.hpp"

#include "lechlab/errors.hpp"
#include "lechlab/simplex.hpp"

namespace lechlab {

bool newtonContains(const MonomialIdeal& I, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != I.dim)
    throw InputError("point length does not match ambient dimension");
  for (const Rat& x : v)
    if (x < 0) throw InputError("point has a negative coordinate");
  if (I.isZero()) return false;

  // Quick exits: domination of a generator is containment; total degree
  // below the minimum generator degree is exclusion.
  const size_t m = I.gens.size();
  for (const ExpVec& g : I.gens) {
    bool dom = true;
    for (int i = 0; i < I.dim; ++i)
      if (v[i] < g[i]) { dom = false; break; }
    if (dom) return true;
  }

  // Equality system: sum_j lambda_j g_j + s = v (slacks s >= 0), sum = 1.
  const size_t d = I.dim;
  std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(m + d, Rat(0)));
  std::vector<Rat> b(d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < m; ++j) A[i][j] = I.gens[j][i];
    A[i][m + i] = 1;
    b[i] = v[i];
  }
  for (size_t j = 0; j < m; ++j) A[d][j] = 1;
  b[d] = 1;
  return lpFeasible(std::move(A), std::move(b));
}

bool newtonContains(const MonomialIdeal& I, const ExpVec& v) {
  std::vector<Rat> rv(v.begin(), v.end());
  return newtonContains(I, rv);
}

MonomialIdeal integralClosure(const MonomialIdeal& I) {
  if (I.isZero()) throw InputError("integral closure of the zero ideal");
  if (I.isUnit()) return I;

  const ExpVec box = I.generatorBox();
  int64_t vol = 1;
  for (int i = 0; i < I.dim; ++i) {
    vol *= box[i] + 1;
    if (vol > 10'000'000)
      throw ResourceError("integral closure candidate box exceeds the cap");
  }
  std::vector<ExpVec> members;
  ExpVec v(I.dim, 0);
  // Odometer over the closed box [0, box]. Points dominating an already
  // accepted member are in the polyhedron without an LP call.
  for (;;) {
    bool known = false;
    for (const ExpVec& u : members)
      if (dominates(v, u)) { known = true; break; }
    if (known || newtonContains(I, v)) members.push_back(v);

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

}  // namespace lechlab
