#include "lechlab/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "lechlab/errors.hpp"
#include "lechlab/kernel.hpp"

namespace lechlab {

namespace {
constexpr int64_t kBoxCap = 10'000'000;  // lattice enumeration cap
}

MonomialIdeal MonomialIdeal::make(int dim, std::vector<ExpVec> gens) {
  if (dim < 0) throw InputError("negative ambient dimension");
  for (const ExpVec& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw InputError("generator length does not match ambient dimension");
    for (Exp e : g)
      if (e < 0) throw InputError("negative exponent in generator");
  }
  // Minimal antichain: drop anything divisible by another generator.
  std::vector<ExpVec> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (dominates(gens[i], gens[j])) {
        // Break ties between equal vectors by index so only one survives.
        if (gens[i] != gens[j] || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const ExpVec& a, const ExpVec& b) { return lexCompare(a, b) > 0; });
  return MonomialIdeal{dim, std::move(minimal)};
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return MonomialIdeal{dim, {ExpVec(dim, 0)}};
}

MonomialIdeal MonomialIdeal::maximal(int dim) {
  std::vector<ExpVec> gens;
  for (int i = 0; i < dim; ++i) {
    ExpVec v(dim, 0);
    v[i] = 1;
    gens.push_back(v);
  }
  return make(dim, std::move(gens));
}

bool MonomialIdeal::isUnit() const {
  return gens.size() == 1 && totalDegree(gens[0]) == 0;
}

bool MonomialIdeal::contains(const ExpVec& v) const {
  for (const ExpVec& g : gens)
    if (dominates(v, g)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (dim != other.dim) throw InputError("dimension mismatch");
  for (const ExpVec& g : other.gens)
    if (!contains(g)) return false;
  return true;
}

ExpVec MonomialIdeal::generatorBox() const {
  ExpVec box(dim, 0);
  for (const ExpVec& g : gens)
    for (int i = 0; i < dim; ++i) box[i] = std::max(box[i], g[i]);
  return box;
}

std::string MonomialIdeal::rawKey() const {
  std::ostringstream os;
  os << dim << ":[";
  for (size_t j = 0; j < gens.size(); ++j) {
    if (j) os << '|';
    for (int i = 0; i < dim; ++i) {
      if (i) os << ' ';
      os << gens[j][i];
    }
  }
  os << ']';
  return os.str();
}

bool idealLexLess(const MonomialIdeal& a, const MonomialIdeal& b) {
  const size_t n = std::min(a.gens.size(), b.gens.size());
  for (size_t i = 0; i < n; ++i) {
    const int c = lexCompare(a.gens[i], b.gens[i]);
    if (c != 0) return c < 0;
  }
  return a.gens.size() < b.gens.size();
}

MonomialIdeal idealSum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim != b.dim) throw InputError("dimension mismatch in ideal sum");
  std::vector<ExpVec> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return MonomialIdeal::make(a.dim, std::move(gens));
}

MonomialIdeal idealProduct(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim != b.dim) throw InputError("dimension mismatch in ideal product");
  if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.dim);
  std::vector<ExpVec> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const ExpVec& g : a.gens)
    for (const ExpVec& h : b.gens) gens.push_back(vecAdd(g, h));
  return MonomialIdeal::make(a.dim, std::move(gens));
}

MonomialIdeal idealPower(const MonomialIdeal& a, int64_t n) {
  if (n < 0) throw InputError("negative ideal power");
  if (n == 0) return MonomialIdeal::unit(a.dim);
  MonomialIdeal r = a;
  for (int64_t i = 1; i < n; ++i) r = idealProduct(r, a);
  return r;
}

bool isFiniteColength(const MonomialIdeal& I) {
  for (int i = 0; i < I.dim; ++i) {
    bool found = false;
    for (const ExpVec& g : I.gens) {
      bool onlyI = true;
      for (int j = 0; j < I.dim; ++j)
        if (j != i && g[j] != 0) { onlyI = false; break; }
      if (onlyI) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

int64_t colength(const MonomialIdeal& I) {
  if (!isFiniteColength(I))
    throw InputError("colength is infinite: ideal is not primary to the maximal ideal");
  if (I.isUnit()) return 0;
  if (I.dim == 0) return I.isZero() ? 1 : 0;
  const ExpVec box = I.generatorBox();
  int64_t vol = 1;
  for (int i = 0; i < I.dim; ++i) {
    vol *= std::max<int64_t>(box[i], 1);
    if (vol > kBoxCap)
      throw ResourceError("colength bounding box exceeds the enumeration cap");
  }
  std::vector<int32_t> flat;
  flat.reserve(I.gens.size() * I.dim);
  for (const ExpVec& g : I.gens) flat.insert(flat.end(), g.begin(), g.end());
  return kernel::count(box.data(), I.dim, flat.data(),
                       static_cast<int>(I.gens.size()));
}

MonomialIdeal restrictModuloVars(const MonomialIdeal& I, std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
    throw InputError("repeated coordinate in restriction set");
  for (int v : vars)
    if (v < 0 || v >= I.dim) throw InputError("restriction coordinate out of range");
  std::vector<bool> kill(I.dim, false);
  for (int v : vars) kill[v] = true;

  const int newDim = I.dim - static_cast<int>(vars.size());
  std::vector<ExpVec> gens;
  for (const ExpVec& g : I.gens) {
    bool supportedOff = true;
    for (int i = 0; i < I.dim; ++i)
      if (kill[i] && g[i] != 0) { supportedOff = false; break; }
    if (!supportedOff) continue;
    ExpVec h;
    h.reserve(newDim);
    for (int i = 0; i < I.dim; ++i)
      if (!kill[i]) h.push_back(g[i]);
    gens.push_back(std::move(h));
  }
  return MonomialIdeal::make(newDim, std::move(gens));
}

}  // namespace lechlab
