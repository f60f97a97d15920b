#include "lechlab/inequalities.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "lechlab/errors.hpp"
#include "lechlab/mixed.hpp"
#include "lechlab/newton.hpp"
#include "lechlab/ring_ops.hpp"

namespace lechlab {

int64_t stirling(int kind, int n, int k) {
  if (kind != 1 && kind != 2) throw InputError("Stirling kind must be 1 or 2");
  if (k < 0 || n < 0 || k > n) throw InputError("Stirling needs 0 <= k <= n");
  if (n > 20) throw InputError("Stirling table capped at n = 20");
  std::vector<std::vector<int64_t>> S(n + 1, std::vector<int64_t>(n + 1, 0));
  S[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      const int64_t carry = kind == 1 ? int64_t(i - 1) * S[i - 1][j]
                                      : int64_t(j) * S[i - 1][j];
      S[i][j] = carry + S[i - 1][j - 1];
    }
  return S[n][k];
}

namespace {

const std::map<std::string, Ineq>& nameTable() {
  static const std::map<std::string, Ineq> t = {
      {"lech", Ineq::Lech},
      {"mumford2d", Ineq::Mumford2D},
      {"optimal3d", Ineq::Optimal3D},
      {"skew3d", Ineq::Skew3D},
      {"mixed2da", Ineq::Mixed2DA},
      {"mixed2db", Ineq::Mixed2DB},
      {"inclexcl-diluted", Ineq::InclExclDiluted},
      {"weak-inclexcl", Ineq::WeakInclExcl},
      {"best-lech", Ineq::BestLechConj},
      {"hsv-coord", Ineq::HsvCoord},
      {"snc-semistable", Ineq::SncSemistable},
      {"cone-semistable", Ineq::ConeSemistable},
      {"diluted-ie-sets", Ineq::DilutedIeSets},
  };
  return t;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void requirePoly(const RingSpec& spec, int vars, const char* entry) {
  if (spec.kind != RingKind::Poly || spec.totalCoords() != vars)
    throw InputError(std::string(entry) + " needs a polynomial ring in " +
                     std::to_string(vars) + " variables");
}

int64_t lenModulo(const MonomialIdeal& I, const std::vector<int>& vars) {
  return colength(restrictModuloVars(I, vars));
}

/// Sum over the k-element subsets of `pool` of the colengths of I with
/// those coordinates killed.
Rat subsetLengthSum(const MonomialIdeal& I, const std::vector<int>& pool, int k) {
  Rat total = 0;
  const int n = static_cast<int>(pool.size());
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> vars;
      for (int i : idx) vars.push_back(pool[i]);
      total += lenModulo(I, vars);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return total;
}

VerificationReport makeReport(Ineq id, Rat lhs, Rat rhs, bool strictClaim = false) {
  VerificationReport r;
  r.id = ineqName(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = strictClaim ? lhs < rhs : lhs <= rhs;
  r.equality = lhs == rhs;
  r.slack = rhs - lhs;
  return r;
}

VerificationReport verifySets(const SetSystem& sys) {
  if (sys.subsets.empty() || sys.subsets.size() > 20)
    throw InputError("set system needs 1..20 subsets");
  uint64_t unionMask = 0;
  for (uint64_t s : sys.subsets) unionMask |= s;
  const int total = std::popcount(unionMask);
  if (total == 0) throw InputError("set system union is empty");

  const int d = static_cast<int>(sys.subsets.size());
  Rat half = 0, recip = 0;
  for (uint32_t mask = 1; mask < (1u << d); ++mask) {
    uint64_t inter = ~uint64_t{0};
    for (int j = 0; j < d; ++j)
      if (mask & (1u << j)) inter &= sys.subsets[j];
    inter &= unionMask;
    const int k = std::popcount(mask);
    const int64_t card = std::popcount(inter);
    const Rat sign = (k % 2) ? Rat(1) : Rat(-1);
    half += sign * Rat(card) / Rat(BigInt(1) << k);
    recip += sign * Rat(card, k + 1);
  }

  // |S| > half-sum >= reciprocal-sum >= |S|/2
  VerificationReport r = makeReport(Ineq::DilutedIeSets, half, Rat(total), true);
  r.holds = Rat(total) > half && half >= recip && recip * 2 >= Rat(total);
  r.equality = false;
  r.details = {{"union", Rat(total)},
               {"half_dilution", half},
               {"reciprocal_dilution", recip},
               {"half_of_union", Rat(total, 2)}};
  return r;
}

}  // namespace

std::string ineqName(Ineq id) {
  for (const auto& [name, v] : nameTable())
    if (v == id) return name;
  return "?";
}

Ineq ineqFromName(const std::string& name) {
  auto it = nameTable().find(name);
  if (it == nameTable().end()) throw InputError("unknown inequality id: " + name);
  return it->second;
}

bool ineqRequiresClosed(Ineq id) {
  return id == Ineq::Mixed2DA || id == Ineq::Mixed2DB;
}

VerificationReport verify(Ineq id, const VerifyInputs& in) {
  const RingSpec& spec = in.spec;
  const MonomialIdeal& I = in.I;

  switch (id) {
    case Ineq::Lech: {
      const int d = spec.krullDim();
      const int64_t e = ringMultiplicity(I, spec);
      const int64_t eR =
          ringMultiplicity(MonomialIdeal::maximal(spec.totalCoords()), spec);
      const int64_t len = ringColength(I, spec);
      return makeReport(id, Rat(e), Rat(factorial(d) * eR * len));
    }

    case Ineq::Mumford2D: {
      requirePoly(spec, 2, "mumford2d");
      const int axis = in.axes.empty() ? 1 : in.axes[0];
      const int64_t e = ringMultiplicity(I, spec);
      const Rat rhs = Rat(2 * colength(I) - lenModulo(I, {axis}));
      return makeReport(id, Rat(e), rhs);
    }

    case Ineq::Optimal3D: {
      requirePoly(spec, 3, "optimal3d");
      std::vector<int> axes = in.axes.empty() ? std::vector<int>{1, 2} : in.axes;
      if (axes.size() != 2) throw InputError("optimal3d needs two axes");
      const int64_t e = ringMultiplicity(I, spec);
      const Rat rhs = Rat(6 * colength(I) - 3 * lenModulo(I, {axes[0]}) -
                          3 * lenModulo(I, {axes[1]}) + lenModulo(I, axes));
      return makeReport(id, Rat(e), rhs);
    }

    case Ineq::Skew3D: {
      requirePoly(spec, 3, "skew3d");
      const int axis = in.axes.empty() ? 2 : in.axes[0];
      const int64_t e = ringMultiplicity(I, spec);
      const Rat rhs = Rat(15, 2) * colength(I) - 5 * lenModulo(I, {axis});
      return makeReport(id, Rat(e), rhs);
    }

    case Ineq::Mixed2DA:
    case Ineq::Mixed2DB: {
      requirePoly(spec, 2, "mixed2d");
      if (!in.J) throw InputError("mixed2d entries need a second ideal");
      MonomialIdeal big = *in.J;
      MonomialIdeal small = I;
      if (!big.contains(small))
        throw InputError("mixed2d entries need I contained in J");
      const Mixed2DResult mm = mixedMultiplicity2d(small, big);
      VerificationReport r;
      if (id == Ineq::Mixed2DA) {
        const int axis = in.axes.empty() ? 1 : in.axes[0];
        const Rat rhs = Rat(colength(integralClosure(small)) +
                            colength(integralClosure(big)) -
                            lenModulo(integralClosure(small), {axis}));
        r = makeReport(id, Rat(mm.value), rhs);
      } else {
        const Rat rhs = Rat(colength(integralClosure(small)), 2) +
                        3 * colength(integralClosure(big));
        r = makeReport(id, Rat(mm.value), rhs);
      }
      r.autoClosed = !mm.inputsWereClosed;
      return r;
    }

    case Ineq::InclExclDiluted:
    case Ineq::WeakInclExcl: {
      if (spec.kind != RingKind::Poly)
        throw InputError("diluted entries need a polynomial ring");
      const int total = spec.totalCoords();
      if (total < 2) throw InputError("diluted entries need >= 2 variables");
      const int n = total - 1;  // coordinate 0 is never projected out
      std::vector<int> pool;
      for (int i = 1; i < total; ++i) pool.push_back(i);
      const int64_t e = ringMultiplicity(I, spec);
      Rat sum = Rat(colength(I));
      for (int k = 1; k <= n; ++k) {
        const Rat coeff = (id == Ineq::InclExclDiluted)
                              ? Rat(1, BigInt(1) << k)
                              : Rat(1, k + 1);
        const Rat term = coeff * subsetLengthSum(I, pool, k);
        sum += (k % 2) ? -term : term;
      }
      const bool strict = (id == Ineq::InclExclDiluted) ? total >= 3 : n >= 2;
      return makeReport(id, Rat(e), Rat(factorial(total)) * sum, strict);
    }

    case Ineq::BestLechConj: {
      if (spec.kind != RingKind::Poly)
        throw InputError("best-lech needs a polynomial ring");
      const int total = spec.totalCoords();
      const int d = total - 1;
      if (d < 1) throw InputError("best-lech needs >= 2 variables");
      std::vector<int> pool;
      for (int i = 1; i < total; ++i) pool.push_back(i);
      const int64_t e = ringMultiplicity(I, spec);
      Rat rhs = 0;
      for (int k = 0; k <= d; ++k) {
        const Rat coeff =
            Rat(factorial(d + 1 - k) * stirling(2, d + 1, d + 1 - k)) /
            Rat(factorial(d) / (factorial(k) * factorial(d - k)));
        const Rat term = coeff * subsetLengthSum(I, pool, k);
        rhs += (k % 2) ? -term : term;
      }
      return makeReport(id, Rat(e), rhs);
    }

    case Ineq::HsvCoord: {
      if (spec.kind != RingKind::Poly)
        throw InputError("hsv-coord needs a polynomial ring");
      const int total = spec.totalCoords();
      const int d = total - 1;
      if (d < 1) throw InputError("hsv-coord needs >= 2 variables");
      std::vector<int> pool;
      for (int i = 1; i < total; ++i) pool.push_back(i);
      Rat lhs = 0;
      VerificationReport r;
      for (int i = 0; i <= d - 1; ++i) {
        // min over i-subsets of the restricted multiplicities
        int64_t best = -1;
        std::vector<int> idx(i);
        std::function<void(int, int)> rec = [&](int start, int depth) {
          if (depth == i) {
            std::vector<int> vars;
            for (int v : idx) vars.push_back(pool[v]);
            const MonomialIdeal rest = restrictModuloVars(I, vars);
            const int64_t e =
                ringMultiplicity(rest, RingSpec::poly(total - i));
            if (best < 0 || e < best) best = e;
            return;
          }
          for (int v = start; v <= static_cast<int>(pool.size()) - (i - depth);
               ++v) {
            idx[depth] = v;
            rec(v + 1, depth + 1);
          }
        };
        rec(0, 0);
        const int64_t coeff = stirling(1, d + 1, d + 1 - i);
        lhs += Rat(coeff) * best;
        r.details.emplace_back("term_" + std::to_string(i),
                               Rat(coeff) * best);
      }
      const Rat rhs = Rat(factorial(d + 1)) * colength(I);
      VerificationReport base = makeReport(id, lhs, rhs);
      base.details = r.details;
      return base;
    }

    case Ineq::SncSemistable:
    case Ineq::ConeSemistable: {
      if (spec.kind != RingKind::Arrangement)
        throw InputError("semistability entries need an arrangement ring");
      if (spec.adjoined < 1)
        throw InputError("semistability entries need an adjoined variable");
      const int d = spec.krullDim();
      const int64_t e = ringMultiplicity(I, spec);
      const int64_t len = ringColength(I, spec);
      return makeReport(id, Rat(e), Rat(factorial(d) * len));
    }

    case Ineq::DilutedIeSets: {
      if (!in.sets) throw InputError("diluted-ie-sets needs a set system");
      return verifySets(*in.sets);
    }
  }
  throw InputError("unhandled inequality id");
}

HuntResult searchCounterexample(Ineq id, const RingSpec& spec, int budget,
                                const EnumOptions& opts) {
  if (id == Ineq::Mixed2DA || id == Ineq::Mixed2DB || id == Ineq::DilutedIeSets)
    throw InputError("entry takes paired or set-system inputs; use the seeded suites");
  HuntResult res;
  EnumOptions eopts = opts;
  eopts.closedOnly = ineqRequiresClosed(id);
  const EnumStats stats = enumerateIdeals(
      spec, budget, eopts, [&](const MonomialIdeal& I, int64_t) {
        VerifyInputs in;
        in.spec = spec;
        in.I = I;
        const VerificationReport rep = verify(id, in);
        ++res.checked;
        if (!rep.holds) {
          res.counterexample = I;
          return false;
        }
        return true;
      });
  res.exhaustive = stats.exhaustive;
  return res;
}

}  // namespace lechlab
