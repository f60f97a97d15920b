#include "lechlab/enumerate.hpp"

#include <algorithm>
#include <set>

#include "lechlab/errors.hpp"
#include "lechlab/ring_ops.hpp"

namespace lechlab {

namespace {

// Cover relations of the ring-monomial poset under componentwise order.
// Along the cusp semigroup coordinate the exponent 1 does not exist, so
// 2 covers 0 there.
struct Poset {
  const RingSpec& spec;
  int dim;

  bool stepDown(ExpVec& v, int i) const {
    if (v[i] == 0) return false;
    if (spec.kind == RingKind::Cusp && i == 0) {
      if (v[i] == 2) { v[i] = 0; return true; }
      if (v[i] == 1) return false;
    }
    v[i] -= 1;
    return true;
  }

  bool stepUp(ExpVec& v, int i) const {
    if (spec.kind == RingKind::Cusp && i == 0 && v[i] == 0) {
      v[i] = 2;
    } else {
      v[i] += 1;
    }
    if (spec.kind == RingKind::Arrangement && !spec.isRingMonomial(v))
      return false;
    return true;
  }
};

struct Walker {
  const RingSpec& spec;
  int maxB;
  const EnumOptions& opts;
  const std::function<bool(const MonomialIdeal&, int64_t)>& fn;
  Poset poset;
  EnumStats stats;
  bool stop = false;

  std::set<ExpVec> D;             // the downset (standard monomials)
  std::vector<ExpVec> frontier;   // minimal complement elements, sorted

  void emit() {
    ++stats.visited;
    if (stats.visited > opts.visitCap) {
      stats.exhaustive = false;
      stop = true;
      return;
    }
    MonomialIdeal ideal = MonomialIdeal::make(poset.dim, frontier);
    if (opts.closedOnly) {
      std::vector<ExpVec> standard(D.begin(), D.end());
      if (!isRingClosedGivenStandard(ideal, spec, standard)) return;
    }
    ++stats.emitted;
    if (!fn(ideal, static_cast<int64_t>(D.size()))) stop = true;
  }

  void grow(const ExpVec& last) {
    if (stop || static_cast<int>(D.size()) >= maxB) return;
    // Children: frontier elements after `last` in the linear extension.
    const std::vector<ExpVec> snapshot = frontier;
    for (const ExpVec& c : snapshot) {
      if (gradedLexCompare(c, last) <= 0) continue;
      if (stop) return;

      D.insert(c);
      std::vector<ExpVec> added;
      std::vector<ExpVec> removedFrom = frontier;
      frontier.erase(std::remove(frontier.begin(), frontier.end(), c),
                     frontier.end());
      for (int i = 0; i < poset.dim; ++i) {
        ExpVec w = c;
        if (!poset.stepUp(w, i)) continue;
        bool allPredsIn = true;
        for (int j = 0; j < poset.dim && allPredsIn; ++j) {
          ExpVec u = w;
          if (!poset.stepDown(u, j)) continue;
          if (!D.count(u)) allPredsIn = false;
        }
        if (allPredsIn) {
          frontier.push_back(w);
          added.push_back(w);
        }
      }
      std::sort(frontier.begin(), frontier.end(),
                [](const ExpVec& a, const ExpVec& b) {
                  return gradedLexCompare(a, b) < 0;
                });

      emit();
      grow(c);

      frontier = removedFrom;
      D.erase(c);
    }
  }

  void run() {
    D.insert(ExpVec(poset.dim, 0));
    for (int i = 0; i < poset.dim; ++i) {
      ExpVec w(poset.dim, 0);
      if (poset.stepUp(w, i)) frontier.push_back(w);
    }
    std::sort(frontier.begin(), frontier.end(),
              [](const ExpVec& a, const ExpVec& b) {
                return gradedLexCompare(a, b) < 0;
              });
    emit();  // the maximal ideal
    grow(ExpVec(poset.dim, 0));
  }
};

}  // namespace

EnumStats enumerateIdeals(
    const RingSpec& spec, int maxColength, const EnumOptions& opts,
    const std::function<bool(const MonomialIdeal&, int64_t)>& fn) {
  if (maxColength < 1) throw InputError("enumeration budget must be >= 1");
  Walker w{spec, maxColength, opts, fn, Poset{spec, spec.totalCoords()}, {}, false, {}, {}};
  w.run();
  return w.stats;
}

}  // namespace lechlab
