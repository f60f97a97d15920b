#ifndef LECHLAB_MONOMIAL_IDEAL_HPP
#define LECHLAB_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lechlab/exponents.hpp"

namespace lechlab {

/// A monomial ideal held in canonical form: the minimal generating
/// antichain under componentwise <=, sorted in descending lex order.
/// Two ideals are equal exactly when their canonical forms are equal.
/// Empty gens is the zero ideal; the single generator (0,...,0) is the
/// unit ideal. Immutable value type.
struct MonomialIdeal {
  int dim = 0;
  std::vector<ExpVec> gens;

  /// Canonicalizes: drops generators divisible by another, dedups, sorts.
  /// Throws InputError on a dimension mismatch or negative exponent.
  static MonomialIdeal make(int dim, std::vector<ExpVec> gens);

  static MonomialIdeal zero(int dim) { return MonomialIdeal{dim, {}}; }
  static MonomialIdeal unit(int dim);
  static MonomialIdeal maximal(int dim);

  bool isZero() const { return gens.empty(); }
  bool isUnit() const;

  /// Membership of a single monomial, by plain domination.
  bool contains(const ExpVec& v) const;
  /// Ideal containment: other subseteq this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

  /// Per-coordinate maxima over generators (the candidate bounding box).
  ExpVec generatorBox() const;

  /// Raw dump "d:[e e e|...]" used for memo keys; not the CLI grammar.
  std::string rawKey() const;
};

/// Total order on ideals of equal dimension, used for deterministic
/// tie-breaking: lexicographic over the canonical generator lists.
bool idealLexLess(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal idealSum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal idealProduct(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal idealPower(const MonomialIdeal& a, int64_t n);

/// True iff every coordinate has a generator supported only on it,
/// i.e. the ideal is primary to the maximal ideal.
bool isFiniteColength(const MonomialIdeal& I);

/// Exact count of lattice points v >= 0 with x^v not in I, enumerated
/// inside the generator bounding box. Throws InputError when the
/// colength is infinite, ResourceError when the box exceeds the cap.
int64_t colength(const MonomialIdeal& I);

/// Image of I in the quotient by the coordinates in `vars` (0-based,
/// distinct): keep generators supported off `vars`, delete those
/// coordinates, canonicalize in dimension dim - |vars|.
MonomialIdeal restrictModuloVars(const MonomialIdeal& I, std::vector<int> vars);

}  // namespace lechlab

#endif
