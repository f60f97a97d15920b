#ifndef LECHLAB_SERIES_HPP
#define LECHLAB_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lechlab/rational.hpp"

namespace lechlab {

/// Dense polynomial over the rationals, ascending coefficients.
struct Poly {
  std::vector<Rat> c;

  static Poly zero() { return {}; }
  static Poly constant(const Rat& v) { return Poly{{v}}; }
  static Poly oneMinusT();
  static Poly geometric(int len);  // 1 + t + ... + t^{len-1}

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat at(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
  Rat eval(const Rat& x) const;
  Rat valueAt1() const;
  Poly derivative() const;
  void trim();

  /// Exact division by (1 - t); requires valueAt1() == 0.
  Poly divideByOneMinusT() const;

  /// Coefficients a_i with p(t) = sum a_i (1-t)^i, exact.
  std::vector<Rat> oneMinusTBasis() const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

struct RatFn {
  Poly num, den;
  Rat evalAt1Safe() const;  // requires den(1) != 0
};

enum class TailKind { Zero, Constant, Linear };

/// A graded-family length series sum l_j t^j, given as explicit
/// increments with a tail rule, as the complete-intersection series
/// prod (1 - t^{D_i}) / (1 - t)^n, or as a rational function.
struct SeriesSpec {
  enum class Kind { Explicit, CompleteIntersection, RationalFunction } kind =
      Kind::Explicit;

  // Explicit
  std::vector<int64_t> inc;
  TailKind tail = TailKind::Zero;
  int64_t tailC = 0;             // Constant(c)
  int64_t tailA = 0, tailB = 0;  // Linear(a, b): l_j = a j + b

  // CompleteIntersection
  int ciVars = 0;
  std::vector<int> ciDegrees;

  // RationalFunction
  Poly num, den;

  int d = 1;   // dimension
  Rat A = 1;   // leading normalization

  static SeriesSpec explicitSeries(std::vector<int64_t> inc, TailKind tail,
                                   int64_t p0, int64_t p1, int d, Rat A);
  static SeriesSpec completeIntersection(int n, std::vector<int> degrees);
  static SeriesSpec rationalFunction(Poly num, Poly den, int d,
                                     std::optional<Rat> A = std::nullopt);

  /// The series as an exact rational function h(t).
  RatFn toRatFn() const;

  /// Grammar: ci:n:D1,D2,... | explicit:l0,l1,...;tail=const:c (also
  /// tail=linear:a,b | tail=zero) | ratfn:c0,c1,../d0,d1,..
  /// Explicit and ratfn forms take the dimension (and the explicit form
  /// the normalization A) from the optional arguments.
  static SeriesSpec parse(const std::string& text, std::optional<int> dim,
                          std::optional<Rat> A);
  std::string str() const;
};

}  // namespace lechlab

#endif
