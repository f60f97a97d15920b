#ifndef LECHLAB_BOUNDS_HPP
#define LECHLAB_BOUNDS_HPP

#include <functional>

#include "lechlab/rational.hpp"
#include "lechlab/series.hpp"

namespace lechlab {

/// The exponential lower bound A / (x^d sum_j l_j e^{-jx}) attached to a
/// length series, evaluated with closed-form tails. x > 0.
double evalBound(const SeriesSpec& series, double x);

struct MaxResult {
  double xStar = 0;
  double value = 0;
};

/// Log-spaced grid over (1e-4, 50] followed by golden-section
/// refinement; the result is an evaluation, hence a certified lower
/// bound for the supremum.
MaxResult maximizeBound(const SeriesSpec& series);

/// Generic variant for the threshold searches.
MaxResult maximizeFunction(const std::function<double(double)>& f);

/// The multiplicity threshold C(d): the infimum over B of B/d! such
/// that sup_x (1-e^{-x})^d / (x^d ((1-e^{-x})/B + e^{-x})) exceeds 1.
/// Bisection to absolute precision 1e-3 on the returned value. d >= 2.
double largeMultThreshold(int d);

struct DerivativeCriterion {
  Rat f1, fp1;
  bool limUnstable = false;  // fp1 > (d/2) f1
};

/// Exact f(1), f'(1) of the cleared series numerator f(t) = h(t)(1-t)^d
/// and the instability test 2 f'(1) > d f(1).
DerivativeCriterion derivativeCriterion(const SeriesSpec& series);

/// Closed form -(1/rho^{d-1}) ((d/2) A + (1/rho) sum_h B(h)) for
/// f'(1) - (d/2) f(1) of the quasi-polynomial generating function with
/// leading constant A and periodic second coefficients B; cross-checked
/// internally against the symbolic route.
Rat quasiSecondCoeff(const Rat& A, const std::vector<Rat>& B, int rho, int d);

}  // namespace lechlab

#endif
