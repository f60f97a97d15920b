#include "lechlab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "lechlab/errors.hpp"

namespace lechlab {

namespace {

long double ratLd(const Rat& r) {
  return numerator(r).convert_to<long double>() /
         denominator(r).convert_to<long double>();
}

// sum_j l_j e^{-jx}, closed-form tails, computed in long double with
// 1 - e^{-x} = -expm1(-x) to stay stable near x = 0.
long double seriesValue(const SeriesSpec& s, long double x) {
  const long double q = std::exp(-x);
  const long double u = -std::expm1(-x);  // 1 - q
  switch (s.kind) {
    case SeriesSpec::Kind::CompleteIntersection: {
      long double num = 1.0L;
      for (int D : s.ciDegrees) num *= -std::expm1(-D * x);
      long double den = 1.0L;
      for (int i = 0; i < s.ciVars; ++i) den *= u;
      return num / den;
    }
    case SeriesSpec::Kind::Explicit: {
      long double head = 0.0L, qj = 1.0L;
      for (size_t j = 0; j < s.inc.size(); ++j) {
        head += s.inc[j] * qj;
        qj *= q;
      }
      const long double qT1 = qj;  // q^{T+1}
      const int64_t T = static_cast<int64_t>(s.inc.size()) - 1;
      switch (s.tail) {
        case TailKind::Zero:
          return head;
        case TailKind::Constant:
          return head + s.tailC * qT1 / u;
        case TailKind::Linear:
          return head + s.tailA * ((T + 1) * qT1 - T * qT1 * q) / (u * u) +
                 s.tailB * qT1 / u;
      }
      return head;
    }
    case SeriesSpec::Kind::RationalFunction: {
      // evaluate in the (1-t) basis to avoid cancellation at q -> 1
      std::vector<long double> numB, denB;
      for (const Rat& a : s.num.oneMinusTBasis()) numB.push_back(ratLd(a));
      for (const Rat& a : s.den.oneMinusTBasis()) denB.push_back(ratLd(a));
      long double nv = 0.0L, dv = 0.0L, p = 1.0L;
      for (size_t i = 0; i < std::max(numB.size(), denB.size()); ++i) {
        if (i < numB.size()) nv += numB[i] * p;
        if (i < denB.size()) dv += denB[i] * p;
        p *= u;
      }
      return nv / dv;
    }
  }
  throw InputError("unhandled series kind");
}

constexpr double kGridLo = 1e-4;
constexpr double kGridHi = 50.0;
constexpr int kGridPoints = 400;
constexpr double kGoldenTol = 1e-8;

MaxResult goldenRefine(const std::function<double(double)>& f, double lo,
                       double hi, double seedX, double seedV) {
  const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - invPhi * (b - a);
  double x2 = a + invPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  MaxResult best{seedX, seedV};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > kGoldenTol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invPhi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invPhi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    }
  }
  return best;
}

}  // namespace

double evalBound(const SeriesSpec& series, double x) {
  if (x <= 0) throw InputError("the bound is evaluated at x > 0");
  const long double S = seriesValue(series, x);
  const long double A = ratLd(series.A);
  return static_cast<double>(A / (std::pow((long double)x, series.d) * S));
}

MaxResult maximizeFunction(const std::function<double(double)>& f) {
  MaxResult best{kGridLo, f(kGridLo)};
  std::vector<double> xs(kGridPoints);
  const double llo = std::log(kGridLo), lhi = std::log(kGridHi);
  int bestIdx = 0;
  for (int i = 0; i < kGridPoints; ++i) {
    xs[i] = std::exp(llo + (lhi - llo) * i / (kGridPoints - 1));
    const double v = f(xs[i]);
    if (v > best.value) {
      best = {xs[i], v};
      bestIdx = i;
    }
  }
  const double lo = xs[std::max(0, bestIdx - 1)];
  const double hi = xs[std::min(kGridPoints - 1, bestIdx + 1)];
  return goldenRefine(f, lo, hi, best.xStar, best.value);
}

MaxResult maximizeBound(const SeriesSpec& series) {
  return maximizeFunction([&](double x) { return evalBound(series, x); });
}

double largeMultThreshold(int d) {
  if (d < 2) throw InputError("threshold needs dimension >= 2");
  auto supAbove1 = [&](double B) {
    auto f = [&](double x) {
      const long double u = -std::expm1(-x);
      long double ud = 1.0L;
      for (int i = 0; i < d; ++i) ud *= u;
      const long double den =
          std::pow((long double)x, d) * (u / B + std::exp((long double)-x));
      return static_cast<double>(ud / den);
    };
    return maximizeFunction(f).value > 1.0;
  };
  double lo = 1.0, hi = 2.0;
  while (!supAbove1(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > 1e9) throw ResourceError("threshold bisection failed to bracket");
  }
  double fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  while ((hi - lo) / fact > 5e-4) {
    const double mid = (lo + hi) / 2;
    if (supAbove1(mid)) hi = mid;
    else lo = mid;
  }
  return (lo + hi) / 2 / fact;
}

DerivativeCriterion derivativeCriterion(const SeriesSpec& series) {
  const RatFn h = series.toRatFn();
  Poly P = h.num;
  for (int i = 0; i < series.d; ++i) P = P * Poly::oneMinusT();
  Poly Q = h.den;
  while (P.valueAt1() == 0 && Q.valueAt1() == 0) {
    P = P.divideByOneMinusT();
    Q = Q.divideByOneMinusT();
  }
  if (Q.valueAt1() == 0)
    throw InputError("series pole order exceeds the dimension");
  if (P.valueAt1() == 0)
    throw InputError("malformed series: f(1) = 0 after cancellation");
  const Rat q1 = Q.valueAt1();
  DerivativeCriterion out;
  out.f1 = P.valueAt1() / q1;
  out.fp1 = (P.derivative().valueAt1() * q1 -
             P.valueAt1() * Q.derivative().valueAt1()) /
            (q1 * q1);
  out.limUnstable = 2 * out.fp1 > Rat(series.d) * out.f1;
  return out;
}

Rat quasiSecondCoeff(const Rat& A, const std::vector<Rat>& B, int rho, int d) {
  if (rho < 1 || static_cast<int>(B.size()) != rho)
    throw InputError("quasi coefficient needs rho >= 1 periodic values");
  Rat sumB = 0;
  for (const Rat& b : B) sumB += b;
  BigInt rpow = 1;
  for (int i = 0; i + 1 < d; ++i) rpow *= rho;
  const Rat closed = -(Rat(d, 2) * A + sumB / rho) / Rat(rpow);

  // Symbolic route: f(T) = (A + (1-T) sum B_h T^h) / sigma(T)^d with
  // sigma = 1 + ... + T^{rho-1}; compare f'(1) - (d/2) f(1).
  Poly bpoly;
  bpoly.c = B;
  Poly P = Poly::constant(A) + Poly::oneMinusT() * bpoly;
  Poly Q = Poly::constant(1);
  const Poly sigma = Poly::geometric(rho);
  for (int i = 0; i < d; ++i) Q = Q * sigma;
  const Rat q1 = Q.valueAt1();
  const Rat f1 = P.valueAt1() / q1;
  const Rat fp1 = (P.derivative().valueAt1() * q1 -
                   P.valueAt1() * Q.derivative().valueAt1()) /
                  (q1 * q1);
  const Rat symbolic = fp1 - Rat(d, 2) * f1;
  if (symbolic != closed)
    throw std::logic_error("quasi-coefficient routes disagree");
  return closed;
}

}  // namespace lechlab
