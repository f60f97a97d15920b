#include "lechlab/series.hpp"

#include <sstream>

#include "lechlab/errors.hpp"

namespace lechlab {

Poly Poly::oneMinusT() { return Poly{{Rat(1), Rat(-1)}}; }

Poly Poly::geometric(int len) {
  Poly p;
  p.c.assign(len, Rat(1));
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Rat Poly::valueAt1() const {
  Rat r = 0;
  for (const Rat& v : c) r += v;
  return r;
}

Poly Poly::derivative() const {
  Poly p;
  for (size_t i = 1; i < c.size(); ++i) p.c.push_back(Rat(BigInt(i)) * c[i]);
  return p;
}

Poly Poly::divideByOneMinusT() const {
  if (valueAt1() != 0)
    throw InputError("polynomial is not divisible by (1 - t)");
  // p(t) = (1 - t) q(t): q_0 = p_0, q_i = p_i + q_{i-1}.
  Poly q;
  if (c.empty()) return q;
  q.c.resize(c.size() - 1);
  Rat acc = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    acc += at(i);
    q.c[i] = acc;
  }
  q.trim();
  return q;
}

std::vector<Rat> Poly::oneMinusTBasis() const {
  // Taylor expansion at t = 1 with alternating signs:
  // a_i = (-1)^i p^{(i)}(1) / i!.
  std::vector<Rat> a;
  Poly p = *this;
  BigInt fact = 1;
  for (int i = 0; static_cast<size_t>(i) <= c.size(); ++i) {
    if (i > 0) {
      p = p.derivative();
      fact *= i;
    }
    Rat v = p.valueAt1() / Rat(fact);
    if (i % 2) v = -v;
    a.push_back(v);
    if (p.c.empty()) break;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly operator*(const Rat& s, const Poly& a) {
  Poly r = a;
  for (Rat& v : r.c) v *= s;
  r.trim();
  return r;
}

Rat RatFn::evalAt1Safe() const {
  const Rat dv = den.valueAt1();
  if (dv == 0) throw InputError("rational function has a pole at t = 1");
  return num.valueAt1() / dv;
}

SeriesSpec SeriesSpec::explicitSeries(std::vector<int64_t> inc, TailKind tail,
                                      int64_t p0, int64_t p1, int d, Rat A) {
  if (inc.empty() || inc[0] < 1)
    throw InputError("explicit series needs l_0 >= 1");
  for (int64_t v : inc)
    if (v < 0) throw InputError("negative series increment");
  SeriesSpec s;
  s.kind = Kind::Explicit;
  s.inc = std::move(inc);
  s.tail = tail;
  if (tail == TailKind::Constant) s.tailC = p0;
  if (tail == TailKind::Linear) { s.tailA = p0; s.tailB = p1; }
  s.d = d;
  s.A = std::move(A);
  return s;
}

SeriesSpec SeriesSpec::completeIntersection(int n, std::vector<int> degrees) {
  if (n < 1) throw InputError("complete intersection needs n >= 1");
  const int c = static_cast<int>(degrees.size());
  if (c >= n) throw InputError("complete intersection needs fewer equations than variables");
  for (int D : degrees)
    if (D < 1) throw InputError("degrees must be positive");
  SeriesSpec s;
  s.kind = Kind::CompleteIntersection;
  s.ciVars = n;
  s.ciDegrees = std::move(degrees);
  s.d = n - c;
  Rat A = 1;
  for (int D : s.ciDegrees) A *= D;
  s.A = A;
  return s;
}

SeriesSpec SeriesSpec::rationalFunction(Poly num, Poly den, int d,
                                        std::optional<Rat> A) {
  if (den.c.empty()) throw InputError("rational series needs a denominator");
  SeriesSpec s;
  s.kind = Kind::RationalFunction;
  s.num = std::move(num);
  s.den = std::move(den);
  s.d = d;
  if (A) {
    s.A = *A;
  } else {
    // A = f(1) for f(t) = h(t) (1-t)^d, after exact cancellation.
    Poly P = s.num;
    for (int i = 0; i < d; ++i) P = P * Poly::oneMinusT();
    Poly Q = s.den;
    while (P.valueAt1() == 0 && Q.valueAt1() == 0) {
      P = P.divideByOneMinusT();
      Q = Q.divideByOneMinusT();
    }
    if (Q.valueAt1() == 0)
      throw InputError("series pole order exceeds the dimension");
    s.A = P.valueAt1() / Q.valueAt1();
  }
  return s;
}

RatFn SeriesSpec::toRatFn() const {
  switch (kind) {
    case Kind::RationalFunction:
      return RatFn{num, den};
    case Kind::CompleteIntersection: {
      Poly n = Poly::constant(1);
      for (int D : ciDegrees) {
        Poly f = Poly::constant(1) - [&] {
          Poly t;
          t.c.assign(D + 1, Rat(0));
          t.c[D] = 1;
          return t;
        }();
        n = n * f;
      }
      Poly d = Poly::constant(1);
      for (int i = 0; i < ciVars; ++i) d = d * Poly::oneMinusT();
      return RatFn{n, d};
    }
    case Kind::Explicit: {
      Poly head;
      head.c.assign(inc.begin(), inc.end());
      const int64_t T = static_cast<int64_t>(inc.size()) - 1;
      Poly tPow;  // t^{T+1}
      tPow.c.assign(T + 2, Rat(0));
      tPow.c[T + 1] = 1;
      switch (tail) {
        case TailKind::Zero:
          return RatFn{head, Poly::constant(1)};
        case TailKind::Constant: {
          // head + c t^{T+1} / (1-t)
          Poly num = head * Poly::oneMinusT() + Rat(tailC) * tPow;
          return RatFn{num, Poly::oneMinusT()};
        }
        case TailKind::Linear: {
          // head + a sum_{j>T} j t^j + b sum_{j>T} t^j
          // sum_{j>T} t^j   = t^{T+1} / (1-t)
          // sum_{j>T} j t^j = ((T+1) t^{T+1} - T t^{T+2}) / (1-t)^2
          Poly sq = Poly::oneMinusT() * Poly::oneMinusT();
          Poly tPow2;  // t^{T+2}
          tPow2.c.assign(T + 3, Rat(0));
          tPow2.c[T + 2] = 1;
          Poly num = head * sq +
                     Rat(tailA) * (Rat(BigInt(T + 1)) * tPow - Rat(BigInt(T)) * tPow2) +
                     Rat(tailB) * (tPow * Poly::oneMinusT());
          return RatFn{num, sq};
        }
      }
      throw InputError("unhandled tail kind");
    }
  }
  throw InputError("unhandled series kind");
}

namespace {

std::vector<Rat> parseRatList(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t slash = item.find('/');
    if (slash == std::string::npos)
      out.emplace_back(BigInt(item));
    else
      out.emplace_back(BigInt(item.substr(0, slash)),
                       BigInt(item.substr(slash + 1)));
  }
  return out;
}

std::vector<int64_t> parseIntList(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

}  // namespace

SeriesSpec SeriesSpec::parse(const std::string& text, std::optional<int> dim,
                             std::optional<Rat> A) {
  if (text.rfind("ci:", 0) == 0) {
    const size_t colon = text.find(':', 3);
    if (colon == std::string::npos)
      throw InputError("malformed complete-intersection series");
    const int n = std::stoi(text.substr(3, colon - 3));
    std::vector<int> degrees;
    for (int64_t v : parseIntList(text.substr(colon + 1)))
      degrees.push_back(static_cast<int>(v));
    return completeIntersection(n, std::move(degrees));
  }
  if (text.rfind("explicit:", 0) == 0) {
    std::string body = text.substr(9);
    TailKind tail = TailKind::Zero;
    int64_t p0 = 0, p1 = 0;
    const size_t semi = body.find(';');
    if (semi != std::string::npos) {
      std::string t = body.substr(semi + 1);
      body = body.substr(0, semi);
      if (t.rfind("tail=const:", 0) == 0) {
        tail = TailKind::Constant;
        p0 = std::stoll(t.substr(11));
      } else if (t.rfind("tail=linear:", 0) == 0) {
        const auto ab = parseIntList(t.substr(12));
        if (ab.size() != 2) throw InputError("linear tail needs a,b");
        tail = TailKind::Linear;
        p0 = ab[0];
        p1 = ab[1];
      } else if (t == "tail=zero") {
        tail = TailKind::Zero;
      } else {
        throw InputError("unknown tail rule: " + t);
      }
    }
    if (!dim || !A)
      throw InputError("explicit series needs the dimension and A");
    return explicitSeries(parseIntList(body), tail, p0, p1, *dim, *A);
  }
  if (text.rfind("ratfn:", 0) == 0) {
    const std::string body = text.substr(6);
    const size_t slash = body.find('/');
    if (slash == std::string::npos)
      throw InputError("ratfn series needs num/den coefficient lists");
    Poly num, den;
    num.c = parseRatList(body.substr(0, slash));
    den.c = parseRatList(body.substr(slash + 1));
    if (!dim) throw InputError("ratfn series needs the dimension");
    return rationalFunction(std::move(num), std::move(den), *dim, A);
  }
  throw InputError("unknown series spec: " + text);
}

std::string SeriesSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::CompleteIntersection:
      os << "ci:" << ciVars << ':';
      for (size_t i = 0; i < ciDegrees.size(); ++i) {
        if (i) os << ',';
        os << ciDegrees[i];
      }
      break;
    case Kind::Explicit:
      os << "explicit:";
      for (size_t i = 0; i < inc.size(); ++i) {
        if (i) os << ',';
        os << inc[i];
      }
      if (tail == TailKind::Constant) os << ";tail=const:" << tailC;
      if (tail == TailKind::Linear)
        os << ";tail=linear:" << tailA << ',' << tailB;
      if (tail == TailKind::Zero) os << ";tail=zero";
      break;
    case Kind::RationalFunction:
      os << "ratfn:";
      for (size_t i = 0; i < num.c.size(); ++i) {
        if (i) os << ',';
        os << ratStr(num.c[i]);
      }
      os << '/';
      for (size_t i = 0; i < den.c.size(); ++i) {
        if (i) os << ',';
        os << ratStr(den.c[i]);
      }
      break;
  }
  return os.str();
}

}  // namespace lechlab
