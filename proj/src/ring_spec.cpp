#include "lechlab/ring_spec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lechlab/errors.hpp"

namespace lechlab {

namespace {
const char* kBaseNames[] = {"x", "y", "z", "t", "T", "U", "V"};
const char* kSeriesNames[] = {"T", "U", "V", "W"};
}

RingSpec RingSpec::poly(int d) {
  if (d < 1) throw InputError("polynomial ring needs at least one variable");
  RingSpec s;
  s.kind = RingKind::Poly;
  s.baseCoords = d;
  return s;
}

RingSpec RingSpec::arrangement(int d, std::vector<std::vector<int>> primes) {
  if (d < 1) throw InputError("arrangement needs at least one variable");
  if (primes.empty()) throw InputError("arrangement needs at least one prime");
  std::set<std::vector<int>> seen;
  for (auto& p : primes) {
    std::sort(p.begin(), p.end());
    if (p.empty()) throw InputError("empty coordinate prime");
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw InputError("repeated coordinate in a prime");
    for (int c : p)
      if (c < 0 || c >= d) throw InputError("prime coordinate out of range");
    if (!seen.insert(p).second) throw InputError("repeated prime");
  }
  // pairwise incomparable
  for (size_t i = 0; i < primes.size(); ++i)
    for (size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      if (std::includes(primes[i].begin(), primes[i].end(), primes[j].begin(),
                        primes[j].end()))
        throw InputError("arrangement primes must be incomparable");
    }
  RingSpec s;
  s.kind = RingKind::Arrangement;
  s.baseCoords = d;
  s.primes = std::move(primes);
  return s;
}

RingSpec RingSpec::cusp(int freeVars) {
  if (freeVars < 0 || freeVars > 3)
    throw InputError("cusp ring supports 0..3 free variables");
  RingSpec s;
  s.kind = RingKind::Cusp;
  s.baseCoords = 1 + freeVars;
  return s;
}

RingSpec RingSpec::withAdjoined(int r) const {
  if (r < 0) throw InputError("negative adjoined count");
  RingSpec s = *this;
  s.adjoined += r;
  return s;
}

RingSpec RingSpec::ellipticCone(int n) {
  if (n < 3) throw InputError("elliptic polygonal cone needs n >= 3");
  std::vector<std::vector<int>> primes;
  for (int i = 0; i < n; ++i) {
    std::vector<int> p;
    for (int k = 0; k < n - 2; ++k) p.push_back((i + k) % n);
    primes.push_back(std::move(p));
  }
  return arrangement(n, std::move(primes));
}

RingSpec RingSpec::rationalCone(int n) {
  if (n < 2) throw InputError("rational polygonal cone needs n >= 2");
  std::vector<std::vector<int>> primes;
  for (int i = 0; i < n; ++i) {
    std::vector<int> p;
    for (int k = 0; k < n - 1; ++k) p.push_back((i + k) % (n + 1));
    primes.push_back(std::move(p));
  }
  return arrangement(n + 1, std::move(primes));
}

int RingSpec::minPrimeSize() const {
  if (kind != RingKind::Arrangement) return 0;
  size_t best = primes[0].size();
  for (const auto& p : primes) best = std::min(best, p.size());
  return static_cast<int>(best);
}

int RingSpec::krullDim() const {
  switch (kind) {
    case RingKind::Poly: return baseCoords + adjoined;
    case RingKind::Arrangement: return baseCoords - minPrimeSize() + adjoined;
    case RingKind::Cusp: return baseCoords + adjoined;  // 1 + freeVars + r
  }
  return 0;
}

bool RingSpec::isRingMonomial(const ExpVec& v) const {
  switch (kind) {
    case RingKind::Poly:
      return true;
    case RingKind::Cusp:
      return v[0] != 1;
    case RingKind::Arrangement: {
      for (const auto& p : primes) {
        bool misses = true;
        for (int c : p)
          if (v[c] != 0) { misses = false; break; }
        if (misses) return true;
      }
      return false;
    }
  }
  return false;
}

std::vector<std::string> RingSpec::varNames() const {
  std::vector<std::string> names;
  if (kind == RingKind::Cusp) {
    names.push_back("t");
    const char* frees[] = {"x", "y", "z"};
    for (int i = 0; i + 1 < baseCoords; ++i) names.push_back(frees[i]);
  } else if (baseCoords <= 7) {
    for (int i = 0; i < baseCoords; ++i) names.push_back(kBaseNames[i]);
  } else {
    for (int i = 0; i < baseCoords; ++i) names.push_back("x" + std::to_string(i));
  }
  auto used = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  int srcIdx = 0;
  for (int i = 0; i < adjoined; ++i) {
    std::string pick;
    while (srcIdx < 4 && used(kSeriesNames[srcIdx])) ++srcIdx;
    if (srcIdx < 4)
      pick = kSeriesNames[srcIdx++];
    else
      pick = "x" + std::to_string(baseCoords + i);
    names.push_back(pick);
  }
  return names;
}

int RingSpec::varIndex(const std::string& name) const {
  const auto names = varNames();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  if (name.size() >= 2 && name[0] == 'x') {
    bool digits = true;
    for (size_t i = 1; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) {
      const int idx = std::stoi(name.substr(1));
      if (idx >= 0 && idx < totalCoords()) return idx;
    }
  }
  return -1;
}

std::string RingSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case RingKind::Poly:
      os << "poly:" << baseCoords;
      break;
    case RingKind::Cusp:
      os << "cusp+" << (baseCoords - 1);
      break;
    case RingKind::Arrangement: {
      os << "arr:" << baseCoords << ":[";
      const auto names = varNames();
      for (size_t i = 0; i < primes.size(); ++i) {
        if (i) os << '|';
        for (size_t j = 0; j < primes[i].size(); ++j) {
          if (j) os << ',';
          os << names[primes[i][j]];
        }
      }
      os << ']';
      break;
    }
  }
  if (adjoined > 0) os << "+T:" << adjoined;
  return os.str();
}

RingSpec RingSpec::parse(const std::string& text) {
  std::string body = text;
  int adj = 0;
  const size_t tpos = body.rfind("+T:");
  if (tpos != std::string::npos) {
    adj = std::stoi(body.substr(tpos + 3));
    body = body.substr(0, tpos);
  }
  RingSpec s;
  if (body.rfind("poly:", 0) == 0) {
    s = poly(std::stoi(body.substr(5)));
  } else if (body.rfind("cusp+", 0) == 0) {
    s = cusp(std::stoi(body.substr(5)));
  } else if (body.rfind("arr:", 0) == 0) {
    const size_t colon = body.find(':', 4);
    if (colon == std::string::npos) throw InputError("malformed arrangement spec");
    const int d = std::stoi(body.substr(4, colon - 4));
    std::string rest = body.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
      throw InputError("malformed arrangement prime list");
    rest = rest.substr(1, rest.size() - 2);
    const RingSpec plain = poly(d);
    std::vector<std::vector<int>> primes;
    std::stringstream ss(rest);
    std::string part;
    while (std::getline(ss, part, '|')) {
      std::vector<int> p;
      std::stringstream ps(part);
      std::string var;
      while (std::getline(ps, var, ',')) {
        var.erase(remove_if(var.begin(), var.end(), ::isspace), var.end());
        const int idx = plain.varIndex(var);
        if (idx < 0 || idx >= d)
          throw InputError("unknown variable in arrangement prime: " + var);
        p.push_back(idx);
      }
      primes.push_back(std::move(p));
    }
    s = arrangement(d, std::move(primes));
  } else {
    throw InputError("unknown ring spec: " + text);
  }
  return adj > 0 ? s.withAdjoined(adj) : s;
}

}  // namespace lechlab
