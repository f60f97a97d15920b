#include "lechlab/format.hpp"

#include <sstream>

#include "lechlab/errors.hpp"

namespace lechlab {

namespace {
std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}
}  // namespace

MonomialIdeal parseIdeal(const std::string& text, const RingSpec& spec) {
  const int dim = spec.totalCoords();
  const std::string body = strip(text);
  if (body.empty() || body == "0") return MonomialIdeal::zero(dim);
  if (body == "1") return MonomialIdeal::unit(dim);

  std::vector<ExpVec> gens;
  std::stringstream ss(body);
  std::string genTok;
  while (std::getline(ss, genTok, ',')) {
    genTok = strip(genTok);
    if (genTok.empty()) throw InputError("empty generator in ideal string");
    ExpVec v(dim, 0);
    if (genTok == "1") {
      gens.push_back(v);
      continue;
    }
    std::stringstream gs(genTok);
    std::string factor;
    while (std::getline(gs, factor, '*')) {
      factor = strip(factor);
      const size_t caret = factor.find('^');
      std::string name = strip(caret == std::string::npos ? factor
                                                          : factor.substr(0, caret));
      int64_t exp = 1;
      if (caret != std::string::npos) {
        const std::string etxt = strip(factor.substr(caret + 1));
        try {
          exp = std::stoll(etxt);
        } catch (const std::exception&) {
          throw InputError("bad exponent in monomial: " + factor);
        }
      }
      if (exp < 0) throw InputError("negative exponent in monomial: " + factor);
      const int idx = spec.varIndex(name);
      if (idx < 0)
        throw InputError("unknown variable '" + name + "' for ring " + spec.str());
      v[idx] = static_cast<Exp>(v[idx] + exp);
    }
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(dim, std::move(gens));
}

std::string printMonomial(const ExpVec& v, const RingSpec& spec) {
  const auto names = spec.varNames();
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (any) os << '*';
    os << names[i];
    if (v[i] != 1) os << '^' << v[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::string printIdeal(const MonomialIdeal& I, const RingSpec& spec) {
  if (I.isZero()) return "0";
  std::ostringstream os;
  for (size_t j = 0; j < I.gens.size(); ++j) {
    if (j) os << ", ";
    os << printMonomial(I.gens[j], spec);
  }
  return os.str();
}

}  // namespace lechlab
