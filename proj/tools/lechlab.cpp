// lechlab: exact staircase arithmetic, multiplicities, Lech-type
// inequality checking, and asymptotic bound optimization for monomial
// ideals in power-series rings and their monomial quotients.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lechlab/adjoin.hpp"
#include "lechlab/bounds.hpp"
#include "lechlab/errors.hpp"
#include "lechlab/families.hpp"
#include "lechlab/format.hpp"
#include "lechlab/hilbert.hpp"
#include "lechlab/inequalities.hpp"
#include "lechlab/kernel.hpp"
#include "lechlab/lm_search.hpp"
#include "lechlab/mixed.hpp"
#include "lechlab/newton.hpp"
#include "lechlab/rees.hpp"
#include "lechlab/ring_ops.hpp"

using json = nlohmann::ordered_json;
using namespace lechlab;

namespace {

constexpr const char* kVersion = "lechlab 1.0.0";

Rat parseRat(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(BigInt(text));
  return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

struct Output {
  bool asJson = false;
  std::string manifestPath;  // empty: manifest goes to stderr
  std::string commandEcho;
  uint64_t seed = 0;
  json inputs = json::object();
  json result;
  std::optional<std::string> certificate;
  std::string humanText;
  double wallMs = 0;

  void finish(const std::string& op) {
    json body;
    body["op"] = op;
    body["inputs"] = inputs;
    body["result"] = result;
    if (certificate) body["certificate"] = *certificate;
    const std::string payloadText = asJson ? body.dump() : humanText;
    std::cout << payloadText << "\n";

    json manifest;
    manifest["toolVersion"] = kVersion;
    manifest["command"] = commandEcho;
    manifest["inputs"] = inputs;
    manifest["seed"] = seed;
    manifest["wallMs"] = wallMs;
    manifest["payload"] = payloadText;
    if (manifestPath.empty()) {
      std::cerr << manifest.dump() << "\n";
    } else {
      std::ofstream f(manifestPath);
      f << manifest.dump() << "\n";
    }
  }
};

json ratJson(const Rat& r) { return ratStr(r); }

json profileJson(const HSProfile& p) {
  json j;
  j["lengths"] = p.lengths;
  j["multiplicity"] = p.multiplicity;
  j["e1"] = p.e1;
  j["stabilized"] = p.stabilized;
  return j;
}

json reportJson(const VerificationReport& r) {
  json j;
  j["inequality"] = r.id;
  j["lhs"] = ratJson(r.lhs);
  j["rhs"] = ratJson(r.rhs);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["slack"] = ratJson(r.slack);
  if (r.autoClosed) j["autoClosed"] = true;
  if (!r.details.empty()) {
    json d = json::object();
    for (const auto& [k, v] : r.details) d[k] = ratJson(v);
    j["details"] = d;
  }
  return j;
}

std::string defaultHuntRing(Ineq id) {
  switch (id) {
    case Ineq::Lech:
    case Ineq::Mumford2D:
      return "poly:2";
    case Ineq::Optimal3D:
    case Ineq::Skew3D:
    case Ineq::WeakInclExcl:
    case Ineq::InclExclDiluted:
    case Ineq::HsvCoord:
      return "poly:3";
    case Ineq::BestLechConj:
      return "poly:4";
    case Ineq::SncSemistable:
      return "arr:3:[x|y|z]+T:1";
    case Ineq::ConeSemistable:
      return RingSpec::ellipticCone(6).withAdjoined(1).str();
    default:
      return "poly:2";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicities, Lech-type inequalities, and "
               "asymptotic bounds for monomial ideals"};
  app.set_version_flag("--version", kVersion);

  Output out;
  std::string kernelChoice = "auto";
  app.add_flag("--json", out.asJson, "JSON output");
  app.add_option("--manifest", out.manifestPath,
                 "write the run manifest to a file instead of stderr");
  app.add_option("--seed", out.seed, "seed for randomized subcommands");
  app.add_option("--kernel", kernelChoice,
                 "counting kernel: auto|scalar|avx2|neon");

  std::string ringText = "poly:2", idealText, ideal2Text, ineqText, seriesText;
  std::string axesText, setsText, incText;
  int budget = 6;
  int64_t bNum = 1, aDen = 1, mPow = 1, nPow = 1, rRem = 0, kArg = 1;
  int rVars = 1, nSize = 2, dimArg = 0;
  std::string ceilingText, normText;
  bool withProfile = false;

  auto* colengthCmd = app.add_subcommand("colength", "ring colength of an ideal");
  colengthCmd->add_option("--ring", ringText);
  colengthCmd->add_option("--ideal", idealText)->required();

  auto* multCmd = app.add_subcommand("mult", "multiplicity of an ideal");
  multCmd->add_option("--ring", ringText);
  multCmd->add_option("--ideal", idealText)->required();
  multCmd->add_flag("--profile", withProfile, "include the power profile");

  auto* mixedCmd = app.add_subcommand("mixed", "mixed multiplicities of a pair");
  mixedCmd->add_option("--ring", ringText);
  mixedCmd->add_option("--ideal", idealText)->required();
  mixedCmd->add_option("--ideal2", ideal2Text)->required();

  auto* closureCmd = app.add_subcommand("closure", "integral closure in the ring");
  closureCmd->add_option("--ring", ringText);
  closureCmd->add_option("--ideal", idealText)->required();

  auto* ratpowCmd = app.add_subcommand("ratpow", "rational power of an ideal");
  ratpowCmd->add_option("--ring", ringText);
  ratpowCmd->add_option("--ideal", idealText)->required();
  ratpowCmd->add_option("--num", bNum, "numerator b")->required();
  ratpowCmd->add_option("--den", aDen, "denominator a")->required();

  auto* rcheckCmd = app.add_subcommand(
      "ratpow-check", "colength formulas for (I, T^m) against direct counts");
  rcheckCmd->add_option("--ring", ringText);
  rcheckCmd->add_option("--ideal", idealText)->required();
  rcheckCmd->add_option("--m", mPow)->required();
  rcheckCmd->add_option("--n", nPow)->required();
  rcheckCmd->add_option("--r", rRem);

  auto* searchCmd = app.add_subcommand("lm-search",
                                       "maximize e/(dim! colength) over "
                                       "integrally closed ideals");
  searchCmd->add_option("--ring", ringText)->required();
  searchCmd->add_option("--budget", budget)->required();
  searchCmd->add_option("--ceiling", ceilingText, "abort ratio p/q");

  auto* verifyCmd = app.add_subcommand("verify", "check one inequality instance");
  verifyCmd->add_option("--ineq", ineqText)->required();
  verifyCmd->add_option("--ring", ringText);
  verifyCmd->add_option("--ideal", idealText);
  verifyCmd->add_option("--ideal2", ideal2Text);
  verifyCmd->add_option("--axes", axesText, "comma-separated coordinate roles");
  verifyCmd->add_option("--subsets", setsText,
                        "set system a,b|c,d|... for diluted-ie-sets");

  auto* huntCmd = app.add_subcommand("hunt", "counterexample search");
  huntCmd->add_option("--ineq", ineqText)->required();
  huntCmd->add_option("--budget", budget)->required();
  auto* huntRingOpt = huntCmd->add_option("--ring", ringText,
                                          "defaults per inequality");

  auto* boundCmd = app.add_subcommand("bound", "optimize the exponential bound");
  boundCmd->add_option("--series", seriesText)->required();
  auto* dimOpt = boundCmd->add_option("--dim", dimArg,
                                      "dimension for explicit/ratfn series");
  boundCmd->add_option("--A", normText, "normalization for explicit series");

  auto* famCmd = app.add_subcommand("family-check",
                                    "power-family colength identity");
  famCmd->add_option("--increments", incText);
  famCmd->add_option("--k", kArg)->required();
  famCmd->add_option("--r", rVars)->required();
  famCmd->add_option("--ideal", idealText, "concrete family from closure powers");
  famCmd->add_option("--ring", ringText);
  famCmd->add_option("--N", nSize, "family length for the concrete mode");

  app.require_subcommand(1);
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  {
    std::string echo;
    for (int i = 1; i < argc; ++i) {
      if (i > 1) echo += ' ';
      echo += argv[i];
    }
    out.commandEcho = echo;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    kernel::forceKernel(kernelChoice);
    int exitCode = 0;

    if (colengthCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      const MonomialIdeal I = parseIdeal(idealText, spec);
      out.inputs = {{"ring", spec.str()}, {"ideal", printIdeal(I, spec)}};
      const int64_t len = ringColength(I, spec);
      out.result = len;
      out.humanText = std::to_string(len);
      out.wallMs = elapsed();
      out.finish("colength");
    } else if (multCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      const MonomialIdeal I = parseIdeal(idealText, spec);
      out.inputs = {{"ring", spec.str()}, {"ideal", printIdeal(I, spec)}};
      const int64_t e = ringMultiplicity(I, spec);
      if (withProfile) {
        json r;
        r["multiplicity"] = e;
        r["profile"] = profileJson(ringPowerProfile(I, spec));
        out.result = r;
      } else {
        out.result = e;
      }
      out.humanText = std::to_string(e);
      out.wallMs = elapsed();
      out.finish("mult");
    } else if (mixedCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      const MonomialIdeal I = parseIdeal(idealText, spec);
      const MonomialIdeal J = parseIdeal(ideal2Text, spec);
      out.inputs = {{"ring", spec.str()},
                    {"ideal", printIdeal(I, spec)},
                    {"ideal2", printIdeal(J, spec)}};
      const auto mm = mixedMultiplicitiesGeneral(I, J, spec);
      json r;
      r["mixed"] = mm;
      std::string human = "[";
      for (size_t i = 0; i < mm.size(); ++i) {
        if (i) human += ", ";
        human += std::to_string(mm[i]);
      }
      human += "]";
      if (spec.krullDim() == 2 && spec.kind == RingKind::Poly) {
        const Mixed2DResult f = mixedMultiplicity2d(I, J);
        r["formula2d"] = f.value;
        r["autoClosed"] = !f.inputsWereClosed;
        human += "  formula2d=" + std::to_string(f.value);
      }
      out.result = r;
      out.humanText = human;
      out.wallMs = elapsed();
      out.finish("mixed");
    } else if (closureCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      const MonomialIdeal I = parseIdeal(idealText, spec);
      out.inputs = {{"ring", spec.str()}, {"ideal", printIdeal(I, spec)}};
      const MonomialIdeal c = ringClosure(I, spec);
      out.result = printIdeal(c, spec);
      out.humanText = printIdeal(c, spec);
      out.wallMs = elapsed();
      out.finish("closure");
    } else if (ratpowCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      if (spec.kind != RingKind::Poly)
        throw InputError("rational powers are computed in polynomial rings");
      const MonomialIdeal I = parseIdeal(idealText, spec);
      out.inputs = {{"ring", spec.str()},
                    {"ideal", printIdeal(I, spec)},
                    {"num", bNum},
                    {"den", aDen}};
      const MonomialIdeal p = rationalPower(I, bNum, aDen);
      out.result = printIdeal(p, spec);
      out.humanText = printIdeal(p, spec);
      out.wallMs = elapsed();
      out.finish("ratpow");
    } else if (rcheckCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      if (spec.kind != RingKind::Poly)
        throw InputError("ratpow-check runs over a polynomial ring");
      const MonomialIdeal I = parseIdeal(idealText, spec);
      out.inputs = {{"ring", spec.str()},
                    {"ideal", printIdeal(I, spec)},
                    {"m", mPow},
                    {"n", nPow},
                    {"r", rRem}};
      const int64_t formula = colengthAdjoinRational(I, mPow, nPow, rRem);
      const MonomialIdeal direct =
          rationalPower(adjoinPower(I, mPow), nPow * mPow + rRem, mPow);
      const int64_t directLen = colength(direct);
      const bool match = formula == directLen;
      json r;
      r["formula"] = formula;
      r["direct"] = directLen;
      r["match"] = match;
      out.result = r;
      out.humanText = "formula=" + std::to_string(formula) +
                      " direct=" + std::to_string(directLen) +
                      (match ? " match" : " MISMATCH");
      exitCode = match ? 0 : 1;
      out.wallMs = elapsed();
      out.finish("ratpow-check");
    } else if (searchCmd->parsed()) {
      const RingSpec spec = RingSpec::parse(ringText);
      std::optional<Rat> ceiling;
      if (!ceilingText.empty()) ceiling = parseRat(ceilingText);
      out.inputs = {{"ring", spec.str()}, {"budget", budget}};
      if (ceiling) out.inputs["ceiling"] = ratStr(*ceiling);
      const SearchReport rep = lmSearch(spec, budget, ceiling);
      json r;
      r["bestRatio"] = ratJson(rep.bestRatio);
      r["witness"] = printIdeal(rep.witness, spec);
      r["budget"] = rep.budget;
      r["idealsVisited"] = rep.idealsVisited;
      r["exhaustive"] = rep.exhaustive;
      json maxi = json::array();
      for (const auto& I : rep.maximizers) maxi.push_back(printIdeal(I, spec));
      r["maximizers"] = maxi;
      if (rep.ceilingViolated)
        r["ceilingViolated"] = printIdeal(*rep.ceilingViolated, spec);
      out.result = r;
      out.certificate = printIdeal(rep.witness, spec);
      out.humanText = "bestRatio " + ratStr(rep.bestRatio) + " at " +
                      printIdeal(rep.witness, spec) +
                      (rep.exhaustive ? "" : " (non-exhaustive)");
      exitCode = rep.ceilingViolated ? 1 : 0;
      out.wallMs = elapsed();
      out.finish("lm-search");
    } else if (verifyCmd->parsed()) {
      const Ineq id = ineqFromName(ineqText);
      VerifyInputs in;
      if (id == Ineq::DilutedIeSets) {
        SetSystem sys;
        std::stringstream ss(setsText);
        std::string part;
        int maxElt = 0;
        while (std::getline(ss, part, '|')) {
          uint64_t mask = 0;
          std::stringstream ps(part);
          std::string tok;
          while (std::getline(ps, tok, ',')) {
            const int b = std::stoi(tok);
            if (b < 0 || b > 62) throw InputError("set element out of range");
            mask |= uint64_t{1} << b;
            maxElt = std::max(maxElt, b + 1);
          }
          sys.subsets.push_back(mask);
        }
        sys.universe = maxElt;
        in.sets = sys;
        out.inputs = {{"subsets", setsText}};
      } else {
        in.spec = RingSpec::parse(ringText);
        in.I = parseIdeal(idealText, in.spec);
        out.inputs = {{"ring", in.spec.str()},
                      {"ideal", printIdeal(in.I, in.spec)}};
        if (!ideal2Text.empty()) {
          in.J = parseIdeal(ideal2Text, in.spec);
          out.inputs["ideal2"] = printIdeal(*in.J, in.spec);
        }
        if (!axesText.empty()) {
          std::stringstream ss(axesText);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            const int idx = in.spec.varIndex(tok);
            if (idx < 0) throw InputError("unknown axis variable: " + tok);
            in.axes.push_back(idx);
          }
          out.inputs["axes"] = axesText;
        }
      }
      out.inputs["ineq"] = ineqText;
      const VerificationReport rep = verify(id, in);
      out.result = reportJson(rep);
      out.humanText = (rep.holds ? "holds" : "VIOLATED") +
                      std::string(", lhs ") + ratStr(rep.lhs) + ", rhs " +
                      ratStr(rep.rhs) + (rep.equality ? ", equality" : "");
      exitCode = rep.holds ? 0 : 1;
      out.wallMs = elapsed();
      out.finish("verify");
    } else if (huntCmd->parsed()) {
      const Ineq id = ineqFromName(ineqText);
      const std::string ringChoice =
          huntRingOpt->count() > 0 ? ringText : defaultHuntRing(id);
      const RingSpec spec = RingSpec::parse(ringChoice);
      out.inputs = {{"ineq", ineqText}, {"ring", spec.str()}, {"budget", budget}};
      const HuntResult h = searchCounterexample(id, spec, budget);
      json r;
      r["checked"] = h.checked;
      r["exhaustive"] = h.exhaustive;
      if (h.counterexample) {
        r["counterexample"] = printIdeal(*h.counterexample, spec);
        out.certificate = printIdeal(*h.counterexample, spec);
        out.humanText = "COUNTEREXAMPLE " + printIdeal(*h.counterexample, spec);
        exitCode = 1;
      } else {
        out.humanText = "none (" + std::to_string(h.checked) + " ideals" +
                        (h.exhaustive ? ", exhaustive)" : ", partial)");
      }
      out.result = r;
      out.wallMs = elapsed();
      out.finish("hunt");
    } else if (boundCmd->parsed()) {
      std::optional<int> dim;
      if (dimOpt->count() > 0) dim = dimArg;
      std::optional<Rat> A;
      if (!normText.empty()) A = parseRat(normText);
      const SeriesSpec series = SeriesSpec::parse(seriesText, dim, A);
      out.inputs = {{"series", series.str()},
                    {"dim", series.d},
                    {"A", ratStr(series.A)}};
      const MaxResult m = maximizeBound(series);
      json r;
      r["xStar"] = m.xStar;
      r["value"] = m.value;
      std::ostringstream human;
      human.precision(10);
      human << "x* = " << m.xStar << ", value = " << m.value;
      try {
        const DerivativeCriterion c = derivativeCriterion(series);
        r["f1"] = ratJson(c.f1);
        r["fp1"] = ratJson(c.fp1);
        r["limUnstable"] = c.limUnstable;
        human << ", f(1) = " << ratStr(c.f1) << ", f'(1) = " << ratStr(c.fp1)
              << (c.limUnstable ? ", lim-unstable" : "");
      } catch (const InputError&) {
        // no exact clearing for this series; the optimizer stands alone
      }
      out.result = r;
      out.humanText = human.str();
      out.wallMs = elapsed();
      out.finish("bound");
    } else if (famCmd->parsed()) {
      json r;
      bool match = true;
      std::ostringstream human;
      if (!idealText.empty()) {
        const RingSpec spec = RingSpec::parse(ringText);
        if (spec.kind != RingKind::Poly)
          throw InputError("concrete families run over a polynomial ring");
        const MonomialIdeal I = parseIdeal(idealText, spec);
        out.inputs = {{"ring", spec.str()},
                      {"ideal", printIdeal(I, spec)},
                      {"N", nSize},
                      {"k", kArg},
                      {"r", rVars}};
        const auto inc = closurePowerIncrements(I, nSize);
        const FamilySides s = familyColengthIdentity(inc, kArg, rVars);
        const MonomialIdeal J = buildPowerFamilyIdeal(I, nSize, kArg, rVars);
        const int64_t direct = colength(J);
        match = s.sideA == s.sideB && BigInt(direct) == s.sideA;
        r["sideA"] = s.sideA.str();
        r["sideB"] = s.sideB.str();
        r["direct"] = direct;
        r["match"] = match;
        human << "sideA=" << s.sideA.str() << " sideB=" << s.sideB.str()
              << " direct=" << direct << (match ? " match" : " MISMATCH");
      } else {
        if (incText.empty())
          throw InputError("family-check needs --increments or --ideal");
        std::vector<int64_t> inc;
        std::stringstream ss(incText);
        std::string tok;
        while (std::getline(ss, tok, ',')) inc.push_back(std::stoll(tok));
        out.inputs = {{"increments", incText}, {"k", kArg}, {"r", rVars}};
        const FamilySides s = familyColengthIdentity(inc, kArg, rVars);
        match = s.sideA == s.sideB;
        r["sideA"] = s.sideA.str();
        r["sideB"] = s.sideB.str();
        r["match"] = match;
        human << "sideA=" << s.sideA.str() << " sideB=" << s.sideB.str()
              << (match ? " match" : " MISMATCH");
      }
      out.result = r;
      out.humanText = human.str();
      exitCode = match ? 0 : 1;
      out.wallMs = elapsed();
      out.finish("family-check");
    } else {
      std::cerr << "no subcommand\n";
      return 2;
    }
    return exitCode;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
