#include "doctest.h"
#include "lechlab/errors.hpp"
#include "lechlab/format.hpp"
#include "lechlab/newton.hpp"
#include "lechlab/ring_ops.hpp"
#include "util.hpp"

using namespace lechlab;
using testutil::mi;

TEST_CASE("ring spec parsing round-trips") {
  for (const char* text : {"poly:3", "arr:3:[x|y|z]", "arr:3:[x,y|y,z|x,z]",
                           "cusp+1", "poly:2+T:1", "arr:3:[x|y|z]+T:2"}) {
    const RingSpec s = RingSpec::parse(text);
    CHECK(RingSpec::parse(s.str()) == s);
  }
  CHECK(RingSpec::parse("poly:3").krullDim() == 3);
  CHECK(RingSpec::parse("arr:3:[x|y|z]").krullDim() == 2);
  CHECK(RingSpec::parse("arr:3:[x,y|y,z|x,z]").krullDim() == 1);
  CHECK(RingSpec::parse("cusp+1").krullDim() == 2);
  CHECK(RingSpec::parse("arr:3:[x,y|y,z|x,z]+T:2").krullDim() == 3);
  CHECK_THROWS_AS(RingSpec::parse("arr:2:[x|x]"), InputError);
  CHECK_THROWS_AS(RingSpec::parse("arr:2:[x|x,y]"), InputError);
}

TEST_CASE("cusp variable order puts the semigroup coordinate first") {
  const RingSpec cusp = RingSpec::parse("cusp+1");
  CHECK(cusp.varNames() == std::vector<std::string>{"t", "x"});
  const MonomialIdeal I = parseIdeal("t^4, x^4", cusp);
  CHECK(I.gens[0] == ExpVec{4, 0});
  CHECK_FALSE(cusp.isRingMonomial(ExpVec{1, 3}));
  CHECK(cusp.isRingMonomial(ExpVec{0, 5}));
}

TEST_CASE("ring colength across the models") {
  const RingSpec xyz = RingSpec::parse("arr:3:[x|y|z]");
  CHECK(ringColength(MonomialIdeal::maximal(3), xyz) == 1);
  CHECK(ringColength(idealPower(MonomialIdeal::maximal(3), 2), xyz) == 4);

  const RingSpec three = RingSpec::parse("arr:3:[x,y|y,z|x,z]");
  CHECK(ringColength(idealPower(MonomialIdeal::maximal(3), 2), three) == 4);

  const RingSpec cusp = RingSpec::parse("cusp+1");
  const MonomialIdeal q = ringClosure(parseIdeal("t^4, x^4", cusp), cusp);
  CHECK(printIdeal(q, cusp) == "t^4, t^3*x, t^2*x^2, x^4");
  CHECK(ringColength(q, cusp) == 7);
}

TEST_CASE("ring multiplicity across the models") {
  for (int d = 2; d <= 4; ++d) {
    std::vector<std::vector<int>> primes;
    for (int i = 0; i < d; ++i) primes.push_back({i});
    const RingSpec snc = RingSpec::arrangement(d, primes);
    CHECK(ringMultiplicity(MonomialIdeal::maximal(d), snc) == d);
  }
  const RingSpec three = RingSpec::parse("arr:3:[x,y|y,z|x,z]");
  CHECK(ringMultiplicity(MonomialIdeal::maximal(3), three) == 3);
  const RingSpec xyz = RingSpec::parse("arr:3:[x|y|z]");
  CHECK(ringMultiplicity(MonomialIdeal::maximal(3), xyz) == 3);
}

TEST_CASE("arrangement multiplicity agrees with the direct power profile") {
  Rng rng(31);
  const RingSpec xyz = RingSpec::parse("arr:3:[x|y|z]");
  for (int trial = 0; trial < 10; ++trial) {
    const MonomialIdeal I = testutil::randomPrimary(rng, 3, 3, 1);
    CHECK(ringMultiplicity(I, xyz) == ringPowerProfile(I, xyz).multiplicity);
  }
  const RingSpec three = RingSpec::parse("arr:3:[x,y|y,z|x,z]+T:1");
  for (int trial = 0; trial < 6; ++trial) {
    const MonomialIdeal I = testutil::randomPrimary(rng, 4, 3, 1);
    CHECK(ringMultiplicity(I, three) == ringPowerProfile(I, three).multiplicity);
  }
}

TEST_CASE("inclusion-exclusion identity on fixed examples") {
  // one prime: both sides are the plain restricted colength
  const MonomialIdeal I = testutil::parse3("x^2, y^2, z^2, x*y");
  const auto one = inclusionExclusionSides(I, {{0}});
  CHECK(one.first == one.second);

  const auto xyz = inclusionExclusionSides(
      idealPower(MonomialIdeal::maximal(3), 2), {{0}, {1}, {2}});
  CHECK(xyz.first == 4);
  CHECK(xyz.first == xyz.second);

  const auto three = inclusionExclusionSides(MonomialIdeal::maximal(3),
                                             {{0, 1}, {1, 2}, {0, 2}});
  CHECK(three.first == 1);
  CHECK(three.first == three.second);
}

TEST_CASE("inclusion-exclusion identity on random instances") {
  Rng rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = static_cast<int>(rng.uniform(2, 4));
    const MonomialIdeal I = testutil::randomPrimary(rng, d, 3, 1);
    // random incomparable coordinate subsets
    std::vector<std::vector<int>> primes;
    const int count = static_cast<int>(rng.uniform(1, 3));
    for (int k = 0; k < count; ++k) {
      std::vector<int> p;
      for (int i = 0; i < d; ++i)
        if (rng.uniform(0, 1)) p.push_back(i);
      if (p.empty()) p.push_back(static_cast<int>(rng.uniform(0, d - 1)));
      primes.push_back(std::move(p));
    }
    // drop comparable duplicates
    std::vector<std::vector<int>> clean;
    for (const auto& p : primes) {
      bool keep = true;
      for (const auto& q : clean)
        if (std::includes(p.begin(), p.end(), q.begin(), q.end()) ||
            std::includes(q.begin(), q.end(), p.begin(), p.end()))
          keep = false;
      if (keep) clean.push_back(p);
    }
    const auto sides = inclusionExclusionSides(I, clean);
    CHECK(sides.first == sides.second);
  }
}

TEST_CASE("cusp splitting identity against the ambient staircase") {
  // every monomial is either in the semigroup or on the t = 1 line
  Rng rng(33);
  const RingSpec cusp = RingSpec::parse("cusp+1");
  for (int trial = 0; trial < 20; ++trial) {
    const MonomialIdeal J =
        integralClosure(testutil::randomPrimary(rng, 2, 6, 2));
    const int64_t whole = colength(J);
    const int64_t ring = ringColength(J, cusp);
    int64_t line = 0;  // points (1, b) outside J
    for (Exp b = 0; b < J.generatorBox()[1]; ++b)
      if (!J.contains(ExpVec{1, b})) ++line;
    CHECK(whole == ring + line);
  }
}

TEST_CASE("defining intersections") {
  const RingSpec xyz = RingSpec::parse("arr:3:[x|y|z]");
  CHECK(definingIntersection(xyz) == testutil::parse3("x*y*z"));
  const RingSpec three = RingSpec::parse("arr:3:[x,y|y,z|x,z]");
  CHECK(definingIntersection(three) == testutil::parse3("x*y, y*z, x*z"));
}

TEST_CASE("ring closures") {
  const RingSpec xyz = RingSpec::parse("arr:3:[x|y|z]");
  const MonomialIdeal m = MonomialIdeal::maximal(3);
  CHECK(ringClosure(m, xyz) == m);
  // x^2, y, z: ambient closure of (x^2, y, z, xyz) keeps the staircase
  const MonomialIdeal I = testutil::parse3("x^2, y, z");
  CHECK(ringClosure(I, xyz) == I);

  const RingSpec cusp = RingSpec::parse("cusp+1");
  const MonomialIdeal q = parseIdeal("t^4, x^4", cusp);
  const MonomialIdeal qc = ringClosure(q, cusp);
  CHECK(qc.contains(q));
  CHECK(ringClosure(qc, cusp) == qc);
  CHECK(qc.gens.size() == 4);
}

TEST_CASE("equidimensionality flag") {
  CHECK(ringEquidimensional(RingSpec::parse("arr:3:[x|y|z]")));
  CHECK_FALSE(ringEquidimensional(RingSpec::parse("arr:3:[x|y,z]")));
  CHECK(ringEquidimensional(RingSpec::parse("poly:2")));
}
