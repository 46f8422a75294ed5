#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcat/intset.hpp"

using namespace pcat;

namespace {

IntSet S(const std::string& s) { return parseIntSet(s); }

// Random eventually periodic set built from a few classes, rays and sporadics.
IntSet randomSet(std::mt19937_64& rng, std::int64_t maxPeriod = 12) {
  std::int64_t m = 1 + static_cast<std::int64_t>(rng() % maxPeriod);
  IntSet out;
  for (int i = 0; i < 3; ++i) {
    switch (rng() % 4) {
      case 0: out = unite(out, IntSet::klass(static_cast<std::int64_t>(rng() % m), m)); break;
      case 1: out = unite(out, IntSet::upFrom(static_cast<std::int64_t>(rng() % 20) - 5, m)); break;
      case 2:
        out = unite(out, IntSet::downFrom(static_cast<std::int64_t>(rng() % 20) - 5, m));
        break;
      default:
        out = unite(out, IntSet::finiteSet({static_cast<std::int64_t>(rng() % 30) - 15}));
    }
  }
  if (rng() % 2) out = setMinus(out, IntSet::finiteSet({static_cast<std::int64_t>(rng() % 9)}));
  return out;
}

}  // namespace

TEST_CASE("literals") {
  CHECK(S("{}").isEmpty());
  CHECK(S("{1,2,3}") == IntSet::finiteSet({1, 2, 3}));
  CHECK(S("Z") == IntSet::integers());
  CHECK(S("3Z") == IntSet::klass(0, 3));
  CHECK(S("1+3Z") == IntSet::klass(1, 3));
  CHECK(S("N") == IntSet::naturals());
  CHECK(S("2+1N") == IntSet::upFrom(2, 1));
  CHECK(S("-4-3N") == IntSet::downFrom(-4, 3));
  CHECK(S("!{0}") == setMinus(IntSet::integers(), IntSet::finiteSet({0})));
  CHECK(S("+-{0,2}") == IntSet::finiteSet({-2, 0, 2}));
  CHECK(S("2Z|1+2Z") == IntSet::integers());
  CHECK(S("0Z") == IntSet::finiteSet({0}));
  CHECK_THROWS_AS(S("3"), Error);
  CHECK_THROWS_AS(S("{1,"), Error);
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    IntSet s = randomSet(rng);
    CHECK(parseIntSet(s.toString()) == s);
  }
  CHECK(S("Z").toString() == "Z");
  CHECK(S("{}").toString() == "{}");
  CHECK(S("{2}").toString() == "{2}");
  CHECK(parseIntSet(S("N").toString()) == S("N"));
}

TEST_CASE("boolean algebra agrees with brute-force membership") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    IntSet a = randomSet(rng), b = randomSet(rng);
    std::int64_t w = 10 * std::max({a.period(), b.period(), std::int64_t{1}}) +
                     std::max(a.window(), b.window());
    for (std::int64_t x = -w; x <= w; ++x) {
      CHECK(unite(a, b).contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(intersect(a, b).contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(setMinus(a, b).contains(x) == (a.contains(x) && !b.contains(x)));
      CHECK(complement(a).contains(x) == !a.contains(x));
      CHECK(negate(a).contains(x) == a.contains(-x));
      CHECK(mirror(a).contains(x) == (a.contains(x) || a.contains(-x)));
      CHECK(shiftBy(a, 7).contains(x) == a.contains(x - 7));
    }
  }
}

TEST_CASE("sum sets agree with brute-force windows") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 120; ++i) {
    IntSet a = randomSet(rng, 6), b = randomSet(rng, 6);
    IntSet s = sumset(a, b);
    std::int64_t w = 40 + 4 * (a.window() + b.window());
    for (std::int64_t z = -w; z <= w; ++z) {
      bool expect = false;
      // If z = x + y with both far outside the scan, residues decide; the
      // scan radius is chosen large enough that a witness exists inside.
      for (std::int64_t x = -3 * w; x <= 3 * w && !expect; ++x)
        if (a.contains(x) && b.contains(z - x)) expect = true;
      CHECK(s.contains(z) == expect);
    }
  }
}

TEST_CASE("linear combinations") {
  CHECK(linearCombine(1, S("{1}"), 2, S("Z")) == S("1+2Z"));
  CHECK(linearCombine(1, S("{0,1}"), 3, S("Z")) == complement(S("2+3Z")));
  CHECK(linearCombine(5, S("{}"), 7, S("Z")).isEmpty());
  CHECK(linearCombine(1, S("{0}"), -1, S("{3,5}")) == S("{-5,-3}"));
}

TEST_CASE("mirror") {
  CHECK(mirror(S("{0,2}")) == S("{-2,0,2}"));
  CHECK(mirror(S("Z")) == S("Z"));
  CHECK(mirror(S("1+3Z")) == unite(S("1+3Z"), S("2+3Z")));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    IntSet s = randomSet(rng);
    CHECK(mirror(mirror(s)) == mirror(s));
  }
}

TEST_CASE("D_m constructions") {
  CHECK(dSubM(S("{0}"), 3) == S("3Z"));
  CHECK(dSubM(S("{}"), 5).isEmpty());
  CHECK(dPrimeSubM(S("{}"), 5) == S("5Z"));
  CHECK(dSubM(S("{1}"), 2) == S("1+2Z"));
  CHECK(dSubM(S("{0}"), 0) == S("{0}"));
  CHECK(dSubM(S("{1,2}"), 0) == S("{-2,-1,1,2}"));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
    std::vector<std::int64_t> d;
    for (std::int64_t x = 0; x <= m / 2; ++x)
      if (rng() % 2) d.push_back(x);
    IntSet dm = dSubM(IntSet::finiteSet(d), m);
    CHECK(dm == negate(dm));
    CHECK(dm == shiftBy(dm, m));
  }
}

TEST_CASE("S -> S_m is a closure operator") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
    IntSet s = randomSet(rng, 8);
    IntSet t = unite(s, randomSet(rng, 8));  // s subset of t
    IntSet sm = periodicSymmetrize(s, m);
    CHECK(subsetOf(s, sm));
    CHECK(subsetOf(sm, periodicSymmetrize(t, m)));
    CHECK(periodicSymmetrize(sm, m) == sm);
  }
}

TEST_CASE("subgroup recognition") {
  CHECK(isSubgroup(S("3Z")) == 3);
  CHECK(isSubgroup(S("{0}")) == 0);
  CHECK_FALSE(isSubgroup(S("1+2Z")).has_value());
  CHECK_FALSE(isSubgroup(S("{}")).has_value());
  CHECK_FALSE(isSubgroup(S("{0,1}")).has_value());
  CHECK(isSubgroup(S("Z")) == 1);
}

TEST_CASE("numerical semigroups") {
  IntSet s23 = semigroupFromGenerators({2, 3});
  CHECK(s23 == S("2+1N"));
  CHECK(semigroupFromGenerators({}).isEmpty());
  CHECK(isSubsemigroup(S("N")));
  CHECK_FALSE(isSubsemigroup(S("{1}")));
  CHECK(isSubsemigroup(S("{}")));
  CHECK(isSubsemigroup(s23));

  IntSet s35 = semigroupFromGenerators({3, 5});
  for (std::int64_t x : {3, 5, 6, 8, 9, 10, 11, 12})
    CHECK(s35.contains(x));
  for (std::int64_t x : {1, 2, 4, 7, 0, -3})
    CHECK_FALSE(s35.contains(x));
  CHECK(isSubsemigroup(s35));

  IntSet s46 = semigroupFromGenerators({4, 6});
  CHECK(s46.contains(10));
  CHECK_FALSE(s46.contains(8 - 1));
  CHECK(isSubsemigroup(s46));
}

TEST_CASE("chi normal form examples") {
  CHECK(chiNormalForm(S("Z"), 3).holes.empty());
  auto nf = chiNormalForm(complement(S("3Z")), 3);
  CHECK(nf.holes == std::vector<std::int64_t>{0});
  auto nf2 = chiNormalForm(S("3Z"), 3);
  CHECK(nf2.holes == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(chiNormalForm(S("1+3Z"), 3), Error);
}

TEST_CASE("chi lemma holds on random symmetric periodic sets") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 200) {
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
    // Random union of symmetric residue classes: chi = -chi = chi + mZ.
    IntSet chi;
    for (std::int64_t r = 0; r <= m / 2; ++r)
      if (rng() % 2) chi = unite(chi, mirror(IntSet::klass(r, m)));
    auto nf = chiNormalForm(chi, m);  // throws if any identity fails
    CHECK(chi == complement(dSubM(IntSet::finiteSet(nf.holes), m)));
    ++done;
  }
}
