#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcat/analyzer.hpp"
#include "pcat/ops.hpp"

using namespace pcat;

namespace {
Partition P(const std::string& s) { return parsePartition(s); }
IntData D(std::initializer_list<int> xs) { return IntData(xs); }
}  // namespace

TEST_CASE("analysis of the unit pair") {
  Analysis a = analyze({P("-:wb:[l1 l2]")});
  CHECK(a.f == D({2}));
  CHECK(a.v == D({0}));
  CHECK(a.sigma == D({0}));
  CHECK(a.l.empty());
  CHECK(a.k == D({0}));
  CHECK(a.x.empty());
  CHECK(a.kcc[colorIdx(Color::white)][colorIdx(Color::black)] == D({0}));
  CHECK(a.kcc[colorIdx(Color::black)][colorIdx(Color::white)] == D({0}));
  CHECK(a.kcc[colorIdx(Color::white)][colorIdx(Color::white)].empty());
  CHECK(a.kcc[colorIdx(Color::black)][colorIdx(Color::black)].empty());
}

TEST_CASE("analysis of the crossing pair partition") {
  Analysis a = analyze({P("-:wbwb:[l1 l3][l2 l4]")});
  CHECK(a.f == D({2}));
  CHECK(a.v == D({-2, 2}));
  CHECK(a.sigma == D({0}));
  CHECK(a.l == D({0}));
  CHECK(a.k.empty());
  CHECK(a.x == D({0}));
}

TEST_CASE("analysis of the empty set and empty partition") {
  Analysis a = analyze(std::vector<Partition>{});
  CHECK(a.f.empty());
  CHECK(a.v.empty());
  CHECK(a.sigma.empty());
  CHECK(a.l.empty());
  CHECK(a.k.empty());
  CHECK(a.x.empty());

  Analysis b = analyze({Partition()});
  CHECK(b.f.empty());
  CHECK(b.sigma == D({0}));
}

TEST_CASE("refined tables") {
  std::vector<Partition> cup = {P("-:wb:[l1 l2]")};
  CHECK(kRefined(cup, Color::white, Color::black) == D({0}));
  CHECK(kRefined(cup, Color::black, Color::black).empty());
  std::vector<Partition> ww = {P("-:ww:[l1 l2]")};
  CHECK(kRefined(ww, Color::white, Color::white) == D({1}));

  std::vector<Partition> cross = {P("-:wbwb:[l1 l3][l2 l4]")};
  CHECK(xRefined(cross, Color::white, Color::black) == D({0}));
  CHECK(xRefined(cross, Color::black, Color::white) == D({0}));
  // Both white legs lie in one block here, so no white-white cross pair exists.
  CHECK(xRefined(cross, Color::white, Color::white).empty());
  std::vector<Partition> nested = {P("-:wbbw:[l1 l4][l2 l3]")};
  CHECK(xRefined(nested, Color::white, Color::black).empty());
}

TEST_CASE("union decomposition invariants") {
  // L = K[ww] u K[bb], K = K[wb] u K[bw], X = union of X[..]; and the L/K
  // routing matches normalized-color equality.
  oracle::forAllPartitionsUpTo(4, [](const Partition& p) {
    Analysis a = analyze({p});
    IntData lu, ku, xu;
    lu.insert(a.kcc[0][0].begin(), a.kcc[0][0].end());
    lu.insert(a.kcc[1][1].begin(), a.kcc[1][1].end());
    ku.insert(a.kcc[0][1].begin(), a.kcc[0][1].end());
    ku.insert(a.kcc[1][0].begin(), a.kcc[1][0].end());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) xu.insert(a.xcc[i][j].begin(), a.xcc[i][j].end());
    CHECK(a.l == lu);
    CHECK(a.k == ku);
    CHECK(a.x == xu);
  });
}

TEST_CASE("reflection symmetry of the data") {
  oracle::forAllPartitionsUpTo(4, [](const Partition& p) {
    Analysis a = analyze({p, reflect(p)});
    auto sym = [](const IntData& s) {
      IntData out;
      for (int v : s) out.insert(-v);
      return out;
    };
    CHECK(a.v == sym(a.v));
    CHECK(a.l == sym(a.l));
    CHECK(a.k == sym(a.k));
    CHECK(a.x == sym(a.x));
  });
}

TEST_CASE("monotonicity") {
  std::vector<Partition> small = {P("-:wb:[l1 l2]"), P("-:wbwb:[l1 l3][l2 l4]"),
                                  P("-:wb:[l1][l2]"), P("w:w:[u1 l1]")};
  Analysis whole = analyze(small);
  for (std::size_t k = 0; k < small.size(); ++k) {
    std::vector<Partition> sub(small.begin(), small.begin() + k);
    Analysis part = analyze(sub);
    auto issub = [](const IntData& a, const IntData& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    CHECK(issub(part.f, whole.f));
    CHECK(issub(part.v, whole.v));
    CHECK(issub(part.sigma, whole.sigma));
    CHECK(issub(part.l, whole.l));
    CHECK(issub(part.k, whole.k));
    CHECK(issub(part.x, whole.x));
  }
}

TEST_CASE("pair restriction and S_0") {
  std::vector<Partition> in = {P("-:wb:[l1 l2]"), P("-:wbwb:[l1 l2 l3 l4]")};
  auto out = restrictPairsOnly(in);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == in[0]);

  CHECK(inSZero(P("-:wb:[l1 l2]")));
  CHECK(inSZero(P("-:wbwb:[l1 l2][l3 l4]")));
  CHECK(inSZero(Partition()));
  CHECK_FALSE(inSZero(P("-:wbbw:[l1 l4][l2 l3]")));    // non-neutral blocks
  CHECK_FALSE(inSZero(P("-:ww:[l1 l2]")));             // non-neutral
  CHECK_FALSE(inSZero(P("-:wbwb:[l1 l2 l3 l4]")));     // block too large
  CHECK_FALSE(inSZero(P("-:wbwb:[l1 l2][l3][l4]")));   // singletons are never neutral

  // On pair-only inputs the restriction is the identity; K/X agree trivially.
  oracle::forAllPartitionsUpTo(4, [](const Partition& p) {
    bool pairsOnly = true;
    for (const auto& blk : p.blocks()) pairsOnly = pairsOnly && blk.size() <= 2;
    std::vector<Partition> v = {p};
    auto r = restrictPairsOnly(v);
    CHECK((r.size() == 1) == pairsOnly);
    if (pairsOnly) {
      CHECK(analyze(r).k == analyze(v).k);
      CHECK(analyze(r).x == analyze(v).x);
    }
  });
}

TEST_CASE("report format is stable") {
  Analysis a = analyze({P("-:wb:[l1 l2]")});
  CHECK(a.report() ==
        "F = {2}\nV = {0}\nSigma = {0}\nL = {}\nK = {0}\nX = {}\n");
}
