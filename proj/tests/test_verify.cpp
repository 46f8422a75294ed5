#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcat/ops.hpp"
#include "pcat/verify.hpp"

using namespace pcat;

namespace {
Budget smallBudget() {
  Budget b;
  b.maxPoints = 4;
  b.closureCap = 4;
  b.instances = 40;
  return b;
}
}  // namespace

TEST_CASE("catalog is complete and runnable at a small budget") {
  auto names = checkNames();
  CHECK(names.size() == 12);
  for (const auto& name : names) {
    CheckReport r = runCheck(name, smallBudget());
    CHECK(r.name == name);
    // v_cases needs headroom above the generators and reports skipped at
    // this budget; nothing may fail.
    CHECK(r.status != CheckStatus::fail);
    CHECK((r.status == CheckStatus::pass) == (name != "v_cases"));
    CHECK(r.instancesTried > 0);
    CHECK(r.counterexample.empty());
  }
  CHECK_THROWS_AS(runCheck("no_such_check", smallBudget()), Error);
}

TEST_CASE("reports are deterministic for a fixed budget and seed") {
  Budget b = smallBudget();
  CheckReport a1 = runCheck("chi_lemma", b);
  CheckReport a2 = runCheck("chi_lemma", b);
  CHECK(a1.status == a2.status);
  CHECK(a1.instancesTried == a2.instancesTried);

  b.seed = 99;
  CheckReport a3 = runCheck("arithmetic_forward_and_fuzz", b);
  CHECK(a3.status == CheckStatus::pass);
}

TEST_CASE("report line format") {
  CheckReport r = runCheck("delta_antisym_mod_sigma", smallBudget());
  std::string line = r.line();
  CHECK(line.find("delta_antisym_mod_sigma pass") == 0);
}

TEST_CASE("mutation sensitivity of the projection check") {
  Budget b = smallBudget();
  b.maxPoints = 5;
  CHECK(runCheck("projection_pp_star", b).status == CheckStatus::pass);
  {
    RotationConventionGuard broken(false);
    CheckReport r = runCheck("projection_pp_star", b);
    CHECK(r.status == CheckStatus::fail);
    CHECK(!r.counterexample.empty());
  }
  // The guard restores the convention.
  CHECK(runCheck("projection_pp_star", b).status == CheckStatus::pass);
}
