// Acceptance suite: one test case per reproduction claim, each printing a
// PASS/FAIL line. Two fixture checks are known-failing (see the README):
// the bundled 718-letter word does not avoid bab, and the abcab/acabcb/acbcacb
// fixed point does not avoid cbc; both stay asserted as stated rather than
// weakened, so this binary reports them red.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "nrw/reproduce.hpp"

namespace {

void run(const char* name) {
  const auto r = nrw::reproduce::run_claim(name);
  std::printf("%s  %s  (%lld ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
              static_cast<long long>(r.elapsed.count()), r.detail.empty() ? "" : "  -- ",
              r.detail.c_str());
  std::fflush(stdout);
  INFO(r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("census-ranks-2-10") { run("census-ranks-2-10"); }
TEST_CASE("census-rank-11") { run("census-rank-11"); }
TEST_CASE("orbit-structure") { run("orbit-structure"); }
TEST_CASE("crochemore-crosscheck") { run("crochemore-crosscheck"); }
TEST_CASE("thue-sweep-ternary") { run("thue-sweep-ternary"); }
TEST_CASE("thue-sweep-binary") { run("thue-sweep-binary"); }
TEST_CASE("cyclic-census") { run("cyclic-census"); }
TEST_CASE("triple-property") { run("triple-property"); }
TEST_CASE("fixture-reports") { run("fixture-reports"); }
TEST_CASE("thue-morse-prefix") { run("thue-morse-prefix"); }
TEST_CASE("avoidance-maxima") { run("avoidance-maxima"); }
TEST_CASE("word718-verifies") { run("word718-verifies"); }
TEST_CASE("thue1912-prefix-squarefree") { run("thue1912-prefix-squarefree"); }
TEST_CASE("cbc-avoidance") { run("cbc-avoidance"); }
TEST_CASE("property-suites") { run("property-suites"); }
