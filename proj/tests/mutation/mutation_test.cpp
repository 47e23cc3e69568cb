// Linked against a core built with a sign flip in the Hausdorff distance.
#include <doctest.h>

#include "remotal/harness.hpp"
#include "remotal/propcheck.hpp"

using namespace remotal;

TEST_CASE("injected hausdorff bug is caught with a counterexample") {
  const auto cases = check_gd_axioms(1, 200);
  std::size_t failures = 0;
  for (const auto& c : cases) {
    if (c.passed) continue;
    ++failures;
    CHECK(!c.counterexample.is_null());
    CHECK(c.instance.contains("norm"));
  }
  CHECK(failures > 0);
  CHECK_FALSE(run_property_suite(1, 50).all_passed());
}
