#include "doctest.h"

#include "property/properties.hpp"

TEST_CASE("free-algebra properties") {
  for (const auto& t : jordan::props::run_properties(20240611, 1000)) {
    CAPTURE(t.name);
    CAPTURE(t.first_failure);
    CHECK(t.cases == 1000);
    CHECK(t.failures == 0);
  }
}
