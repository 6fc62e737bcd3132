#include <string>

#include "doctest.h"
#include "property_harness.hpp"

TEST_CASE("randomized property suite") {
    auto reports = propharness::run_property_suite(0xA11CEULL);
    long long total_cases = 0;
    for (const auto& r : reports) {
        CAPTURE(r.name);
        for (const auto& note : r.notes) {
            CAPTURE(note);
        }
        CHECK(r.failures == 0);
        CHECK(r.cases >= 1000);  // each property alone clears the bar
        total_cases += r.cases;
    }
    CHECK(total_cases >= 5000);
}
