#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "charquiv/verify.hpp"

using namespace cq;

TEST_CASE("acceptance suite: every criterion passes") {
    auto results = run_acceptance("small");
    CHECK(results.size() == 12);
    for (const auto& r : results) {
        std::printf("criterion %2d %-32s %s  (%s)\n", r.id, r.name.c_str(),
                    r.pass ? "pass" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
        INFO(r.id, " ", r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
