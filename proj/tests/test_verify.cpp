#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sset/verify.hpp"
#include "sset/core.hpp"

using namespace sset;

TEST_CASE("the verification suite passes and is deterministically ordered") {
    std::vector<CheckResult> a = verify_paper();
    std::vector<CheckResult> b = verify_paper();
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() >= 18);
    std::set<std::string> ids;
    for (size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].id);
        CHECK(a[i].pass);
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].detail == b[i].detail);
        CHECK(ids.insert(a[i].id).second);
    }
}

TEST_CASE("the expected check ids are present") {
    std::set<std::string> ids;
    for (const auto& c : verify_paper()) ids.insert(c.id);
    for (const char* want :
         {"reduce-horn-n1", "reduce-horn-n2", "reduce-horn-n3up", "reduction-preserves-mono",
          "degenerate-face-bound", "sphere-endomorphisms", "sphere-not-kan",
          "pathological-fibration", "acyclic-fibration-detector", "fibrancy-detector",
          "kan-fibration-litmus", "constant-maps-to-sphere", "reduction-adjunction",
          "eilenberg-adjunction", "smash-one-reduced", "sphere-homology",
          "projective-plane-separation", "telescope-laws"})
        CHECK(ids.count(want) == 1);
}

TEST_CASE("the bound is validated") {
    CHECK_THROWS_AS(verify_paper({2}), Error);
    // a lower valid bound still verifies
    for (const auto& c : verify_paper({3})) {
        CAPTURE(c.id);
        CHECK(c.pass);
    }
}
