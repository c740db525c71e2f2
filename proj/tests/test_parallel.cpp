#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fvw/parallel.hpp"
#include "fvw/solver.hpp"
#include "fvw/suites.hpp"

using namespace fvw;

TEST_CASE("the case runner visits every index exactly once") {
    for (bool parallel : {false, true}) {
        std::vector<int> hits(1000, 0);
        for_each_case(1000, parallel, [&](int i) { hits[static_cast<std::size_t>(i)] += 1; });
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("suite reports are identical under the serial reference and OpenMP") {
    for (const char* name : {"derived-ring-axioms", "central-map", "end1-suite",
                             "group-inversion-central", "theorem-main-commutation"}) {
        SessionConfig serial;
        serial.samples = 60;
        serial.parallel = false;
        SessionConfig par = serial;
        par.parallel = true;
        Report a = run_suite(name, serial);
        Report b = run_suite(name, par);
        CHECK(a.to_json().dump() == b.to_json().dump());
    }
}

TEST_CASE("exhaustive searches merge deterministically") {
    std::vector<Rational> pool{Rational(-1), Rational(0), Rational(1), Rational(2)};
    ActionKernelResult s = derived_action_kernel_search(-2, 2, pool, Rho::identity, false);
    ActionKernelResult p = derived_action_kernel_search(-2, 2, pool, Rho::identity, true);
    CHECK(s.tested == p.tested);
    REQUIRE(s.survivors.size() == p.survivors.size());
    for (std::size_t i = 0; i < s.survivors.size(); ++i)
        CHECK(s.survivors[i] == p.survivors[i]);

    std::vector<Rational> small{Rational(0), Rational(1)};
    auto es = exhaustive_mul_search(small, Rational(0), Rational(1), false);
    auto ep = exhaustive_mul_search(small, Rational(0), Rational(1), true);
    REQUIRE(es.size() == ep.size());
    for (std::size_t i = 0; i < es.size(); ++i) CHECK(es[i] == ep[i]);
}

TEST_CASE("reports are byte-stable across repeated runs") {
    SessionConfig cfg;
    cfg.samples = 40;
    Report a = run_suite("central-map", cfg);
    Report b = run_suite("central-map", cfg);
    CHECK(a.to_json().dump() == b.to_json().dump());
}
