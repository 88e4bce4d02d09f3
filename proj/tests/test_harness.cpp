#include "lapuniq/harness.hpp"

#include <doctest.h>

using namespace lapuniq;

TEST_CASE("totality conditions on lattice prefixes (Eq. wws)") {
    SUBCASE("full 2-D lattice satisfies all three") {
        auto c = check_totality_conditions(make_affine({1, 1}, {1, 1}), 60);
        CHECK(c.has_all_ones);
        CHECK(c.has_axis_deviations);
        CHECK(c.additive_closure_on_prefix);
    }
    SUBCASE("lattice minus (1,1) fails condition (i)") {
        Explicit e;
        e.gen = [](std::size_t k) -> Point {
            // enumerate the full lattice but skip the first point (1,1)
            auto pts = enumerate(make_affine({1, 1}, {1, 1}), k + 1);
            return pts[k];  // 0-based: index k is the (k+1)-th point
        };
        SequenceFamily fam{2, std::move(e)};
        auto c = check_totality_conditions(fam, 40);
        CHECK_FALSE(c.has_all_ones);
        CHECK(c.has_axis_deviations);
    }
    SUBCASE("{(1,1),(2,1),(1,2)} fails the additive closure") {
        auto fam = make_explicit({{{1, 0}, {1, 0}}, {{2, 0}, {1, 0}}, {{1, 0}, {2, 0}}});
        auto c = check_totality_conditions(fam, 3);
        CHECK(c.has_all_ones);
        CHECK(c.has_axis_deviations);
        CHECK_FALSE(c.additive_closure_on_prefix);  // (2,1)+(1,2)-1 = (2,2) missing
    }
    SUBCASE("non-integer points are rejected") {
        auto fam = make_explicit({{{1.5, 0}}});
        CHECK_THROWS_AS(check_totality_conditions(fam, 1), std::domain_error);
    }
}

TEST_CASE("identity suite passes with no fault") {
    auto reports = run_identity_suite(42, 10);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.pass);
        CHECK(r.instances > 0);
    }
}

TEST_CASE("suite determinism: identical seed, identical reports") {
    auto a = run_identity_suite(123, 8);
    auto b = run_identity_suite(123, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].max_deviation == b[i].max_deviation);
        CHECK(a[i].pass == b[i].pass);
    }
}

TEST_CASE("each seeded fault is caught by at least one property") {
    for (SeededFault f : {SeededFault::DropFactorial, SeededFault::WrongGammaArg,
                          SeededFault::WrongWitnessFamily}) {
        CAPTURE(to_string(f));
        auto reports = run_identity_suite(42, 10, f);
        bool caught = false;
        for (const auto& r : reports)
            if (!r.pass) caught = true;
        CHECK(caught);
    }
}

TEST_CASE("failures carry the offending instance") {
    auto reports = run_identity_suite(42, 10, SeededFault::DropFactorial);
    bool found = false;
    for (const auto& r : reports)
        if (!r.pass && !r.failure_instance.empty()) found = true;
    CHECK(found);
}

TEST_CASE("report JSON has the declared fields") {
    auto reports = run_identity_suite(7, 4);
    auto j = reports[0].to_json();
    for (const char* k : {"id", "instances", "max_deviation", "tol", "pass", "seed"})
        CHECK(j.contains(k));
}

TEST_CASE("fault name round-trip") {
    for (SeededFault f : {SeededFault::None, SeededFault::DropFactorial,
                          SeededFault::WrongGammaArg, SeededFault::WrongWitnessFamily})
        CHECK(fault_from_string(to_string(f)) == f);
    CHECK_THROWS(fault_from_string("bogus"));
}
