#include "doctest.h"
#include "msym/verify.hpp"

using namespace msym;

TEST_CASE("comparator modes") {
    const Comparator exact;
    const Comparator at(std::make_pair(mpq_class(3, 7), mpq_class(5, 11)));
    const QtRational a = one_minus(1, 1) / one_minus(1, 0);
    CHECK(exact.equal(a, a));
    CHECK_FALSE(exact.equal(a, QtRational(1)));
    CHECK(at.equal(a, a));
    CHECK_FALSE(at.equal(a, QtRational(1)));
    CHECK(at.probabilistic());
    CHECK(exact.mode() == "exact");
    // pole at the point: falls back to exact comparison
    const Comparator pole(std::make_pair(mpq_class(1), mpq_class(1)));
    CHECK(pole.equal(a, a));
    CHECK_FALSE(pole.equal(a, a + QtRational(1)));

    const MultiPoly f = MultiPoly::variable(2, 1) * a;
    CHECK(at.equal(f, f));
    CHECK_FALSE(at.equal(f, MultiPoly::variable(2, 2) * a));
    CHECK_FALSE(at.equal(f, MultiPoly::variable(3, 1) * a));
    CHECK(first_difference(f, f) == "no difference");
    CHECK(first_difference(f, MultiPoly(2)).find("exponent (1,0)") == 0);
}

TEST_CASE("suites are deterministic and reject unknown names") {
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    CHECK(suite_exists("braid"));
    VerifyOptions o;
    o.N = 3;
    o.samples = 6;
    o.seed = 7;
    const auto r1 = run_suite("braid", o);
    const auto r2 = run_suite("braid", o);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].passed);
        CHECK(r1[i].cases == r2[i].cases);
        CHECK(r1[i].identity == r2[i].identity);
    }
    std::mt19937 g1(7), g2(7);
    CHECK(random_poly(g1, 3, 3, 4) == random_poly(g2, 3, 3, 4));
    std::mt19937 g3(1);
    for (int k = 0; k < 20; ++k) CHECK_FALSE(random_msym(g3, 1, 1, 2).is_zero());
}

TEST_CASE("suites pass at small bounds, also at a rational point") {
    VerifyOptions o;
    o.m_max = 1;
    o.deg_max = 2;
    for (const auto& name : {"orthogonality", "inclusion", "restriction", "specialization", "gram-schmidt"})
        for (const auto& r : run_suite(name, o)) {
            INFO(name << ": " << r.identity);
            CHECK(r.passed);
            CHECK(r.cases > 0);
        }
    o.qt_point = std::make_pair(mpq_class(2, 3), mpq_class(7, 5));
    for (const auto& r : run_suite("cauchy", o)) CHECK(r.passed);
}
