#include "doctest.h"
#include "msym/combinatorics.hpp"

#include <set>

using namespace msym;

TEST_CASE("row function") {
    const auto r = row_function({0, 2, 1, 3, 2, 0, 2, 0, 0});
    CHECK(r[3] == 1);
    CHECK(r[1] == 2);
    CHECK(r[0] == 6);
    CHECK(row_function({0, 0}) == std::vector<int>{1, 2});
    CHECK(row_function({0, 1}) == std::vector<int>{2, 1});
}

TEST_CASE("bruhat order") {
    CHECK(bruhat_less({0, 1}, {1, 0}));
    CHECK_FALSE(bruhat_less({1, 0}, {0, 1}));
    CHECK_FALSE(bruhat_less({1, 0}, {1, 0}));
    CHECK_THROWS_AS(bruhat_less({1, 0}, {1, 1}), std::invalid_argument);
    for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d) {
            const auto cs = compositions(d, n);
            for (const auto& u : cs) {
                CHECK_FALSE(bruhat_less(u, u));
                for (const auto& v : cs)
                    if (bruhat_less(u, v))
                        for (const auto& w : cs)
                            if (bruhat_less(v, w)) CHECK(bruhat_less(u, w));
            }
        }
}

TEST_CASE("dominance on m-partitions") {
    const MPartition lam{{0}, {2}}, om{{1}, {1}};
    CHECK(dominance_leq(om, lam));
    CHECK(dominance_leq(lam, lam));
    CHECK(MPartition{{2, 0, 2, 1}, {3, 2}}.level(2) == Partition{3, 3, 2, 2, 1, 1});
    for (int d = 0; d <= 4; ++d)
        for (const auto& a : enumerate_mpartitions(0, d))
            for (const auto& b : enumerate_mpartitions(0, d))
                CHECK(dominance_leq(a, b) == dominance_leq(a.lambda, b.lambda));
}

TEST_CASE("arm and leg tables") {
    const MPartition p{{2, 0, 0, 2}, {4, 1, 1}};
    const Diagram d(p);
    CHECK(d.stat({1, 1}, Stat::arm) == 3);
    CHECK(d.stat({1, 1}, Stat::leg) == 4);
    CHECK(d.stat({1, 1}, Stat::arm_tilde) == 3);
    CHECK(d.stat({1, 1}, Stat::leg_tilde) == 6);
    const MPartition two{{0, 1}, {}};
    CHECK(diagram_stats(two, {1, 1}, Stat::arm) == 1);
    CHECK(diagram_stats(two, {1, 1}, Stat::leg) == 1);
    CHECK_THROWS_AS(d.stat({1, 5}, Stat::arm), std::out_of_range);
    for (int m = 0; m <= 2; ++m)
        for (int deg = 0; deg <= 4; ++deg)
            for (const auto& lam : enumerate_mpartitions(m, deg)) {
                const Diagram dg(lam);
                for (const auto& s : dg.squares()) {
                    const int a = dg.stat(s, Stat::arm), at = dg.stat(s, Stat::arm_tilde);
                    CHECK(at <= a);
                    CHECK(a <= at + 1);
                    if (!dg.rows()[s.row - 1].circle) CHECK(dg.stat(s, Stat::leg) <= dg.stat(s, Stat::leg_tilde));
                }
                CHECK(lam.level(0) == strip_zeros(sorted_desc(lam.gamma(lam.length()))));
            }
}

TEST_CASE("statistics") {
    CHECK(inv({2, 0, 0, 2}) == 2);
    CHECK(coinv({2, 0, 0, 2}) == 4);
    CHECK(n_of({1}) == 0);
    CHECK(MPartition{{1}, {}}.n() == 0);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_mpartitions(0, 2) == std::vector<MPartition>{{{}, {2}}, {{}, {1, 1}}});
    CHECK(enumerate_mpartitions(1, 1) == std::vector<MPartition>{{{1}, {}}, {{0}, {1}}});
    CHECK(enumerate_mpartitions(1, 0) == std::vector<MPartition>{{{0}, {}}});
    for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 4; ++d) {
            const auto all = enumerate_mpartitions(m, d);
            CHECK(std::set<MPartition>(all.begin(), all.end()).size() == all.size());
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE((all[i] != all[j] && dominance_leq(all[i], all[j])));
        }
}

TEST_CASE("text form") {
    const auto p = MPartition::parse("(2,0,0,2; 4,1,1)");
    CHECK(p == MPartition{{2, 0, 0, 2}, {4, 1, 1}});
    CHECK(p.to_string() == "(2,0,0,2; 4,1,1)");
    CHECK(MPartition::parse(MPartition{{}, {1}}.to_string()) == MPartition{{}, {1}});
    CHECK(MPartition::parse("(1;)") == MPartition{{1}, {}});
    CHECK_THROWS(MPartition::parse("(1;2,3)"));
}
