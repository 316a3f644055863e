#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recpart/closedform.hpp"
#include "recpart/oracle.hpp"

using namespace recpart;

TEST_CASE("hand-checked bundles") {
    StatBundle b43 = oracle_stats(4, 3);
    CHECK(b43.count == 6);
    CHECK(b43.strong_h1_by_r == std::map<int, Int>{{1, 1}, {2, 5}});
    CHECK(b43.strong_total_height == 13);

    StatBundle b42 = oracle_stats(4, 2);
    CHECK(b42.count == 7);
    CHECK(b42.weak_h1_by_r == std::map<int, Int>{{1, 6}, {2, 1}});
    CHECK(b42.weak_total_height == 8);

    StatBundle b61 = oracle_stats(6, 1);
    CHECK(b61.count == 1);
    CHECK(b61.strong_total_height == 0);
    CHECK(b61.weak_total_height == 0);
    CHECK(b61.strong_h1_by_r == std::map<int, Int>{{0, 1}});
}

TEST_CASE("P_n aggregates") {
    StatBundle a3 = oracle_stats_all(3);
    CHECK(a3.strong_total_height == 5);
    CHECK(a3.weak_total_height == 5);
    CHECK(a3.count == 5);

    StatBundle a4 = oracle_stats_all(4);
    CHECK(a4.strong_total_height == 23);
    CHECK(a4.weak_total_height == 24);
    CHECK(a4.weak_h1_total() == 22);  // 8 (k=2) + 11 (k=3) + 3 (k=4)

    StatBundle a1 = oracle_stats_all(1);
    CHECK(a1.count == 1);
    CHECK(a1.strong_total_height == 0);

    StatBundle a0 = oracle_stats_all(0);
    CHECK(a0.count == 1);
}

TEST_CASE("counts match the number tables") {
    NumberTables t;
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k)
            CHECK(oracle_stats(n, k).count == t.stirling2(n, k));
        CHECK(oracle_stats_all(n).count == t.bell(n));
    }
}

TEST_CASE("r-map sums equal the count") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            StatBundle b = oracle_stats(n, k);
            Int s = 0, w = 0;
            for (const auto& [r, c] : b.strong_h1_by_r) s += c;
            for (const auto& [r, c] : b.weak_h1_by_r) w += c;
            CHECK(s == b.count);
            CHECK(w == b.count);
            CHECK(b.strong_total_height <= b.weak_total_height);
        }
}

TEST_CASE("strong h1 totals match the thm1ii closed form") {
    NumberTables t;
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(oracle_stats(n, k).strong_h1_total() ==
                  thm1ii_strong_h1_total(n, k, t));
}

TEST_CASE("max-height maps are consistent") {
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            StatBundle b = oracle_stats(n, k);
            int hmax = std::max(k - 1, 0);
            CHECK(b.max_height_at_most.at(hmax) == b.count);
            Int prev = 0;
            for (int h = 0; h <= hmax; ++h) {
                Int cur = b.max_height_at_most.at(h);
                CHECK(cur >= prev);
                auto it = b.max_height_exact.find(h);
                Int exact = it == b.max_height_exact.end() ? Int(0) : it->second;
                CHECK(exact == cur - prev);
                prev = cur;
            }
        }
}

TEST_CASE("chunked aggregation equals sequential") {
    for (int k = 1; k <= 9; ++k) {
        StatBundle seq = oracle_stats(9, k, 12, 1);
        StatBundle par = oracle_stats(9, k, 12, 4);
        CHECK(seq.count == par.count);
        CHECK(seq.strong_h1_by_r == par.strong_h1_by_r);
        CHECK(seq.weak_h1_by_r == par.weak_h1_by_r);
        CHECK(seq.strong_total_height == par.strong_total_height);
        CHECK(seq.weak_total_height == par.weak_total_height);
        CHECK(seq.max_height_exact == par.max_height_exact);
        CHECK(seq.max_height_at_most == par.max_height_at_most);
    }
}

TEST_CASE("cap is enforced") {
    CHECK_THROWS_AS(oracle_stats(13, 4), CapExceeded);
    CHECK_THROWS_AS(oracle_stats_all(13), CapExceeded);
    CHECK(oracle_stats(13, 4, 13).count > 0);
}
