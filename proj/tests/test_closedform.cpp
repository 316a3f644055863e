#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recpart/closedform.hpp"
#include "recpart/oracle.hpp"

using namespace recpart;

namespace {
Int map_at(const std::map<int, Int>& m, int key) {
    auto it = m.find(key);
    return it == m.end() ? Int(0) : it->second;
}
}  // namespace

TEST_CASE("thm1i examples") {
    NumberTables t;
    CHECK(thm1i_strong_h1_count(3, 2, 1, t) == 3);
    CHECK(thm1i_strong_h1_count(4, 3, 2, t) == 5);
    CHECK(thm1i_strong_h1_count(5, 5, 4, t) == 1);
}

TEST_CASE("thm1ii examples") {
    NumberTables t;
    CHECK(thm1ii_strong_h1_total(2, 2, t) == 1);
    CHECK(thm1ii_strong_h1_total(4, 2, t) == 7);
    for (int n = 2; n <= 8; ++n) CHECK(thm1ii_strong_h1_total(n, 1, t) == 0);
}

TEST_CASE("thm1iii examples") {
    NumberTables t;
    CHECK(thm1iii_strong_h1_total_all(2, t) == 1);
    CHECK(thm1iii_strong_h1_total_all(3, t) == 5);
    CHECK(thm1iii_strong_h1_total_all(4, t) == 21);
    CHECK(oracle_stats_all(4).strong_h1_total() == 21);
}

TEST_CASE("thm2i examples") {
    NumberTables t;
    CHECK(thm2i_strong_height_total(3, 2, t) == 3);
    CHECK(thm2i_strong_height_total(4, 3, t) == 13);
    CHECK(thm2i_strong_height_total(7, 1, t) == 0);
}

TEST_CASE("thm2ii examples") {
    NumberTables t;
    CHECK(thm2ii_strong_height_total_all(2, t) == 1);
    CHECK(thm2ii_strong_height_total_all(3, t) == 5);
    CHECK(thm2ii_strong_height_total_all(4, t) == 23);
}

TEST_CASE("thm2iii examples and readings") {
    NumberTables t;
    CHECK(thm2iii_max_height_at_most(4, 3, 1, t) == 5);
    CHECK(thm2iii_max_height_at_most(4, 3, 2, t) == 6);
    for (int n = 2; n <= 9; ++n)
        for (int k = 2; k <= n; ++k) {
            CHECK(thm2iii_max_height_at_most(n, k, k - 1, t) == t.stirling2(n, k));
            Int sum = 0;
            for (int h = 1; h <= k - 1; ++h)
                sum += thm2iii_max_height_exact(n, k, h, t);
            CHECK(sum == t.stirling2(n, k));
        }
}

TEST_CASE("thm3i examples") {
    NumberTables t;
    CHECK(thm3i_weak_h1_count(2, 2, 1, t) == 1);
    CHECK(thm3i_weak_h1_count(3, 2, 1, t) == 3);
    CHECK(thm3i_weak_h1_count(4, 2, 2, t) == 1);
}

TEST_CASE("thm3ii printed values and oracle discrepancy") {
    NumberTables t;
    CHECK(thm3ii_weak_h1_total(2, 2, t) == 3);
    CHECK(thm3ii_weak_h1_total(3, 2, t) == 8);
    CHECK(thm3ii_weak_h1_total(4, 2, t) == 20);
    CHECK(oracle_stats(2, 2).weak_h1_total() == 1);
    CHECK(oracle_stats(3, 2).weak_h1_total() == 3);
    CHECK(oracle_stats(4, 2).weak_h1_total() == 8);
}

TEST_CASE("thm3iii printed values and oracle discrepancy") {
    NumberTables t;
    CHECK(thm3iii_weak_h1_total_all(2, t) == -1);
    CHECK(thm3iii_weak_h1_total_all(3, t) == 0);
    CHECK(oracle_stats_all(2).weak_h1_total() == 1);
    CHECK(oracle_stats_all(3).weak_h1_total() == 5);
    CHECK(oracle_stats_all(4).weak_h1_total() == 22);
    // thm3iii(4) is whatever the printed expression evaluates to; it must
    // differ from the enumeration value
    CHECK(thm3iii_weak_h1_total_all(4, t) != 11);
}

TEST_CASE("thm3iv examples") {
    NumberTables t;
    CHECK(thm3iv_weak_height_total(4, 2, t) == 8);
    CHECK(thm3iv_weak_height_total(4, 3, t) == 13);
    CHECK(thm3iv_weak_height_total(9, 1, t) == 0);
}

TEST_CASE("thm3v examples") {
    NumberTables t;
    CHECK(thm3v_weak_height_total_all(2, t) == 1);
    CHECK(thm3v_weak_height_total_all(3, t) == 5);
    CHECK(thm3v_weak_height_total_all(4, t) == 24);
}

TEST_CASE("closed forms equal the oracle on the full grid") {
    NumberTables t;
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            StatBundle b = oracle_stats(n, k);
            for (int r = 0; r <= k - 1; ++r)
                CHECK(thm1i_strong_h1_count(n, k, r, t) ==
                      map_at(b.strong_h1_by_r, r));
            CHECK(thm2i_strong_height_total(n, k, t) == b.strong_total_height);
            for (int h = 1; h <= k - 1; ++h)
                CHECK(thm2iii_max_height_at_most(n, k, h, t) ==
                      map_at(b.max_height_at_most, h));
            for (int r = 0; r <= n - 1; ++r)
                CHECK(thm3i_weak_h1_count(n, k, r, t) == map_at(b.weak_h1_by_r, r));
            CHECK(thm3iv_weak_height_total(n, k, t) == b.weak_total_height);
        }
}

TEST_CASE("P_n closed forms equal the oracle aggregates") {
    NumberTables t;
    for (int n = 2; n <= 10; ++n) {
        StatBundle b = oracle_stats_all(n);
        CHECK(thm1iii_strong_h1_total_all(n, t) == b.strong_h1_total());
        CHECK(thm2ii_strong_height_total_all(n, t) == b.strong_total_height);
        CHECK(thm3v_weak_height_total_all(n, t) == b.weak_total_height);
    }
}

TEST_CASE("thm1i counts partition P_{n,k}") {
    NumberTables t;
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            Int sum = 0;
            for (int r = 0; r <= k - 1; ++r) sum += thm1i_strong_h1_count(n, k, r, t);
            CHECK(sum == t.stirling2(n, k));
        }
}

TEST_CASE("integrality is enforced outside validity ranges") {
    NumberTables t;
    // the literal Bell combination at n = 1 evaluates to -1, an integer,
    // so pick a case that genuinely fractures: thm2ii at n = 0 is
    // (B_2 - 4 B_0 - 0)/6 = -1/3
    CHECK_THROWS_AS(thm2ii_strong_height_total_all(0, t), IntegralityError);
}
