#pragma once

#include <string>

#include "recpart/combinum.hpp"

namespace recpart {

/// Unique positive root of xi * e^xi = n + 1, found by Newton iteration.
/// Residual |xi e^xi - (n+1)| / (n+1) <= 1e-12.
double solve_xi(long n);

/// Three-term expansion log n - log log n + log log n / log n, for n >= 3.
/// Comparison companion to solve_xi only.
double xi_expansion(long n);

/// (n+h)! / (n! xi_n^h), the leading factor of B_{n+h}/B_n.
/// Requires n >= 2 and |h| <= ceil(log n) + 3.
double bell_ratio(long n, long h);

enum class AsymStat {
    strong_h1_all,      // total strong height-1 records over P_n
    strong_height_all,  // total strong-record height over P_n
    weak_h1_all,        // total weak height-1 records over P_n
    weak_height_all,    // total weak-record height over P_n
};

std::string asym_stat_name(AsymStat s);

/// Asymptotic factor (in units of B_n) paired with the exact ratio.
struct AsymEstimate {
    long n = 0;
    double xi = 0;
    double estimate = 0;     // bracketed asymptotic factor
    double exact_ratio = 0;  // exact statistic / B_n
    double rel_err = 0;      // |exact_ratio / estimate - 1|
};

/// Requires n >= 2. The exact side comes from the Bell-combination closed
/// forms, except weak_h1_all which uses the series-derived total (the
/// printed closed form is under dispute).
AsymEstimate estimate(AsymStat stat, long n, const NumberTables& tables);

}  // namespace recpart
