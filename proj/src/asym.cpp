#include "recpart/asym.hpp"

#include <cmath>
#include <stdexcept>

#include "recpart/closedform.hpp"
#include "recpart/series.hpp"

namespace recpart {

double solve_xi(long n) {
    if (n < 0) throw std::invalid_argument("solve_xi: n must be >= 0");
    const double target = static_cast<double>(n) + 1.0;
    double xi = std::max(1.0, std::log(target) - std::log(std::log(static_cast<double>(n) + 2.0)));
    for (int it = 0; it < 100; ++it) {
        double e = std::exp(xi);
        double f = xi * e - target;
        if (std::abs(f) / target <= 1e-13) return xi;
        xi -= f / (e * (1.0 + xi));
    }
    double e = std::exp(xi);
    if (std::abs(xi * e - target) / target <= 1e-12) return xi;
    throw std::runtime_error("solve_xi: Newton iteration did not converge");
}

double xi_expansion(long n) {
    if (n < 3) throw std::invalid_argument("xi_expansion: n must be >= 3");
    double ln = std::log(static_cast<double>(n));
    double lln = std::log(ln);
    return ln - lln + lln / ln;
}

double bell_ratio(long n, long h) {
    if (n < 2) throw std::invalid_argument("bell_ratio: n must be >= 2");
    long bound = static_cast<long>(std::ceil(std::log(static_cast<double>(n)))) + 3;
    if (h > bound || h < -bound)
        throw std::invalid_argument("bell_ratio: |h| exceeds ceil(log n) + 3");
    double xi = solve_xi(n);
    double r = 1.0;
    if (h >= 0) {
        for (long i = 1; i <= h; ++i) r *= static_cast<double>(n + i) / xi;
    } else {
        for (long i = h + 1; i <= 0; ++i) r *= xi / static_cast<double>(n + i);
    }
    return r;
}

std::string asym_stat_name(AsymStat s) {
    switch (s) {
        case AsymStat::strong_h1_all: return "strong-h1";
        case AsymStat::strong_height_all: return "strong-height";
        case AsymStat::weak_h1_all: return "weak-h1";
        case AsymStat::weak_height_all: return "weak-height";
    }
    return "?";
}

AsymEstimate estimate(AsymStat stat, long n, const NumberTables& tables) {
    if (n < 2) throw std::invalid_argument("asym estimate: n must be >= 2");
    AsymEstimate out;
    out.n = n;
    out.xi = solve_xi(n);
    const double xi = out.xi;
    Int exact;
    switch (stat) {
        case AsymStat::strong_h1_all:
            out.estimate = (n + 1) / (2 * xi) + 0.5;
            exact = thm1iii_strong_h1_total_all(n, tables);
            break;
        case AsymStat::strong_height_all:
            out.estimate = static_cast<double>(n + 2) * (n + 1) / (6 * xi * xi) - 2.0 / 3.0;
            exact = thm2ii_strong_height_total_all(n, tables);
            break;
        case AsymStat::weak_h1_all:
            out.estimate = (n + 1) / (2 * xi) + 0.5;
            exact = weak_h1_total_all_exact(n, tables);
            break;
        case AsymStat::weak_height_all:
            out.estimate = static_cast<double>(n + 2) * (n + 1) / (6 * xi * xi) +
                           (n + 1) / (6 * xi) - 7.0 / 6.0;
            exact = thm3v_weak_height_total_all(n, tables);
            break;
    }
    // quotient of big integers; never convert B_n alone to double
    Rat ratio(exact, tables.bell(n));
    ratio.canonicalize();
    out.exact_ratio = ratio.get_d();
    out.rel_err = std::abs(out.exact_ratio / out.estimate - 1.0);
    return out;
}

}  // namespace recpart
