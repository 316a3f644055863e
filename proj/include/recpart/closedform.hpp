#pragma once

#include <stdexcept>
#include <string>

#include "recpart/combinum.hpp"

namespace recpart {

/// Raised when a formula with fractional coefficients fails to collapse to
/// an integer, which signals use outside its validity range.
struct IntegralityError : std::domain_error {
    IntegralityError(std::string formula, const Rat& value);
};

/// Identifiers for the eleven theorem statistics.
enum class FormulaId {
    thm1i,    // #partitions of P_{n,k} with exactly r strong height-1 records
    thm1ii,   // total strong height-1 records over P_{n,k}
    thm1iii,  // total strong height-1 records over P_n
    thm2i,    // sum of strong-record heights over P_{n,k}
    thm2ii,   // sum of strong-record heights over P_n
    thm2iii,  // #partitions of P_{n,k} with maximum strong-record height <= h
    thm3i,    // #partitions of P_{n,k} with exactly r weak height-1 records
    thm3ii,   // total weak height-1 records over P_{n,k} (as printed)
    thm3iii,  // total weak height-1 records over P_n (as printed)
    thm3iv,   // sum of weak-record heights over P_{n,k}
    thm3v,    // sum of weak-record heights over P_n
};

std::string formula_name(FormulaId id);

// All functions take the shared immutable tables and are pure.

/// sum_{j=0..k-1} (-1)^{r-j} C(k-1-j, r-j) |s_{k-1,j}| S_{n-k+1+j,k}
Int thm1i_strong_h1_count(long n, long k, long r, const NumberTables& t);

/// (S_{n+1,k} + S_{n,k}) / 2 - S_{n-1,k} - S_{n-1,k-1} - S_{n-1,k-2} / 2
Int thm1ii_strong_h1_total(long n, long k, const NumberTables& t);

/// (B_{n+1} + B_n - 5 B_{n-1}) / 2; valid as stated for n >= 2
Int thm1iii_strong_h1_total_all(long n, const NumberTables& t);

/// (k-1) S_{n,k} + C(k,3) S_{n-1,k}
Int thm2i_strong_height_total(long n, long k, const NumberTables& t);

/// (B_{n+2} - 4 B_n - B_{n-1}) / 6
Int thm2ii_strong_height_total_all(long n, const NumberTables& t);

/// sum_{j=1..k-h} s_{k-h,j} S_{n-(k-h)+j,k} with signed first-kind values.
/// Counts partitions whose maximum strong-record height is at most h.
Int thm2iii_max_height_at_most(long n, long k, long h, const NumberTables& t);

/// At-most(h) - at-most(h-1), with at-most(0) = 0 for k >= 2.
Int thm2iii_max_height_exact(long n, long k, long h, const NumberTables& t);

/// The printed double/triple sum with the free symbol m read as r.
/// Pascal-convention binomials (the falling-factorial convention agrees
/// term-by-term over the stated summation ranges).
Int thm3i_weak_h1_count(long n, long k, long r, const NumberTables& t);

/// The printed Stirling combination, as printed. Known to disagree with
/// enumeration; callers compare against the oracle and report.
Int thm3ii_weak_h1_total(long n, long k, const NumberTables& t);

/// The printed Bell combination, as printed; same comparison semantics.
Int thm3iii_weak_h1_total_all(long n, const NumberTables& t);

/// Sum of weak-record heights over P_{n,k}:
///   (k-1) S_{n,k} + C(k,3) S_{n-1,k}
///     + sum_{j=2..k} C(j,2) sum_{m=k..n-2} S_{m,k} j^{n-2-m},
/// the coefficient of x^n in d/dq Q_k(x; q, ..., q^{k-1}) at q=1.
/// Reduces to (k-1)S_{n,k} + C(k,3)S_{n-1,k} + C(k+1,3)S_{n-2,k}
/// when n <= k+2.
Int thm3iv_weak_height_total(long n, long k, const NumberTables& t);

/// Sum of thm3iv_weak_height_total over k = 1..n.
Int thm3v_weak_height_total_all(long n, const NumberTables& t);

}  // namespace recpart
