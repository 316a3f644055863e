#include "recpart/closedform.hpp"

namespace recpart {

IntegralityError::IntegralityError(std::string formula, const Rat& value)
    : std::domain_error("non-integer value of " + std::move(formula) + ": " +
                        value.get_str()) {}

std::string formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::thm1i: return "thm1i";
        case FormulaId::thm1ii: return "thm1ii";
        case FormulaId::thm1iii: return "thm1iii";
        case FormulaId::thm2i: return "thm2i";
        case FormulaId::thm2ii: return "thm2ii";
        case FormulaId::thm2iii: return "thm2iii";
        case FormulaId::thm3i: return "thm3i";
        case FormulaId::thm3ii: return "thm3ii";
        case FormulaId::thm3iii: return "thm3iii";
        case FormulaId::thm3iv: return "thm3iv";
        case FormulaId::thm3v: return "thm3v";
    }
    return "?";
}

namespace {

Int require_integer(const char* formula, const Rat& v) {
    if (v.get_den() != 1) throw IntegralityError(formula, v);
    return v.get_num();
}

Int sign_pow(long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace

Int thm1i_strong_h1_count(long n, long k, long r, const NumberTables& t) {
    Int sum = 0;
    for (long j = 0; j <= k - 1; ++j) {
        Int term = binomial(k - 1 - j, r - j);
        if (term == 0) continue;
        term *= t.stirling1_unsigned(k - 1, j);
        term *= t.stirling2(n - k + 1 + j, k);
        long e = r - j;
        sum += sign_pow(e) * term;
    }
    return sum;
}

Int thm1ii_strong_h1_total(long n, long k, const NumberTables& t) {
    Rat v = Rat(t.stirling2(n + 1, k)) / 2 + Rat(t.stirling2(n, k)) / 2;
    v -= t.stirling2(n - 1, k);
    v -= t.stirling2(n - 1, k - 1);
    v -= Rat(t.stirling2(n - 1, k - 2)) / 2;
    return require_integer("thm1ii", v);
}

Int thm1iii_strong_h1_total_all(long n, const NumberTables& t) {
    Rat v = Rat(t.bell(n + 1)) / 2 + Rat(t.bell(n)) / 2 - Rat(Int(5 * t.bell(n - 1))) / 2;
    return require_integer("thm1iii", v);
}

Int thm2i_strong_height_total(long n, long k, const NumberTables& t) {
    return (k - 1) * t.stirling2(n, k) + binomial(k, 3) * t.stirling2(n - 1, k);
}

Int thm2ii_strong_height_total_all(long n, const NumberTables& t) {
    Rat v = Rat(t.bell(n + 2)) / 6 - Rat(Int(2 * t.bell(n))) / 3 - Rat(t.bell(n - 1)) / 6;
    return require_integer("thm2ii", v);
}

Int thm2iii_max_height_at_most(long n, long k, long h, const NumberTables& t) {
    Int sum = 0;
    for (long j = 1; j <= k - h; ++j)
        sum += t.stirling1_signed(k - h, j) * t.stirling2(n - (k - h) + j, k);
    return sum;
}

Int thm2iii_max_height_exact(long n, long k, long h, const NumberTables& t) {
    Int hi = thm2iii_max_height_at_most(n, k, h, t);
    Int lo = (h >= 2) ? thm2iii_max_height_at_most(n, k, h - 1, t) : Int(0);
    return hi - lo;
}

Int thm3i_weak_h1_count(long n, long k, long r, const NumberTables& t) {
    Int sum = 0;
    for (long i = 0; i <= k - 1; ++i) {
        Int s1 = t.stirling1_unsigned(k - 1, i);
        if (s1 == 0) continue;
        for (long a = 0; 2 * a <= n + i - k; ++a) {
            Int term = binomial(n + i - a - k, a);
            term *= binomial(k + a - 1 - i, r - i);
            if (term == 0) continue;
            term *= t.stirling2(n + 1 + i - 2 * a - k, k);
            term *= s1;
            sum += sign_pow(r + a - i) * term;
        }
        for (long a = 0; 2 * a <= n + i - 1 - k; ++a) {
            Int outer = binomial(k + a - i, r - i);
            if (outer == 0) continue;
            for (long j = 0; j <= n + i - 1 - 2 * a - k; ++j) {
                Int term = binomial(j - 1 + a, a);
                if (term == 0) continue;
                term *= t.stirling2(j, k);
                if (term == 0) continue;
                term *= outer * s1;
                sum += sign_pow(r + a - i) * term;
            }
        }
    }
    return sum;
}

Int thm3ii_weak_h1_total(long n, long k, const NumberTables& t) {
    Rat v = Rat(t.stirling2(n + 2, k)) / 2 + Rat(t.stirling2(n + 1, k)) / 2;
    v += n * Rat(t.stirling2(n - 1, k));
    v -= t.stirling2(n, k - 1);
    v -= Rat(t.stirling2(n, k - 2)) / 2;
    v -= t.stirling2(n - 1, k);
    for (long j = 0; j <= n - 1; ++j)
        v -= binomial(n, j) * t.stirling2(n - 1 - j, k - 1);
    return require_integer("thm3ii", v);
}

Int thm3iii_weak_h1_total_all(long n, const NumberTables& t) {
    Rat v = Rat(t.bell(n + 1)) / 2 + Rat(t.bell(n)) / 2;
    v += (n - 1) * Rat(t.bell(n - 2));
    v -= Rat(Int(3 * t.bell(n - 1))) / 2;
    v -= t.bell(n - 2);
    for (long j = 0; j <= n - 1; ++j) v -= binomial(n, j + 1) * t.bell(j);
    return require_integer("thm3iii", v);
}

// Coefficient of x^n in
//   T_k(x) = d/dq Q_k(x; q, q^2, ..., q^{k-1}) |_{q=1}
//          = x^k / prod_{j=1..k}(1-jx)
//            * ( (k-1) + C(k,3) x + x^2 sum_{j=1..k} C(j,2)/(1-jx) ),
// obtained by logarithmic differentiation of the product form factor by
// factor.  The x^2 sum expands as sum_j C(j,2) sum_m S_{m,k} j^{n-2-m}.
Int thm3iv_weak_height_total(long n, long k, const NumberTables& t) {
    Int sum = (k - 1) * t.stirling2(n, k) + binomial(k, 3) * t.stirling2(n - 1, k);
    for (long j = 2; j <= k; ++j) {
        Int pw = 1;
        Int inner = 0;
        for (long m = n - 2; m >= k; --m) {
            inner += t.stirling2(m, k) * pw;
            pw *= j;
        }
        sum += binomial(j, 2) * inner;
    }
    return sum;
}

// Sum of thm3iv over k = 1..n, with the triple sum reordered so that the
// Stirling row suffix sums R_{m,j} = sum_{k=j..m} S_{m,k} make it O(n^2):
//   sum_k (k-1)S_{n,k} + sum_k C(k,3)S_{n-1,k}
//     + sum_{j>=2} C(j,2) sum_{m=j..n-2} j^{n-2-m} R_{m,j}.
Int thm3v_weak_height_total_all(long n, const NumberTables& t) {
    Int sum = 0;
    for (long k = 1; k <= n; ++k)
        sum += (k - 1) * t.stirling2(n, k) + binomial(k, 3) * t.stirling2(n - 1, k);
    for (long j = 2; j <= n - 2; ++j) {
        Int pw = 1;
        Int inner = 0;
        for (long m = n - 2; m >= j; --m) {
            Int row = 0;
            for (long k = j; k <= m; ++k) row += t.stirling2(m, k);
            inner += row * pw;
            pw *= j;
        }
        sum += binomial(j, 2) * inner;
    }
    return sum;
}

}  // namespace recpart
