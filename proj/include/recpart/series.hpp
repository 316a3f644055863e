#pragma once

#include <functional>
#include <map>
#include <vector>

#include "recpart/combinum.hpp"

namespace recpart {

/// Polynomial in the record marker q over exact rationals. No zero
/// coefficients are stored; rationals stay normalized (gmp canonical form).
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
    QPoly(long constant) : QPoly(Rat(constant)) {}

    static QPoly monomial(int q_degree, const Rat& c = 1);

    const std::map<int, Rat>& coeffs() const { return c_; }
    Rat coeff(int q_degree) const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    int degree() const;  // -1 for the zero polynomial

    Rat eval_at_one() const;         // sum of coefficients
    Rat derivative_at_one() const;   // sum of r * c_r

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    bool operator==(const QPoly&) const = default;

    std::string str() const;  // e.g. "q^2 + 6*q"

private:
    void set(int r, Rat v);
    std::map<int, Rat> c_;
};

/// Truncated power series in x with QPoly coefficients. Immutable value
/// semantics; every operation truncates at the receiver's order.
class XSeries {
public:
    explicit XSeries(int trunc);
    static XSeries one(int trunc);

    int trunc() const { return trunc_; }
    const QPoly& operator[](int n) const;
    QPoly& at(int n) { return c_[n]; }

    XSeries& operator+=(const XSeries& o);
    friend XSeries operator*(const XSeries& a, const XSeries& b);

    /// Multiplies by c0 + c1*x in place.
    void mul_linear(const QPoly& c0, const QPoly& c1);
    /// Multiplies by x^s in place, dropping overflowing terms.
    void shift(int s);

    /// Series reciprocal; requires a nonzero constant (in q) x^0 term.
    XSeries reciprocal() const;

    bool operator==(const XSeries&) const = default;

private:
    int trunc_;
    std::vector<QPoly> c_;
};

/// Marker-weight assignment i -> q_i for i = 1..k-1.
struct WeightSpec {
    std::function<QPoly(int)> at;

    static WeightSpec all_ones();
    static WeightSpec height_one();     // q_1 = q, q_i = 1 for i >= 2
    static WeightSpec total_height();   // q_i = q^i
    static WeightSpec max_cutoff(int h);  // q_i = 1 for i <= h, else 0
    static WeightSpec all_q();          // q_i = q
};

/// Generating function of P_{n,k} weighted by strong-record heights:
/// x^k * prod_{j=2..k}(q_1 + x(q_2+..+q_{j-1} - (j-2)q_1)) / prod_{j=1..k}(1-jx),
/// truncated at N. Requires N >= k.
XSeries strong_series(int k, int N, const WeightSpec& w);

/// Weak-record analogue:
/// x^k * prod_{j=2..k}(q_1(1-(j-2)x) + x(q_2+..+q_{j-1}))
///     / prod_{j=1..k}((1-x)(1-(j-1)x) - x^2(q_1+..+q_{j-1})).
XSeries weak_series(int k, int N, const WeightSpec& w);

/// Coefficient of x^n; throws std::out_of_range above the truncation order.
const QPoly& coeff(const XSeries& s, int n);

/// Rational coefficient of q^r x^n; r must be >= 0.
Rat coeff_qr(const XSeries& s, int n, int r);

/// Per-coefficient d/dq at q=1; the result has constant (degree-0) coefficients.
XSeries q_derivative_at_one(const XSeries& s);

/// Exact total number of weak records of height one over P_{n,k} for all
/// n <= N, k <= N, computed from the q-derivative at q=1 of the weak-record
/// series recursion (integer recurrence; no symbolic q involved). Returned
/// as table[k][n].
std::vector<std::vector<Int>> weak_h1_total_table(int N, const NumberTables& tables);

Int weak_h1_total_exact(int n, int k, const NumberTables& tables);

/// Sum over k of weak_h1_total_exact(n, k).
Int weak_h1_total_all_exact(int n, const NumberTables& tables);

}  // namespace recpart
