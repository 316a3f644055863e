#include "recpart/series.hpp"

#include <sstream>
#include <stdexcept>

namespace recpart {

QPoly::QPoly(const Rat& constant) {
    if (constant != 0) c_[0] = constant;
}

QPoly QPoly::monomial(int q_degree, const Rat& c) {
    QPoly p;
    if (c != 0) p.c_[q_degree] = c;
    return p;
}

Rat QPoly::coeff(int q_degree) const {
    auto it = c_.find(q_degree);
    return it == c_.end() ? Rat(0) : it->second;
}

bool QPoly::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

int QPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

Rat QPoly::eval_at_one() const {
    Rat s = 0;
    for (const auto& [r, v] : c_) s += v;
    return s;
}

Rat QPoly::derivative_at_one() const {
    Rat s = 0;
    for (const auto& [r, v] : c_) s += r * v;
    return s;
}

void QPoly::set(int r, Rat v) {
    if (v == 0)
        c_.erase(r);
    else
        c_[r] = std::move(v);
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [r, v] : o.c_) set(r, coeff(r) + v);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [r, v] : o.c_) set(r, coeff(r) - v);
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly p;
    for (const auto& [r, v] : c_) p.c_[r] = -v;
    return p;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly p;
    for (const auto& [ra, va] : a.c_)
        for (const auto& [rb, vb] : b.c_) p.set(ra + rb, p.coeff(ra + rb) + va * vb);
    return p;
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat v = it->second;
        if (!first) out << (v < 0 ? " - " : " + ");
        else if (v < 0) out << "-";
        first = false;
        Rat av = abs(v);
        int r = it->first;
        if (r == 0) {
            out << av;
        } else {
            if (av != 1) out << av << "*";
            out << "q";
            if (r != 1) out << "^" << r;
        }
    }
    return out.str();
}

XSeries::XSeries(int trunc) : trunc_(trunc), c_(static_cast<size_t>(trunc) + 1) {
    if (trunc < 0) throw std::invalid_argument("negative truncation order");
}

XSeries XSeries::one(int trunc) {
    XSeries s(trunc);
    s.c_[0] = QPoly(1);
    return s;
}

const QPoly& XSeries::operator[](int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("x-degree above truncation");
    return c_[n];
}

XSeries& XSeries::operator+=(const XSeries& o) {
    for (int n = 0; n <= std::min(trunc_, o.trunc_); ++n) c_[n] += o.c_[n];
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    XSeries p(a.trunc_);
    for (int i = 0; i <= a.trunc_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.trunc_ && j <= b.trunc_; ++j)
            p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return p;
}

void XSeries::mul_linear(const QPoly& c0, const QPoly& c1) {
    for (int n = trunc_; n >= 0; --n) {
        QPoly v = c_[n] * c0;
        if (n > 0) v += c_[n - 1] * c1;
        c_[n] = std::move(v);
    }
}

void XSeries::shift(int s) {
    for (int n = trunc_; n >= 0; --n) c_[n] = (n >= s) ? std::move(c_[n - s]) : QPoly();
}

XSeries XSeries::reciprocal() const {
    if (!c_[0].is_constant() || c_[0].is_zero())
        throw std::domain_error("series reciprocal needs a nonzero constant term");
    Rat inv0 = 1 / c_[0].coeff(0);
    XSeries r(trunc_);
    r.c_[0] = QPoly(inv0);
    for (int n = 1; n <= trunc_; ++n) {
        QPoly acc;
        for (int i = 1; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            acc += c_[i] * r.c_[n - i];
        }
        QPoly v;
        for (const auto& [deg, val] : acc.coeffs())
            v += QPoly::monomial(deg, -val * inv0);
        r.c_[n] = std::move(v);
    }
    return r;
}

WeightSpec WeightSpec::all_ones() {
    return {[](int) { return QPoly(1); }};
}

WeightSpec WeightSpec::height_one() {
    return {[](int i) { return i == 1 ? QPoly::monomial(1) : QPoly(1); }};
}

WeightSpec WeightSpec::total_height() {
    return {[](int i) { return QPoly::monomial(i); }};
}

WeightSpec WeightSpec::max_cutoff(int h) {
    return {[h](int i) { return i <= h ? QPoly(1) : QPoly(); }};
}

WeightSpec WeightSpec::all_q() {
    return {[](int) { return QPoly::monomial(1); }};
}

namespace {

// Shared numerator factor for x-degree j of both product forms:
// q_1 + x(q_2 + .. + q_{j-1} - (j-2) q_1).
void numerator_coeffs(int j, const WeightSpec& w, QPoly& c0, QPoly& c1) {
    c0 = w.at(1);
    c1 = QPoly();
    for (int i = 2; i <= j - 1; ++i) c1 += w.at(i);
    for (int t = 0; t < j - 2; ++t) c1 -= w.at(1);
}

}  // namespace

XSeries strong_series(int k, int N, const WeightSpec& w) {
    if (k < 0) throw std::invalid_argument("negative block count");
    if (N < k) throw std::invalid_argument("truncation order below block count");
    XSeries s = XSeries::one(N);
    for (int j = 2; j <= k; ++j) {
        QPoly c0, c1;
        numerator_coeffs(j, w, c0, c1);
        s.mul_linear(c0, c1);
    }
    for (int j = 1; j <= k; ++j) {
        XSeries d = XSeries::one(N);
        d.mul_linear(QPoly(1), QPoly(-j));  // 1 - jx
        s = s * d.reciprocal();
    }
    s.shift(k);
    return s;
}

XSeries weak_series(int k, int N, const WeightSpec& w) {
    if (k < 0) throw std::invalid_argument("negative block count");
    if (N < k) throw std::invalid_argument("truncation order below block count");
    XSeries s = XSeries::one(N);
    for (int j = 2; j <= k; ++j) {
        QPoly c0, c1;
        numerator_coeffs(j, w, c0, c1);
        s.mul_linear(c0, c1);
    }
    for (int j = 1; j <= k; ++j) {
        // (1-x)(1-(j-1)x) - x^2 (q_1 + .. + q_{j-1})
        QPoly qsum;
        for (int i = 1; i <= j - 1; ++i) qsum += w.at(i);
        XSeries d(N);
        d.at(0) = QPoly(1);
        d.at(1) = QPoly(-j);
        if (N >= 2) d.at(2) = QPoly(j - 1) - qsum;
        s = s * d.reciprocal();
    }
    s.shift(k);
    return s;
}

const QPoly& coeff(const XSeries& s, int n) { return s[n]; }

Rat coeff_qr(const XSeries& s, int n, int r) {
    if (r < 0) throw std::invalid_argument("negative q-degree");
    return s[n].coeff(r);
}

XSeries q_derivative_at_one(const XSeries& s) {
    XSeries d(s.trunc());
    for (int n = 0; n <= s.trunc(); ++n) d.at(n) = QPoly(s[n].derivative_at_one());
    return d;
}

std::vector<std::vector<Int>> weak_h1_total_table(int N, const NumberTables& tables) {
    // W_k(x) = d/dq Q_k(x; q, 1, .., 1) at q=1 satisfies
    //   (1 - kx) W_k = x^2 S_k + x (1 - (k-2)x) S_{k-1} + x W_{k-1},
    // where S_k(x) is the Stirling column series; W_0 = W_1 = 0.
    std::vector<std::vector<Int>> w(static_cast<size_t>(N) + 1,
                                    std::vector<Int>(static_cast<size_t>(N) + 1, 0));
    for (int k = 2; k <= N; ++k) {
        for (int n = 1; n <= N; ++n) {
            Int v = k * w[k][n - 1];
            v += tables.stirling2(n - 2, k);
            v += tables.stirling2(n - 1, k - 1);
            v -= (k - 2) * tables.stirling2(n - 2, k - 1);
            v += w[k - 1][n - 1];
            w[k][n] = std::move(v);
        }
    }
    return w;
}

Int weak_h1_total_exact(int n, int k, const NumberTables& tables) {
    if (k < 2 || n < k) return 0;
    auto table = weak_h1_total_table(n, tables);
    return table[k][n];
}

Int weak_h1_total_all_exact(int n, const NumberTables& tables) {
    if (n < 0) return 0;
    auto table = weak_h1_total_table(n, tables);
    Int total = 0;
    for (int k = 0; k <= n; ++k) total += table[k][n];
    return total;
}

}  // namespace recpart
