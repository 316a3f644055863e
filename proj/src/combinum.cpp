#include "recpart/combinum.hpp"

namespace recpart {

const Int NumberTables::zero_ = 0;

TableCapExceeded::TableCapExceeded(long n)
    : std::runtime_error("number table growth beyond row cap at n=" + std::to_string(n)) {}

NumberTables::NumberTables(long initial_rows, long row_cap) : row_cap_(row_cap) {
    grow_s2(initial_rows);
    grow_s1(initial_rows);
    grow_bell(initial_rows);
}

void NumberTables::grow_s2(long n) const {
    std::lock_guard<std::mutex> lock(grow_mutex_);
    long built = s2_built_.load(std::memory_order_relaxed);
    if (n < built) return;
    if (n >= row_cap_) throw TableCapExceeded(n);
    long target = std::min(std::max(n + 1, 2 * built), row_cap_);
    for (long m = built; m < target; ++m) {
        std::vector<Int> row(static_cast<size_t>(m) + 1);
        if (m == 0) {
            row[0] = 1;
        } else {
            // S_{m,k} = k S_{m-1,k} + S_{m-1,k-1}
            for (long k = 1; k <= m; ++k) {
                row[k] = s2_[m - 1][k - 1];
                if (k < m) row[k] += k * s2_[m - 1][k];
            }
        }
        s2_.push_back(std::move(row));
    }
    s2_built_.store(target, std::memory_order_release);
}

void NumberTables::grow_s1(long n) const {
    std::lock_guard<std::mutex> lock(grow_mutex_);
    long built = s1_built_.load(std::memory_order_relaxed);
    if (n < built) return;
    if (n >= row_cap_) throw TableCapExceeded(n);
    long target = std::min(std::max(n + 1, 2 * built), row_cap_);
    for (long m = built; m < target; ++m) {
        std::vector<Int> row(static_cast<size_t>(m) + 1);
        if (m == 0) {
            row[0] = 1;
        } else {
            // s_{m,k} = -(m-1) s_{m-1,k} + s_{m-1,k-1}
            for (long k = 1; k <= m; ++k) {
                row[k] = s1_[m - 1][k - 1];
                if (k < m) row[k] -= (m - 1) * s1_[m - 1][k];
            }
        }
        s1_.push_back(std::move(row));
    }
    s1_built_.store(target, std::memory_order_release);
}

void NumberTables::grow_bell(long n) const {
    std::lock_guard<std::mutex> lock(grow_mutex_);
    long built = bell_built_.load(std::memory_order_relaxed);
    if (n < built) return;
    if (n >= row_cap_) throw TableCapExceeded(n);
    long target = std::min(std::max(n + 1, 2 * built), row_cap_);
    // B_{m+1} = sum_k C(m,k) B_k
    for (long m = built; m < target; ++m) {
        if (m == 0) {
            bell_.push_back(1);
            continue;
        }
        Int next = 0;
        Int binom = 1;  // C(m-1, k) updated multiplicatively
        for (long k = 0; k <= m - 1; ++k) {
            next += binom * bell_[k];
            binom = binom * (m - 1 - k) / (k + 1);
        }
        bell_.push_back(std::move(next));
    }
    bell_built_.store(target, std::memory_order_release);
}

void NumberTables::reserve(long n) const {
    if (n >= s2_built_.load(std::memory_order_acquire)) grow_s2(n);
    if (n >= s1_built_.load(std::memory_order_acquire)) grow_s1(n);
    if (n >= bell_built_.load(std::memory_order_acquire)) grow_bell(n);
}

const Int& NumberTables::stirling2(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (n >= s2_built_.load(std::memory_order_acquire)) grow_s2(n);
    return s2_[n][k];
}

const Int& NumberTables::stirling1_signed(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (n >= s1_built_.load(std::memory_order_acquire)) grow_s1(n);
    return s1_[n][k];
}

Int NumberTables::stirling1_unsigned(long n, long k) const {
    return abs(stirling1_signed(n, k));
}

const Int& NumberTables::bell(long n) const {
    if (n < 0) return zero_;
    if (n >= bell_built_.load(std::memory_order_acquire)) grow_bell(n);
    return bell_[n];
}

void NumberTables::perturb_stirling2(long n, long k, const Int& delta) {
    stirling2(n, k);  // force the row to exist
    std::lock_guard<std::mutex> lock(grow_mutex_);
    s2_[n][k] += delta;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        return r;
    }
    return k == 0 ? Int(1) : Int(0);
}

Int binomial_falling(long n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= Int(n - i);
    Int den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    Int q = num / den;  // always exact: k! divides any k consecutive integers
    return q;
}

}  // namespace recpart
