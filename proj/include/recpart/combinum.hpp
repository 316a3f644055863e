#pragma once

#include <atomic>
#include <mutex>
#include <deque>
#include <vector>
#include <stdexcept>

#include <gmpxx.h>

namespace recpart {

using Int = mpz_class;
using Rat = mpq_class;

/// Memoized triangles of Stirling numbers (both kinds) and the Bell
/// sequence over arbitrary-precision integers. Rows are grown on demand;
/// a fully built row is published before it becomes readable, after which
/// all reads are concurrent and lock-free.
class NumberTables {
public:
    explicit NumberTables(long initial_rows = 32, long row_cap = 100000);

    /// S_{n,k}. Zero for k < 0, n < 0 or k > n.
    const Int& stirling2(long n, long k) const;

    /// Signed s_{n,k}. Zero outside the triangle.
    const Int& stirling1_signed(long n, long k) const;

    /// |s_{n,k}|.
    Int stirling1_unsigned(long n, long k) const;

    /// B_n, n >= 0.
    const Int& bell(long n) const;

    long max_n() const { return s2_built_.load(std::memory_order_acquire) - 1; }

    /// Grows all three tables through row n. Concurrent readers must not
    /// overlap with growth; call this before fanning out to workers.
    void reserve(long n) const;

    /// Fault-injection hook for verifier tests only: adds delta to a
    /// published S_{n,k} entry.
    void perturb_stirling2(long n, long k, const Int& delta);

private:
    void grow_s2(long n) const;
    void grow_s1(long n) const;
    void grow_bell(long n) const;

    long row_cap_;
    // deque rows never relocate, so published rows stay valid for readers
    mutable std::deque<std::vector<Int>> s2_, s1_;
    mutable std::deque<Int> bell_;
    mutable std::atomic<long> s2_built_{0}, s1_built_{0}, bell_built_{0};
    mutable std::mutex grow_mutex_;
    static const Int zero_;
};

/// Pascal-convention binomial coefficient: 0 if k < 0 or (n >= 0 and k > n);
/// C(n,0) = 1 for every integer n, including negatives.
Int binomial(long n, long k);

/// Falling-factorial binomial: n(n-1)...(n-k+1)/k! for k >= 0 and any
/// integer n (e.g. C(-1,2) = 1). Zero for k < 0.
Int binomial_falling(long n, long k);

/// Thrown when table growth would exceed the configured row cap.
struct TableCapExceeded : std::runtime_error {
    explicit TableCapExceeded(long n);
};

}  // namespace recpart
