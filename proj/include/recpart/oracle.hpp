#pragma once

#include <map>

#include "recpart/combinum.hpp"
#include "recpart/rgf.hpp"

namespace recpart {

constexpr int kDefaultOracleCap = 12;

/// Everything the exhaustive pass over P_{n,k} collects. Height-0 record
/// events are never counted here; the r-maps have no stored zero entries.
struct StatBundle {
    int n = 0, k = 0;
    Int count = 0;
    std::map<int, Int> strong_h1_by_r;  // r -> #partitions with exactly r
    std::map<int, Int> weak_h1_by_r;    //      height-1 records of the kind
    Int strong_total_height = 0;
    Int weak_total_height = 0;
    std::map<int, Int> max_height_at_most;  // cumulative in h
    std::map<int, Int> max_height_exact;

    /// Componentwise sum; n is kept, k becomes -1 when mixing block counts.
    void merge(const StatBundle& other);

    /// Folds one word into the bundle.
    void add_word(const Rgf& r);

    /// Rebuilds the cumulative max-height map from the exact one,
    /// covering h = 0 .. hmax.
    void finalize_at_most(int hmax);

    Int strong_h1_total() const;  // sum of r * strong_h1_by_r[r]
    Int weak_h1_total() const;
};

struct CapExceeded : std::invalid_argument {
    CapExceeded(int n, int cap);
};

/// Single pass over P_{n,k}. threads > 1 folds prefix chunks concurrently;
/// the result is identical to the sequential fold.
StatBundle oracle_stats(int n, int k, int cap = kDefaultOracleCap, int threads = 1);

/// Componentwise sum of oracle_stats(n, k) over k = 0..n.
StatBundle oracle_stats_all(int n, int cap = kDefaultOracleCap, int threads = 1);

}  // namespace recpart
