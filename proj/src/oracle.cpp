#include "recpart/oracle.hpp"

#include <atomic>
#include <thread>

namespace recpart {

CapExceeded::CapExceeded(int n, int cap)
    : std::invalid_argument("enumeration n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap)) {}

void StatBundle::add_word(const Rgf& r) {
    count += 1;
    int strong_h1 = 0, weak_h1 = 0, max_h = 0;
    long strong_sum = 0, weak_sum = 0;
    for (const auto& e : strong_records(r)) {
        if (e.height >= 1) {
            strong_sum += e.height;
            if (e.height == 1) ++strong_h1;
            max_h = std::max(max_h, e.height);
        }
    }
    for (const auto& e : weak_records(r)) {
        if (e.height >= 1) {
            weak_sum += e.height;
            if (e.height == 1) ++weak_h1;
        }
    }
    strong_h1_by_r[strong_h1] += 1;
    weak_h1_by_r[weak_h1] += 1;
    strong_total_height += strong_sum;
    weak_total_height += weak_sum;
    max_height_exact[max_h] += 1;
}

namespace {

void drop_zeros(std::map<int, Int>& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}

}  // namespace

void StatBundle::finalize_at_most(int hmax) {
    drop_zeros(strong_h1_by_r);
    drop_zeros(weak_h1_by_r);
    drop_zeros(max_height_exact);
    max_height_at_most.clear();
    Int running = 0;
    for (int h = 0; h <= hmax; ++h) {
        auto it = max_height_exact.find(h);
        if (it != max_height_exact.end()) running += it->second;
        max_height_at_most[h] = running;
    }
}

void StatBundle::merge(const StatBundle& other) {
    if (k != other.k) k = -1;
    count += other.count;
    for (const auto& [r, c] : other.strong_h1_by_r) strong_h1_by_r[r] += c;
    for (const auto& [r, c] : other.weak_h1_by_r) weak_h1_by_r[r] += c;
    strong_total_height += other.strong_total_height;
    weak_total_height += other.weak_total_height;
    for (const auto& [h, c] : other.max_height_exact) max_height_exact[h] += c;
    int hmax = 0;
    if (!max_height_at_most.empty()) hmax = max_height_at_most.rbegin()->first;
    if (!other.max_height_at_most.empty())
        hmax = std::max(hmax, other.max_height_at_most.rbegin()->first);
    finalize_at_most(hmax);
}

Int StatBundle::strong_h1_total() const {
    Int total = 0;
    for (const auto& [r, c] : strong_h1_by_r) total += r * c;
    return total;
}

Int StatBundle::weak_h1_total() const {
    Int total = 0;
    for (const auto& [r, c] : weak_h1_by_r) total += r * c;
    return total;
}

StatBundle oracle_stats(int n, int k, int cap, int threads) {
    if (n > cap) throw CapExceeded(n, cap);
    StatBundle bundle;
    bundle.n = n;
    bundle.k = k;
    if (k == 0) {
        // empty-partition row: one empty partition when n = 0, else nothing
        if (n == 0) bundle.count = 1;
        bundle.finalize_at_most(0);
        return bundle;
    }
    if (k < 0 || k > n) {
        bundle.finalize_at_most(0);
        return bundle;
    }
    if (threads <= 1 || n < 4) {
        enumerate(n, k, [&](const Rgf& r) { bundle.add_word(r); });
        bundle.finalize_at_most(std::max(k - 1, 0));
        return bundle;
    }
    auto chunks = prefix_chunks(n, k, std::min(3, n));
    std::vector<StatBundle> partials(chunks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < chunks.size(); i = next.fetch_add(1)) {
            partials[i].n = n;
            partials[i].k = k;
            enumerate_with_prefix(n, k, chunks[i],
                                  [&](const Rgf& r) { partials[i].add_word(r); });
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& p : partials) {
        // fold raw fields in canonical chunk order
        bundle.count += p.count;
        for (const auto& [r, c] : p.strong_h1_by_r) bundle.strong_h1_by_r[r] += c;
        for (const auto& [r, c] : p.weak_h1_by_r) bundle.weak_h1_by_r[r] += c;
        bundle.strong_total_height += p.strong_total_height;
        bundle.weak_total_height += p.weak_total_height;
        for (const auto& [h, c] : p.max_height_exact) bundle.max_height_exact[h] += c;
    }
    bundle.finalize_at_most(std::max(k - 1, 0));
    return bundle;
}

StatBundle oracle_stats_all(int n, int cap, int threads) {
    if (n > cap) throw CapExceeded(n, cap);
    StatBundle bundle = oracle_stats(n, 0, cap, threads);
    for (int k = 1; k <= n; ++k) bundle.merge(oracle_stats(n, k, cap, threads));
    bundle.n = n;
    bundle.k = -1;
    bundle.finalize_at_most(std::max(n - 1, 0));
    return bundle;
}

}  // namespace recpart
