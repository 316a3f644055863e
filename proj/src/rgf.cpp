#include "recpart/rgf.hpp"

#include <algorithm>
#include <sstream>

namespace recpart {

NotAnRgf::NotAnRgf(int position_, std::string reason_)
    : std::invalid_argument("not an RGF at position " + std::to_string(position_) +
                            ": " + reason_),
      position(position_),
      reason(std::move(reason_)) {}

BadBlockPartition::BadBlockPartition(std::string reason)
    : std::invalid_argument("malformed block partition: " + std::move(reason)) {}

Rgf validate(const std::vector<int>& word) {
    if (word.empty()) throw NotAnRgf(1, "empty word");
    if (word[0] != 1) throw NotAnRgf(1, "first symbol must be 1");
    int maxv = 1;
    for (size_t i = 1; i < word.size(); ++i) {
        int v = word[i];
        if (v < 1)
            throw NotAnRgf(static_cast<int>(i) + 1, "symbol must be positive");
        if (v > maxv + 1)
            throw NotAnRgf(static_cast<int>(i) + 1,
                           "value " + std::to_string(v) + " exceeds 1 + max prefix " +
                               std::to_string(maxv));
        maxv = std::max(maxv, v);
    }
    return Rgf{word, maxv};
}

Rgf parse_rgf(const std::string& text) {
    std::vector<int> word;
    if (text.find(' ') != std::string::npos) {
        std::istringstream in(text);
        int v;
        while (in >> v) word.push_back(v);
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw NotAnRgf(1, "non-digit in compact word");
            word.push_back(c - '0');
        }
    }
    return validate(word);
}

std::string format_word(const std::vector<int>& word, int k) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (k > 9 && i > 0) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

BlockPartition to_blocks(const Rgf& r) {
    BlockPartition p;
    p.blocks.resize(r.k);
    for (int i = 0; i < r.n(); ++i) p.blocks[r.word[i] - 1].push_back(i + 1);
    return p;
}

Rgf from_blocks(const BlockPartition& p) {
    size_t n = 0;
    for (const auto& b : p.blocks) {
        if (b.empty()) throw BadBlockPartition("empty block");
        n += b.size();
    }
    if (n == 0) throw BadBlockPartition("no blocks");
    std::vector<int> word(n, 0);
    int prev_min = 0;
    for (size_t bi = 0; bi < p.blocks.size(); ++bi) {
        int mn = *std::min_element(p.blocks[bi].begin(), p.blocks[bi].end());
        if (mn <= prev_min)
            throw BadBlockPartition("block minima not strictly increasing");
        prev_min = mn;
        for (int e : p.blocks[bi]) {
            if (e < 1 || static_cast<size_t>(e) > n)
                throw BadBlockPartition("element " + std::to_string(e) +
                                        " outside [n]");
            if (word[e - 1] != 0)
                throw BadBlockPartition("element " + std::to_string(e) +
                                        " in two blocks");
            word[e - 1] = static_cast<int>(bi) + 1;
        }
    }
    return validate(word);
}

std::vector<RecordEvent> strong_records(const Rgf& r) {
    std::vector<RecordEvent> events;
    events.push_back({1, r.word[0], 0, RecordKind::strong});
    int maxv = r.word[0];
    for (int i = 1; i < r.n(); ++i) {
        if (r.word[i] > maxv) {
            events.push_back({i + 1, r.word[i], r.word[i] - r.word[i - 1],
                              RecordKind::strong});
            maxv = r.word[i];
        }
    }
    return events;
}

std::vector<RecordEvent> weak_records(const Rgf& r) {
    std::vector<RecordEvent> events;
    events.push_back({1, r.word[0], 0, RecordKind::weak});
    int maxv = r.word[0];
    for (int i = 1; i < r.n(); ++i) {
        if (r.word[i] >= maxv) {
            events.push_back({i + 1, r.word[i], r.word[i] - r.word[i - 1],
                              RecordKind::weak});
            maxv = r.word[i];
        }
    }
    return events;
}

namespace {

// Fills positions pos..n-1 in lexicographic order. Only words whose final
// maximum equals k are emitted; branches that can no longer reach k blocks
// are pruned.
void enum_rec(int n, int k, Rgf& buf, int pos, int curmax, const RgfVisitor& visit) {
    if (pos == n) {
        if (curmax == k) visit(buf);
        return;
    }
    int hi = std::min(curmax + 1, k);
    for (int v = 1; v <= hi; ++v) {
        int newmax = std::max(curmax, v);
        if (newmax + (n - pos - 1) < k) continue;
        buf.word[pos] = v;
        enum_rec(n, k, buf, pos + 1, newmax, visit);
    }
}

// Unconstrained variant for P_n: emits every RGF of length n.
void enum_all_rec(int n, Rgf& buf, int pos, int curmax, const RgfVisitor& visit) {
    if (pos == n) {
        buf.k = curmax;
        visit(buf);
        return;
    }
    for (int v = 1; v <= curmax + 1; ++v) {
        buf.word[pos] = v;
        enum_all_rec(n, buf, pos + 1, std::max(curmax, v), visit);
    }
}

}  // namespace

void enumerate(int n, int k, const RgfVisitor& visit) {
    if (n == 0 && k == 0) {
        Rgf empty{{}, 0};
        visit(empty);
        return;
    }
    if (k < 1 || k > n) return;
    Rgf buf;
    buf.word.assign(n, 0);
    buf.k = k;
    enum_rec(n, k, buf, 0, 0, visit);
}

void enumerate_all(int n, const RgfVisitor& visit) {
    if (n == 0) {
        Rgf empty{{}, 0};
        visit(empty);
        return;
    }
    Rgf buf;
    buf.word.assign(n, 0);
    enum_all_rec(n, buf, 0, 0, visit);
}

void enumerate_with_prefix(int n, int k, const std::vector<int>& prefix,
                           const RgfVisitor& visit) {
    if (static_cast<int>(prefix.size()) > n)
        throw std::invalid_argument("prefix longer than n");
    int curmax = 0;
    for (size_t i = 0; i < prefix.size(); ++i) {
        int v = prefix[i];
        if (v < 1 || v > curmax + 1)
            throw NotAnRgf(static_cast<int>(i) + 1, "invalid prefix");
        curmax = std::max(curmax, v);
    }
    if (curmax > k || curmax + (n - static_cast<int>(prefix.size())) < k) return;
    Rgf buf;
    buf.word.assign(n, 0);
    buf.k = k;
    std::copy(prefix.begin(), prefix.end(), buf.word.begin());
    enum_rec(n, k, buf, static_cast<int>(prefix.size()), curmax, visit);
}

std::vector<std::vector<int>> prefix_chunks(int n, int k, int len) {
    len = std::min(len, n);
    std::vector<std::vector<int>> chunks;
    if (k < 1 || k > n) return chunks;
    std::vector<int> prefix(len, 0);
    // depth-first over valid prefixes, lexicographic
    std::function<void(int, int)> rec = [&](int pos, int curmax) {
        if (pos == len) {
            chunks.push_back(prefix);
            return;
        }
        for (int v = 1; v <= std::min(curmax + 1, k); ++v) {
            int newmax = std::max(curmax, v);
            if (newmax + (n - pos - 1) < k) continue;
            prefix[pos] = v;
            rec(pos + 1, newmax);
        }
    };
    rec(0, 0);
    return chunks;
}

}  // namespace recpart
