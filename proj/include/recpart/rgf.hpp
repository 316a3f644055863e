#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace recpart {

/// A validated restricted growth function: word[0] = 1 and each later
/// symbol is at most 1 + the running maximum. k is the block count
/// (= max of the word).
struct Rgf {
    std::vector<int> word;
    int k = 0;

    int n() const { return static_cast<int>(word.size()); }
    bool operator==(const Rgf&) const = default;
};

/// Set partition of [n] in standard form: blocks ordered by their minima.
struct BlockPartition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const BlockPartition&) const = default;
};

enum class RecordKind { strong, weak };

/// One record occurrence in a word. height is value - word[position-2]
/// for position > 1 (1-based positions), and 0 at position 1.
struct RecordEvent {
    int position = 0;  // 1-based
    int value = 0;
    int height = 0;
    RecordKind kind = RecordKind::strong;

    bool operator==(const RecordEvent&) const = default;
};

struct NotAnRgf : std::invalid_argument {
    NotAnRgf(int position, std::string reason);
    int position;  // 1-based position of the first violation
    std::string reason;
};

struct BadBlockPartition : std::invalid_argument {
    explicit BadBlockPartition(std::string reason);
};

/// Validates a word, returning the Rgf or throwing NotAnRgf naming the
/// first violated condition and its position.
Rgf validate(const std::vector<int>& word);

/// Parses a compact word like "122132132" (single digits) or a
/// space-separated one like "1 2 2 10".
Rgf parse_rgf(const std::string& text);

BlockPartition to_blocks(const Rgf& r);
Rgf from_blocks(const BlockPartition& p);

std::vector<RecordEvent> strong_records(const Rgf& r);
std::vector<RecordEvent> weak_records(const Rgf& r);

/// One line per word; digits are concatenated for k <= 9 and
/// space-separated otherwise.
std::string format_word(const std::vector<int>& word, int k);

using RgfVisitor = std::function<void(const Rgf&)>;

/// Visits every word of P_{n,k} exactly once in lexicographic order.
/// The Rgf passed to the visitor is a reused buffer; copy it to keep it.
void enumerate(int n, int k, const RgfVisitor& visit);

/// Visits all of P_n (k = 0..n) in lexicographic word order.
void enumerate_all(int n, const RgfVisitor& visit);

/// Visits the words of P_{n,k} that extend the given valid prefix.
void enumerate_with_prefix(int n, int k, const std::vector<int>& prefix,
                           const RgfVisitor& visit);

/// All length-len prefixes that extend to at least one word of P_{n,k},
/// in lexicographic order. Splitting P_{n,k} by these prefixes yields
/// disjoint sub-streams that cover the set.
std::vector<std::vector<int>> prefix_chunks(int n, int k, int len);

}  // namespace recpart
