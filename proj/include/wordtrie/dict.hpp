#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wordtrie/error.hpp"

namespace wordtrie {

/// The default word-character set: ASCII letters, digits and underscore
/// (63 scalars). Everything else is a boundary character.
inline constexpr std::u32string_view kDefaultWordChars =
    U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";

/// Decides which scalar values count as word characters and whether
/// matching folds case. A scalar is a boundary character exactly when it
/// is not a word character.
class BoundaryConfig {
public:
    /// Default word characters, case-sensitive.
    BoundaryConfig() { set_word_chars(kDefaultWordChars); }

    BoundaryConfig& set_word_chars(std::u32string_view chars);
    BoundaryConfig& add_word_chars(std::u32string_view chars);
    BoundaryConfig& set_case_insensitive(bool on) {
        case_insensitive_ = on;
        return *this;
    }

    bool is_word_char(char32_t c) const noexcept {
        if (c < 128) return ascii_[c];
        return extra_.contains(c);
    }
    bool is_boundary(char32_t c) const noexcept { return !is_word_char(c); }

    bool case_insensitive() const noexcept { return case_insensitive_; }
    std::size_t word_char_count() const noexcept { return count_; }

    /// Per-scalar fold applied to keyword and text characters before
    /// comparison; the identity in case-sensitive mode.
    char32_t fold(char32_t c) const noexcept;
    std::u32string fold_copy(std::u32string_view s) const;

private:
    std::array<bool, 128> ascii_{};
    std::unordered_set<char32_t> extra_;
    std::size_t count_ = 0;
    bool case_insensitive_ = false;
};

/// One keyword and the standardized name it maps to. Both must be
/// non-empty sequences of scalar values.
struct KeywordEntry {
    std::u32string keyword;
    std::u32string standardized;

    friend bool operator==(const KeywordEntry&, const KeywordEntry&) = default;
};

/// Trie keyword dictionary. Keywords are stored as character paths whose
/// terminal nodes carry the standardized name. The dictionary is built
/// with add/remove, then frozen; scanning requires a frozen dictionary,
/// which is immutable and safe to share across threads.
class KeywordDict {
public:
    /// Invalid node handle returned by step().
    static constexpr std::uint32_t npos = 0xffffffffu;

    explicit KeywordDict(BoundaryConfig config = BoundaryConfig());

    /// Inserts a keyword (folded per config). Returns true when the
    /// keyword was not present before; re-adding overwrites the
    /// standardized name and returns false.
    bool add(std::u32string_view keyword, std::u32string_view standardized);
    bool add(std::string_view keyword_utf8, std::string_view standardized_utf8);
    bool add(const KeywordEntry& entry) { return add(entry.keyword, entry.standardized); }

    /// Inserts every (synonym, standardized) pair in order; returns the
    /// number of new insertions. An empty synonym list is an error, and
    /// entry errors abort at the first failure.
    std::size_t add_mapping(std::u32string_view standardized,
                            std::span<const std::u32string> synonyms);

    /// Removes a keyword and prunes any nodes left without children or
    /// payload. Returns whether a removal happened.
    bool remove(std::u32string_view keyword);

    /// Looks up the standardized name stored at the exact (folded) path.
    std::optional<std::u32string> get(std::u32string_view keyword) const;

    /// Makes the dictionary immutable and compiles the trie into a
    /// compact scan-friendly layout. Idempotent; lookups and count are
    /// unchanged.
    void freeze();

    std::size_t size() const noexcept { return count_; }
    bool frozen() const noexcept { return frozen_; }
    const BoundaryConfig& config() const noexcept { return config_; }

    /// Frozen-trie walk interface used by the scanner. root_node()
    /// throws NotFrozenError on an unfrozen dictionary; node handles are
    /// valid until the dictionary is destroyed.
    std::uint32_t root_node() const;
    std::uint32_t step(std::uint32_t node, char32_t folded_scalar) const noexcept;
    const std::u32string* payload(std::uint32_t node) const noexcept;

    /// Structural self-check: no node is both childless and payload-free,
    /// and the stored count matches the number of terminal nodes.
    bool check_invariants() const;

private:
    struct BuildNode {
        std::map<char32_t, BuildNode> children;
        std::optional<std::u32string> payload;
    };

    void require_unfrozen() const;

    BoundaryConfig config_;
    BuildNode root_;
    std::size_t count_ = 0;
    bool frozen_ = false;

    // Frozen layout: nodes in breadth-first order; node n owns edges
    // [first_edge_[n], first_edge_[n + 1]), sorted by label.
    std::vector<std::uint32_t> first_edge_;
    std::vector<char32_t> labels_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::int32_t> payload_of_;
    std::vector<std::u32string> payloads_;
};

}  // namespace wordtrie
