#include "wordtrie/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "wordtrie/replacer.hpp"
#include "wordtrie/unicode.hpp"

namespace wordtrie {

namespace {

// Keywords flattened into one buffer; keeps the per-position sweep over
// all entries cache-friendly when the entry count is large.
struct FlatEntries {
    std::u32string keys;
    struct Item {
        std::uint32_t offset;
        std::uint32_t length;
        std::uint32_t payload;
    };
    std::vector<Item> items;
    std::vector<std::u32string> payloads;
};

FlatEntries flatten(std::span<const KeywordEntry> entries, const BoundaryConfig& config) {
    // Last entry wins per folded keyword, mirroring dictionary insertion.
    std::map<std::u32string, std::u32string> canonical;
    for (const KeywordEntry& e : entries) {
        if (e.keyword.empty()) continue;
        canonical.insert_or_assign(config.fold_copy(e.keyword), e.standardized);
    }

    FlatEntries flat;
    flat.items.reserve(canonical.size());
    flat.payloads.reserve(canonical.size());
    for (auto& [keyword, standardized] : canonical) {
        flat.items.push_back({static_cast<std::uint32_t>(flat.keys.size()),
                              static_cast<std::uint32_t>(keyword.size()),
                              static_cast<std::uint32_t>(flat.payloads.size())});
        flat.keys += keyword;
        flat.payloads.push_back(std::move(standardized));
    }
    return flat;
}

}  // namespace

std::vector<MatchSpan> oracle_extract(std::span<const KeywordEntry> entries,
                                      const BoundaryConfig& config,
                                      std::u32string_view text) {
    const FlatEntries flat = flatten(entries, config);

    // Boundary classification looks at the original characters; only the
    // slice comparison is folded.
    std::u32string folded_storage;
    std::u32string_view haystack = text;
    if (config.case_insensitive()) {
        folded_storage = config.fold_copy(text);
        haystack = folded_storage;
    }

    const std::size_t n = text.size();
    std::vector<MatchSpan> out;
    std::size_t i = 0;
    while (i < n) {
        // A valid match needs a text edge or boundary character adjacent
        // to its start, regardless of which keyword it is.
        if (!(i == 0 || config.is_boundary(text[i - 1]) || config.is_boundary(text[i]))) {
            ++i;
            continue;
        }
        std::size_t best_len = 0;
        std::uint32_t best_payload = 0;
        for (const FlatEntries::Item& item : flat.items) {
            const std::size_t len = item.length;
            if (i + len > n) continue;
            const char32_t* key = flat.keys.data() + item.offset;
            std::size_t t = 0;
            while (t < len && haystack[i + t] == key[t]) ++t;
            if (t != len) continue;
            const std::size_t j = i + len;
            if (!(j == n || config.is_boundary(text[j]) || config.is_boundary(text[j - 1]))) {
                continue;
            }
            if (len > best_len) {
                best_len = len;
                best_payload = item.payload;
            }
        }
        if (best_len == 0) {
            ++i;
            continue;
        }
        out.push_back(MatchSpan{i, i + best_len, flat.payloads[best_payload]});
        i += best_len;
    }
    return out;
}

std::u32string oracle_replace(std::span<const KeywordEntry> entries,
                              const BoundaryConfig& config,
                              std::u32string_view text) {
    return splice(text, oracle_extract(entries, config, text));
}

std::string emit_regex_pattern(std::span<const KeywordEntry> entries) {
    if (entries.empty()) throw EmptyAlternationError("no keywords to build a pattern from");

    const auto is_regex_word_char = [](char32_t c) {
        return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
               (c >= U'0' && c <= U'9') || c == U'_';
    };

    std::vector<std::u32string> keywords;
    keywords.reserve(entries.size());
    for (const KeywordEntry& e : entries) {
        if (e.keyword.empty() || !is_regex_word_char(e.keyword.front()) ||
            !is_regex_word_char(e.keyword.back())) {
            throw UnsupportedKeywordError(
                "keyword \"" + encode_utf8(e.keyword) +
                "\" does not begin and end with a word character");
        }
        keywords.push_back(e.keyword);
    }

    // Longest first so ordered alternation prefers the longest match;
    // lexicographic within a length, duplicates dropped.
    std::sort(keywords.begin(), keywords.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    keywords.erase(std::unique(keywords.begin(), keywords.end()), keywords.end());

    constexpr std::string_view metacharacters = R"(\^$.|?*+()[]{})";
    std::string pattern = R"(\b(?:)";
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        if (i != 0) pattern += '|';
        for (char byte : encode_utf8(keywords[i])) {
            if (metacharacters.find(byte) != std::string_view::npos) pattern += '\\';
            pattern += byte;
        }
    }
    pattern += R"()\b)";
    return pattern;
}

}  // namespace wordtrie
