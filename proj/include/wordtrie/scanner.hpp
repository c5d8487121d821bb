#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordtrie/dict.hpp"

namespace wordtrie {

/// One extracted occurrence. Offsets count Unicode scalar values in the
/// scanned text; the slice [start, end), folded per the dictionary
/// config, spells a stored keyword.
struct MatchSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::u32string standardized;

    friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

/// Extracts all non-overlapping, leftmost-longest, whole-word matches in
/// ascending start order. An occurrence text[i..j) is valid when
///   i == 0        or a boundary character sits at i-1 or i, and
///   j == |text|   or a boundary character sits at j or j-1.
/// Candidate starts are scanned left to right; at the first start with a
/// valid match the longest one wins and scanning resumes at its end.
///
/// One forward pass with bounded lookahead: O(|text| * L) worst case for
/// longest keyword length L, O(|text|) when lookaheads are short, and
/// independent of the number of stored keywords.
std::vector<MatchSpan> extract_spans(const KeywordDict& dict, std::u32string_view text);

/// The standardized names of extract_spans, in order, duplicates kept.
std::vector<std::u32string> extract_keywords(const KeywordDict& dict, std::u32string_view text);

}  // namespace wordtrie
