#pragma once

#include <span>
#include <string>
#include <string_view>

#include "wordtrie/dict.hpp"
#include "wordtrie/scanner.hpp"

namespace wordtrie {

/// Substitutes each span's slice with its standardized name, left to
/// right; characters outside spans are copied verbatim. Spans must be
/// sorted, pairwise disjoint and within bounds, otherwise
/// InvalidSpansError is thrown. The output length is
/// |text| - sum(end - start) + sum(|standardized|).
std::u32string splice(std::u32string_view text, std::span<const MatchSpan> spans);

/// Copy of the input with every matched keyword replaced by its
/// standardized name. Equivalent to splice(text, extract_spans(dict, text)).
/// Single pass; the output is never rescanned.
std::u32string replace_keywords(const KeywordDict& dict, std::u32string_view text);

/// UTF-8 convenience wrapper around replace_keywords.
std::string replace_keywords_utf8(const KeywordDict& dict, std::string_view text_utf8);

}  // namespace wordtrie
