#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordtrie/dict.hpp"
#include "wordtrie/scanner.hpp"

namespace wordtrie {

/// Brute-force reference extraction: every candidate start position is
/// tested against every keyword by direct slice comparison, so the cost
/// grows linearly with the number of keywords. Shares no scanning code
/// with extract_spans; used as the property-test reference and as the
/// naive timing baseline.
///
/// Duplicate keywords (after folding) collapse to the last entry's
/// standardized name, mirroring dictionary insertion.
std::vector<MatchSpan> oracle_extract(std::span<const KeywordEntry> entries,
                                      const BoundaryConfig& config,
                                      std::u32string_view text);

/// splice(text, oracle_extract(entries, config, text)).
std::u32string oracle_replace(std::span<const KeywordEntry> entries,
                              const BoundaryConfig& config,
                              std::u32string_view text);

/// Builds the classic alternation pattern `\b(?:k1|k2|...|kn)\b` with
/// keywords escaped and ordered longest first (ties lexicographic), so
/// engines that try alternatives in order pick the longest match.
/// Every keyword must begin and end with a regex word character
/// ([A-Za-z0-9_]); the word-boundary anchor is meaningless elsewhere.
std::string emit_regex_pattern(std::span<const KeywordEntry> entries);

}  // namespace wordtrie
