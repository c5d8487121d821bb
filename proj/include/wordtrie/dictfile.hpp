#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordtrie/dict.hpp"

namespace wordtrie {

/// Dictionary file layouts. Both are UTF-8; `#` lines and blank lines
/// are ignored and fields are trimmed of surrounding whitespace.
///   plain:  one keyword per line, standardized name = keyword
///   mapped: `standardized=>synonym1,synonym2,...` with exactly one `=>`
enum class DictFormat { plain, mapped };

/// Parses file contents into entries in file order. Later duplicates
/// override earlier ones on insertion. Throws ParseError with the
/// offending 1-based line number.
std::vector<KeywordEntry> parse_dict_file(std::string_view contents, DictFormat format);

/// Writes entries in the mapped format, grouping synonyms under each
/// standardized name in first-appearance order. parse_dict_file of the
/// result reproduces a normalized entry list.
std::string serialize_dict_file(std::span<const KeywordEntry> entries);

}  // namespace wordtrie
