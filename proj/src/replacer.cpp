#include "wordtrie/replacer.hpp"

#include "wordtrie/unicode.hpp"

namespace wordtrie {

namespace {

void append_between(std::u32string& out, std::u32string_view text, std::size_t from,
                    std::size_t to) {
    out.append(text.data() + from, to - from);
}

}  // namespace

std::u32string splice(std::u32string_view text, std::span<const MatchSpan> spans) {
    std::size_t cursor = 0;
    std::size_t grow = 0, shrink = 0;
    for (const MatchSpan& s : spans) {
        if (s.start >= s.end || s.end > text.size()) {
            throw InvalidSpansError("span out of bounds or empty");
        }
        if (s.start < cursor) {
            throw InvalidSpansError("spans overlap or are unsorted");
        }
        cursor = s.end;
        grow += s.standardized.size();
        shrink += s.end - s.start;
    }

    std::u32string out;
    out.reserve(text.size() - shrink + grow);
    cursor = 0;
    for (const MatchSpan& s : spans) {
        append_between(out, text, cursor, s.start);
        out.append(s.standardized);
        cursor = s.end;
    }
    append_between(out, text, cursor, text.size());
    return out;
}

std::u32string replace_keywords(const KeywordDict& dict, std::u32string_view text) {
    return splice(text, extract_spans(dict, text));
}

std::string replace_keywords_utf8(const KeywordDict& dict, std::string_view text_utf8) {
    return encode_utf8(replace_keywords(dict, decode_utf8(text_utf8)));
}

}  // namespace wordtrie
