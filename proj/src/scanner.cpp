#include "wordtrie/scanner.hpp"

#include <cassert>

namespace wordtrie {

namespace {

// End condition of the match-validity rule for a candidate ending at j.
inline bool end_ok(const BoundaryConfig& cfg, std::u32string_view text, std::size_t j) {
    return j == text.size() || cfg.is_boundary(text[j]) || cfg.is_boundary(text[j - 1]);
}

// Shared scan loop. Visits candidate start positions left to right, walks
// the trie with lookahead from each, and emits the deepest terminal whose
// end condition holds. Positions strictly inside a word-character run can
// never satisfy the start condition, so a failed walk from a word start
// skips the rest of the run (each character is still touched at most a
// constant number of times).
template <typename Emit>
void scan(const KeywordDict& dict, std::u32string_view text, Emit&& emit) {
    const std::uint32_t root = dict.root_node();
    const BoundaryConfig& cfg = dict.config();
    const std::size_t n = text.size();

    std::size_t i = 0;
    while (i < n) {
        assert(i == 0 || cfg.is_boundary(text[i - 1]) || cfg.is_boundary(text[i]));

        std::uint32_t node = root;
        std::size_t best_end = 0;
        const std::u32string* best = nullptr;
        for (std::size_t j = i; j < n;) {
            node = dict.step(node, cfg.fold(text[j]));
            if (node == KeywordDict::npos) break;
            ++j;
            if (const std::u32string* p = dict.payload(node); p && end_ok(cfg, text, j)) {
                best_end = j;
                best = p;
            }
        }

        if (best) {
            emit(i, best_end, *best);
            // The end condition guarantees the resume point qualifies as
            // a start again.
            i = best_end;
        } else if (cfg.is_word_char(text[i])) {
            do {
                ++i;
            } while (i < n && cfg.is_word_char(text[i]));
        } else {
            ++i;
        }
    }
}

}  // namespace

std::vector<MatchSpan> extract_spans(const KeywordDict& dict, std::u32string_view text) {
    std::vector<MatchSpan> out;
    scan(dict, text, [&](std::size_t start, std::size_t end, const std::u32string& name) {
        out.push_back(MatchSpan{start, end, name});
    });
    return out;
}

std::vector<std::u32string> extract_keywords(const KeywordDict& dict, std::u32string_view text) {
    std::vector<std::u32string> out;
    scan(dict, text, [&](std::size_t, std::size_t, const std::u32string& name) {
        out.push_back(name);
    });
    return out;
}

}  // namespace wordtrie
