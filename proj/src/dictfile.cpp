#include "wordtrie/dictfile.hpp"

#include <map>

#include "wordtrie/unicode.hpp"

namespace wordtrie {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    };
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    return s.substr(begin, end - begin);
}

std::u32string decode_field(std::string_view field, std::size_t line_no) {
    try {
        return decode_utf8(field);
    } catch (const DecodeError& e) {
        throw ParseError(line_no, e.what());
    }
}

}  // namespace

std::vector<KeywordEntry> parse_dict_file(std::string_view contents, DictFormat format) {
    std::vector<KeywordEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= contents.size()) {
        const std::size_t eol = contents.find('\n', pos);
        const std::string_view raw = eol == std::string_view::npos
                                         ? contents.substr(pos)
                                         : contents.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? contents.size() + 1 : eol + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (format == DictFormat::plain) {
            const std::u32string keyword = decode_field(line, line_no);
            entries.push_back(KeywordEntry{keyword, keyword});
            continue;
        }

        const std::size_t sep = line.find("=>");
        if (sep == std::string_view::npos) {
            throw ParseError(line_no, "expected `standardized=>synonym1,synonym2,...`");
        }
        if (line.find("=>", sep + 2) != std::string_view::npos) {
            throw ParseError(line_no, "`=>` must appear exactly once");
        }
        const std::string_view standardized_raw = trim(line.substr(0, sep));
        if (standardized_raw.empty()) {
            throw ParseError(line_no, "empty standardized name");
        }
        const std::u32string standardized = decode_field(standardized_raw, line_no);

        std::string_view rest = line.substr(sep + 2);
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view synonym =
                trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
            if (synonym.empty()) {
                throw ParseError(line_no, "empty synonym");
            }
            entries.push_back(KeywordEntry{decode_field(synonym, line_no), standardized});
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return entries;
}

std::string serialize_dict_file(std::span<const KeywordEntry> entries) {
    // Group synonyms under their standardized name, keeping first
    // appearance order on both levels.
    std::vector<std::u32string> order;
    std::map<std::u32string, std::vector<std::u32string>> groups;
    for (const KeywordEntry& e : entries) {
        auto [it, fresh] = groups.try_emplace(e.standardized);
        if (fresh) order.push_back(e.standardized);
        it->second.push_back(e.keyword);
    }

    std::string out;
    for (const std::u32string& standardized : order) {
        out += encode_utf8(standardized);
        out += "=>";
        const auto& synonyms = groups.at(standardized);
        for (std::size_t i = 0; i < synonyms.size(); ++i) {
            if (i != 0) out += ',';
            out += encode_utf8(synonyms[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace wordtrie
