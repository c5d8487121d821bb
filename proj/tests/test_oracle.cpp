#include <doctest.h>

#include <regex>

#include "test_support.hpp"
#include "wordtrie/oracle.hpp"

using namespace wordtrie;
using namespace wordtrie::testsupport;

TEST_CASE("oracle rejects matches inside longer words") {
    CHECK(oracle_extract({{entry("Apple", "Apple")}}, BoundaryConfig(),
                         u32("I like Pineapple"))
              .empty());
}

TEST_CASE("oracle takes the longest keyword at the first matching start") {
    const auto spans = oracle_extract(
        {{entry("Machine", "Machine"), entry("Learning", "Learning"),
          entry("Machine learning", "Machine learning")}},
        BoundaryConfig(), u32("I like Machine learning"));
    REQUIRE(spans.size() == 1);
    CHECK(spans[0] == MatchSpan{7, 23, u32("Machine learning")});
}

TEST_CASE("oracle emits disjoint back-to-back word matches") {
    const auto spans = oracle_extract({{entry("a", "A")}}, BoundaryConfig(), u32("a a a"));
    REQUIRE(spans.size() == 3);
    CHECK(spans[0] == MatchSpan{0, 1, u32("A")});
    CHECK(spans[1] == MatchSpan{2, 3, u32("A")});
    CHECK(spans[2] == MatchSpan{4, 5, u32("A")});
}

TEST_CASE("oracle replace splices standardized names in") {
    CHECK(oracle_replace({{entry("java script", "javascript")}}, BoundaryConfig(),
                         u32("I like java script")) == u32("I like javascript"));
    CHECK(oracle_replace({{entry("zzz", "x")}}, BoundaryConfig(), u32("nothing here")) ==
          u32("nothing here"));
    CHECK(oracle_replace({{entry("aa", "X"), entry("aa b", "Y")}}, BoundaryConfig(),
                         u32("aa b aa")) == u32("Y X"));
}

TEST_CASE("duplicate keywords fold to the last standardized name") {
    const auto spans = oracle_extract({{entry("a", "X"), entry("a", "Y")}},
                                      BoundaryConfig(), u32("a"));
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].standardized == u32("Y"));
}

TEST_CASE("emit_regex_pattern wraps escaped keywords in a word-bounded alternation") {
    CHECK(emit_regex_pattern({{entry("2017", "2017")}}) == R"(\b(?:2017)\b)");
    CHECK(emit_regex_pattern({{entry("java", "java"), entry("java script", "javascript")}}) ==
          R"(\b(?:java script|java)\b)");
    CHECK(emit_regex_pattern({{entry("a+b", "x")}}) == R"(\b(?:a\+b)\b)");
}

TEST_CASE("emit_regex_pattern orders by length, then lexicographically") {
    CHECK(emit_regex_pattern({{entry("bb", "x"), entry("aa", "x"), entry("ccc", "x")}}) ==
          R"(\b(?:ccc|aa|bb)\b)");
}

TEST_CASE("emit_regex_pattern rejects unsupported inputs") {
    CHECK_THROWS_AS(emit_regex_pattern({{entry(".net", ".net")}}), UnsupportedKeywordError);
    CHECK_THROWS_AS(emit_regex_pattern({{entry("c++", "cpp")}}), UnsupportedKeywordError);
    CHECK_THROWS_AS(emit_regex_pattern({}), EmptyAlternationError);
}

TEST_CASE("a host regex engine agrees with the oracle on word-character keywords") {
    // Spot check only: alternation semantics differ across engines, so
    // this is not a gate for anything beyond the emitted pattern shape.
    const std::vector<KeywordEntry> entries = {entry("java", "java"), entry("j2ee", "java"),
                                               entry("java script", "javascript")};
    const std::string text = "I like java script and j2ee today";

    const std::regex pattern(emit_regex_pattern(entries));
    std::vector<std::string> regex_hits;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern);
         it != std::sregex_iterator(); ++it) {
        regex_hits.push_back(it->str());
    }
    REQUIRE(regex_hits.size() == 2);
    CHECK(regex_hits[0] == "java script");
    CHECK(regex_hits[1] == "j2ee");

    const auto spans = oracle_extract(entries, BoundaryConfig(), u32(text));
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].standardized == u32("javascript"));
    CHECK(spans[1].standardized == u32("java"));
}

TEST_CASE("oracle spans satisfy the same structural rules as the scanner") {
    std::mt19937_64 master(808);
    for (int i = 0; i < 200; ++i) {
        const Scenario s = make_scenario(std::mt19937_64(master()));
        const auto spans = oracle_extract(s.entries, s.config, s.text);

        std::size_t previous_end = 0;
        for (const MatchSpan& span : spans) {
            INFO(describe(s));
            REQUIRE(span.start < span.end);
            REQUIRE(span.end <= s.text.size());
            REQUIRE(span.start >= previous_end);
            previous_end = span.end;

            const bool start_ok = span.start == 0 ||
                                  s.config.is_boundary(s.text[span.start - 1]) ||
                                  s.config.is_boundary(s.text[span.start]);
            const bool end_ok = span.end == s.text.size() ||
                                s.config.is_boundary(s.text[span.end]) ||
                                s.config.is_boundary(s.text[span.end - 1]);
            REQUIRE(start_ok);
            REQUIRE(end_ok);
        }
    }
}
