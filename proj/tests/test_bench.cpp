#include <doctest.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "wordtrie/bench.hpp"

using namespace wordtrie;
using namespace wordtrie::testsupport;

namespace {

// Test-side CSV reader for the round-trip property; intentionally not the
// library's code path.
std::vector<BenchRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "k,engine,task,seconds,matches");

    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        std::array<std::string, 5> fields;
        std::size_t field = 0, start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                REQUIRE(field < fields.size());
                fields[field++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        REQUIRE(field == 5);

        BenchRecord r;
        r.k = std::stoull(fields[0]);
        if (fields[1] == "trie") {
            r.engine = Engine::trie;
        } else if (fields[1] == "naive-baseline") {
            r.engine = Engine::naive_baseline;
        } else {
            REQUIRE(fields[1] == "regex-external");
            r.engine = Engine::regex_external;
        }
        r.task = fields[2] == "search" ? BenchTask::search : BenchTask::replace;
        const auto [ptr, ec] =
            std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), r.seconds);
        REQUIRE(ec == std::errc());
        REQUIRE(ptr == fields[3].data() + fields[3].size());
        r.matches = std::stoull(fields[4]);
        records.push_back(r);
    }
    return records;
}

}  // namespace

TEST_CASE("corpus generation is deterministic, unique and length-bounded") {
    const CorpusSpec spec{.word_count = 10000, .min_len = 3, .max_len = 8, .seed = 42};
    const auto corpus = gen_corpus(spec);
    REQUIRE(corpus.size() == 10000);

    std::set<std::u32string> distinct(corpus.begin(), corpus.end());
    CHECK(distinct.size() == corpus.size());
    for (const auto& word : corpus) {
        CHECK(word.size() >= 3);
        CHECK(word.size() <= 8);
    }
    CHECK(gen_corpus(spec) == corpus);
}

TEST_CASE("a tiny corpus spec still yields distinct words") {
    const CorpusSpec spec{.word_count = 2, .min_len = 1, .max_len = 1, .seed = 7};
    const auto corpus = gen_corpus(spec);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0] != corpus[1]);
    CHECK(corpus[0].size() == 1);
}

TEST_CASE("impossible uniqueness demands are rejected") {
    const CorpusSpec spec{.word_count = 40, .min_len = 1, .max_len = 1, .seed = 1};
    CHECK_THROWS_AS(gen_corpus(spec), UniquenessError);
}

TEST_CASE("document generation joins sampled words with single spaces") {
    const std::vector<std::u32string> single = {u32("a")};
    CHECK(gen_document(single, 0, 5).empty());
    CHECK(gen_document(single, 3, 5) == u32("a a a"));

    const auto corpus = gen_corpus(CorpusSpec{.seed = 42});
    const std::u32string doc = gen_document(corpus, 10000, 43);
    const std::size_t spaces = std::count(doc.begin(), doc.end(), U' ');
    CHECK(spaces == 9999);
    CHECK(gen_document(corpus, 10000, 43) == doc);
}

TEST_CASE("keyword sampling is distinct, deterministic and bounded") {
    const auto corpus = gen_corpus(CorpusSpec{.word_count = 200, .seed = 11});

    CHECK(sample_keywords(corpus, 0, 1).empty());
    CHECK_THROWS_AS(sample_keywords(corpus, 201, 1), SampleError);

    const auto sample = sample_keywords(corpus, 50, 9);
    REQUIRE(sample.size() == 50);
    std::set<std::u32string> seen;
    for (const KeywordEntry& e : sample) {
        CHECK(e.keyword == e.standardized);
        seen.insert(e.keyword);
    }
    CHECK(seen.size() == 50);
    CHECK(sample_keywords(corpus, 50, 9) == sample);

    const auto everything = sample_keywords(corpus, 200, 3);
    std::set<std::u32string> all;
    for (const KeywordEntry& e : everything) all.insert(e.keyword);
    CHECK(all.size() == 200);
}

TEST_CASE("a small benchmark run produces coherent records") {
    BenchConfig config;
    config.corpus = CorpusSpec{.word_count = 60, .min_len = 3, .max_len = 6, .seed = 5};
    config.doc_words = 300;
    config.k_values = {0, 10, 25};
    config.repetitions = 1;
    config.task = BenchTask::search;

    const BenchResult result = run_bench(config);
    REQUIRE(result.records.size() == 6);
    REQUIRE(result.build_times.size() == 3);

    for (std::size_t i = 0; i < result.records.size(); i += 2) {
        const BenchRecord& trie = result.records[i];
        const BenchRecord& naive = result.records[i + 1];
        CHECK(trie.engine == Engine::trie);
        CHECK(naive.engine == Engine::naive_baseline);
        CHECK(trie.k == naive.k);
        CHECK(trie.matches == naive.matches);
        CHECK(trie.seconds >= 0.0);
        CHECK(naive.seconds >= 0.0);
    }
    CHECK(result.records[0].k == 0);
    CHECK(result.records[0].matches == 0);
    CHECK(result.records[4].matches > 0);

    SUBCASE("replace task reports the same match counts") {
        config.task = BenchTask::replace;
        const BenchResult replace_result = run_bench(config);
        REQUIRE(replace_result.records.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(replace_result.records[i].matches == result.records[i].matches);
        }
    }

    SUBCASE("the corpus is widened when k exceeds it, with a warning") {
        config.k_values = {0, 100};
        std::ostringstream diag;
        const BenchResult widened = run_bench(config, &diag);
        CHECK(widened.records.back().k == 100);
        CHECK(diag.str().find("widened") != std::string::npos);
    }
}

TEST_CASE("write_csv emits the exact documented shape") {
    std::ostringstream empty;
    write_csv({}, empty);
    CHECK(empty.str() == "k,engine,task,seconds,matches\n");

    const std::vector<BenchRecord> one = {
        {1000, Engine::trie, BenchTask::search, 0.002, 950}};
    std::ostringstream out;
    write_csv(one, out);
    CHECK(out.str() == "k,engine,task,seconds,matches\n1000,trie,search,0.002,950\n");
}

TEST_CASE("CSV writing round-trips through parsing") {
    std::mt19937_64 rng(909);
    std::vector<BenchRecord> records;
    for (int i = 0; i < 200; ++i) {
        BenchRecord r;
        r.k = std::uniform_int_distribution<std::size_t>(0, 50000)(rng);
        r.engine = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                       ? Engine::trie
                       : Engine::naive_baseline;
        r.task = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? BenchTask::search
                                                                    : BenchTask::replace;
        r.seconds = std::exp(std::uniform_real_distribution<double>(-20.0, 3.0)(rng));
        r.matches = std::uniform_int_distribution<std::size_t>(0, 1 << 20)(rng);
        records.push_back(r);
    }
    std::ostringstream out;
    write_csv(records, out);
    CHECK(parse_csv(out.str()) == records);
}

TEST_CASE("render_plot draws one polyline per engine/task series") {
    const auto count_polylines = [](const std::string& svg) {
        std::size_t count = 0, pos = 0;
        while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
            ++count;
            pos += 9;
        }
        return count;
    };

    std::vector<BenchRecord> records;
    for (std::size_t k = 0; k <= 20000; k += 1000) {
        records.push_back({k, Engine::trie, BenchTask::search, 0.001, k / 10});
        records.push_back({k, Engine::naive_baseline, BenchTask::search, 0.001 * (k + 1), k / 10});
    }
    const std::string svg = render_plot(records);
    CHECK(count_polylines(svg) == 2);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(render_plot(records) == svg);  // byte-identical rerun

    const std::vector<BenchRecord> single = {{7, Engine::trie, BenchTask::replace, 0.5, 3}};
    const std::string single_svg = render_plot(single);
    CHECK(count_polylines(single_svg) == 1);

    CHECK_THROWS_AS(render_plot({}), PlotError);
}
