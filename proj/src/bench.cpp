#include "wordtrie/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <unordered_set>

#include "wordtrie/oracle.hpp"
#include "wordtrie/replacer.hpp"
#include "wordtrie/scanner.hpp"

namespace wordtrie {

std::string_view to_string(BenchTask task) noexcept {
    return task == BenchTask::search ? "search" : "replace";
}

std::string_view to_string(Engine engine) noexcept {
    switch (engine) {
        case Engine::trie: return "trie";
        case Engine::naive_baseline: return "naive-baseline";
        case Engine::regex_external: return "regex-external";
    }
    return "unknown";
}

std::vector<std::size_t> BenchConfig::default_k_values() {
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k <= 20000; k += 1000) ks.push_back(k);
    return ks;
}

std::vector<std::u32string> gen_corpus(const CorpusSpec& spec) {
    if (spec.word_count == 0) throw InvalidConfigError("word_count must be positive");
    if (spec.min_len < 1 || spec.min_len > spec.max_len) {
        throw InvalidConfigError("need 1 <= min_len <= max_len");
    }
    if (spec.alphabet.empty()) throw InvalidConfigError("alphabet must not be empty");

    // Pigeonhole check: even the shortest length must admit word_count
    // distinct words, otherwise rejection sampling cannot be guaranteed
    // to finish.
    unsigned long long capacity = 1;
    bool enough = false;
    for (std::size_t i = 0; i < spec.min_len && !enough; ++i) {
        if (capacity > std::numeric_limits<unsigned long long>::max() / spec.alphabet.size()) {
            enough = true;
            break;
        }
        capacity *= spec.alphabet.size();
        if (capacity >= spec.word_count) enough = true;
    }
    if (!enough) {
        throw UniquenessError("alphabet^min_len cannot supply " +
                              std::to_string(spec.word_count) + " distinct words");
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> length_dist(spec.min_len, spec.max_len);
    std::uniform_int_distribution<std::size_t> char_dist(0, spec.alphabet.size() - 1);

    std::vector<std::u32string> corpus;
    corpus.reserve(spec.word_count);
    std::unordered_set<std::u32string> seen;
    seen.reserve(spec.word_count * 2);
    std::u32string word;
    while (corpus.size() < spec.word_count) {
        const std::size_t len = length_dist(rng);
        word.clear();
        for (std::size_t i = 0; i < len; ++i) word.push_back(spec.alphabet[char_dist(rng)]);
        if (seen.insert(word).second) corpus.push_back(word);
    }
    return corpus;
}

std::u32string gen_document(std::span<const std::u32string> corpus, std::size_t doc_words,
                            std::uint64_t seed) {
    if (corpus.empty()) throw InvalidConfigError("corpus must not be empty");
    if (doc_words == 0) return {};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    std::u32string document;
    for (std::size_t i = 0; i < doc_words; ++i) {
        if (i != 0) document.push_back(U' ');
        document += corpus[pick(rng)];
    }
    return document;
}

std::vector<KeywordEntry> sample_keywords(std::span<const std::u32string> corpus,
                                          std::size_t k, std::uint64_t seed) {
    if (k > corpus.size()) {
        throw SampleError("cannot sample " + std::to_string(k) + " keywords from " +
                          std::to_string(corpus.size()) + " corpus words");
    }
    std::vector<std::size_t> indices(corpus.size());
    std::iota(indices.begin(), indices.end(), 0);

    // Partial Fisher-Yates: the first k slots end up holding a uniform
    // sample without replacement.
    std::mt19937_64 rng(seed);
    std::vector<KeywordEntry> entries;
    entries.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, indices.size() - 1);
        std::swap(indices[i], indices[pick(rng)]);
        const std::u32string& word = corpus[indices[i]];
        entries.push_back(KeywordEntry{word, word});
    }
    return entries;
}

namespace {

using Clock = std::chrono::steady_clock;

// Minimum wall-clock seconds over `repetitions` runs after one warm-up
// pass. Every run must reproduce `expected` (a match or output size);
// anything else means an engine is nondeterministic.
template <typename Op>
double time_min_seconds(int repetitions, std::size_t expected, Op&& op) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep <= repetitions; ++rep) {
        const auto start = Clock::now();
        const std::size_t value = op();
        const auto stop = Clock::now();
        if (value != expected) {
            throw IntegrityError("engine produced a different result across repetitions");
        }
        if (rep == 0) continue;  // warm-up
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

}  // namespace

BenchResult run_bench(const BenchConfig& config, std::ostream* diag) {
    if (config.repetitions < 1) throw InvalidConfigError("repetitions must be >= 1");
    if (config.k_values.empty()) throw InvalidConfigError("k_values must not be empty");

    CorpusSpec corpus_spec = config.corpus;
    const std::size_t kmax =
        *std::max_element(config.k_values.begin(), config.k_values.end());
    if (kmax > corpus_spec.word_count) {
        if (diag) {
            *diag << "warning: corpus widened from " << corpus_spec.word_count << " to "
                  << kmax << " words so every k stays sampleable\n";
        }
        corpus_spec.word_count = kmax;
    }

    const std::vector<std::u32string> corpus = gen_corpus(corpus_spec);
    const std::u32string document =
        gen_document(corpus, config.doc_words, corpus_spec.seed + 1);
    const BoundaryConfig boundary;

    BenchResult result;
    for (const std::size_t k : config.k_values) {
        const std::vector<KeywordEntry> entries =
            sample_keywords(corpus, k, corpus_spec.seed + 2 + k);

        const auto build_start = Clock::now();
        KeywordDict dict(boundary);
        for (const KeywordEntry& entry : entries) dict.add(entry);
        dict.freeze();
        result.build_times.push_back(
            {k, std::chrono::duration<double>(Clock::now() - build_start).count()});

        // Match counts are the cross-engine checksum; computed outside
        // the timed region.
        const std::size_t trie_matches = extract_spans(dict, document).size();
        const std::size_t naive_matches =
            oracle_extract(entries, boundary, document).size();
        if (trie_matches != naive_matches) {
            throw IntegrityError("match counts diverge at k=" + std::to_string(k) + ": trie " +
                                 std::to_string(trie_matches) + " vs naive baseline " +
                                 std::to_string(naive_matches));
        }

        double trie_seconds = 0.0;
        double naive_seconds = 0.0;
        if (config.task == BenchTask::search) {
            trie_seconds = time_min_seconds(config.repetitions, trie_matches, [&] {
                return extract_keywords(dict, document).size();
            });
            naive_seconds = time_min_seconds(config.repetitions, naive_matches, [&] {
                return oracle_extract(entries, boundary, document).size();
            });
        } else {
            const std::size_t replaced_size = replace_keywords(dict, document).size();
            trie_seconds = time_min_seconds(config.repetitions, replaced_size, [&] {
                return replace_keywords(dict, document).size();
            });
            naive_seconds = time_min_seconds(config.repetitions, replaced_size, [&] {
                return oracle_replace(entries, boundary, document).size();
            });
        }

        result.records.push_back({k, Engine::trie, config.task, trie_seconds, trie_matches});
        result.records.push_back(
            {k, Engine::naive_baseline, config.task, naive_seconds, naive_matches});
    }
    return result;
}

namespace {

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc() ? std::string(buf, end) : std::string("0");
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    const auto [end, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    return ec == std::errc() ? std::string(buf, end) : std::string("0");
}

}  // namespace

void write_csv(std::span<const BenchRecord> records, std::ostream& sink) {
    sink << "k,engine,task,seconds,matches\n";
    for (const BenchRecord& r : records) {
        sink << r.k << ',' << to_string(r.engine) << ',' << to_string(r.task) << ','
             << format_double(r.seconds) << ',' << r.matches << '\n';
    }
    sink.flush();
    if (!sink) throw IoError("failed to write CSV");
}

std::string render_plot(std::span<const BenchRecord> records) {
    if (records.empty()) throw PlotError("no records to plot");

    struct Series {
        Engine engine;
        BenchTask task;
        std::vector<const BenchRecord*> points;
    };
    std::vector<Series> series;
    for (const BenchRecord& r : records) {
        auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) {
            return s.engine == r.engine && s.task == r.task;
        });
        if (it == series.end()) {
            series.push_back({r.engine, r.task, {}});
            it = series.end() - 1;
        }
        it->points.push_back(&r);
    }
    for (Series& s : series) {
        std::stable_sort(s.points.begin(), s.points.end(),
                         [](const BenchRecord* a, const BenchRecord* b) { return a->k < b->k; });
    }

    double kmin = std::numeric_limits<double>::infinity();
    double kmax = -std::numeric_limits<double>::infinity();
    double smax = 0.0;
    for (const BenchRecord& r : records) {
        kmin = std::min(kmin, static_cast<double>(r.k));
        kmax = std::max(kmax, static_cast<double>(r.k));
        smax = std::max(smax, r.seconds);
    }
    if (kmin == kmax) {
        kmin -= 1.0;
        kmax += 1.0;
    }
    if (smax <= 0.0) smax = 1.0;

    constexpr double width = 800, height = 500;
    constexpr double x0 = 80, y0 = 30, x1 = 620, y1 = 430;
    const auto sx = [&](double k) { return x0 + (k - kmin) / (kmax - kmin) * (x1 - x0); };
    const auto sy = [&](double s) { return y1 - s / smax * (y1 - y0); };

    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                              "#ff7f0e", "#9467bd", "#8c564b"};
    constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(width, 0) +
           "\" height=\"" + format_fixed(height, 0) + "\" viewBox=\"0 0 " +
           format_fixed(width, 0) + " " + format_fixed(height, 0) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes.
    svg += "<line x1=\"" + format_fixed(x0, 2) + "\" y1=\"" + format_fixed(y1, 2) +
           "\" x2=\"" + format_fixed(x1, 2) + "\" y2=\"" + format_fixed(y1, 2) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_fixed(x0, 2) + "\" y1=\"" + format_fixed(y0, 2) +
           "\" x2=\"" + format_fixed(x0, 2) + "\" y2=\"" + format_fixed(y1, 2) +
           "\" stroke=\"black\"/>\n";

    for (int t = 0; t <= 4; ++t) {
        const double f = t / 4.0;
        const double k = kmin + f * (kmax - kmin);
        const double s = f * smax;
        const double tx = sx(k);
        const double ty = sy(s);
        svg += "<line x1=\"" + format_fixed(tx, 2) + "\" y1=\"" + format_fixed(y1, 2) +
               "\" x2=\"" + format_fixed(tx, 2) + "\" y2=\"" + format_fixed(y1 + 5, 2) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_fixed(tx, 2) + "\" y=\"" + format_fixed(y1 + 20, 2) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + format_fixed(k, 0) +
               "</text>\n";
        svg += "<line x1=\"" + format_fixed(x0 - 5, 2) + "\" y1=\"" + format_fixed(ty, 2) +
               "\" x2=\"" + format_fixed(x0, 2) + "\" y2=\"" + format_fixed(ty, 2) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_fixed(x0 - 8, 2) + "\" y=\"" + format_fixed(ty + 4, 2) +
               "\" font-size=\"12\" text-anchor=\"end\">" + format_fixed(s, 4) + "</text>\n";
    }
    svg += "<text x=\"" + format_fixed((x0 + x1) / 2, 2) + "\" y=\"" +
           format_fixed(height - 15, 2) +
           "\" font-size=\"14\" text-anchor=\"middle\">keywords (k)</text>\n";
    svg += "<text x=\"18\" y=\"" + format_fixed((y0 + y1) / 2, 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           format_fixed((y0 + y1) / 2, 2) + ")\">seconds</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = palette[si % palette_size];
        std::string points;
        for (const BenchRecord* r : s.points) {
            if (!points.empty()) points += ' ';
            points += format_fixed(sx(static_cast<double>(r->k)), 2) + "," +
                      format_fixed(sy(r->seconds), 2);
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        for (const BenchRecord* r : s.points) {
            svg += "<circle cx=\"" + format_fixed(sx(static_cast<double>(r->k)), 2) +
                   "\" cy=\"" + format_fixed(sy(r->seconds), 2) + "\" r=\"3\" fill=\"";
            svg += color;
            svg += "\"/>\n";
        }

        // Legend entry.
        const double ly = y0 + 10 + 22 * static_cast<double>(si);
        svg += "<line x1=\"" + format_fixed(x1 + 15, 2) + "\" y1=\"" + format_fixed(ly, 2) +
               "\" x2=\"" + format_fixed(x1 + 45, 2) + "\" y2=\"" + format_fixed(ly, 2) +
               "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + format_fixed(x1 + 52, 2) + "\" y=\"" + format_fixed(ly + 4, 2) +
               "\" font-size=\"12\">";
        svg += to_string(s.engine);
        svg += " ";
        svg += to_string(s.task);
        svg += "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace wordtrie
