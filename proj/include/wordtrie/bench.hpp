#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wordtrie/dict.hpp"

namespace wordtrie {

/// Parameters of the synthetic benchmark corpus: word_count distinct
/// random words, lengths uniform in [min_len, max_len], characters
/// uniform over the alphabet, fully determined by the seed.
struct CorpusSpec {
    std::size_t word_count = 10000;
    std::size_t min_len = 3;
    std::size_t max_len = 8;
    std::u32string alphabet = U"abcdefghijklmnopqrstuvwxyz";
    std::uint64_t seed = 42;
};

enum class BenchTask { search, replace };

enum class Engine { trie, naive_baseline, regex_external };

std::string_view to_string(BenchTask task) noexcept;
std::string_view to_string(Engine engine) noexcept;

/// One timing point: minimum wall-clock seconds over the repetitions,
/// plus the match count used as a cross-engine checksum.
struct BenchRecord {
    std::size_t k = 0;
    Engine engine = Engine::trie;
    BenchTask task = BenchTask::search;
    double seconds = 0.0;
    std::size_t matches = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Dictionary construction time at one k point, kept out of the scan
/// measurements.
struct BuildTiming {
    std::size_t k = 0;
    double seconds = 0.0;
};

struct BenchConfig {
    CorpusSpec corpus;
    std::size_t doc_words = 10000;
    std::vector<std::size_t> k_values = default_k_values();
    int repetitions = 5;
    BenchTask task = BenchTask::search;

    /// k in {0, 1000, 2000, ..., 20000}.
    static std::vector<std::size_t> default_k_values();
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<BuildTiming> build_times;
};

/// Generates the corpus; deterministic under spec.seed. Throws
/// UniquenessError when alphabet^min_len cannot supply word_count
/// distinct words.
std::vector<std::u32string> gen_corpus(const CorpusSpec& spec);

/// doc_words words sampled uniformly with replacement and joined by
/// single spaces; deterministic under seed. Zero words yield empty text.
std::u32string gen_document(std::span<const std::u32string> corpus,
                            std::size_t doc_words, std::uint64_t seed);

/// k distinct corpus words, each as a (word, word) entry, in a
/// deterministic shuffled order. Throws SampleError when k exceeds the
/// corpus size.
std::vector<KeywordEntry> sample_keywords(std::span<const std::u32string> corpus,
                                          std::size_t k, std::uint64_t seed);

/// Runs the scaling experiment: for each k, builds and freezes a
/// dictionary from sampled keywords, then times the trie engine against
/// the naive per-keyword baseline on the same document (one warm-up
/// pass, then the configured repetitions, minimum reported). Build time
/// is recorded separately. Seeds derive from corpus.seed: the document
/// uses seed+1 and the k-point samples use seed+2+k.
///
/// The corpus is widened to max(word_count, max k) when k exceeds it; a
/// warning goes to diag when given. A cross-engine match-count mismatch
/// throws IntegrityError.
BenchResult run_bench(const BenchConfig& config, std::ostream* diag = nullptr);

/// CSV with header `k,engine,task,seconds,matches`, one row per record.
/// Seconds use shortest round-trip formatting with a decimal point.
void write_csv(std::span<const BenchRecord> records, std::ostream& sink);

/// Self-contained SVG: k on the x-axis, seconds on the y-axis, one
/// polyline per (engine, task) series, legend and axis labels.
/// Byte-identical output for identical records. Throws PlotError when
/// records are empty.
std::string render_plot(std::span<const BenchRecord> records);

}  // namespace wordtrie
