#include "wordtrie/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordtrie/bench.hpp"
#include "wordtrie/dict.hpp"
#include "wordtrie/dictfile.hpp"
#include "wordtrie/replacer.hpp"
#include "wordtrie/scanner.hpp"
#include "wordtrie/unicode.hpp"

namespace wordtrie {

namespace {

struct DictOptions {
    std::string path;
    bool mapped = false;
    bool case_insensitive = false;
};

struct FindOptions {
    DictOptions dict;
    bool spans = false;
    bool json = false;
    std::vector<std::string> inputs;
};

struct ReplaceOptions {
    DictOptions dict;
    std::string output;
    std::vector<std::string> inputs;
};

struct BenchOptions {
    std::size_t kmax = 20000;
    std::size_t kstep = 1000;
    std::size_t doc_words = 10000;
    std::uint64_t seed = 42;
    std::string task = "search";
    std::string csv_path;
    std::string svg_path;
    int reps = 5;
};

std::string read_file(const std::string& path, const char* what) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError(std::string("cannot read ") + what + ": " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) throw IoError(std::string("failed reading ") + what + ": " + path);
    return std::move(buffer).str();
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    }
    return read_file(path, "input file");
}

KeywordDict load_dict(const DictOptions& options) {
    const std::string contents = read_file(options.path, "dictionary file");
    std::vector<KeywordEntry> entries;
    try {
        entries = parse_dict_file(contents,
                                  options.mapped ? DictFormat::mapped : DictFormat::plain);
    } catch (const ParseError& e) {
        throw Error(options.path + ": " + e.what());
    }
    KeywordDict dict{BoundaryConfig().set_case_insensitive(options.case_insensitive)};
    for (const KeywordEntry& entry : entries) dict.add(entry);
    dict.freeze();
    return dict;
}

void add_dict_flags(CLI::App* cmd, DictOptions& options) {
    cmd->add_option("--dict", options.path, "keyword dictionary file")
        ->required()
        ->type_name("PATH");
    cmd->add_flag("--mapped", options.mapped,
                  "dictionary lines are `standardized=>synonym1,synonym2,...` "
                  "instead of one keyword per line");
    cmd->add_flag("--case-insensitive", options.case_insensitive,
                  "match with a simple per-character lowercase fold (ASCII and Latin-1)");
}

int do_find(const FindOptions& options, std::istream& in, std::ostream& out) {
    const KeywordDict dict = load_dict(options.dict);
    const std::vector<std::string> inputs =
        options.inputs.empty() ? std::vector<std::string>{"-"} : options.inputs;

    std::size_t total = 0;
    for (const std::string& path : inputs) {
        const std::u32string text = decode_utf8(read_input(path, in));
        for (const MatchSpan& span : extract_spans(dict, text)) {
            ++total;
            if (options.json) {
                nlohmann::ordered_json line;
                line["file"] = path;
                line["standardized"] = encode_utf8(span.standardized);
                line["start"] = span.start;
                line["end"] = span.end;
                out << line.dump() << '\n';
            } else if (options.spans) {
                out << encode_utf8(span.standardized) << '\t' << span.start << '\t'
                    << span.end << '\n';
            } else {
                out << encode_utf8(span.standardized) << '\n';
            }
        }
    }
    out.flush();
    return total > 0 ? 0 : 1;
}

int do_replace(const ReplaceOptions& options, std::istream& in, std::ostream& out) {
    const KeywordDict dict = load_dict(options.dict);
    const std::vector<std::string> inputs =
        options.inputs.empty() ? std::vector<std::string>{"-"} : options.inputs;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!options.output.empty()) {
        file.open(options.output, std::ios::binary);
        if (!file) throw IoError("cannot open output file: " + options.output);
        sink = &file;
    }
    for (const std::string& path : inputs) {
        *sink << replace_keywords_utf8(dict, read_input(path, in));
    }
    sink->flush();
    if (!*sink) throw IoError("failed writing output");
    return 0;
}

std::string fixed6(double value) {
    char buf[64];
    const auto [end, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 6);
    return ec == std::errc() ? std::string(buf, end) : std::string("0");
}

int do_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    config.corpus.seed = options.seed;
    config.doc_words = options.doc_words;
    config.repetitions = options.reps;
    config.k_values.clear();
    for (std::size_t k = 0; k <= options.kmax; k += options.kstep) {
        config.k_values.push_back(k);
    }

    std::vector<BenchTask> tasks;
    if (options.task == "both") {
        tasks = {BenchTask::search, BenchTask::replace};
    } else {
        tasks = {options.task == "replace" ? BenchTask::replace : BenchTask::search};
    }

    std::vector<BenchRecord> records;
    std::vector<BuildTiming> builds;
    for (BenchTask task : tasks) {
        config.task = task;
        BenchResult result = run_bench(config, &err);
        records.insert(records.end(), result.records.begin(), result.records.end());
        if (builds.empty()) builds = std::move(result.build_times);
    }

    const auto build_seconds = [&](std::size_t k) -> std::string {
        for (const BuildTiming& b : builds) {
            if (b.k == k) return fixed6(b.seconds);
        }
        return "-";
    };

    out << std::left << std::setw(8) << "k" << std::setw(16) << "engine" << std::setw(9)
        << "task" << std::setw(12) << "seconds" << std::setw(10) << "matches"
        << "build_s\n";
    for (const BenchRecord& r : records) {
        out << std::left << std::setw(8) << r.k << std::setw(16) << to_string(r.engine)
            << std::setw(9) << to_string(r.task) << std::setw(12) << fixed6(r.seconds)
            << std::setw(10) << r.matches
            << (r.engine == Engine::trie ? build_seconds(r.k) : "") << '\n';
    }

    if (!options.csv_path.empty()) {
        if (options.csv_path == "-") {
            write_csv(records, out);
        } else {
            std::ofstream csv(options.csv_path, std::ios::binary);
            if (!csv) throw IoError("cannot open CSV file: " + options.csv_path);
            write_csv(records, csv);
        }
    }
    if (!options.svg_path.empty()) {
        const std::string svg = render_plot(records);
        if (options.svg_path == "-") {
            out << svg;
        } else {
            std::ofstream file(options.svg_path, std::ios::binary);
            if (!file) throw IoError("cannot open SVG file: " + options.svg_path);
            file << svg;
            file.flush();
            if (!file) throw IoError("failed writing SVG");
        }
    }
    out.flush();
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"wordtrie: whole-word multi-keyword search and replace "
                 "over a trie dictionary"};
    app.require_subcommand(1);
    app.footer("Offsets are reported in Unicode scalar values, not bytes.");

    FindOptions find_options;
    CLI::App* find = app.add_subcommand(
        "find", "extract standardized names of keyword matches from inputs");
    add_dict_flags(find, find_options.dict);
    CLI::Option* spans_flag = find->add_flag(
        "--spans", find_options.spans,
        "print `standardized<TAB>start<TAB>end` per match; offsets count "
        "Unicode scalar values");
    find->add_flag("--json", find_options.json,
                   "print one JSON object per match: "
                   "{\"file\":...,\"standardized\":...,\"start\":...,\"end\":...}")
        ->excludes(spans_flag);
    find->add_option("inputs", find_options.inputs,
                     "input files; default and `-` mean standard input");

    ReplaceOptions replace_options;
    CLI::App* replace = app.add_subcommand(
        "replace", "rewrite inputs with every matched keyword standardized");
    add_dict_flags(replace, replace_options.dict);
    replace->add_option("--output", replace_options.output,
                        "write the rewritten text here instead of standard output")
        ->type_name("PATH");
    replace->add_option("inputs", replace_options.inputs,
                        "input files; default and `-` mean standard input");

    BenchOptions bench_options;
    CLI::App* bench = app.add_subcommand(
        "bench", "time the trie engine against the naive per-keyword baseline");
    bench->add_option("--kmax", bench_options.kmax, "largest keyword count")
        ->capture_default_str();
    bench->add_option("--kstep", bench_options.kstep, "keyword count step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--doc-words", bench_options.doc_words,
                      "number of corpus words joined into the document")
        ->capture_default_str();
    bench->add_option("--seed", bench_options.seed, "generator seed")
        ->capture_default_str();
    bench->add_option("--task", bench_options.task, "search, replace or both")
        ->check(CLI::IsMember({"search", "replace", "both"}))
        ->capture_default_str();
    bench->add_option("--csv", bench_options.csv_path,
                      "write records as CSV to this path (`-` = standard output)")
        ->type_name("PATH");
    bench->add_option("--svg", bench_options.svg_path,
                      "render the timing plot as SVG to this path (`-` = standard output)")
        ->type_name("PATH");
    bench->add_option("--reps", bench_options.reps,
                      "timing repetitions per point (minimum is reported)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (find->parsed()) return do_find(find_options, in, out);
        if (replace->parsed()) return do_replace(replace_options, in, out);
        if (bench->parsed()) return do_bench(bench_options, out, err);
    } catch (const IntegrityError& e) {
        err << "benchmark integrity error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace wordtrie
