#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordtrie {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A boundary configuration or benchmark configuration is unusable
/// (e.g. empty word-character set, zero repetitions).
class InvalidConfigError : public Error {
public:
    using Error::Error;
};

/// A keyword entry violates its contract (empty keyword, empty
/// standardized name, empty synonym list).
class InvalidEntryError : public Error {
public:
    using Error::Error;
};

/// Mutation was attempted on a frozen dictionary.
class FrozenError : public Error {
public:
    using Error::Error;
};

/// A scan operation was given a dictionary that has not been frozen.
class NotFrozenError : public Error {
public:
    using Error::Error;
};

/// splice() received spans that are unsorted, overlapping, empty,
/// or out of bounds.
class InvalidSpansError : public Error {
public:
    using Error::Error;
};

/// emit_regex_pattern() was handed a keyword whose first or last
/// character is not a regex word character.
class UnsupportedKeywordError : public Error {
public:
    using Error::Error;
};

/// emit_regex_pattern() was handed an empty entry list.
class EmptyAlternationError : public Error {
public:
    using Error::Error;
};

/// The corpus generator cannot produce the requested number of
/// distinct words from the given alphabet and minimum length.
class UniquenessError : public Error {
public:
    using Error::Error;
};

/// sample_keywords() asked for more words than the corpus holds.
class SampleError : public Error {
public:
    using Error::Error;
};

/// Benchmark engines disagreed on the number of matches. This is a
/// correctness failure, never a performance result.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// render_plot() received no records.
class PlotError : public Error {
public:
    using Error::Error;
};

/// Input bytes are not valid UTF-8.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// A write to an output sink failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// A dictionary file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace wordtrie
