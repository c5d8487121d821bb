#include "wordtrie/unicode.hpp"

#include <cstdint>

#include "wordtrie/error.hpp"

namespace wordtrie {

namespace {

[[noreturn]] void bad_byte(std::size_t offset) {
    throw DecodeError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<std::uint8_t>(bytes[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xe0) == 0xc0) {
            len = 2;
            cp = b0 & 0x1f;
        } else if ((b0 & 0xf0) == 0xe0) {
            len = 3;
            cp = b0 & 0x0f;
        } else if ((b0 & 0xf8) == 0xf0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            bad_byte(i);
        }
        if (i + len > n) bad_byte(i);
        for (int j = 1; j < len; ++j) {
            const auto bx = static_cast<std::uint8_t>(bytes[i + j]);
            if ((bx & 0xc0) != 0x80) bad_byte(i + j);
            cp = (cp << 6) | (bx & 0x3f);
        }
        // Overlong encodings, surrogates and out-of-range values are all
        // malformed input, not representable scalars.
        static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < min_for_len[len]) bad_byte(i);
        if (cp >= 0xd800 && cp <= 0xdfff) bad_byte(i);
        if (cp > 0x10ffff) bad_byte(i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (cp >= 0xd800 && cp <= 0xdfff) throw DecodeError("surrogate scalar value");
        if (cp > 0x10ffff) throw DecodeError("scalar value out of range");
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else {
            out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        }
    }
    return out;
}

char32_t fold_scalar(char32_t c) noexcept {
    if (c >= U'A' && c <= U'Z') return c + 32;
    if (c >= 0xc0 && c <= 0xde && c != 0xd7) return c + 32;
    return c;
}

}  // namespace wordtrie
