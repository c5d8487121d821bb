#pragma once

#include <string>
#include <string_view>

namespace wordtrie {

/// Decodes UTF-8 bytes into Unicode scalar values. Rejects overlong
/// forms, surrogates, values above U+10FFFF and truncated sequences by
/// throwing DecodeError.
std::u32string decode_utf8(std::string_view bytes);

/// Encodes scalar values back to UTF-8. Input must be scalar values
/// (as produced by decode_utf8); surrogates throw DecodeError.
std::string encode_utf8(std::u32string_view text);

/// Simple one-to-one lowercase fold: ASCII A-Z and the Latin-1 range
/// U+00C0..U+00DE (except U+00D7, the multiplication sign). All other
/// scalars map to themselves. Full Unicode case folding is out of scope.
char32_t fold_scalar(char32_t c) noexcept;

}  // namespace wordtrie
