#pragma once

#include <string>
#include <string_view>

namespace wlev {

/// One Unicode scalar value. Surrogate halves and values past U+10FFFF are
/// rejected at decode time, so every Symbol held by the library is valid.
using Symbol = char32_t;

/// A word is a sequence of scalar values; its length is counted in symbols.
using Word = std::u32string;
using WordView = std::u32string_view;

[[nodiscard]] constexpr bool is_scalar_value(char32_t c) noexcept {
    return c <= 0x10FFFF && !(c >= 0xD800 && c <= 0xDFFF);
}

/// Strict UTF-8 decoder. Throws ParseError (with the byte offset) on
/// overlong forms, surrogates, truncated sequences and stray continuation bytes.
[[nodiscard]] Word decode_utf8(std::string_view bytes);

[[nodiscard]] std::string encode_utf8(WordView word);
[[nodiscard]] std::string encode_utf8(Symbol symbol);

/// Canonical composition (NFC). Only applied at ingestion, and only when asked.
[[nodiscard]] std::string normalize_nfc(std::string_view utf8);

/// Decodes `utf8`, optionally NFC-normalizing first.
[[nodiscard]] Word to_word(std::string_view utf8, bool nfc = false);

}  // namespace wlev
