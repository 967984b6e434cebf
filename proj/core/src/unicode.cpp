#include "wlev/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "wlev/error.hpp"

namespace wlev {

namespace {

[[noreturn]] void bad_utf8(std::size_t offset, const char* what) {
    throw ParseError("invalid UTF-8 at byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

Word decode_utf8(std::string_view bytes) {
    Word out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto lead = static_cast<unsigned char>(bytes[i]);
        if (lead < 0x80) {
            out.push_back(lead);
            ++i;
            continue;
        }
        std::size_t len;
        char32_t cp;
        char32_t min;
        if ((lead & 0xE0) == 0xC0) {
            len = 2, cp = lead & 0x1F, min = 0x80;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3, cp = lead & 0x0F, min = 0x800;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4, cp = lead & 0x07, min = 0x10000;
        } else {
            bad_utf8(i, "unexpected lead byte");
        }
        if (i + len > bytes.size()) bad_utf8(i, "truncated sequence");
        for (std::size_t k = 1; k < len; ++k) {
            const auto cont = static_cast<unsigned char>(bytes[i + k]);
            if ((cont & 0xC0) != 0x80) bad_utf8(i + k, "expected continuation byte");
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (cp < min) bad_utf8(i, "overlong encoding");
        if (!is_scalar_value(cp)) bad_utf8(i, "not a Unicode scalar value");
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(Symbol c) {
    std::string out;
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
    return out;
}

std::string encode_utf8(WordView word) {
    std::string out;
    out.reserve(word.size());
    for (Symbol c : word) out += encode_utf8(c);
    return out;
}

std::string normalize_nfc(std::string_view utf8) {
    // Validate first so ICU never sees ill-formed input and silently repairs it.
    (void)decode_utf8(utf8);
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw Error(std::string("ICU NFC unavailable: ") + u_errorName(status));
    const auto src = icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
    const icu::UnicodeString dst = nfc->normalize(src, status);
    if (U_FAILURE(status)) throw Error(std::string("NFC normalization failed: ") + u_errorName(status));
    std::string out;
    dst.toUTF8String(out);
    return out;
}

Word to_word(std::string_view utf8, bool nfc) {
    if (nfc) return decode_utf8(normalize_nfc(utf8));
    return decode_utf8(utf8);
}

}  // namespace wlev
