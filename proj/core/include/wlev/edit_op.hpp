#pragma once

#include <compare>
#include <span>
#include <string>

#include "wlev/unicode.hpp"

namespace wlev {

/// One step of an alignment between an erroneous word X and a correct word Y.
///
/// Orientation follows the typist: Insert(c) is a character present in X that
/// the correct word lacks (the typist added it), Delete(c) is a character of Y
/// missing from X, and Substitute(typed, intended) replaces the intended
/// character with the typed one.
struct EditOp {
    enum class Kind : unsigned char { Match, Substitute, Insert, Delete };

    Kind kind = Kind::Match;
    Symbol typed = 0;     ///< symbol consumed from X, 0 for Delete
    Symbol intended = 0;  ///< symbol consumed from Y, 0 for Insert

    static constexpr EditOp match(Symbol c) noexcept { return {Kind::Match, c, c}; }
    static constexpr EditOp substitute(Symbol typed, Symbol intended) noexcept {
        return {Kind::Substitute, typed, intended};
    }
    static constexpr EditOp insert(Symbol c) noexcept { return {Kind::Insert, c, 0}; }
    static constexpr EditOp erase(Symbol c) noexcept { return {Kind::Delete, 0, c}; }

    [[nodiscard]] constexpr bool is_error() const noexcept { return kind != Kind::Match; }

    friend constexpr bool operator==(const EditOp&, const EditOp&) = default;
};

/// Replays a script: returns {X, Y} as spelled by the typed and intended sides.
struct ReplayedPair {
    Word erroneous;
    Word correct;
};
[[nodiscard]] ReplayedPair replay(std::span<const EditOp> script);

[[nodiscard]] std::string to_string(const EditOp& op);

}  // namespace wlev
