#pragma once

#include <map>
#include <set>
#include <utility>

#include "wlev/edit_op.hpp"
#include "wlev/unicode.hpp"

namespace wlev {

/// Ordered (typed, intended) key of the substitution table.
using SymbolPair = std::pair<Symbol, Symbol>;

/// The three per-character error-frequency tables.
///
/// Every stored frequency lies in [0, 1); absent keys read as exactly 0.
/// The constructor enforces this, so a model that exists is a valid model and
/// every interior DP step 1 - F costs strictly more than zero.
class ErrorModel {
public:
    using SymbolTable = std::map<Symbol, double>;
    using PairTable = std::map<SymbolPair, double>;

    /// The zero model: every lookup returns 0.
    ErrorModel() = default;

    /// Throws InvalidModel naming the first offending key.
    ErrorModel(SymbolTable insert, SymbolTable erase, PairTable substitute);

    /// Frequency of typing `c` where it does not belong.
    [[nodiscard]] double f_insert(Symbol c) const noexcept { return lookup(insert_, c); }
    /// Frequency of omitting `c`.
    [[nodiscard]] double f_delete(Symbol c) const noexcept { return lookup(delete_, c); }
    /// Frequency of typing `typed` in place of `intended`. Directional.
    [[nodiscard]] double f_substitute(Symbol typed, Symbol intended) const noexcept {
        return lookup(substitute_, SymbolPair{typed, intended});
    }

    [[nodiscard]] const SymbolTable& insert_table() const noexcept { return insert_; }
    [[nodiscard]] const SymbolTable& delete_table() const noexcept { return delete_; }
    [[nodiscard]] const PairTable& substitute_table() const noexcept { return substitute_; }

    [[nodiscard]] bool empty() const noexcept {
        return insert_.empty() && delete_.empty() && substitute_.empty();
    }
    /// True when at least one stored frequency is non-zero.
    [[nodiscard]] bool has_mass() const noexcept;

    friend bool operator==(const ErrorModel&, const ErrorModel&) = default;

private:
    template <typename Map, typename Key>
    static double lookup(const Map& map, const Key& key) noexcept {
        const auto it = map.find(key);
        return it == map.end() ? 0.0 : it->second;
    }

    SymbolTable insert_;
    SymbolTable delete_;
    PairTable substitute_;
};

[[nodiscard]] inline ErrorModel zero_model() { return ErrorModel{}; }

/// Raw editing-error tallies, the input to frequency estimation.
///
/// Counts are real-valued so add-k smoothing with fractional k stays exact in
/// the same type; counts produced by the trainer are always integral.
/// Category totals are computed from the per-key counts, so they cannot drift.
class ErrorCounts {
public:
    using SymbolTable = std::map<Symbol, double>;
    using PairTable = std::map<SymbolPair, double>;

    void add_insert(Symbol c, double n = 1.0);
    void add_delete(Symbol c, double n = 1.0);
    void add_substitute(Symbol typed, Symbol intended, double n = 1.0);
    /// Tallies one alignment step; Match steps are ignored.
    void add(const EditOp& op);

    ErrorCounts& operator+=(const ErrorCounts& other);

    [[nodiscard]] double insert_count(Symbol c) const noexcept;
    [[nodiscard]] double delete_count(Symbol c) const noexcept;
    [[nodiscard]] double substitute_count(Symbol typed, Symbol intended) const noexcept;

    [[nodiscard]] const SymbolTable& insert_table() const noexcept { return insert_; }
    [[nodiscard]] const SymbolTable& delete_table() const noexcept { return delete_; }
    [[nodiscard]] const PairTable& substitute_table() const noexcept { return substitute_; }

    [[nodiscard]] double insert_total() const noexcept;
    [[nodiscard]] double delete_total() const noexcept;
    [[nodiscard]] double substitute_total() const noexcept;
    [[nodiscard]] double grand_total() const noexcept;

    friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;

private:
    SymbolTable insert_;
    SymbolTable delete_;
    PairTable substitute_;
};

/// Denominator used when turning counts into frequencies.
enum class NormalizationMode {
    GrandTotal,   ///< every count over the total number of editing errors
    PerCategory,  ///< every count over its own category's total
};

/// Throws InvalidModel when the grand total is zero or a key would reach 1.
[[nodiscard]] ErrorModel from_counts(const ErrorCounts& counts,
                                     NormalizationMode mode = NormalizationMode::GrandTotal);

/// Add-k smoothing over `alphabet`: +k on every insert and delete key and on
/// every ordered pair of distinct symbols. Throws InvalidArgument if k <= 0
/// or the alphabet is empty.
[[nodiscard]] ErrorCounts smooth(const ErrorCounts& counts, double k, const std::set<Symbol>& alphabet);

}  // namespace wlev
