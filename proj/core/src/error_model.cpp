#include "wlev/error_model.hpp"

#include <cmath>
#include <string>

#include "wlev/error.hpp"

namespace wlev {

namespace {

std::string describe(const char* table, Symbol c) {
    return std::string(table) + "[\"" + encode_utf8(c) + "\"]";
}

std::string describe(const char* table, const SymbolPair& key) {
    return std::string(table) + "[\"" + encode_utf8(key.first) + encode_utf8(key.second) + "\"]";
}

template <typename Key>
void check_frequency(const char* table, const Key& key, double value) {
    if (!(value >= 0.0 && value < 1.0)) {
        throw InvalidModel("frequency " + describe(table, key) + " = " + std::to_string(value) +
                           " is outside [0, 1)");
    }
}

template <typename Key>
void check_symbols(const char* table, const Key& key) {
    if constexpr (std::is_same_v<Key, SymbolPair>) {
        if (!is_scalar_value(key.first) || !is_scalar_value(key.second)) {
            throw InvalidModel("key of " + std::string(table) + " is not a Unicode scalar value");
        }
        if (key.first == key.second) {
            throw InvalidModel(describe(table, key) + " substitutes a symbol for itself");
        }
    } else {
        if (!is_scalar_value(key)) throw InvalidModel("key of " + std::string(table) + " is not a Unicode scalar value");
    }
}

template <typename Map>
double sum_values(const Map& map) noexcept {
    double total = 0.0;
    for (const auto& [key, value] : map) total += value;
    return total;
}

void check_count(double n) {
    if (!(n >= 0.0) || !std::isfinite(n)) throw InvalidArgument("error counts must be finite and non-negative");
}

}  // namespace

ErrorModel::ErrorModel(SymbolTable insert, SymbolTable erase, PairTable substitute)
    : insert_(std::move(insert)), delete_(std::move(erase)), substitute_(std::move(substitute)) {
    for (const auto& [c, f] : insert_) check_symbols("insert", c), check_frequency("insert", c, f);
    for (const auto& [c, f] : delete_) check_symbols("delete", c), check_frequency("delete", c, f);
    for (const auto& [k, f] : substitute_) check_symbols("substitute", k), check_frequency("substitute", k, f);
}

bool ErrorModel::has_mass() const noexcept {
    return sum_values(insert_) > 0.0 || sum_values(delete_) > 0.0 || sum_values(substitute_) > 0.0;
}

void ErrorCounts::add_insert(Symbol c, double n) {
    check_count(n);
    insert_[c] += n;
}

void ErrorCounts::add_delete(Symbol c, double n) {
    check_count(n);
    delete_[c] += n;
}

void ErrorCounts::add_substitute(Symbol typed, Symbol intended, double n) {
    check_count(n);
    if (typed == intended) throw InvalidArgument("substitution of a symbol for itself is not an error");
    substitute_[{typed, intended}] += n;
}

void ErrorCounts::add(const EditOp& op) {
    switch (op.kind) {
    case EditOp::Kind::Match:
        break;
    case EditOp::Kind::Substitute:
        add_substitute(op.typed, op.intended);
        break;
    case EditOp::Kind::Insert:
        add_insert(op.typed);
        break;
    case EditOp::Kind::Delete:
        add_delete(op.intended);
        break;
    }
}

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& other) {
    for (const auto& [c, n] : other.insert_) insert_[c] += n;
    for (const auto& [c, n] : other.delete_) delete_[c] += n;
    for (const auto& [k, n] : other.substitute_) substitute_[k] += n;
    return *this;
}

double ErrorCounts::insert_count(Symbol c) const noexcept {
    const auto it = insert_.find(c);
    return it == insert_.end() ? 0.0 : it->second;
}

double ErrorCounts::delete_count(Symbol c) const noexcept {
    const auto it = delete_.find(c);
    return it == delete_.end() ? 0.0 : it->second;
}

double ErrorCounts::substitute_count(Symbol typed, Symbol intended) const noexcept {
    const auto it = substitute_.find({typed, intended});
    return it == substitute_.end() ? 0.0 : it->second;
}

double ErrorCounts::insert_total() const noexcept { return sum_values(insert_); }
double ErrorCounts::delete_total() const noexcept { return sum_values(delete_); }
double ErrorCounts::substitute_total() const noexcept { return sum_values(substitute_); }
double ErrorCounts::grand_total() const noexcept { return insert_total() + delete_total() + substitute_total(); }

ErrorModel from_counts(const ErrorCounts& counts, NormalizationMode mode) {
    const double grand = counts.grand_total();
    if (!(grand > 0.0)) throw InvalidModel("cannot estimate frequencies: no editing errors were counted");

    const auto normalize = [&](const auto& table, double category_total) {
        std::remove_cvref_t<decltype(table)> out;
        const double denominator = mode == NormalizationMode::GrandTotal ? grand : category_total;
        for (const auto& [key, n] : table) out.emplace(key, denominator > 0.0 ? n / denominator : 0.0);
        return out;
    };
    // The ErrorModel constructor names any key that reaches 1.
    return ErrorModel(normalize(counts.insert_table(), counts.insert_total()),
                      normalize(counts.delete_table(), counts.delete_total()),
                      normalize(counts.substitute_table(), counts.substitute_total()));
}

ErrorCounts smooth(const ErrorCounts& counts, double k, const std::set<Symbol>& alphabet) {
    if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("smoothing constant must be positive");
    if (alphabet.empty()) throw InvalidArgument("smoothing alphabet is empty");
    ErrorCounts out = counts;
    for (Symbol a : alphabet) {
        out.add_insert(a, k);
        out.add_delete(a, k);
        for (Symbol b : alphabet) {
            if (a != b) out.add_substitute(a, b, k);
        }
    }
    return out;
}

}  // namespace wlev
