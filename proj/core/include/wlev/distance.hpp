#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wlev/edit_op.hpp"
#include "wlev/error_model.hpp"
#include "wlev/unicode.hpp"

namespace wlev {

/// Row-major (m+1) x (n+1) dynamic-programming grid. Row i consumes the first
/// word, column j the second.
class DpMatrix {
public:
    DpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {cells_.data() + i * cols_, cols_};
    }
    [[nodiscard]] double back() const noexcept { return cells_.back(); }

    friend bool operator==(const DpMatrix&, const DpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

/// How the first row and column of the weighted grid are initialized.
enum class BorderMode {
    /// M(i,0) accumulates F_aj and M(0,j) accumulates F_sup, the raw
    /// frequencies. Under the zero model the borders are all zero.
    Paper,
    /// Borders accumulate 1 - F, matching the interior step costs. Under the
    /// zero model the grid is exactly the classic Levenshtein grid.
    Complement,
};

/// Per-step costs of the weighted measure for one model and border mode.
/// Shared by the full grid, the rolling fast path and the trie traversal so
/// all three produce bit-identical doubles.
class AdjustedCosts {
public:
    AdjustedCosts(const ErrorModel& model, BorderMode mode) noexcept : model_(&model), mode_(mode) {}

    /// Row move: X carries an extra `typed` character.
    [[nodiscard]] double insert(Symbol typed) const noexcept { return 1.0 - model_->f_insert(typed); }
    /// Column move: X is missing `intended`.
    [[nodiscard]] double erase(Symbol intended) const noexcept { return 1.0 - model_->f_delete(intended); }
    [[nodiscard]] double substitute(Symbol typed, Symbol intended) const noexcept {
        return typed == intended ? 0.0 : 1.0 - model_->f_substitute(typed, intended);
    }
    [[nodiscard]] double border_insert(Symbol typed) const noexcept {
        return mode_ == BorderMode::Paper ? model_->f_insert(typed) : insert(typed);
    }
    [[nodiscard]] double border_erase(Symbol intended) const noexcept {
        return mode_ == BorderMode::Paper ? model_->f_delete(intended) : erase(intended);
    }

private:
    const ErrorModel* model_;
    BorderMode mode_;
};

/// Classic edit distance with unit insert, delete and substitute costs.
[[nodiscard]] std::size_t levenshtein(WordView x, WordView y);

/// Full grid for `levenshtein`; first row is 0..n, first column 0..m.
[[nodiscard]] DpMatrix levenshtein_matrix(WordView x, WordView y);

/// Frequency-weighted measure from the erroneous word `x` to the dictionary
/// word `y`. Directional: rows consume `x`, columns consume `y`.
[[nodiscard]] double adjusted_measure(WordView x, WordView y, const ErrorModel& model,
                                      BorderMode mode = BorderMode::Paper);

[[nodiscard]] DpMatrix adjusted_matrix(WordView x, WordView y, const ErrorModel& model,
                                       BorderMode mode = BorderMode::Paper);

/// Recovers one minimal edit script from a `levenshtein_matrix(x, y)` grid.
///
/// Walks back from the bottom-right cell preferring the diagonal
/// (Match/Substitute), then the row move (Insert), then the column move
/// (Delete). Throws InvalidArgument if the grid does not fit the words or is
/// not a consistent classic grid.
[[nodiscard]] std::vector<EditOp> backtrace(const DpMatrix& matrix, WordView x, WordView y);

}  // namespace wlev
