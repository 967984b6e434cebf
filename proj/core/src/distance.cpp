#include "wlev/distance.hpp"

#include <algorithm>
#include <numeric>

#include "wlev/error.hpp"

namespace wlev {

std::size_t levenshtein(WordView x, WordView y) {
    // Two-row fast path; agrees cellwise with the last row of levenshtein_matrix.
    std::vector<std::size_t> prev(y.size() + 1);
    std::vector<std::size_t> cur(y.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const std::size_t cost = x[i - 1] == y[j - 1] ? 0 : 1;
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

DpMatrix levenshtein_matrix(WordView x, WordView y) {
    DpMatrix d(x.size() + 1, y.size() + 1);
    for (std::size_t i = 0; i <= x.size(); ++i) d(i, 0) = static_cast<double>(i);
    for (std::size_t j = 0; j <= y.size(); ++j) d(0, j) = static_cast<double>(j);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const double cost = x[i - 1] == y[j - 1] ? 0.0 : 1.0;
            d(i, j) = std::min({d(i - 1, j) + 1.0, d(i, j - 1) + 1.0, d(i - 1, j - 1) + cost});
        }
    }
    return d;
}

double adjusted_measure(WordView x, WordView y, const ErrorModel& model, BorderMode mode) {
    const AdjustedCosts costs(model, mode);
    std::vector<double> prev(y.size() + 1);
    std::vector<double> cur(y.size() + 1);
    prev[0] = 0.0;
    for (std::size_t j = 1; j <= y.size(); ++j) prev[j] = prev[j - 1] + costs.border_erase(y[j - 1]);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = prev[0] + costs.border_insert(x[i - 1]);
        for (std::size_t j = 1; j <= y.size(); ++j) {
            cur[j] = std::min({prev[j] + costs.insert(x[i - 1]),
                               cur[j - 1] + costs.erase(y[j - 1]),
                               prev[j - 1] + costs.substitute(x[i - 1], y[j - 1])});
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

DpMatrix adjusted_matrix(WordView x, WordView y, const ErrorModel& model, BorderMode mode) {
    const AdjustedCosts costs(model, mode);
    DpMatrix m(x.size() + 1, y.size() + 1);
    for (std::size_t i = 1; i <= x.size(); ++i) m(i, 0) = m(i - 1, 0) + costs.border_insert(x[i - 1]);
    for (std::size_t j = 1; j <= y.size(); ++j) m(0, j) = m(0, j - 1) + costs.border_erase(y[j - 1]);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            m(i, j) = std::min({m(i - 1, j) + costs.insert(x[i - 1]),
                                m(i, j - 1) + costs.erase(y[j - 1]),
                                m(i - 1, j - 1) + costs.substitute(x[i - 1], y[j - 1])});
        }
    }
    return m;
}

std::vector<EditOp> backtrace(const DpMatrix& d, WordView x, WordView y) {
    if (d.rows() != x.size() + 1 || d.cols() != y.size() + 1) {
        throw InvalidArgument("backtrace: matrix is " + std::to_string(d.rows()) + "x" +
                              std::to_string(d.cols()) + " but words need " +
                              std::to_string(x.size() + 1) + "x" + std::to_string(y.size() + 1));
    }
    std::vector<EditOp> script;
    script.reserve(std::max(x.size(), y.size()));
    std::size_t i = x.size();
    std::size_t j = y.size();
    while (i > 0 || j > 0) {
        const double here = d(i, j);
        if (i > 0 && j > 0) {
            const bool same = x[i - 1] == y[j - 1];
            if (d(i - 1, j - 1) + (same ? 0.0 : 1.0) == here) {
                script.push_back(same ? EditOp::match(x[i - 1]) : EditOp::substitute(x[i - 1], y[j - 1]));
                --i, --j;
                continue;
            }
        }
        if (i > 0 && d(i - 1, j) + 1.0 == here) {
            script.push_back(EditOp::insert(x[i - 1]));
            --i;
            continue;
        }
        if (j > 0 && d(i, j - 1) + 1.0 == here) {
            script.push_back(EditOp::erase(y[j - 1]));
            --j;
            continue;
        }
        throw InvalidArgument("backtrace: matrix is not a Levenshtein grid for these words (cell " +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
    std::reverse(script.begin(), script.end());
    return script;
}

ReplayedPair replay(std::span<const EditOp> script) {
    ReplayedPair out;
    for (const EditOp& op : script) {
        if (op.kind != EditOp::Kind::Delete) out.erroneous.push_back(op.typed);
        if (op.kind != EditOp::Kind::Insert) out.correct.push_back(op.intended);
    }
    return out;
}

std::string to_string(const EditOp& op) {
    switch (op.kind) {
    case EditOp::Kind::Match:
        return "Match(" + encode_utf8(op.typed) + ")";
    case EditOp::Kind::Substitute:
        return "Substitute(" + encode_utf8(op.typed) + "," + encode_utf8(op.intended) + ")";
    case EditOp::Kind::Insert:
        return "Insert(" + encode_utf8(op.typed) + ")";
    case EditOp::Kind::Delete:
        return "Delete(" + encode_utf8(op.intended) + ")";
    }
    return "?";
}

}  // namespace wlev
