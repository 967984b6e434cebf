#include "wlev/lexicon.hpp"

#include <algorithm>
#include <string>

#include "wlev/error.hpp"

namespace wlev {

Lexicon::Lexicon() : nodes_(1) {}

void Lexicon::add(WordView word) {
    if (word.empty()) {
        ++skipped_empty_;
        return;
    }
    std::uint32_t at = 0;
    for (Symbol c : word) {
        auto& kids = nodes_[at].children;
        auto it = std::lower_bound(kids.begin(), kids.end(), c,
                                   [](const auto& edge, Symbol s) { return edge.first < s; });
        if (it != kids.end() && it->first == c) {
            at = it->second;
            continue;
        }
        const auto fresh = static_cast<std::uint32_t>(nodes_.size());
        kids.insert(it, {c, fresh});
        nodes_.emplace_back();  // invalidates `kids`
        at = fresh;
    }
    if (!nodes_[at].terminal) {
        nodes_[at].terminal = true;
        ++word_count_;
    }
}

bool Lexicon::contains(WordView word) const noexcept {
    if (word.empty()) return false;
    std::uint32_t at = 0;
    for (Symbol c : word) {
        const auto& kids = nodes_[at].children;
        auto it = std::lower_bound(kids.begin(), kids.end(), c,
                                   [](const auto& edge, Symbol s) { return edge.first < s; });
        if (it == kids.end() || it->first != c) return false;
        at = it->second;
    }
    return nodes_[at].terminal;
}

std::vector<Word> Lexicon::words() const {
    std::vector<Word> out;
    out.reserve(word_count_);
    Word prefix;
    auto walk = [&](auto&& self, std::uint32_t id) -> void {
        if (nodes_[id].terminal) out.push_back(prefix);
        for (const auto& [c, child] : nodes_[id].children) {
            prefix.push_back(c);
            self(self, child);
            prefix.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

DictionaryReadResult read_dictionary(std::istream& in, bool nfc) {
    std::vector<Word> words;
    DictionaryReadResult result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            words.push_back(to_word(std::string_view(line).substr(first, last - first + 1), nfc));
        } catch (const ParseError& e) {
            result.errors.push_back({number, e.what()});
        }
    }
    result.lexicon = Lexicon::build(words);
    return result;
}

namespace {

// Rows or columns indexed by trie depth; depth d holds the DP vector after
// consuming d dictionary symbols.
class Traversal {
public:
    Traversal(const Lexicon& lex, std::size_t width, double threshold)
        : lex_(lex), width_(width), threshold_(threshold) {}

    template <typename Step>
    std::vector<Candidate> run(std::vector<double> first, Step&& step) {
        rows_.clear();
        rows_.push_back(std::move(first));
        visit(0, step);
        return std::move(out_);
    }

private:
    template <typename Step>
    void visit(std::uint32_t id, Step& step) {
        const auto& current = rows_.back();
        if (lex_.node(id).terminal && current[width_ - 1] <= threshold_) {
            out_.push_back({prefix_, current[width_ - 1]});
        }
        for (const auto& [c, child] : lex_.node(id).children) {
            std::vector<double> next(width_);
            step(rows_.back(), next, c);
            if (*std::min_element(next.begin(), next.end()) > threshold_) continue;
            rows_.push_back(std::move(next));
            prefix_.push_back(c);
            visit(child, step);
            prefix_.pop_back();
            rows_.pop_back();
        }
    }

    const Lexicon& lex_;
    std::size_t width_;
    double threshold_;
    std::vector<std::vector<double>> rows_;
    Word prefix_;
    std::vector<Candidate> out_;
};

}  // namespace

std::vector<Candidate> candidates_within(const Lexicon& lex, WordView query, double threshold, const Metric& metric) {
    if (!(threshold >= 0.0)) throw InvalidArgument("threshold must be non-negative");
    const std::size_t width = query.size() + 1;
    Traversal traversal(lex, width, threshold);

    if (std::holds_alternative<ClassicMetric>(metric)) {
        // Dictionary symbols on the row axis, query on the column axis.
        std::vector<double> first(width);
        for (std::size_t j = 0; j < width; ++j) first[j] = static_cast<double>(j);
        return traversal.run(std::move(first), [query](const std::vector<double>& prev, std::vector<double>& row,
                                                       Symbol c) {
            row[0] = prev[0] + 1.0;
            for (std::size_t j = 1; j < row.size(); ++j) {
                const double cost = c == query[j - 1] ? 0.0 : 1.0;
                row[j] = std::min({prev[j] + 1.0, row[j - 1] + 1.0, prev[j - 1] + cost});
            }
        });
    }

    // Weighted measure: the query is the erroneous word (row axis), so each
    // trie edge appends one column. Operand order matches adjusted_matrix so
    // scores are bit-identical to a direct computation.
    const auto& adjusted = std::get<AdjustedMetric>(metric);
    const AdjustedCosts costs(adjusted.model.get(), adjusted.mode);
    std::vector<double> first(width);
    for (std::size_t i = 1; i < width; ++i) first[i] = first[i - 1] + costs.border_insert(query[i - 1]);
    return traversal.run(std::move(first), [query, &costs](const std::vector<double>& prev, std::vector<double>& col,
                                                           Symbol c) {
        col[0] = prev[0] + costs.border_erase(c);
        for (std::size_t i = 1; i < col.size(); ++i) {
            col[i] = std::min({col[i - 1] + costs.insert(query[i - 1]),
                               prev[i] + costs.erase(c),
                               prev[i - 1] + costs.substitute(query[i - 1], c)});
        }
    });
}

std::vector<Suggestion> score_candidates(const Lexicon& lex, WordView query, const ErrorModel& model,
                                         BorderMode mode, std::size_t gen_threshold) {
    std::vector<Suggestion> out;
    for (Candidate& cand : candidates_within(lex, query, static_cast<double>(gen_threshold), ClassicMetric{})) {
        Suggestion s;
        s.weighted_score = adjusted_measure(query, cand.word, model, mode);
        s.classic_distance = static_cast<std::size_t>(cand.score);
        s.word = std::move(cand.word);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

void assign_ranks(std::vector<Suggestion>& suggestions) {
    for (std::size_t i = 0; i < suggestions.size(); ++i) suggestions[i].rank = i + 1;
}

}  // namespace

void order_weighted(std::vector<Suggestion>& suggestions) {
    std::sort(suggestions.begin(), suggestions.end(), [](const Suggestion& a, const Suggestion& b) {
        return std::tie(a.weighted_score, a.classic_distance, a.word) <
               std::tie(b.weighted_score, b.classic_distance, b.word);
    });
    assign_ranks(suggestions);
}

void order_classic(std::vector<Suggestion>& suggestions) {
    std::sort(suggestions.begin(), suggestions.end(), [](const Suggestion& a, const Suggestion& b) {
        return std::tie(a.classic_distance, a.word) < std::tie(b.classic_distance, b.word);
    });
    assign_ranks(suggestions);
}

std::vector<Suggestion> suggest(const Lexicon& lex, WordView query, const ErrorModel& model,
                                const SuggestOptions& options) {
    if (options.k == 0) throw InvalidArgument("k must be at least 1");
    if (options.gen_threshold == 0) throw InvalidArgument("generation threshold must be at least 1");
    auto suggestions = score_candidates(lex, query, model, options.mode, options.gen_threshold);
    order_weighted(suggestions);
    if (suggestions.size() > options.k) suggestions.resize(options.k);
    return suggestions;
}

}  // namespace wlev
