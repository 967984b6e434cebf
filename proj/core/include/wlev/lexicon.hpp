#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ranges>
#include <utility>
#include <variant>
#include <vector>

#include "wlev/distance.hpp"
#include "wlev/error_model.hpp"
#include "wlev/trainer.hpp"
#include "wlev/unicode.hpp"

namespace wlev {

/// Dictionary stored as a trie over symbols. Immutable once built.
class Lexicon {
public:
    Lexicon();

    /// Builds from any range of words; duplicates collapse and empty words are
    /// skipped (and counted in skipped_empty()).
    template <std::ranges::input_range R>
        requires std::convertible_to<std::ranges::range_reference_t<R>, WordView>
    static Lexicon build(R&& words) {
        Lexicon lex;
        for (WordView w : words) lex.add(w);
        return lex;
    }

    [[nodiscard]] bool contains(WordView word) const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return word_count_; }
    [[nodiscard]] bool empty() const noexcept { return word_count_ == 0; }
    [[nodiscard]] std::size_t skipped_empty() const noexcept { return skipped_empty_; }

    /// Every stored word in ascending scalar-sequence order.
    [[nodiscard]] std::vector<Word> words() const;

    struct Node {
        std::vector<std::pair<Symbol, std::uint32_t>> children;  // sorted by symbol
        bool terminal = false;
    };
    [[nodiscard]] const Node& root() const noexcept { return nodes_.front(); }
    [[nodiscard]] const Node& node(std::uint32_t id) const noexcept { return nodes_[id]; }

private:
    void add(WordView word);

    std::vector<Node> nodes_;
    std::size_t word_count_ = 0;
    std::size_t skipped_empty_ = 0;
};

struct DictionaryReadResult {
    Lexicon lexicon;
    std::vector<LineError> errors;
};

/// One word per line; `#` comments and blank lines are ignored, surrounding
/// spaces and tabs trimmed.
[[nodiscard]] DictionaryReadResult read_dictionary(std::istream& in, bool nfc = false);

struct ClassicMetric {};

struct AdjustedMetric {
    std::reference_wrapper<const ErrorModel> model;
    BorderMode mode = BorderMode::Paper;
};

using Metric = std::variant<ClassicMetric, AdjustedMetric>;

struct Candidate {
    Word word;
    double score = 0.0;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Every dictionary word whose score against `query` is <= threshold, in
/// ascending word order.
///
/// One DP row (classic) or column (adjusted, query on the erroneous axis) is
/// computed per trie node. Every step cost is non-negative, so a vector whose
/// minimum already exceeds the threshold cannot recover in any descendant and
/// the subtree is cut. Throws InvalidArgument for a negative threshold.
[[nodiscard]] std::vector<Candidate> candidates_within(const Lexicon& lex, WordView query, double threshold,
                                                       const Metric& metric);

struct Suggestion {
    Word word;
    double weighted_score = 0.0;
    std::size_t classic_distance = 0;
    std::size_t rank = 0;  ///< 1-based

    friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

struct SuggestOptions {
    BorderMode mode = BorderMode::Paper;
    std::size_t k = 10;
    std::size_t gen_threshold = 2;
};

/// Candidates within `gen_threshold` classic edits, each scored under both
/// metrics. Unordered and unranked.
[[nodiscard]] std::vector<Suggestion> score_candidates(const Lexicon& lex, WordView query, const ErrorModel& model,
                                                       BorderMode mode, std::size_t gen_threshold);

/// Sorts by (weighted score, classic distance, word) and assigns ranks.
void order_weighted(std::vector<Suggestion>& suggestions);
/// Sorts by (classic distance, word) and assigns ranks.
void order_classic(std::vector<Suggestion>& suggestions);

/// The top `k` weighted suggestions for `query`. Throws InvalidArgument if
/// k or gen_threshold is zero.
[[nodiscard]] std::vector<Suggestion> suggest(const Lexicon& lex, WordView query, const ErrorModel& model,
                                              const SuggestOptions& options = {});

}  // namespace wlev
