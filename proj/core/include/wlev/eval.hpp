#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlev/distance.hpp"
#include "wlev/error_model.hpp"
#include "wlev/lexicon.hpp"
#include "wlev/trainer.hpp"

namespace wlev {

/// How synthetic typos are drawn.
struct SynthSpec {
    /// Sampling distribution: a category is picked by its total frequency
    /// over the operations applicable to the word, then a key within it by
    /// relative frequency, then an occurrence uniformly.
    ErrorModel model;
    std::size_t errors_per_word = 1;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    /// With an all-zero model, draw operations uniformly over the lexicon's
    /// alphabet instead of failing.
    bool uniform_fallback = false;
};

/// Draws `trials` (typo, intended) pairs. The intended word is uniform over
/// the lexicon. Trial t uses its own generator seeded from (seed, t), so the
/// output does not depend on `threads`.
///
/// Throws InvalidArgument for an empty lexicon or an all-zero model without
/// fallback, and Error when the model cannot corrupt any lexicon word.
[[nodiscard]] std::vector<TrainingPair> synth_errors(const Lexicon& lex, const SynthSpec& spec, unsigned threads = 1);

/// Exact category counts for a fixed-mix corpus.
struct OpMix {
    std::size_t inserts = 0;
    std::size_t deletes = 0;
    std::size_t substitutes = 0;
};

/// Single-error pairs with exactly the requested number of operations per
/// category, symbols drawn uniformly from the lexicon's alphabet, in a
/// seed-determined shuffled order. Needs at least two distinct symbols when
/// substitutions are requested and a word of two or more symbols for deletions.
[[nodiscard]] std::vector<TrainingPair> synth_fixed_mix(const Lexicon& lex, const OpMix& mix, std::uint64_t seed);

/// 1-based position of `truth`, or nullopt when it is absent.
[[nodiscard]] std::optional<std::size_t> rank_of_truth(std::span<const Suggestion> suggestions, WordView truth);

/// Positions 1..10, then everything ranked deeper than the display cap, then
/// truth missing from the candidate pool altogether.
struct RankHistogram {
    static constexpr std::size_t kPositions = 10;

    std::array<std::size_t, kPositions> at{};
    std::size_t beyond = 0;
    std::size_t not_found = 0;

    void record(std::optional<std::size_t> rank, std::size_t cap);
    [[nodiscard]] std::size_t total() const noexcept;

    friend bool operator==(const RankHistogram&, const RankHistogram&) = default;
};

struct RankReport {
    std::size_t total = 0;
    RankHistogram weighted;
    RankHistogram classic;

    /// count / total * 100, or 0 for an empty report.
    [[nodiscard]] double percent(std::size_t count) const noexcept;
    [[nodiscard]] double weighted_rank1_percent() const noexcept { return percent(weighted.at[0]); }
    [[nodiscard]] double classic_rank1_percent() const noexcept { return percent(classic.at[0]); }

    /// Aligned table with two-decimal percentages, followed by the published
    /// reference row (labelled as not reproduced).
    [[nodiscard]] std::string to_text() const;
    /// {"total", "weighted", "classic"}; each ranker maps position to
    /// {"count", "percent"} with full-precision percentages.
    [[nodiscard]] std::string to_json() const;

    friend bool operator==(const RankReport&, const RankReport&) = default;
};

struct CompareOptions {
    BorderMode mode = BorderMode::Paper;
    /// Positions deeper than min(k, 10) land in the `beyond` bucket.
    std::size_t k = 10;
    std::size_t gen_threshold = 2;
    unsigned threads = 1;
};

/// Ranks each pair's intended word among the candidates for its typo, once by
/// weighted score and once by classic distance, over the same candidate pool
/// and with the same lexicographic final tie-break.
[[nodiscard]] RankReport compare_rankers(const Lexicon& lex, std::span<const TrainingPair> pairs,
                                         const ErrorModel& model, const CompareOptions& options = {});

}  // namespace wlev
