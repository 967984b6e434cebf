#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "wlev/edit_op.hpp"
#include "wlev/error_model.hpp"
#include "wlev/unicode.hpp"

namespace wlev {

/// An observed typo: what was typed and what was meant.
struct TrainingPair {
    Word erroneous;
    Word correct;

    friend bool operator==(const TrainingPair&, const TrainingPair&) = default;
};

/// Minimal edit script for one pair, aligned with the classic grid and the
/// diagonal > row > column tie-break. Throws InvalidArgument on an empty side.
[[nodiscard]] std::vector<EditOp> classify_pair(const TrainingPair& pair);

struct IngestResult {
    ErrorCounts counts;
    std::size_t pairs_used = 0;
    /// Pairs rejected because one side was empty.
    std::size_t skipped = 0;
};

/// Accumulates the edit operations of every pair. Counts are commutative sums,
/// so the result does not depend on pair order or on `threads`.
[[nodiscard]] IngestResult ingest(std::span<const TrainingPair> pairs, unsigned threads = 1);

/// One rejected line of a corpus or dictionary file.
struct LineError {
    std::size_t line = 0;
    std::string message;
};

struct CorpusReadResult {
    std::vector<TrainingPair> pairs;
    std::vector<LineError> errors;
};

/// Reads `erroneous<TAB>correct` records. `#` lines and blank lines are
/// skipped; anything else that does not parse is reported by line number.
[[nodiscard]] CorpusReadResult read_corpus(std::istream& in, bool nfc = false);

}  // namespace wlev
