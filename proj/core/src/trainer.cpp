#include "wlev/trainer.hpp"

#include <algorithm>
#include <thread>

#include "wlev/distance.hpp"
#include "wlev/error.hpp"

namespace wlev {

std::vector<EditOp> classify_pair(const TrainingPair& pair) {
    if (pair.erroneous.empty() || pair.correct.empty()) {
        throw InvalidArgument("training pair has an empty side");
    }
    return backtrace(levenshtein_matrix(pair.erroneous, pair.correct), pair.erroneous, pair.correct);
}

namespace {

IngestResult ingest_range(std::span<const TrainingPair> pairs) {
    IngestResult result;
    for (const TrainingPair& pair : pairs) {
        if (pair.erroneous.empty() || pair.correct.empty()) {
            ++result.skipped;
            continue;
        }
        for (const EditOp& op : classify_pair(pair)) result.counts.add(op);
        ++result.pairs_used;
    }
    return result;
}

}  // namespace

IngestResult ingest(std::span<const TrainingPair> pairs, unsigned threads) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size() / 64 + 1)));
    if (threads == 1) return ingest_range(pairs);

    std::vector<IngestResult> parts(threads);
    {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (pairs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(pairs.size(), t * chunk);
            const std::size_t end = std::min(pairs.size(), begin + chunk);
            workers.emplace_back([&parts, t, sub = pairs.subspan(begin, end - begin)] { parts[t] = ingest_range(sub); });
        }
    }
    IngestResult merged;
    for (const IngestResult& part : parts) {
        merged.counts += part.counts;
        merged.pairs_used += part.pairs_used;
        merged.skipped += part.skipped;
    }
    return merged;
}

CorpusReadResult read_corpus(std::istream& in, bool nfc) {
    CorpusReadResult result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; })) continue;

        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            result.errors.push_back({number, "expected erroneous<TAB>correct"});
            continue;
        }
        if (line.find('\t', tab + 1) != std::string::npos) {
            result.errors.push_back({number, "more than one tab"});
            continue;
        }
        TrainingPair pair;
        try {
            pair.erroneous = to_word(std::string_view(line).substr(0, tab), nfc);
            pair.correct = to_word(std::string_view(line).substr(tab + 1), nfc);
        } catch (const ParseError& e) {
            result.errors.push_back({number, e.what()});
            continue;
        }
        if (pair.erroneous.empty() || pair.correct.empty()) {
            result.errors.push_back({number, "empty word"});
            continue;
        }
        result.pairs.push_back(std::move(pair));
    }
    return result;
}

}  // namespace wlev
