#include "wlev/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "wlev/error.hpp"

namespace wlev {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

__extension__ using Uint128 = unsigned __int128;

// std::*_distribution output is implementation-defined; these two helpers keep
// synthesized corpora identical across standard libraries.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

    std::size_t below(std::size_t n) noexcept {
        return static_cast<std::size_t>((static_cast<Uint128>(engine_()) * n) >> 64);
    }
    double unit() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&fn, n, t, threads] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    }
}

struct Choice {
    EditOp::Kind kind;
    Symbol typed;
    Symbol intended;
    double weight;
};

std::vector<std::size_t> positions_of(const Word& w, Symbol c) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == c) at.push_back(i);
    }
    return at;
}

void apply(Word& w, const Choice& choice, Rng& rng) {
    switch (choice.kind) {
    case EditOp::Kind::Insert:
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(rng.below(w.size() + 1)), choice.typed);
        break;
    case EditOp::Kind::Delete: {
        const auto at = positions_of(w, choice.intended);
        w.erase(at[rng.below(at.size())], 1);
        break;
    }
    case EditOp::Kind::Substitute: {
        const auto at = positions_of(w, choice.intended);
        w[at[rng.below(at.size())]] = choice.typed;
        break;
    }
    case EditOp::Kind::Match:
        break;
    }
}

const Choice* pick(const std::vector<Choice>& choices, double mass, Rng& rng) {
    double target = rng.unit() * mass;
    for (const Choice& c : choices) {
        if (target < c.weight) return &c;
        target -= c.weight;
    }
    return choices.empty() ? nullptr : &choices.back();
}

// Applicable operations for `w`, by category, weighted by model frequency.
std::optional<Choice> sample_model_op(const Word& w, const ErrorModel& model, Rng& rng) {
    std::array<std::vector<Choice>, 3> by_category;
    std::array<double, 3> mass{};
    for (const auto& [c, f] : model.insert_table()) {
        if (f > 0.0) by_category[0].push_back({EditOp::Kind::Insert, c, 0, f}), mass[0] += f;
    }
    if (w.size() >= 2) {
        for (const auto& [c, f] : model.delete_table()) {
            if (f > 0.0 && w.find(c) != Word::npos) by_category[1].push_back({EditOp::Kind::Delete, 0, c, f}), mass[1] += f;
        }
    }
    for (const auto& [k, f] : model.substitute_table()) {
        if (f > 0.0 && w.find(k.second) != Word::npos) {
            by_category[2].push_back({EditOp::Kind::Substitute, k.first, k.second, f});
            mass[2] += f;
        }
    }
    const double total = mass[0] + mass[1] + mass[2];
    if (!(total > 0.0)) return std::nullopt;

    double target = rng.unit() * total;
    std::size_t category = 0;
    for (; category < 2; ++category) {
        if (target < mass[category]) break;
        target -= mass[category];
    }
    while (mass[category] == 0.0) --category;  // rounding at the upper edge
    return *pick(by_category[category], mass[category], rng);
}

std::optional<Choice> sample_uniform_op(const Word& w, const std::vector<Symbol>& alphabet, Rng& rng) {
    const std::size_t categories = w.size() >= 2 ? 3 : 2;
    std::size_t category = rng.below(categories);
    if (categories == 2 && category == 1) category = 2;  // no deletion from a one-symbol word
    switch (category) {
    case 0:
        return Choice{EditOp::Kind::Insert, alphabet[rng.below(alphabet.size())], 0, 1.0};
    case 1:
        return Choice{EditOp::Kind::Delete, 0, w[rng.below(w.size())], 1.0};
    default: {
        if (alphabet.size() < 2) return Choice{EditOp::Kind::Insert, alphabet[0], 0, 1.0};
        // Uniform over the alphabet minus `intended`.
        const Symbol intended = w[rng.below(w.size())];
        Symbol typed = alphabet[rng.below(alphabet.size() - 1)];
        if (typed >= intended) typed = *std::upper_bound(alphabet.begin(), alphabet.end(), typed);
        return Choice{EditOp::Kind::Substitute, typed, intended, 1.0};
    }
    }
}

std::vector<Symbol> alphabet_of(const std::vector<Word>& words) {
    std::set<Symbol> seen;
    for (const Word& w : words) seen.insert(w.begin(), w.end());
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<TrainingPair> synth_errors(const Lexicon& lex, const SynthSpec& spec, unsigned threads) {
    if (lex.empty()) throw InvalidArgument("cannot synthesize errors from an empty lexicon");
    const bool uniform = !spec.model.has_mass();
    if (uniform && !spec.uniform_fallback && spec.errors_per_word > 0) {
        throw InvalidArgument("error model has no positive frequency and uniform fallback was not requested");
    }
    const std::vector<Word> words = lex.words();
    const std::vector<Symbol> alphabet = alphabet_of(words);
    constexpr std::size_t kMaxRedraws = 10000;

    std::vector<TrainingPair> pairs(spec.trials);
    std::vector<char> failed(spec.trials, 0);
    parallel_for(spec.trials, threads, [&](std::size_t t) {
        Rng rng(spec.seed, t);
        for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
            const Word& correct = words[rng.below(words.size())];
            Word typo = correct;
            bool ok = true;
            for (std::size_t e = 0; e < spec.errors_per_word && ok; ++e) {
                const auto choice = uniform ? sample_uniform_op(typo, alphabet, rng) : sample_model_op(typo, spec.model, rng);
                if (choice) {
                    apply(typo, *choice, rng);
                } else {
                    ok = false;
                }
            }
            if (ok) {
                pairs[t] = {std::move(typo), correct};
                return;
            }
        }
        failed[t] = 1;
    });
    if (std::find(failed.begin(), failed.end(), 1) != failed.end()) {
        throw Error("error model has no operation applicable to the lexicon's words");
    }
    return pairs;
}

std::vector<TrainingPair> synth_fixed_mix(const Lexicon& lex, const OpMix& mix, std::uint64_t seed) {
    if (lex.empty()) throw InvalidArgument("cannot synthesize errors from an empty lexicon");
    const std::vector<Word> words = lex.words();
    const std::vector<Symbol> alphabet = alphabet_of(words);
    if (mix.substitutes > 0 && alphabet.size() < 2) {
        throw InvalidArgument("substitutions need at least two distinct symbols");
    }
    std::vector<const Word*> long_words;
    for (const Word& w : words) {
        if (w.size() >= 2) long_words.push_back(&w);
    }
    if (mix.deletes > 0 && long_words.empty()) throw InvalidArgument("deletions need a word of two or more symbols");

    std::vector<EditOp::Kind> plan;
    plan.insert(plan.end(), mix.inserts, EditOp::Kind::Insert);
    plan.insert(plan.end(), mix.deletes, EditOp::Kind::Delete);
    plan.insert(plan.end(), mix.substitutes, EditOp::Kind::Substitute);
    Rng order(seed, ~std::uint64_t{0});
    for (std::size_t i = plan.size(); i > 1; --i) std::swap(plan[i - 1], plan[order.below(i)]);

    std::vector<TrainingPair> pairs;
    pairs.reserve(plan.size());
    for (std::size_t t = 0; t < plan.size(); ++t) {
        Rng rng(seed, t);
        Word correct;
        Word typo;
        switch (plan[t]) {
        case EditOp::Kind::Insert:
            correct = words[rng.below(words.size())];
            typo = correct;
            typo.insert(typo.begin() + static_cast<std::ptrdiff_t>(rng.below(typo.size() + 1)),
                        alphabet[rng.below(alphabet.size())]);
            break;
        case EditOp::Kind::Delete:
            correct = *long_words[rng.below(long_words.size())];
            typo = correct;
            typo.erase(rng.below(typo.size()), 1);
            break;
        default: {
            correct = words[rng.below(words.size())];
            typo = correct;
            const std::size_t at = rng.below(typo.size());
            Symbol typed = alphabet[rng.below(alphabet.size() - 1)];
            if (typed >= typo[at]) typed = *std::upper_bound(alphabet.begin(), alphabet.end(), typed);
            typo[at] = typed;
            break;
        }
        }
        pairs.push_back({std::move(typo), std::move(correct)});
    }
    return pairs;
}

std::optional<std::size_t> rank_of_truth(std::span<const Suggestion> suggestions, WordView truth) {
    for (std::size_t i = 0; i < suggestions.size(); ++i) {
        if (suggestions[i].word == truth) return i + 1;
    }
    return std::nullopt;
}

void RankHistogram::record(std::optional<std::size_t> rank, std::size_t cap) {
    cap = std::min(cap, kPositions);
    if (!rank) {
        ++not_found;
    } else if (*rank <= cap) {
        ++at[*rank - 1];
    } else {
        ++beyond;
    }
}

std::size_t RankHistogram::total() const noexcept {
    std::size_t sum = beyond + not_found;
    for (std::size_t n : at) sum += n;
    return sum;
}

double RankReport::percent(std::size_t count) const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total) * 100.0;
}

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

}  // namespace

std::string RankReport::to_text() const {
    std::string out;
    out += "Rank of the intended word among the suggestions (" + std::to_string(total) + " trials)\n\n";
    out += "position      weighted               classic\n";
    const auto line = [&](const std::string& label, std::size_t w, std::size_t c) {
        out += label + std::string(label.size() < 10 ? 10 - label.size() : 1, ' ');
        out += pad(std::to_string(w), 8) + pad(fixed2(percent(w)) + "%", 10);
        out += pad(std::to_string(c), 12) + pad(fixed2(percent(c)) + "%", 10) + "\n";
    };
    for (std::size_t p = 0; p < RankHistogram::kPositions; ++p) {
        line(std::to_string(p + 1), weighted.at[p], classic.at[p]);
    }
    line("deeper", weighted.beyond, classic.beyond);
    line("not found", weighted.not_found, classic.not_found);

    out += "\nReference only, not reproduced by this run: published rank-position rates\n";
    out += "measured on an unpublished 190-word Arabic test set.\n";
    out += "position      weighted   classic\n";
    out += "1               62.63%    10.00%\n";
    out += "2               21.05%     8.00%\n";
    out += "3               11.05%     2.63%\n";
    out += "4                5.26%     1.57%\n";
    return out;
}

std::string RankReport::to_json() const {
    using nlohmann::ordered_json;
    const auto ranker = [&](const RankHistogram& h) {
        ordered_json j = ordered_json::object();
        const auto put = [&](const std::string& key, std::size_t count) {
            j[key] = {{"count", count}, {"percent", percent(count)}};
        };
        for (std::size_t p = 0; p < RankHistogram::kPositions; ++p) put(std::to_string(p + 1), h.at[p]);
        put("beyond", h.beyond);
        put("not_found", h.not_found);
        return j;
    };
    ordered_json doc;
    doc["total"] = total;
    doc["weighted"] = ranker(weighted);
    doc["classic"] = ranker(classic);
    return doc.dump(2) + "\n";
}

RankReport compare_rankers(const Lexicon& lex, std::span<const TrainingPair> pairs, const ErrorModel& model,
                           const CompareOptions& options) {
    if (options.k == 0) throw InvalidArgument("k must be at least 1");
    if (options.gen_threshold == 0) throw InvalidArgument("generation threshold must be at least 1");

    std::vector<std::optional<std::size_t>> weighted_rank(pairs.size());
    std::vector<std::optional<std::size_t>> classic_rank(pairs.size());
    parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
        auto pool = score_candidates(lex, pairs[i].erroneous, model, options.mode, options.gen_threshold);
        order_weighted(pool);
        weighted_rank[i] = rank_of_truth(pool, pairs[i].correct);
        order_classic(pool);
        classic_rank[i] = rank_of_truth(pool, pairs[i].correct);
    });

    RankReport report;
    report.total = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        report.weighted.record(weighted_rank[i], options.k);
        report.classic.record(classic_rank[i], options.k);
    }
    return report;
}

}  // namespace wlev
