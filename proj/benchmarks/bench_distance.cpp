#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wlev/distance.hpp"
#include "wlev/lexicon.hpp"

namespace {

using namespace wlev;

Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t alphabet) {
    Word w(len, U'a');
    for (auto& c : w) c = U'a' + static_cast<char32_t>(rng() % alphabet);
    return w;
}

ErrorModel dense_model(std::size_t alphabet) {
    ErrorModel::SymbolTable ins;
    ErrorModel::SymbolTable del;
    ErrorModel::PairTable sub;
    for (std::size_t a = 0; a < alphabet; ++a) {
        const Symbol ca = U'a' + static_cast<Symbol>(a);
        ins[ca] = 0.01;
        del[ca] = 0.01;
        for (std::size_t b = 0; b < alphabet; ++b) {
            if (a != b) sub[{ca, U'a' + static_cast<Symbol>(b)}] = 0.002;
        }
    }
    return ErrorModel(ins, del, sub);
}

void BM_Levenshtein(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto len = static_cast<std::size_t>(state.range(0));
    const Word x = random_word(rng, len, 26);
    const Word y = random_word(rng, len, 26);
    for (auto _ : state) benchmark::DoNotOptimize(levenshtein(x, y));
}
BENCHMARK(BM_Levenshtein)->Arg(6)->Arg(12)->Arg(32);

void BM_AdjustedMeasure(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto len = static_cast<std::size_t>(state.range(0));
    const ErrorModel model = dense_model(26);
    const Word x = random_word(rng, len, 26);
    const Word y = random_word(rng, len, 26);
    for (auto _ : state) benchmark::DoNotOptimize(adjusted_measure(x, y, model));
}
BENCHMARK(BM_AdjustedMeasure)->Arg(6)->Arg(12)->Arg(32);

void BM_AdjustedMatrix(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const ErrorModel model = dense_model(26);
    const Word x = random_word(rng, 12, 26);
    const Word y = random_word(rng, 12, 26);
    for (auto _ : state) benchmark::DoNotOptimize(adjusted_matrix(x, y, model));
}
BENCHMARK(BM_AdjustedMatrix);

void BM_CandidatesWithin(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::vector<Word> words;
    for (int i = 0; i < state.range(0); ++i) words.push_back(random_word(rng, 4 + rng() % 5, 12));
    const Lexicon lex = Lexicon::build(words);
    const Word query = random_word(rng, 6, 12);
    for (auto _ : state) benchmark::DoNotOptimize(candidates_within(lex, query, 2.0, ClassicMetric{}));
}
BENCHMARK(BM_CandidatesWithin)->Arg(1000)->Arg(20000);

void BM_Suggest(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::vector<Word> words;
    for (int i = 0; i < state.range(0); ++i) words.push_back(random_word(rng, 4 + rng() % 5, 12));
    const Lexicon lex = Lexicon::build(words);
    const ErrorModel model = dense_model(12);
    const Word query = random_word(rng, 6, 12);
    for (auto _ : state) benchmark::DoNotOptimize(suggest(lex, query, model));
}
BENCHMARK(BM_Suggest)->Arg(1000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
