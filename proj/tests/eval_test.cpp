#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wlev/error.hpp"
#include "wlev/eval.hpp"

namespace wlev {
namespace {

Lexicon lex_of(std::initializer_list<const char32_t*> words) {
    std::vector<Word> v;
    for (const char32_t* w : words) v.emplace_back(w);
    return Lexicon::build(v);
}

TEST(SynthErrors, ZeroErrorsPerWordCopiesTheWord) {
    const Lexicon lex = lex_of({U"cat", U"dog"});
    SynthSpec spec;
    spec.errors_per_word = 0;
    spec.trials = 20;
    for (const TrainingPair& p : synth_errors(lex, spec)) {
        EXPECT_EQ(p.erroneous, p.correct);
        EXPECT_TRUE(lex.contains(p.correct));
    }
}

TEST(SynthErrors, OnlyOneSampleableOperation) {
    // Typed 'b' where 'a' was intended is the only operation with mass.
    const Lexicon lex = lex_of({U"aa"});
    SynthSpec spec;
    spec.model = ErrorModel({}, {}, {{{U'b', U'a'}, 1.0 - 1e-9}});
    spec.trials = 50;
    spec.seed = 5;
    std::size_t first = 0;
    for (const TrainingPair& p : synth_errors(lex, spec)) {
        EXPECT_EQ(p.correct, U"aa");
        EXPECT_TRUE(p.erroneous == U"ba" || p.erroneous == U"ab") << encode_utf8(p.erroneous);
        first += p.erroneous == U"ba";
    }
    EXPECT_GT(first, 0u);
    EXPECT_LT(first, 50u);
}

TEST(SynthErrors, RejectsUnusableInputs) {
    SynthSpec spec;
    spec.trials = 3;
    EXPECT_THROW((void)synth_errors(Lexicon{}, spec), InvalidArgument);
    EXPECT_THROW((void)synth_errors(lex_of({U"a"}), spec), InvalidArgument);  // zero model, no fallback
    spec.uniform_fallback = true;
    EXPECT_EQ(synth_errors(lex_of({U"ab"}), spec).size(), 3u);

    spec.model = ErrorModel({}, {}, {{{U'x', U'y'}, 0.5}});  // no 'y' anywhere
    EXPECT_THROW((void)synth_errors(lex_of({U"ab"}), spec), Error);
}

TEST(SynthErrors, UniformFallbackMakesOneEdit) {
    const Lexicon lex = lex_of({U"abc", U"bca", U"cab", U"a"});
    SynthSpec spec;
    spec.trials = 500;
    spec.uniform_fallback = true;
    for (const TrainingPair& p : synth_errors(lex, spec)) {
        ASSERT_EQ(levenshtein(p.erroneous, p.correct), 1u);
        ASSERT_FALSE(p.erroneous.empty());
    }
}

TEST(SynthErrors, DeterministicPerSeedAndThreadCount) {
    std::mt19937_64 rng(67);
    std::vector<Word> words;
    for (int i = 0; i < 100; ++i) words.push_back(testing::random_word(rng, 5, 2, 7));
    const Lexicon lex = Lexicon::build(words);
    SynthSpec spec;
    spec.model = testing::random_model(rng, 5);
    spec.trials = 300;
    spec.errors_per_word = 2;
    spec.seed = 99;
    const auto a = synth_errors(lex, spec, 1);
    EXPECT_EQ(a, synth_errors(lex, spec, 1));
    EXPECT_EQ(a, synth_errors(lex, spec, 4));
    spec.seed = 100;
    EXPECT_NE(a, synth_errors(lex, spec, 1));
}

TEST(SynthErrors, RecoveredProportionsWithinThreeSigma) {
    // Every word holds both symbols, so every key is applicable to every word
    // and the category probabilities are the model's category masses.
    const Lexicon lex = lex_of({U"ab", U"ba", U"aabb", U"abab", U"bbaa"});
    SynthSpec spec;
    spec.model = ErrorModel({{U'a', 0.10}, {U'b', 0.05}}, {{U'a', 0.20}, {U'b', 0.10}},
                            {{{U'a', U'b'}, 0.30}, {{U'b', U'a'}, 0.25}});
    spec.trials = 20000;
    spec.seed = 2024;
    const auto pairs = synth_errors(lex, spec);
    const ErrorCounts counts = ingest(pairs).counts;
    const double n = counts.grand_total();
    ASSERT_EQ(n, 20000.0);
    for (const auto& [observed, p] : {std::pair{counts.insert_total(), 0.15},
                                      std::pair{counts.delete_total(), 0.30},
                                      std::pair{counts.substitute_total(), 0.55}}) {
        const double sigma = std::sqrt(n * p * (1 - p));
        EXPECT_LE(std::abs(observed - n * p), 3 * sigma) << observed << " vs " << n * p;
    }
}

TEST(SynthFixedMix, ExactCategoryTotals) {
    std::mt19937_64 rng(71);
    std::vector<Word> words;
    for (int i = 0; i < 300; ++i) words.push_back(testing::random_word(rng, 6, 1, 8));
    const Lexicon lex = Lexicon::build(words);
    const auto pairs = synth_fixed_mix(lex, {202, 295, 923}, 7);
    ASSERT_EQ(pairs.size(), 1420u);
    const IngestResult r = ingest(pairs);
    EXPECT_EQ(r.counts.insert_total(), 202.0);
    EXPECT_EQ(r.counts.delete_total(), 295.0);
    EXPECT_EQ(r.counts.substitute_total(), 923.0);
    EXPECT_EQ(r.counts.grand_total(), 1420.0);
    EXPECT_EQ(pairs, synth_fixed_mix(lex, {202, 295, 923}, 7));
}

TEST(RankOfTruth, Positions) {
    std::vector<Suggestion> s(3);
    s[0].word = U"a";
    s[1].word = U"b";
    s[2].word = U"c";
    EXPECT_EQ(rank_of_truth(s, U"a"), 1u);
    EXPECT_EQ(rank_of_truth(s, U"c"), 3u);
    EXPECT_EQ(rank_of_truth(s, U"z"), std::nullopt);
    EXPECT_EQ(rank_of_truth({}, U"a"), std::nullopt);
}

TEST(RankOfTruth, LexiconWordRanksFirstForItself) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 50; ++t) {
        std::vector<Word> words;
        for (int i = 0; i < 100; ++i) words.push_back(testing::random_word(rng, 4, 1, 6));
        const Lexicon lex = Lexicon::build(words);
        const ErrorModel model = testing::random_model(rng, 4);
        const Word& truth = words[rng() % words.size()];
        for (BorderMode mode : {BorderMode::Paper, BorderMode::Complement}) {
            ASSERT_EQ(rank_of_truth(suggest(lex, truth, model, {mode, 10, 2}), truth), 1u);
        }
    }
}

TEST(RankHistogram, Buckets) {
    RankHistogram h;
    h.record(1, 10);
    h.record(10, 10);
    h.record(11, 10);
    h.record(3, 2);
    h.record(std::nullopt, 10);
    EXPECT_EQ(h.at[0], 1u);
    EXPECT_EQ(h.at[9], 1u);
    EXPECT_EQ(h.beyond, 2u);
    EXPECT_EQ(h.not_found, 1u);
    EXPECT_EQ(h.total(), 5u);
}

class CompareRankersTest : public ::testing::Test {
protected:
    void SetUp() override {
        std::mt19937_64 rng(79);
        std::vector<Word> words;
        for (int i = 0; i < 400; ++i) words.push_back(testing::random_word(rng, 6, 3, 6));
        lex = Lexicon::build(words);
    }
    Lexicon lex;
};

TEST_F(CompareRankersTest, ZeroModelComplementRankersCoincide) {
    SynthSpec spec;
    spec.trials = 200;
    spec.uniform_fallback = true;
    const auto pairs = synth_errors(lex, spec);
    const RankReport r = compare_rankers(lex, pairs, zero_model(), {BorderMode::Complement, 10, 2, 1});
    EXPECT_EQ(r.weighted, r.classic);
    EXPECT_EQ(r.weighted.total(), 200u);
    EXPECT_EQ(r.total, 200u);
}

TEST_F(CompareRankersTest, MassConservedAndThreadIndependent) {
    std::mt19937_64 rng(83);
    SynthSpec spec;
    spec.model = testing::random_model(rng, 6, 0.5);
    spec.trials = 300;
    spec.seed = 3;
    const auto pairs = synth_errors(lex, spec);
    const RankReport one = compare_rankers(lex, pairs, spec.model, {BorderMode::Paper, 10, 2, 1});
    const RankReport four = compare_rankers(lex, pairs, spec.model, {BorderMode::Paper, 10, 2, 4});
    EXPECT_EQ(one, four);
    EXPECT_EQ(one.to_json(), four.to_json());
    EXPECT_EQ(one.weighted.total(), 300u);
    EXPECT_EQ(one.classic.total(), 300u);
}

TEST(RankReport, JsonAndTextShape) {
    RankReport r;
    r.total = 4;
    r.weighted.at[0] = 3;
    r.weighted.not_found = 1;
    r.classic.at[1] = 4;
    const std::string json = r.to_json();
    EXPECT_NE(json.find("\"total\": 4"), std::string::npos);
    EXPECT_NE(json.find("\"percent\": 75.0"), std::string::npos);
    EXPECT_LT(json.find("\"weighted\""), json.find("\"classic\""));
    const std::string text = r.to_text();
    EXPECT_NE(text.find("75.00%"), std::string::npos);
    EXPECT_NE(text.find("62.63%"), std::string::npos);
    EXPECT_NE(text.find("not reproduced"), std::string::npos);
}

}  // namespace
}  // namespace wlev
