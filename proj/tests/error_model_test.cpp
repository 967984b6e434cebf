#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wlev/error.hpp"
#include "wlev/error_model.hpp"

namespace wlev {
namespace {

ErrorCounts example_counts() {
    ErrorCounts c;
    c.add_insert(U'a', 2);
    c.add_insert(U'b', 2);
    c.add_delete(U'a', 1);
    c.add_substitute(U'a', U'b', 5);
    return c;
}

TEST(ZeroModel, EveryLookupIsZero) {
    const ErrorModel z = zero_model();
    EXPECT_TRUE(z.empty());
    EXPECT_FALSE(z.has_mass());
    EXPECT_EQ(z.f_insert(U'a'), 0.0);
    EXPECT_EQ(z.f_delete(U'ق'), 0.0);
    EXPECT_EQ(z.f_substitute(U'a', U'b'), 0.0);
}

TEST(ErrorModel, AbsentKeysReadZero) {
    std::mt19937_64 rng(3);
    const ErrorModel m = testing::random_model(rng, 4);
    for (char32_t c = U'e'; c < U'z'; ++c) {
        EXPECT_EQ(m.f_insert(c), 0.0);
        EXPECT_EQ(m.f_delete(c), 0.0);
        EXPECT_EQ(m.f_substitute(c, U'a'), 0.0);
        EXPECT_EQ(m.f_substitute(U'a', c), 0.0);
    }
}

TEST(ErrorModel, SubstitutionIsDirectional) {
    const ErrorModel m({}, {}, {{{U'q', U'f'}, 0.3}});
    EXPECT_EQ(m.f_substitute(U'q', U'f'), 0.3);
    EXPECT_EQ(m.f_substitute(U'f', U'q'), 0.0);
}

TEST(ErrorModel, RejectsOutOfRangeFrequencies) {
    EXPECT_THROW(ErrorModel({{U'a', 1.0}}, {}, {}), InvalidModel);
    EXPECT_THROW(ErrorModel({}, {{U'a', -0.1}}, {}), InvalidModel);
    EXPECT_THROW(ErrorModel({}, {}, {{{U'a', U'b'}, 1.5}}), InvalidModel);
    EXPECT_THROW(ErrorModel({{U'a', std::nan("")}}, {}, {}), InvalidModel);
    EXPECT_THROW(ErrorModel({}, {}, {{{U'a', U'a'}, 0.1}}), InvalidModel);
    EXPECT_NO_THROW(ErrorModel({{U'a', 0.0}}, {{U'a', 0.999999}}, {}));
}

TEST(ErrorModel, DiagnosticNamesTheKey) {
    try {
        (void)ErrorModel({}, {}, {{{U'ق', U'ف'}, 1.0}});
        FAIL() << "expected InvalidModel";
    } catch (const InvalidModel& e) {
        EXPECT_NE(std::string(e.what()).find("substitute[\"قف\"]"), std::string::npos) << e.what();
    }
}

TEST(ErrorCounts, TotalsAreConsistent) {
    const ErrorCounts c = example_counts();
    EXPECT_EQ(c.insert_total(), 4.0);
    EXPECT_EQ(c.delete_total(), 1.0);
    EXPECT_EQ(c.substitute_total(), 5.0);
    EXPECT_EQ(c.grand_total(), 10.0);
    EXPECT_THROW(ErrorCounts().add_substitute(U'a', U'a'), InvalidArgument);
    EXPECT_THROW(ErrorCounts().add_insert(U'a', -1), InvalidArgument);
}

TEST(ErrorCounts, MergeIsCommutative) {
    ErrorCounts a = example_counts();
    ErrorCounts b;
    b.add_insert(U'z');
    b.add_substitute(U'b', U'a', 3);
    ErrorCounts ab = a;
    ab += b;
    ErrorCounts ba = b;
    ba += a;
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab.grand_total(), 14.0);
}

TEST(FromCounts, GrandTotal) {
    const ErrorModel m = from_counts(example_counts(), NormalizationMode::GrandTotal);
    EXPECT_DOUBLE_EQ(m.f_insert(U'a'), 0.2);
    EXPECT_DOUBLE_EQ(m.f_substitute(U'a', U'b'), 0.5);
}

TEST(FromCounts, PerCategory) {
    // The lone delete and substitute keys own their categories (frequency 1).
    EXPECT_THROW((void)from_counts(example_counts(), NormalizationMode::PerCategory), InvalidModel);

    ErrorCounts c = example_counts();
    c.add_delete(U'b', 1);
    c.add_substitute(U'b', U'a', 5);
    const ErrorModel m = from_counts(c, NormalizationMode::PerCategory);
    EXPECT_DOUBLE_EQ(m.f_insert(U'a'), 0.5);
    EXPECT_DOUBLE_EQ(m.f_delete(U'a'), 0.5);
    EXPECT_DOUBLE_EQ(m.f_substitute(U'a', U'b'), 0.5);
}

TEST(FromCounts, TableTwoCategoryShares) {
    // 202 insertions, 295 deletions, 923 substitutions spread over enough keys
    // that no single key owns its category.
    ErrorCounts c;
    for (int i = 0; i < 202; ++i) c.add_insert(U'a' + static_cast<Symbol>(i % 7));
    for (int i = 0; i < 295; ++i) c.add_delete(U'a' + static_cast<Symbol>(i % 5));
    for (int i = 0; i < 923; ++i) c.add_substitute(U'a' + static_cast<Symbol>(i % 3), U'x');
    ASSERT_EQ(c.grand_total(), 1420.0);
    const ErrorModel m = from_counts(c);
    double ins = 0, del = 0, sub = 0;
    for (const auto& [k, f] : m.insert_table()) ins += f;
    for (const auto& [k, f] : m.delete_table()) del += f;
    for (const auto& [k, f] : m.substitute_table()) sub += f;
    EXPECT_NEAR(ins, 0.1423, 1e-4);
    EXPECT_NEAR(del, 0.2077, 1e-4);
    EXPECT_NEAR(sub, 0.6500, 1e-4);
}

TEST(FromCounts, RejectsEmptyAndSaturatedCounts) {
    EXPECT_THROW((void)from_counts(ErrorCounts{}), InvalidModel);
    ErrorCounts only;
    only.add_insert(U'a', 4);
    EXPECT_THROW((void)from_counts(only), InvalidModel);
}

TEST(FromCounts, MassIsConserved) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> n(1, 50);
    for (int t = 0; t < 200; ++t) {
        ErrorCounts c;
        for (char32_t a = U'a'; a <= U'e'; ++a) {
            c.add_insert(a, n(rng));
            c.add_delete(a, n(rng));
            c.add_substitute(a, a + 1, n(rng));
        }
        const ErrorModel grand = from_counts(c, NormalizationMode::GrandTotal);
        double total = 0;
        for (const auto& [k, f] : grand.insert_table()) total += f;
        for (const auto& [k, f] : grand.delete_table()) total += f;
        for (const auto& [k, f] : grand.substitute_table()) total += f;
        ASSERT_NEAR(total, 1.0, 1e-9);

        const ErrorModel per = from_counts(c, NormalizationMode::PerCategory);
        double ins = 0, del = 0, sub = 0;
        for (const auto& [k, f] : per.insert_table()) ins += f;
        for (const auto& [k, f] : per.delete_table()) del += f;
        for (const auto& [k, f] : per.substitute_table()) sub += f;
        ASSERT_NEAR(ins, 1.0, 1e-9);
        ASSERT_NEAR(del, 1.0, 1e-9);
        ASSERT_NEAR(sub, 1.0, 1e-9);
    }
}

TEST(Smooth, EmptyCountsOverTwoSymbols) {
    const ErrorCounts s = smooth(ErrorCounts{}, 1.0, {U'a', U'b'});
    EXPECT_EQ(s.insert_count(U'a'), 1.0);
    EXPECT_EQ(s.insert_count(U'b'), 1.0);
    EXPECT_EQ(s.delete_count(U'a'), 1.0);
    EXPECT_EQ(s.delete_count(U'b'), 1.0);
    EXPECT_EQ(s.substitute_count(U'a', U'b'), 1.0);
    EXPECT_EQ(s.substitute_count(U'b', U'a'), 1.0);
    EXPECT_EQ(s.substitute_count(U'a', U'a'), 0.0);
    EXPECT_EQ(s.grand_total(), 6.0);
}

TEST(Smooth, AddsToExistingCounts) {
    ErrorCounts c;
    c.add_insert(U'a', 4);
    EXPECT_EQ(smooth(c, 1.0, {U'a'}).insert_count(U'a'), 5.0);
}

TEST(Smooth, RejectsBadArguments) {
    EXPECT_THROW((void)smooth(ErrorCounts{}, 0.0, {U'a'}), InvalidArgument);
    EXPECT_THROW((void)smooth(ErrorCounts{}, -1.0, {U'a'}), InvalidArgument);
    EXPECT_THROW((void)smooth(ErrorCounts{}, 1.0, {}), InvalidArgument);
}

TEST(Smooth, EveryAlphabetKeyBecomesPositive) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        std::set<Symbol> alphabet;
        const int size = 2 + static_cast<int>(rng() % 6);
        while (static_cast<int>(alphabet.size()) < size) alphabet.insert(U'a' + static_cast<Symbol>(rng() % 26));
        ErrorCounts c;
        c.add_insert(*alphabet.begin(), static_cast<double>(rng() % 10));
        const double k = 0.1 + static_cast<double>(rng() % 10) / 4.0;
        const ErrorCounts s = smooth(c, k, alphabet);
        ASSERT_GE(s.insert_count(*alphabet.begin()), c.insert_count(*alphabet.begin()));
        const ErrorModel m = from_counts(s);
        for (Symbol a : alphabet) {
            ASSERT_GT(m.f_insert(a), 0.0);
            ASSERT_GT(m.f_delete(a), 0.0);
            for (Symbol b : alphabet) {
                if (a != b) ASSERT_GT(m.f_substitute(a, b), 0.0);
            }
        }
    }
}

}  // namespace
}  // namespace wlev
