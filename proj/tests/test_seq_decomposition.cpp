#include <random>

#include <gtest/gtest.h>

#include "seqasym/seq_decomposition.hpp"
#include "seqasym/verify.hpp"

using namespace seqasym;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::ParseError;
}

} // namespace

TEST(SeqDecomposition, IrreducibleTournaments) {
    const auto b = series_to_counts(irreducible_series(tournaments(1), 6), Labeling::labeled);
    EXPECT_EQ(b, (std::vector<Integer>{0, 1, 0, 2, 24, 544, 22320}));
}

TEST(SeqDecomposition, IrreduciblePermutations) {
    const auto b = series_to_counts(irreducible_series(permutations(1), 6), Labeling::unlabeled);
    EXPECT_EQ(b, (std::vector<Integer>{0, 1, 1, 3, 13, 71, 461}));
}

TEST(SeqDecomposition, ConstantOneUnlabeledIsSequenceOfAtoms) {
    const PartsTable t = parts_table(constant_one(Labeling::unlabeled), 3, 8);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(t.at(n, 1), n == 1 ? 1 : 0);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(t.at(n, 3), n == 3 ? 1 : 0);
}

// 1 - e^{-z} has alternating counts, so the labeled all-ones class is not a
// sequence of a genuine class even though both recurrences agree on it.
TEST(SeqDecomposition, ConstantOneLabeledIsRejected) {
    const auto b = series_to_counts(irreducible_series(constant_one(Labeling::labeled), 5), Labeling::labeled);
    EXPECT_EQ(b, (std::vector<Integer>{0, 1, -1, 1, -1, 1}));
    EXPECT_TRUE(verify_simple_recurrence(constant_one(Labeling::labeled), 10).ok());
    EXPECT_EQ(code_of([] { (void)parts_table(constant_one(Labeling::labeled), 2, 5); }),
              ErrorCode::NegativeIrreducibleCount);
}

TEST(SeqDecomposition, BadConstantTerm) {
    const CountingSequence a{"zero", Labeling::unlabeled, 1, Provenance::derived, Family::custom, 1,
                             [](std::size_t) { return Integer(0); }};
    EXPECT_EQ(code_of([&] { (void)irreducible_series(a, 3); }), ErrorCode::BadConstantTerm);
}

TEST(SeqDecomposition, PartsTableInvariants) {
    for (const auto& a : catalog_classes()) {
        const std::size_t n_max = 10;
        const PartsTable t = parts_table(a, n_max, n_max);
        EXPECT_EQ(t.at(0, 0), 1);
        const std::size_t mu = minimal_irreducible_size(t);
        ASSERT_GT(mu, 0U) << a.name();
        for (std::size_t n = 0; n <= n_max; ++n) {
            Integer total = 0;
            for (std::size_t m = 0; m <= n_max; ++m) {
                EXPECT_GE(t.at(n, m), 0) << a.name();
                if (n < m * mu) EXPECT_EQ(t.at(n, m), 0) << a.name() << " n=" << n << " m=" << m;
                total += t.at(n, m);
            }
            if (n > 0) EXPECT_EQ(t.at(n, 0), 0);
            EXPECT_EQ(total, a.value(n)) << a.name() << " n=" << n;
        }
    }
}

TEST(SeqDecomposition, RecurrencesAgreeWithInversion) {
    EXPECT_TRUE(verify_simple_recurrence(tournaments(1), 9).ok());
    EXPECT_TRUE(verify_simple_recurrence(permutations(1), 11).ok());
    EXPECT_TRUE(verify_halving_identity(tournaments(1), 8).ok());
    EXPECT_TRUE(verify_halving_identity(linear_orders(2), 7).ok());
    EXPECT_EQ(irreducible_by_halving(tournaments(2), 1)[1], tournaments(2).value(1));
}

TEST(SeqDecomposition, RecurrencesOnRandomSequences) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(0, 50);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Integer> v = {1};
        for (int i = 0; i < 10; ++i) v.emplace_back(dist(rng));
        for (auto lab : {Labeling::labeled, Labeling::unlabeled}) {
            const CountingSequence a = custom(v, lab, 1);
            EXPECT_TRUE(verify_simple_recurrence(a, 10).ok()) << trial;
            EXPECT_TRUE(verify_halving_identity(a, 10).ok()) << trial;
        }
    }
}

TEST(SeqDecomposition, PeriodicReindex) {
    const CountingSequence r = periodic_reindex(linear_matchings());
    EXPECT_EQ(r.period(), 1U);
    EXPECT_EQ(r.labeling(), Labeling::labeled);
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(Rational(r.value(k), factorial(2 * k)), Rational(double_factorial_odd(k)));
    EXPECT_EQ(code_of([] { (void)periodic_reindex(tournaments(1)); }), ErrorCode::PeriodMismatch);
}

TEST(SeqDecomposition, PeriodicPartsAgreeWithPairIndexedMatchings) {
    const PartsTable labeled = parts_table(linear_matchings(), 5, 20);
    const PartsTable pairs = parts_table(matchings(1), 5, 10);
    for (std::size_t k = 0; k <= 10; ++k) {
        for (std::size_t m = 0; m <= 5; ++m) {
            EXPECT_EQ(Rational(labeled.at(2 * k, m), factorial(2 * k)), Rational(pairs.at(k, m)));
            EXPECT_EQ(labeled.at(2 * k + 1 <= 20 ? 2 * k + 1 : 19, m), 0);
        }
    }
}

TEST(SeqDecomposition, Lift) {
    const PartsTable lo = parts_table(linear_orders(2), 1, 3);
    EXPECT_EQ(lo.at(3, 1), 18);
    const IdentityReport rep = lift_consistency(8, 5);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.checked, 9U * 6U);
}
