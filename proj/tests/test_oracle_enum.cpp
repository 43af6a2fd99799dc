#include <gtest/gtest.h>

#include "seqasym/oracle_enum.hpp"
#include "seqasym/seq_decomposition.hpp"

using namespace seqasym;

namespace {

using Counts = std::map<std::size_t, Integer>;

void expect_matches_table(const OracleResult& r, const CountingSequence& a, std::size_t size) {
    const PartsTable t = parts_table(a, size, size);
    for (std::size_t m = 1; m <= size; ++m) {
        const auto it = r.counts_by_parts.find(m);
        const Integer got = it == r.counts_by_parts.end() ? Integer(0) : it->second;
        EXPECT_EQ(got, t.at(size, m)) << a.name() << " n=" << size << " m=" << m;
    }
    EXPECT_EQ(r.total_enumerated, a.value(size));
}

} // namespace

TEST(OracleEnum, SmallTournaments) {
    EXPECT_EQ(enumerate_tournament_parts(3).counts_by_parts, (Counts{{1, 2}, {3, 6}}));
    EXPECT_EQ(enumerate_tournament_parts(4, 2).counts_by_parts, (Counts{{1, 543}, {2, 126}, {3, 36}, {4, 24}}));
}

TEST(OracleEnum, SmallPermutationsAndMatchings) {
    EXPECT_EQ(enumerate_permutation_parts(3).counts_by_parts, (Counts{{1, 3}, {2, 2}, {3, 1}}));
    EXPECT_EQ(enumerate_permutation_parts(2, 2).counts_by_parts, (Counts{{1, 3}, {2, 1}}));
    EXPECT_EQ(enumerate_matching_parts(2).counts_by_parts, (Counts{{1, 2}, {2, 1}}));
    EXPECT_EQ(enumerate_matching_parts(3, 2).counts_by_parts, (Counts{{1, 208}, {2, 16}, {3, 1}}));
}

TEST(OracleEnum, UnlabeledTournaments) {
    EXPECT_EQ(enumerate_unlabeled_tournament_parts(3).counts_by_parts, (Counts{{1, 1}, {3, 1}}));
    EXPECT_EQ(enumerate_unlabeled_tournament_parts(5).counts_by_parts, (Counts{{1, 6}, {2, 2}, {3, 3}, {5, 1}}));
}

TEST(OracleEnum, AgreesWithSeriesInversion) {
    for (std::size_t n = 1; n <= 6; ++n) {
        expect_matches_table(enumerate_tournament_parts(n), tournaments(1), n);
        expect_matches_table(enumerate_permutation_parts(n), permutations(1), n);
        expect_matches_table(enumerate_unlabeled_tournament_parts(n), unlabeled_tournaments(), n);
        expect_matches_table(enumerate_linear_order_parts(n, 2), linear_orders(2), n);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        expect_matches_table(enumerate_tournament_parts(n, 2), tournaments(2), n);
        expect_matches_table(enumerate_permutation_parts(n, 2), permutations(2), n);
        expect_matches_table(enumerate_matching_parts(n), matchings(1), n);
        expect_matches_table(enumerate_matching_parts(n, 2), matchings(2), n);
    }
}

TEST(OracleEnum, DispatchAndUnknownClass) {
    expect_matches_table(enumerate_parts(matchings(1), 3), matchings(1), 3);
    try {
        (void)enumerate_parts(custom({1, 1, 1}, Labeling::unlabeled, 1), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownClass);
    }
}

TEST(OracleEnum, ShardingIsDeterministic) {
    const OracleResult base = enumerate_tournament_parts(6);
    const OracleResult perm = enumerate_permutation_parts(7);
    for (unsigned w : {2U, 3U, 7U}) {
        OracleOptions opts;
        opts.workers = w;
        EXPECT_EQ(enumerate_tournament_parts(6, 1, opts).counts_by_parts, base.counts_by_parts) << w;
        EXPECT_EQ(enumerate_permutation_parts(7, 1, opts).counts_by_parts, perm.counts_by_parts) << w;
    }
}

TEST(OracleEnum, BudgetGuards) {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    EXPECT_EQ(code_of([] { (void)enumerate_tournament_parts(8); }), ErrorCode::BudgetExceeded);
    OracleOptions tight;
    tight.budget = 10;
    EXPECT_EQ(code_of([&] { (void)enumerate_tournament_parts(4, 1, tight); }), ErrorCode::BudgetExceeded);
    EXPECT_EQ(code_of([&] { (void)enumerate_permutation_parts(4, 1, tight); }), ErrorCode::BudgetExceeded);
    OracleOptions roomy;
    roomy.budget = 1 << 10;
    EXPECT_NO_THROW((void)enumerate_tournament_parts(4, 1, roomy));
}

// d = 2 edges per pair in either direction: same part counts as 3-multitournaments.
TEST(OracleEnum, DistinguishableEdgesMatchMultitournaments) {
    for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(enumerate_distinguishable_edge_parts(n).counts_by_parts,
                  enumerate_tournament_parts(n, 3).counts_by_parts)
            << n;
    }
}
