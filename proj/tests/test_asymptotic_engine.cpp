#include <gtest/gtest.h>

#include "seqasym/asymptotic_engine.hpp"
#include "seqasym/verify.hpp"

using namespace seqasym;

namespace {

std::vector<Integer> row(const CoefficientTable& t, std::size_t m, std::size_t k_last) {
    std::vector<Integer> out;
    for (std::size_t k = 0; k <= k_last; ++k) out.push_back(t.at(k, m));
    return out;
}

} // namespace

TEST(AsymptoticEngine, SeqCoefficientRows) {
    EXPECT_EQ(row(seq_coefficients(tournaments(1), 1, 6), 1, 6),
              (std::vector<Integer>{1, -2, 2, -4, -32, -848, -38032}));
    EXPECT_EQ(row(seq_coefficients(permutations(1), 1, 6), 1, 6), (std::vector<Integer>{1, -2, -1, -4, -19, -110, -745}));
    EXPECT_EQ(row(seq_coefficients(unlabeled_tournaments(), 5, 9), 5, 9),
              (std::vector<Integer>{0, 0, 0, 0, 5, -10, 25, -30, 130, 390}));
}

TEST(AsymptoticEngine, NeedsOneMorePartThanM) {
    const PartsTable t = parts_table(tournaments(1), 3, 6);
    EXPECT_THROW((void)seq_coefficients(t, 3), Error);
    EXPECT_NO_THROW((void)seq_coefficients(t, 2));
}

TEST(AsymptoticEngine, ConstantTermAndSupport) {
    for (const auto& a : catalog_classes()) {
        const CoefficientTable t = seq_coefficients(a, 4, 8);
        EXPECT_EQ(t.at(0, 1), 1) << a.name();
        for (std::size_t m = 2; m <= 4; ++m) EXPECT_EQ(t.at(0, m), 0) << a.name();
    }
}

TEST(AsymptoticEngine, CycCoefficients) {
    // B = irreducible tournaments
    const auto b = series_to_counts(irreducible_series(tournaments(1), 8), Labeling::labeled);
    const CoefficientTable t = cyc_coefficients(b, 3);
    EXPECT_EQ(t.at(0, 1), 1);
    for (std::size_t k = 1; k <= 8; ++k) EXPECT_EQ(t.at(k, 1), -b[k]);
    EXPECT_EQ(t.at(3, 2), 2);
    EXPECT_EQ(to_string(t.construction), "CYC");
    EXPECT_THROW((void)cyc_coefficients(parts_table(permutations(1), 2, 4), 2), Error);
}

TEST(AsymptoticEngine, SetViaSeqCoefficients) {
    const CoefficientTable t = set_via_seq_coefficients(permutations(1), 5);
    EXPECT_EQ(row(t, 1, 5), (std::vector<Integer>{1, 1, 1, 3, 13, 71}));
    EXPECT_EQ(t.m_max, 1U);
    EXPECT_EQ(t.signed_term(3, 1), -3);
    EXPECT_EQ(t.signed_term(0, 1), 1);
    // no irreducible of size 1
    const CountingSequence gap = custom({1, 0, 1, 0, 1}, Labeling::unlabeled, 1);
    EXPECT_EQ(set_via_seq_coefficients(gap, 4).at(1, 1), 0);
    EXPECT_THROW((void)set_via_seq_coefficients(tournaments(1), 4), Error);
}

TEST(AsymptoticEngine, LeadingTerms) {
    const LeadingTerm t2 = leading_term(tournaments(1), 2);
    EXPECT_EQ(t2.multiplier, 2);
    EXPECT_EQ(t2.falling_order, 1U);
    EXPECT_EQ(t2.ratio_shift, 1U);
    for (std::size_t n = 3; n <= 20; ++n) {
        EXPECT_EQ(t2.evaluate(tournaments(1), n), Rational(2 * n * 2, pow(Integer(2), n)));
    }

    const LeadingTerm p3 = leading_term(permutations(1), 3);
    EXPECT_EQ(p3.falling_order, 0U);
    for (std::size_t n = 3; n <= 15; ++n) EXPECT_EQ(p3.evaluate(permutations(1), n), Rational(3, falling_factorial(n, 2)));

    const LeadingTerm m2 = leading_term(matchings(1), 2);
    for (std::size_t n = 2; n <= 15; ++n) {
        EXPECT_EQ(m2.evaluate(matchings(1), n), Rational(2 * double_factorial_odd(n - 1), double_factorial_odd(n)));
    }

    const LeadingTerm lm = leading_term(linear_matchings(), 3);
    EXPECT_EQ(lm.period, 2U);
    EXPECT_EQ(lm.falling_order, 4U);
    EXPECT_EQ(lm.multiplier, 3);
}

TEST(AsymptoticEngine, LeadingTermUndefinedWithoutSizeOneObjects) {
    const CountingSequence a = custom({1, 0, 1, 1, 1}, Labeling::unlabeled, 1);
    try {
        (void)leading_term(a, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LeadingTermUndefined);
    }
}

TEST(AsymptoticEngine, PartialSumBookkeeping) {
    for (const auto& a : {tournaments(1), permutations(2), matchings(1), linear_matchings(), unlabeled_tournaments()}) {
        const ExpansionReport r0 = evaluate_partial_sum(a, 1, 12, 0);
        EXPECT_EQ(r0.partial_sum, 1) << a.name();
        for (std::size_t m = 1; m <= 3; ++m) {
            const ExpansionReport rep = evaluate_partial_sum(a, m, 12, 3);
            EXPECT_EQ(rep.partial_sum + rep.residual, rep.exact_probability);
            const PartsTable t = parts_table(a, m, a.period() * 12);
            EXPECT_EQ(rep.exact_probability, Rational(t.at(a.period() * 12, m), a.value(a.period() * 12)));
        }
    }
}

// Moon and Moser: |1 - 2n/2^{n-1} - q_n| < 1/2^{n-1}.
TEST(AsymptoticEngine, TournamentResidualCorridor) {
    const std::size_t n = 14;
    const ExpansionReport rep = evaluate_partial_sum(tournaments(1), 1, n, 0);
    EXPECT_LT(rep.residual, 0);
    const Rational x(2 * n, pow(Integer(2), n - 1));
    EXPECT_LT(-rep.residual, x * Rational(101, 100));
    const Rational gap = rep.residual + x;
    const Rational bound(1, pow(Integer(2), n - 1));
    EXPECT_LT(gap < 0 ? Rational(-gap) : gap, bound);
}

TEST(AsymptoticEngine, ExpansionDisplaysWrightAndComtet) {
    EXPECT_EQ(wright_terms(4), (std::vector<Integer>{-4, 16, -256, -32768}));
    const ExpansionReport rep = evaluate_partial_sum(permutations(1), 1, 30, 3);
    EXPECT_EQ(rep.coefficients[1], -2);
    EXPECT_EQ(rep.coefficients[2], -1);
    EXPECT_EQ(rep.coefficients[3], -4);
    EXPECT_EQ(rep.shapes[3], Rational(1, falling_factorial(30, 3)));
}

// At n = 30 the r = 4 permutation residual is still far from -110; at large n it
// closes in from below with a gap shrinking like 1/n.
TEST(AsymptoticEngine, PermutationResidualConvergesSlowly) {
    const ExpansionReport at30 = evaluate_partial_sum(permutations(1), 1, 30, 4);
    EXPECT_LT(at30.normalized_residual, Rational(-150));
    EXPECT_GT(at30.normalized_residual, Rational(-160));

    const PartsTable t = parts_table(permutations(1), 4, 240);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t r = 0; r <= 4; ++r) {
            const ResidualTrace tr = residual_trace(permutations(1), t, m, r, 200, 240, Rational(1, 20));
            EXPECT_TRUE(tr.within_tolerance) << "m=" << m << " r=" << r << " " << approx(tr.deviation.back());
            EXPECT_TRUE(tr.monotone_tail) << "m=" << m << " r=" << r;
        }
    }
}

// Exponentially growing classes converge fast; the factorial-like ones only
// show the deviation shrinking at this range.
TEST(AsymptoticEngine, ResidualConvergesForOtherClasses) {
    for (const auto& a : {tournaments(1), tournaments(2), unlabeled_tournaments()}) {
        const PartsTable t = parts_table(a, 4, 60);
        for (std::size_t m = 1; m <= 3; ++m) {
            for (std::size_t r = 0; r <= 3; ++r) {
                const ResidualTrace tr = residual_trace(a, t, m, r, 50, 60, Rational(1, 20));
                EXPECT_TRUE(tr.within_tolerance) << a.name() << " m=" << m << " r=" << r;
            }
        }
    }
    for (const auto& a : {matchings(1), linear_orders(2)}) {
        const PartsTable t = parts_table(a, 4, 60);
        for (std::size_t m = 1; m <= 3; ++m) {
            for (std::size_t r = 0; r <= 3; ++r) {
                const ResidualTrace tr = residual_trace(a, t, m, r, 50, 60, Rational(1, 2));
                EXPECT_TRUE(tr.within_tolerance) << a.name() << " m=" << m << " r=" << r;
                EXPECT_TRUE(tr.monotone_tail) << a.name() << " m=" << m << " r=" << r;
            }
        }
    }
}

TEST(AsymptoticEngine, BenderTrivialAndFamilies) {
    const PowerSeries zero(6);
    const BenderResult s = bender_compose(zero, BenderFamily::seq, 1, 6);
    EXPECT_EQ(s.v, PowerSeries(6));
    EXPECT_EQ(s.w, PowerSeries::constant(1, 6));
    const BenderResult c = bender_compose(zero, BenderFamily::cyc, 2, 6);
    EXPECT_EQ(c.w, PowerSeries(6));
    EXPECT_THROW((void)bender_compose(zero, BenderFamily::seq, 0, 6), Error);
    EXPECT_THROW((void)bender_compose(PowerSeries::constant(1, 3), BenderFamily::seq, 1, 3), Error);

    // SEQ family, m = 1, U = A - 1 for tournaments gives the m = 1 coefficients
    const PowerSeries u = counting_to_series(tournaments(1), 8) - PowerSeries::constant(1, 8);
    const auto w = series_to_counts(bender_compose(u, BenderFamily::seq, 1, 8).w, Labeling::labeled);
    EXPECT_EQ(w, row(seq_coefficients(tournaments(1), 1, 8), 1, 8));

    // CYC family, m = 1: W = e^{-U} = 1 - B
    const PowerSeries b = irreducible_series(tournaments(1), 8);
    const PowerSeries one = PowerSeries::constant(1, 8);
    const PowerSeries ucyc = series_log(series_inverse(one - b));
    EXPECT_EQ(bender_compose(ucyc, BenderFamily::cyc, 1, 8).w, one - b);
}

TEST(AsymptoticEngine, SumRuleAndBenderSuites) {
    EXPECT_TRUE(verify_sum_rule().ok());
    EXPECT_TRUE(verify_bender().ok());
}
