#include <gtest/gtest.h>

#include "seqasym/gargantuan_audit.hpp"

using namespace seqasym;

TEST(GargantuanAudit, ConsistentClasses) {
    for (const auto& a : {tournaments(1), tournaments(2), tournaments(3), linear_orders(2), linear_orders(3),
                          permutations(1), permutations(2), matchings(1), matchings(2), unlabeled_tournaments()}) {
        const AuditReport rep = audit(a, 60);
        EXPECT_EQ(rep.verdict, AuditVerdict::evidence_consistent) << a.name();
        EXPECT_TRUE(rep.ratio_vanishing) << a.name();
        EXPECT_FALSE(rep.zero_in_tail) << a.name();
        EXPECT_FALSE(rep.midpoint_monotone.fails_persistently) << a.name();
    }
}

TEST(GargantuanAudit, VisiblyFailingClasses) {
    // a_n/n! = 1 and a_n = 1: ratios stay at 1
    for (const auto& a : {linear_orders(1), constant_one(Labeling::unlabeled)}) {
        const AuditReport rep = audit(a, 60);
        EXPECT_EQ(rep.verdict, AuditVerdict::visibly_failing) << a.name();
        EXPECT_FALSE(rep.ratio_vanishing) << a.name();
        EXPECT_EQ(rep.ratio_trace.back(), 1);
    }
}

TEST(GargantuanAudit, GeometricSequenceFails) {
    std::vector<Rational> a(41);
    for (std::size_t n = 0; n <= 40; ++n) a[n] = pow(Integer(2), n);
    EXPECT_EQ(audit_sequence("2^n", a, 3).verdict, AuditVerdict::visibly_failing);
}

TEST(GargantuanAudit, ZeroInTailFails) {
    std::vector<Rational> a(41);
    for (std::size_t n = 0; n <= 40; ++n) a[n] = n == 35 ? Rational(0) : Rational(factorial(n));
    const AuditReport rep = audit_sequence("holey", a, 3);
    EXPECT_TRUE(rep.zero_in_tail);
    EXPECT_EQ(rep.verdict, AuditVerdict::visibly_failing);
}

TEST(GargantuanAudit, TracesAreExactAndDeterministic) {
    const AuditReport a = audit(permutations(1), 30);
    const AuditReport b = audit(permutations(1), 30);
    ASSERT_EQ(a.ratio_trace.size(), 30U);
    for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(a.ratio_trace[n - 1], Rational(1, n));
    EXPECT_EQ(a.ratio_trace, b.ratio_trace);
    EXPECT_EQ(a.convolution_trace, b.convolution_trace);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.tail_start, 30U - 30U / 4);
}

TEST(GargantuanAudit, LinearBoundAndConvolutions) {
    const AuditReport rep = audit(permutations(1), 60, 3);
    EXPECT_TRUE(rep.ratio_linear_bound.holds);
    EXPECT_EQ(rep.ratio_linear_bound.witnessed_constant, 1);
    ASSERT_EQ(rep.convolution_bounds.size(), 3U);
    for (const auto& b : rep.convolution_bounds) EXPECT_TRUE(b.bounded) << b.r;
    EXPECT_EQ(rep.convolution_trace.size(), 3U);
    // S_{n,1} for n! is sum_{k=1}^{n-1} k!(n-k)!/(n-1)!, which tends to 2
    const auto& s1 = rep.convolution_trace[0];
    EXPECT_GT(s1.back(), Rational(2));
    EXPECT_LT(s1.back(), Rational(21, 10));
}

TEST(GargantuanAudit, PeriodicReindexing) {
    const auto a = audit_sequence_of(linear_matchings(), 10);
    for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(a[k], Rational(double_factorial_odd(k)));
    EXPECT_EQ(audit(linear_matchings(), 60).verdict, AuditVerdict::evidence_consistent);
}

TEST(GargantuanAudit, ShortRangeRejected) {
    try {
        (void)audit(tournaments(1), 9);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RangeError);
    }
    EXPECT_NO_THROW((void)audit(tournaments(1), 10));
}

TEST(GargantuanAudit, ProductClosure) {
    const auto both = product_closure_check(permutations(1), permutations(1), 40);
    EXPECT_TRUE(both.consistent);
    EXPECT_EQ(both.product.verdict, AuditVerdict::evidence_consistent);

    const auto mixed = product_closure_check(tournaments(1), permutations(1), 40);
    EXPECT_TRUE(mixed.consistent);
    EXPECT_EQ(mixed.product.verdict, AuditVerdict::evidence_consistent);

    const auto ones = product_closure_check(constant_one(Labeling::unlabeled), constant_one(Labeling::unlabeled), 40);
    EXPECT_TRUE(ones.consistent);
    EXPECT_EQ(ones.product.verdict, AuditVerdict::visibly_failing);
}

TEST(GargantuanAudit, Perturbations) {
    const std::size_t N = 40;
    const auto fact = audit_sequence_of(permutations(1), N);
    std::vector<Rational> zero(N + 1), smaller(N + 1);
    for (std::size_t n = 0; n <= N; ++n) smaller[n] = n == 0 ? Rational(0) : Rational(factorial(n - 1));

    const auto k1 = perturbation_check(fact, zero, 1, "n!");
    EXPECT_EQ(k1.combined.verdict, AuditVerdict::evidence_consistent);
    EXPECT_TRUE(k1.perturbation_shrinking);

    const auto k2 = perturbation_check(fact, smaller, 2, "2 n! + (n-1)!");
    EXPECT_EQ(k2.combined.verdict, AuditVerdict::evidence_consistent);
    EXPECT_TRUE(k2.perturbation_shrinking);

    const auto unl = unlabeled_tournament_perturbation(20);
    EXPECT_EQ(unl.combined.verdict, AuditVerdict::evidence_consistent);
    EXPECT_TRUE(unl.perturbation_shrinking);
}
