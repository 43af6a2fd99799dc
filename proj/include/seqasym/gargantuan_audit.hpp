#pragma once

// Finite-range evidence for the two gargantuan conditions:
//   (i)  a_{n-1}/a_n -> 0
//   (ii) sum_{k=r}^{n-r} |a_k a_{n-k}| = O(a_{n-r}) for every fixed r
// together with the sufficient pair n a_{n-1} = O(a_n) and "|a_k a_{n-k}|
// decreasing for k < n/2". Nothing here proves a sequence gargantuan; the
// verdict only says whether the data contradicts it.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "seqasym/class_catalog.hpp"
#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"

namespace seqasym {

enum class AuditVerdict { evidence_consistent, visibly_failing };

constexpr std::string_view to_string(AuditVerdict v) noexcept {
    return v == AuditVerdict::evidence_consistent ? "evidence-consistent" : "visibly-failing";
}

struct AuditReport {
    std::string class_name;
    std::size_t N = 0;
    std::size_t r_max = 0;
    /// First index of the tail (last quarter of 0..N).
    std::size_t tail_start = 0;

    /// a_{n-1}/a_n for n = 1..N, stored at index n - 1. Zero where a_n = 0.
    std::vector<Rational> ratio_trace;
    /// convolution_trace[r - 1][n - 2r] = S_{n,r} for n = 2r..N.
    std::vector<std::vector<Rational>> convolution_trace;

    /// a_{n-1}/a_n strictly decreasing over the tail and ratio_N <= 3/4 ratio_{N/2}.
    bool ratio_vanishing = false;

    struct LinearBound {
        bool holds = false;
        /// max of n a_{n-1}/a_n over the tail
        Rational witnessed_constant;
    } ratio_linear_bound;

    struct Midpoint {
        /// |a_k a_{n-k}| strictly decreasing for k < n/2, for every n in the tail
        bool holds = false;
        /// fails at every n of the tail
        bool fails_persistently = false;
        /// first (n, k) in the tail with |a_k a_{n-k}| <= |a_{k+1} a_{n-k-1}|
        std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    } midpoint_monotone;

    struct ConvolutionBound {
        std::size_t r = 0;
        /// max of S_{n,r} over N/2 <= n <= N stays within 3 S_{N/2,r}
        bool bounded = false;
        Rational witnessed_constant;
    };
    std::vector<ConvolutionBound> convolution_bounds;

    bool zero_in_tail = false;
    AuditVerdict verdict = AuditVerdict::visibly_failing;
};

namespace detail {

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace detail

/// The sequence a_0..a_N a class is audited on: a_n/n! when labeled, the raw
/// counts otherwise; p-periodic classes are compressed to a_{pn}.
inline std::vector<Rational> audit_sequence_of(const CountingSequence& a, std::size_t N) {
    const unsigned p = a.period();
    std::vector<Rational> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        const std::size_t size = p * n;
        out[n] = a.labeling() == Labeling::labeled ? Rational(a.value(size), factorial(size)) : Rational(a.value(size));
    }
    return out;
}

inline AuditReport audit_sequence(std::string name, const std::vector<Rational>& a, std::size_t r_max) {
    if (a.size() < 11) throw Error(ErrorCode::RangeError, "audits need N >= 10");
    if (r_max < 1) throw Error(ErrorCode::RangeError, "audits need r_max >= 1");
    const std::size_t N = a.size() - 1;
    const std::size_t half = N / 2;

    AuditReport rep;
    rep.class_name = std::move(name);
    rep.N = N;
    rep.r_max = r_max;
    rep.tail_start = N - N / 4;

    rep.ratio_trace.resize(N);
    for (std::size_t n = 1; n <= N; ++n) rep.ratio_trace[n - 1] = a[n] == 0 ? Rational(0) : Rational(a[n - 1] / a[n]);
    auto ratio = [&](std::size_t n) -> const Rational& { return rep.ratio_trace[n - 1]; };

    for (std::size_t n = rep.tail_start; n <= N; ++n) {
        if (a[n] == 0) rep.zero_in_tail = true;
    }

    // (i): shrinking ratios
    bool decreasing = !rep.zero_in_tail;
    for (std::size_t n = rep.tail_start + 1; n <= N && decreasing; ++n) {
        if (!(ratio(n) < ratio(n - 1))) decreasing = false;
    }
    rep.ratio_vanishing = decreasing && ratio(N) * 4 <= ratio(half) * 3;

    // (i)': n a_{n-1}/a_n bounded
    Rational witnessed = 0;
    for (std::size_t n = rep.tail_start; n <= N; ++n) {
        const Rational v = detail::abs(ratio(n)) * static_cast<unsigned long>(n);
        if (v > witnessed) witnessed = v;
    }
    rep.ratio_linear_bound.witnessed_constant = witnessed;
    rep.ratio_linear_bound.holds =
        !rep.zero_in_tail && witnessed * 4 <= detail::abs(ratio(half)) * static_cast<unsigned long>(half) * 5;

    // (ii)': midpoint monotonicity at every n of the tail
    std::size_t failing = 0;
    for (std::size_t n = rep.tail_start; n <= N; ++n) {
        bool ok = true;
        for (std::size_t k = 0; k + 1 <= n / 2; ++k) {
            const Rational here = detail::abs(a[k] * a[n - k]);
            const Rational next = detail::abs(a[k + 1] * a[n - k - 1]);
            if (!(here > next)) {
                ok = false;
                if (!rep.midpoint_monotone.first_violation) rep.midpoint_monotone.first_violation = std::pair{n, k};
                break;
            }
        }
        if (!ok) ++failing;
    }
    rep.midpoint_monotone.holds = failing == 0;
    rep.midpoint_monotone.fails_persistently = failing == N - rep.tail_start + 1;

    // (ii): convolution traces
    for (std::size_t r = 1; r <= r_max; ++r) {
        std::vector<Rational> trace;
        AuditReport::ConvolutionBound bound;
        bound.r = r;
        bool any_zero = false;
        for (std::size_t n = 2 * r; n <= N; ++n) {
            Rational s = 0;
            for (std::size_t k = r; k + r <= n; ++k) s += detail::abs(a[k] * a[n - k]);
            if (a[n - r] == 0) {
                any_zero = true;
                trace.push_back(0);
            } else {
                trace.push_back(s / detail::abs(a[n - r]));
            }
        }
        if (half >= 2 * r) {
            const Rational& mid = trace[half - 2 * r];
            Rational mx = 0;
            for (std::size_t n = half; n <= N; ++n) {
                if (trace[n - 2 * r] > mx) mx = trace[n - 2 * r];
            }
            bound.witnessed_constant = mx;
            bound.bounded = !any_zero && mx <= mid * 3;
        }
        rep.convolution_trace.push_back(std::move(trace));
        rep.convolution_bounds.push_back(std::move(bound));
    }

    const bool failing_verdict = rep.zero_in_tail || !rep.ratio_vanishing || rep.midpoint_monotone.fails_persistently;
    rep.verdict = failing_verdict ? AuditVerdict::visibly_failing : AuditVerdict::evidence_consistent;
    return rep;
}

inline AuditReport audit(const CountingSequence& a, std::size_t N, std::size_t r_max = 3) {
    if (N < 10) throw Error(ErrorCode::RangeError, "audits need N >= 10");
    std::string name = a.name();
    if (a.labeling() == Labeling::labeled) name += " (a_n/n!)";
    return audit_sequence(std::move(name), audit_sequence_of(a, N), r_max);
}

struct ProductClosureReport {
    AuditReport left;
    AuditReport right;
    AuditReport product;
    /// false only when both factors look gargantuan but the product does not
    bool consistent = true;
};

/// Termwise product of two audited sequences.
inline ProductClosureReport product_closure_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                  std::string name_a, std::string name_b, std::size_t r_max = 3) {
    if (a.size() != b.size()) throw Error(ErrorCode::RangeError, "product closure needs equal ranges");
    std::vector<Rational> c(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] < 0 || b[n] < 0) throw Error(ErrorCode::NegativeCount, "product closure needs nonnegative sequences");
        c[n] = a[n] * b[n];
    }
    ProductClosureReport rep{audit_sequence(name_a, a, r_max), audit_sequence(name_b, b, r_max),
                             audit_sequence(name_a + " * " + name_b, c, r_max), true};
    const bool both = rep.left.verdict == AuditVerdict::evidence_consistent &&
                      rep.right.verdict == AuditVerdict::evidence_consistent;
    rep.consistent = !both || rep.product.verdict == AuditVerdict::evidence_consistent;
    return rep;
}

inline ProductClosureReport product_closure_check(const CountingSequence& a, const CountingSequence& b, std::size_t N,
                                                  std::size_t r_max = 3) {
    return product_closure_check(audit_sequence_of(a, N), audit_sequence_of(b, N), a.name(), b.name(), r_max);
}

struct PerturbationReport {
    AuditReport combined; // c_n = K a_n + b_n
    /// b_n/a_n for n = 0..N, zero where a_n = 0
    std::vector<Rational> relative_perturbation;
    /// |b_n/a_n| strictly decreasing over the tail of the range
    bool perturbation_shrinking = false;
};

inline PerturbationReport perturbation_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                             const Rational& K, std::string name, std::size_t r_max = 3) {
    if (a.size() != b.size()) throw Error(ErrorCode::RangeError, "perturbation check needs equal ranges");
    const std::size_t N = a.size() - 1;
    std::vector<Rational> c(a.size());
    PerturbationReport rep;
    rep.relative_perturbation.resize(a.size());
    for (std::size_t n = 0; n <= N; ++n) {
        if (a[n] < 0) throw Error(ErrorCode::NegativeCount, "the main sequence must be nonnegative");
        c[n] = K * a[n] + b[n];
        rep.relative_perturbation[n] = a[n] == 0 ? Rational(0) : Rational(b[n] / a[n]);
    }
    rep.combined = audit_sequence(std::move(name), c, r_max);
    bool shrinking = true;
    for (std::size_t n = rep.combined.tail_start + 1; n <= N; ++n) {
        const Rational prev = detail::abs(rep.relative_perturbation[n - 1]);
        const Rational cur = detail::abs(rep.relative_perturbation[n]);
        // b = 0 throughout the tail counts as shrinking
        if (!(cur < prev) && !(cur == 0 && prev == 0)) shrinking = false;
    }
    rep.perturbation_shrinking = shrinking;
    return rep;
}

/// Unlabeled tournaments against t_n/n!: c_n = t~_n, a_n = t_n/n!, K = 1.
inline PerturbationReport unlabeled_tournament_perturbation(std::size_t N, std::size_t r_max = 3) {
    const auto labeled = audit_sequence_of(tournaments(1), N);
    const auto unlabeled = audit_sequence_of(unlabeled_tournaments(), N);
    std::vector<Rational> diff(N + 1);
    for (std::size_t n = 0; n <= N; ++n) diff[n] = unlabeled[n] - labeled[n];
    return perturbation_check(labeled, diff, 1, "unlabeled_tournaments vs tournaments/n!", r_max);
}

} // namespace seqasym
