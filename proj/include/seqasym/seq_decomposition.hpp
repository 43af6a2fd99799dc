#pragma once

// Inverting A = SEQ(B): irreducible counts and the m-part tables b_n^{(m)}.

#include <cstddef>
#include <string>
#include <vector>

#include "seqasym/class_catalog.hpp"
#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"

namespace seqasym {

/// b_n^{(m)} for 0 <= n <= n_max and 0 <= m <= m_max: the number of size-n
/// objects of A made of exactly m irreducible parts.
struct PartsTable {
    std::string class_name;
    Labeling labeling = Labeling::labeled;
    unsigned period = 1;
    std::size_t n_max = 0;
    std::size_t m_max = 0;
    std::vector<std::vector<Integer>> rows; // rows[m][n]

    [[nodiscard]] const Integer& at(std::size_t n, std::size_t m) const { return rows.at(m).at(n); }
};

/// Mismatch list produced by the verification operations.
struct IdentityReport {
    struct Mismatch {
        std::size_t n = 0;
        std::size_t m = 0;
        Integer expected;
        Integer actual;
    };
    std::string name;
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;

    [[nodiscard]] bool ok() const noexcept { return mismatches.empty(); }
};

/// B(z) = 1 - 1/A(z) in the generating-function ring matching A's labeling.
inline PowerSeries irreducible_series(const CountingSequence& a, std::size_t n_max) {
    if (a.value(0) != 1) throw Error(ErrorCode::BadConstantTerm, a.name() + " must have exactly one object of size 0");
    const PowerSeries series = counting_to_series(a, n_max);
    return PowerSeries::constant(1, n_max) - series_inverse(series);
}

/// Counting values of B^m for m = 0..m_max. Negative entries mean A is not the
/// sequence class of a genuine class and are rejected.
inline PartsTable parts_table(const CountingSequence& a, std::size_t m_max, std::size_t n_max) {
    const PowerSeries b = irreducible_series(a, n_max);
    PartsTable t;
    t.class_name = a.name();
    t.labeling = a.labeling();
    t.period = a.period();
    t.n_max = n_max;
    t.m_max = m_max;
    t.rows.reserve(m_max + 1);
    PowerSeries power = PowerSeries::constant(1, n_max);
    for (std::size_t m = 0; m <= m_max; ++m) {
        if (m > 0) power = series_mul(power, b);
        auto counts = series_to_counts(power, a.labeling());
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (counts[n] < 0) {
                throw Error(ErrorCode::NegativeIrreducibleCount,
                            a.name() + ": b_" + std::to_string(n) + "^(" + std::to_string(m) + ") = " + counts[n].str() +
                                " is negative, so the class is not a sequence of a genuine class");
            }
        }
        t.rows.push_back(std::move(counts));
    }
    return t;
}

/// Irreducible counts from the first-component recurrence
/// b_n = a_n - sum_{k=1}^{n-1} C(n,k) b_k a_{n-k}
/// (binomials dropped for unlabeled classes). Independent of series inversion.
inline std::vector<Integer> irreducible_by_recurrence(const CountingSequence& a, std::size_t n_max) {
    const auto av = a.values(n_max);
    const bool labeled = a.labeling() == Labeling::labeled;
    std::vector<Integer> b(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Integer acc = av[n];
        for (std::size_t k = 1; k < n; ++k) {
            Integer term = b[k] * av[n - k];
            if (labeled) term *= binomial(n, k);
            acc -= term;
        }
        b[n] = acc;
    }
    return b;
}

inline IdentityReport verify_simple_recurrence(const CountingSequence& a, std::size_t n_max) {
    IdentityReport rep;
    rep.name = "simple-recurrence(" + a.name() + ")";
    const PowerSeries bs = irreducible_series(a, n_max);
    const auto from_series = series_to_counts(bs, a.labeling());
    const auto from_rec = irreducible_by_recurrence(a, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ++rep.checked;
        if (from_series[n] != from_rec[n]) rep.mismatches.push_back({n, 1, from_rec[n], from_series[n]});
    }
    return rep;
}

/// Irreducible counts from the halving identity: an object has at most one
/// component larger than n/2, so
/// b_n = a_n - 2 sum_{k<=n/2} C(n,k) b_k a_{n-k}
///           + sum_{p,q<=n/2} C(n; p,q) b_p b_q a_{n-p-q}.
/// Each b_n only needs b_k for k <= n/2. Multinomials are dropped for
/// unlabeled classes.
inline std::vector<Integer> irreducible_by_halving(const CountingSequence& a, std::size_t n_max) {
    const auto av = a.values(n_max);
    const bool labeled = a.labeling() == Labeling::labeled;
    std::vector<Integer> b(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t half = n / 2;
        Integer acc = av[n];
        for (std::size_t k = 1; k <= half; ++k) {
            Integer term = b[k] * av[n - k];
            if (labeled) term *= binomial(n, k);
            acc -= 2 * term;
        }
        for (std::size_t p = 1; p <= half; ++p) {
            for (std::size_t q = 1; q <= half; ++q) {
                if (p + q > n) continue;
                Integer term = b[p] * b[q] * av[n - p - q];
                if (labeled) term *= binomial(n, p) * binomial(n - p, q);
                acc += term;
            }
        }
        b[n] = acc;
    }
    return b;
}

inline IdentityReport verify_halving_identity(const CountingSequence& a, std::size_t n_max) {
    IdentityReport rep;
    rep.name = "halving-identity(" + a.name() + ")";
    const auto from_series = series_to_counts(irreducible_series(a, n_max), a.labeling());
    const auto from_halving = irreducible_by_halving(a, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ++rep.checked;
        if (from_series[n] != from_halving[n]) rep.mismatches.push_back({n, 1, from_halving[n], from_series[n]});
    }
    return rep;
}

/// Compresses a p-periodic sequence onto its support: value(k) of the result
/// is value(p k) of the input. Labeling and name are kept; the result has
/// period 1.
inline CountingSequence periodic_reindex(const CountingSequence& a) {
    const unsigned p = a.period();
    if (p <= 1) throw Error(ErrorCode::PeriodMismatch, a.name() + " has period 1; nothing to reindex");
    std::optional<std::size_t> len;
    if (a.length()) len = (*a.length() + p - 1) / p;
    return {a.name() + "[reindexed]", a.labeling(), 1, Provenance::derived, a.family(), a.d(),
            [a, p](std::size_t k) { return a.value(p * k); }, len};
}

/// Checks il_n^{(m)}(2) = n! ip_n^{(m)}: labeled 2-multiple linear orders on
/// one side, unlabeled permutations on the other.
inline IdentityReport lift_consistency(std::size_t n_max, std::size_t m_max) {
    IdentityReport rep;
    rep.name = "lift";
    const PartsTable labeled = parts_table(linear_orders(2), m_max, n_max);
    const PartsTable unlabeled = parts_table(permutations(1), m_max, n_max);
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            ++rep.checked;
            const Integer expected = factorial(n) * unlabeled.at(n, m);
            if (labeled.at(n, m) != expected) rep.mismatches.push_back({n, m, expected, labeled.at(n, m)});
        }
    }
    return rep;
}

/// Least n >= 1 with b_n != 0, or 0 when no irreducible exists up to n_max.
inline std::size_t minimal_irreducible_size(const PartsTable& t) {
    if (t.m_max < 1) return 0;
    for (std::size_t n = 1; n <= t.n_max; ++n) {
        if (t.at(n, 1) != 0) return n;
    }
    return 0;
}

} // namespace seqasym
