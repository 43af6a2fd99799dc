#pragma once

// Asymptotic coefficient tables for SEQ, CYC and SET-via-SEQ, leading terms,
// exact evaluation of truncated expansions, and the two Bender compositions
// the coefficient formulas come from.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqasym/class_catalog.hpp"
#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"
#include "seqasym/seq_decomposition.hpp"

namespace seqasym {

enum class Construction { seq, cyc, set_via_seq };

constexpr std::string_view to_string(Construction c) noexcept {
    switch (c) {
    case Construction::seq: return "SEQ";
    case Construction::cyc: return "CYC";
    case Construction::set_via_seq: return "SET-via-SEQ";
    }
    return "unknown";
}

/// Integer coefficients d_{k,m} for 0 <= k <= k_max and 1 <= m <= m_max.
///
/// For SET-via-SEQ only m = 1 exists; entries(0, 1) = 1 and entries(k, 1) =
/// d_k for k >= 1, entering the expansion with a minus sign
/// (1 - sum_k d_k a_{n-k}/a_n). SEQ and CYC entries enter with their sign.
struct CoefficientTable {
    Construction construction = Construction::seq;
    std::string class_name;
    Labeling labeling = Labeling::labeled;
    unsigned period = 1;
    std::size_t k_max = 0;
    std::size_t m_max = 0;
    std::vector<std::vector<Integer>> rows; // rows[m - 1][k]

    [[nodiscard]] const Integer& at(std::size_t k, std::size_t m) const { return rows.at(m - 1).at(k); }

    /// Coefficient multiplying the k-th term shape in the expansion.
    [[nodiscard]] Integer signed_term(std::size_t k, std::size_t m) const {
        if (construction == Construction::set_via_seq && k > 0) return -at(k, m);
        return at(k, m);
    }
};

/// d_{k,m} = m (b_k^{(m-1)} - 2 b_k^{(m)} + b_k^{(m+1)}), read off a parts table
/// that carries at least m_max + 1 parts.
inline CoefficientTable seq_coefficients(const PartsTable& parts, std::size_t m_max) {
    if (parts.m_max < m_max + 1) {
        throw Error(ErrorCode::RangeError, "seq coefficients up to m = " + std::to_string(m_max) + " need " +
                                               std::to_string(m_max + 1) + " parts");
    }
    CoefficientTable t;
    t.construction = Construction::seq;
    t.class_name = parts.class_name;
    t.labeling = parts.labeling;
    t.period = parts.period;
    t.k_max = parts.n_max;
    t.m_max = m_max;
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::vector<Integer> row(parts.n_max + 1);
        for (std::size_t k = 0; k <= parts.n_max; ++k) {
            row[k] = static_cast<unsigned long>(m) * (parts.at(k, m - 1) - 2 * parts.at(k, m) + parts.at(k, m + 1));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline CoefficientTable seq_coefficients(const CountingSequence& a, std::size_t m_max, std::size_t k_max) {
    return seq_coefficients(parts_table(a, m_max + 1, k_max), m_max);
}

/// d_{k,m} = b_k^{(m-1)} - b_k^{(m)} for A = CYC(B), where the b^{(m)} come
/// from the SEQ side (a parts table of the companion class SEQ(B)).
inline CoefficientTable cyc_coefficients(const PartsTable& parts, std::size_t m_max) {
    if (parts.m_max < m_max) throw Error(ErrorCode::RangeError, "cyc coefficients need m_max parts");
    if (parts.labeling != Labeling::labeled) {
        throw Error(ErrorCode::RangeError, "CYC coefficients are only defined for labeled classes");
    }
    CoefficientTable t;
    t.construction = Construction::cyc;
    t.class_name = parts.class_name;
    t.labeling = parts.labeling;
    t.k_max = parts.n_max;
    t.m_max = m_max;
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::vector<Integer> row(parts.n_max + 1);
        for (std::size_t k = 0; k <= parts.n_max; ++k) row[k] = parts.at(k, m - 1) - parts.at(k, m);
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// CYC coefficients straight from the irreducible counts b_0 = 0, b_1, ...
inline CoefficientTable cyc_coefficients(const std::vector<Integer>& irreducible_counts, std::size_t m_max,
                                         std::string name = "B") {
    if (irreducible_counts.empty() || irreducible_counts[0] != 0) {
        throw Error(ErrorCode::BadConstantTerm, "the irreducible class has no object of size 0");
    }
    const std::size_t n_max = irreducible_counts.size() - 1;
    const PowerSeries b = counts_to_series(irreducible_counts, Labeling::labeled);
    PartsTable parts;
    parts.class_name = std::move(name);
    parts.labeling = Labeling::labeled;
    parts.n_max = n_max;
    parts.m_max = m_max;
    PowerSeries power = PowerSeries::constant(1, n_max);
    for (std::size_t m = 0; m <= m_max; ++m) {
        if (m > 0) power = series_mul(power, b);
        parts.rows.push_back(series_to_counts(power, Labeling::labeled));
    }
    return cyc_coefficients(parts, m_max);
}

/// For unlabeled A = MSET(C) = SEQ(D) (or PSET): the coefficients of the
/// SET-irreducible expansion are the SEQ-irreducible counts d_k of A.
inline CoefficientTable set_via_seq_coefficients(const CountingSequence& a, std::size_t k_max) {
    if (a.labeling() != Labeling::unlabeled) {
        throw Error(ErrorCode::RangeError, "SET-via-SEQ coefficients are defined for unlabeled classes");
    }
    const PartsTable parts = parts_table(a, 1, k_max);
    CoefficientTable t;
    t.construction = Construction::set_via_seq;
    t.class_name = a.name();
    t.labeling = a.labeling();
    t.k_max = k_max;
    t.m_max = 1;
    std::vector<Integer> row(k_max + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= k_max; ++k) row[k] = parts.at(k, 1);
    t.rows.push_back(std::move(row));
    return t;
}

/// Dominant term of the m-component probability:
///
///     multiplier * (N)_{falling_order} * a_{N - period*shift} / a_N
///
/// with N = period * n the object size. Labeled aperiodic classes give
/// multiplier m a_1^{m-1} and falling order m-1; unlabeled classes drop the
/// falling factorial; p-periodic labeled classes use a_p^{m-1}/(p!)^{m-1} and
/// (pn)_{p(m-1)}.
struct LeadingTerm {
    std::size_t m = 1;
    Rational multiplier;
    std::size_t falling_order = 0;
    std::size_t ratio_shift = 0;
    unsigned period = 1;
    Labeling labeling = Labeling::labeled;
    /// Closed form for built-in families, empty otherwise.
    std::string closed_form;

    /// Exact value at reindexed size n (object size period*n).
    [[nodiscard]] Rational evaluate(const CountingSequence& a, std::size_t n) const {
        const std::size_t size = period * n;
        const std::size_t back = period * ratio_shift;
        if (back > size) return 0;
        const Integer an = a.value(size);
        if (an == 0) throw Error(ErrorCode::RangeError, a.name() + " has no objects of size " + std::to_string(size));
        return multiplier * Rational(falling_factorial(size, falling_order) * a.value(size - back), an);
    }
};

namespace detail {

inline std::string leading_closed_form(const CountingSequence& a, std::size_t m) {
    const std::string ms = std::to_string(m);
    const std::string j = std::to_string(m - 1);
    const unsigned d = a.d();
    const std::string ds = std::to_string(d);
    switch (a.family()) {
    case Family::tournaments: {
        const std::string base = std::to_string(d + 1);
        return ms + "*(n)_" + j + "*" + base + "^" + std::to_string(m * (m - 1) / 2) + "/" + base + "^(" + j + "*n)";
    }
    case Family::linear_orders:
        if (d == 1) return "";
        return ms + "/((n)_" + j + ")^" + std::to_string(d - 1);
    case Family::permutations:
        return ms + "/((n)_" + j + ")^" + ds;
    case Family::matchings:
        return ms + "*((2(n-" + ms + ")+1)!!/(2n-1)!!)^" + ds;
    case Family::linear_matchings:
        return ms + "*(2(n-" + ms + ")+1)!!/(2n-1)!!";
    case Family::unlabeled_tournaments:
        return ms + "*(n)_" + j + "*2^" + std::to_string(m * (m - 1) / 2) + "/2^(" + j + "*n)  [via t~_n ~ t_n/n!]";
    default:
        return "";
    }
}

} // namespace detail

inline LeadingTerm leading_term(const CountingSequence& a, std::size_t m) {
    if (m < 1) throw Error(ErrorCode::RangeError, "m must be positive");
    LeadingTerm lt;
    lt.m = m;
    lt.period = a.period();
    lt.labeling = a.labeling();
    lt.ratio_shift = m - 1;
    const unsigned p = a.period();
    const Integer ap = a.value(p);
    if (ap == 0) {
        throw Error(ErrorCode::LeadingTermUndefined,
                    a.name() + ": a_" + std::to_string(p) + " = 0, so the first correction is not of this form");
    }
    Rational base = a.labeling() == Labeling::labeled ? Rational(ap, factorial(p)) : Rational(ap);
    Rational mult = static_cast<unsigned long>(m);
    for (std::size_t i = 0; i + 1 < m; ++i) mult *= base;
    lt.multiplier = mult;
    lt.falling_order = a.labeling() == Labeling::labeled ? p * (m - 1) : 0;
    lt.closed_form = detail::leading_closed_form(a, m);
    return lt;
}

/// Term shape for index k at reindexed size n:
/// labeled   C(pn, pk) a_{p(n-k)} / a_{pn}
/// unlabeled           a_{n-k}    / a_n
inline Rational term_shape(const CountingSequence& a, std::size_t n, std::size_t k) {
    const unsigned p = a.period();
    if (k > n) return 0;
    const Integer an = a.value(p * n);
    if (an == 0) throw Error(ErrorCode::RangeError, a.name() + " has no objects of size " + std::to_string(p * n));
    Rational shape(a.value(p * (n - k)), an);
    if (a.labeling() == Labeling::labeled) shape *= binomial(p * n, p * k);
    return shape;
}

/// Exact comparison of a truncated expansion with the true probability.
struct ExpansionReport {
    std::string class_name;
    std::size_t m = 1;
    std::size_t n = 0; // reindexed size; the object size is period * n
    std::size_t terms_used = 0; // r: terms k = 0..r are summed
    unsigned period = 1;
    std::vector<Integer> coefficients; // d_{pk,m}, k = 0..r+1
    std::vector<Rational> shapes;      // k = 0..r+1
    Rational partial_sum;
    Rational exact_probability;
    Rational residual;
    Rational normalized_residual; // residual / shape_{r+1}, zero when that shape is zero
    /// Gargantuan-audit verdict recorded by the caller; the engine never sets it.
    std::optional<std::string> audit_verdict;
};

/// Sums the SEQ expansion of P(m components) through k = r at reindexed size n
/// and compares it with b_n^{(m)}/a_n, reading both sides from `parts`, which
/// must cover m + 1 parts and sizes up to max(pn, p(r+1)).
inline ExpansionReport evaluate_partial_sum(const CountingSequence& a, const PartsTable& parts, std::size_t m,
                                            std::size_t n, std::size_t r) {
    if (m < 1) throw Error(ErrorCode::RangeError, "m must be positive");
    const unsigned p = a.period();
    const std::size_t size = p * n;
    if (parts.n_max < std::max(size, p * (r + 1)) || parts.m_max < m + 1) {
        throw Error(ErrorCode::RangeError, "parts table too small for n = " + std::to_string(n) + ", r = " +
                                               std::to_string(r) + ", m = " + std::to_string(m));
    }
    ExpansionReport rep;
    rep.class_name = a.name();
    rep.m = m;
    rep.n = n;
    rep.terms_used = r;
    rep.period = p;
    rep.partial_sum = 0;
    for (std::size_t k = 0; k <= r + 1; ++k) {
        const std::size_t j = p * k;
        rep.coefficients.push_back(static_cast<unsigned long>(m) *
                                   (parts.at(j, m - 1) - 2 * parts.at(j, m) + parts.at(j, m + 1)));
        rep.shapes.push_back(term_shape(a, n, k));
    }
    for (std::size_t k = 0; k <= r; ++k) rep.partial_sum += Rational(rep.coefficients[k]) * rep.shapes[k];
    rep.exact_probability = Rational(parts.at(size, m), a.value(size));
    rep.residual = rep.exact_probability - rep.partial_sum;
    rep.normalized_residual = rep.shapes[r + 1] == 0 ? Rational(0) : rep.residual / rep.shapes[r + 1];
    return rep;
}

inline ExpansionReport evaluate_partial_sum(const CountingSequence& a, std::size_t m, std::size_t n, std::size_t r) {
    const unsigned p = a.period();
    return evaluate_partial_sum(a, parts_table(a, m + 1, std::max(p * n, p * (r + 1))), m, n, r);
}

enum class BenderFamily {
    /// F(x) = (1 - 1/(1+x))^m
    seq,
    /// F(x) = (1 - e^{-x})^m / m
    cyc,
};

struct BenderResult {
    PowerSeries v;
    PowerSeries w;
};

/// V = F(U) and W = F'(U) for the analytic families the coefficient formulas
/// are derived from. Only inverse, pow and exp are needed, never a general
/// composition.
inline BenderResult bender_compose(const PowerSeries& u, BenderFamily family, std::size_t m, std::size_t n_max) {
    if (u[0] != 0) throw Error(ErrorCode::BadConstantTerm, "Bender composition needs U(0) = 0");
    if (m < 1) throw Error(ErrorCode::UnsupportedF, "the families are indexed by m >= 1");
    const PowerSeries uu = u.truncated(n_max);
    const PowerSeries one = PowerSeries::constant(1, uu.order());
    switch (family) {
    case BenderFamily::seq: {
        const PowerSeries inv = series_inverse(one + uu);
        const PowerSeries inner = one - inv; // 1 - 1/(1+U)
        PowerSeries w = series_mul(series_pow(inner, m - 1), series_mul(inv, inv));
        w = series_scale(w, Rational(static_cast<unsigned long>(m)));
        return {series_pow(inner, m), std::move(w)};
    }
    case BenderFamily::cyc: {
        const PowerSeries e = series_exp(-uu); // e^{-U}
        const PowerSeries inner = one - e;
        PowerSeries v = series_scale(series_pow(inner, m), Rational(1, static_cast<unsigned long>(m)));
        PowerSeries w = series_mul(e, series_pow(inner, m - 1));
        return {std::move(v), std::move(w)};
    }
    }
    throw Error(ErrorCode::UnsupportedF, "unknown analytic family");
}

} // namespace seqasym
