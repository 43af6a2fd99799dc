#pragma once

// Verification suites: each runs a family of exact checks and collects
// failures instead of stopping at the first one.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqasym/appendix_tables.hpp"
#include "seqasym/asymptotic_engine.hpp"
#include "seqasym/class_catalog.hpp"
#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"
#include "seqasym/gargantuan_audit.hpp"
#include "seqasym/oracle_enum.hpp"
#include "seqasym/seq_decomposition.hpp"

namespace seqasym {

struct VerificationFailure {
    std::string class_name;
    std::string indices;
    std::string expected;
    std::string actual;
};

struct VerificationSummary {
    std::string suite;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::vector<VerificationFailure> failures;
    /// skip markers and other remarks, in the order they arose
    std::vector<std::string> notes;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
    [[nodiscard]] int exit_status() const noexcept { return failures.empty() ? 0 : 1; }

    void check(bool pass, std::string cls, std::string indices, std::string expected, std::string actual) {
        ++checks;
        if (!pass) failures.push_back({std::move(cls), std::move(indices), std::move(expected), std::move(actual)});
    }

    void merge(const VerificationSummary& other) {
        checks += other.checks;
        skipped += other.skipped;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
    }
};

/// Every built-in class that is a genuine SEQ class.
inline std::vector<CountingSequence> catalog_classes() {
    std::vector<CountingSequence> out;
    for (unsigned d = 1; d <= 3; ++d) out.push_back(tournaments(d));
    for (unsigned d = 1; d <= 3; ++d) out.push_back(linear_orders(d));
    for (unsigned d = 1; d <= 3; ++d) out.push_back(permutations(d));
    for (unsigned d = 1; d <= 3; ++d) out.push_back(matchings(d));
    out.push_back(linear_matchings());
    out.push_back(unlabeled_tournaments());
    out.push_back(constant_one(Labeling::unlabeled));
    return out;
}

namespace detail {

inline CountingSequence golden_class(const golden::Table& t) {
    if (t.class_key == "tournaments") return tournaments(t.d);
    if (t.class_key == "permutations") return permutations(t.d);
    if (t.class_key == "matchings") return matchings(t.d);
    if (t.class_key == "unlabeled_tournaments") return unlabeled_tournaments();
    throw Error(ErrorCode::UnknownClass, std::string(t.class_key));
}

inline std::string nm(std::size_t n, std::size_t m, char index = 'n') {
    return std::string(1, index) + "=" + std::to_string(n) + " m=" + std::to_string(m);
}

} // namespace detail

/// Reference tables reproduced from the series pipeline. With `listed_only`
/// the d = 3 permutation and matching extras are left out.
inline VerificationSummary verify_appendix(bool listed_only = false) {
    VerificationSummary s;
    s.suite = "appendix";
    std::size_t tables = 0;
    for (const auto& t : golden::tables()) {
        if (listed_only && !t.listed) continue;
        ++tables;
        const CountingSequence a = detail::golden_class(t);
        const std::size_t last = t.last_index();
        const std::size_t m_max = t.rows.size();
        const bool parts = t.kind == golden::Kind::parts;
        const PartsTable pt = parts_table(a, m_max + 1, last);
        const CoefficientTable ct = seq_coefficients(pt, m_max);
        const std::string label = a.name() + (parts ? " parts" : " coefficients");
        for (std::size_t m = 1; m <= m_max; ++m) {
            for (std::size_t i = t.first_index; i <= last; ++i) {
                const Integer expected(std::string(t.rows[m - 1][i - t.first_index]));
                const Integer actual = parts ? pt.at(i, m) : ct.at(i, m);
                s.check(actual == expected, label, detail::nm(i, m, parts ? 'n' : 'k'), expected.str(), actual.str());
            }
        }
        // the labeled 2-periodic bookkeeping of plain matchings must agree
        // after dividing out (2k)!
        if (t.class_key == "matchings" && t.d == 1) {
            const CountingSequence lm = linear_matchings();
            const PartsTable lpt = parts_table(lm, m_max + 1, 2 * last);
            const CoefficientTable lct = seq_coefficients(lpt, m_max);
            for (std::size_t m = 1; m <= m_max; ++m) {
                for (std::size_t i = t.first_index; i <= last; ++i) {
                    const Integer expected(std::string(t.rows[m - 1][i - t.first_index]));
                    const Rational actual(parts ? lpt.at(2 * i, m) : lct.at(2 * i, m), factorial(2 * i));
                    s.check(actual == Rational(expected), "linear_matchings" + std::string(parts ? " parts" : " coefficients"),
                            detail::nm(2 * i, m, parts ? 'n' : 'k') + " /(2k)!", expected.str(), to_string(actual));
                }
            }
        }
    }
    s.notes.push_back(std::to_string(tables) + " tables compared");
    return s;
}

struct OracleCase {
    std::function<OracleResult(std::size_t, const OracleOptions&)> run;
    CountingSequence reference;
    std::size_t n_min;
    std::size_t n_max;
};

/// The in-budget grid: every (class, n) the default oracle limits allow.
inline std::vector<OracleCase> oracle_cases() {
    std::vector<OracleCase> cases;
    auto tourn = [](unsigned d) {
        return [d](std::size_t n, const OracleOptions& o) { return enumerate_tournament_parts(n, d, o); };
    };
    auto perm = [](unsigned d) {
        return [d](std::size_t n, const OracleOptions& o) { return enumerate_permutation_parts(n, d, o); };
    };
    auto match = [](unsigned d) {
        return [d](std::size_t n, const OracleOptions& o) { return enumerate_matching_parts(n, d, o); };
    };
    auto lin = [](unsigned d) {
        return [d](std::size_t n, const OracleOptions& o) { return enumerate_linear_order_parts(n, d, o); };
    };
    cases.push_back({tourn(1), tournaments(1), 1, 7});
    cases.push_back({tourn(2), tournaments(2), 1, 5});
    cases.push_back({tourn(3), tournaments(3), 1, 4});
    cases.push_back({perm(1), permutations(1), 1, 9});
    cases.push_back({perm(2), permutations(2), 1, 6});
    cases.push_back({perm(3), permutations(3), 1, 5});
    cases.push_back({match(1), matchings(1), 1, 6});
    cases.push_back({match(2), matchings(2), 1, 4});
    cases.push_back({lin(2), linear_orders(2), 1, 6});
    cases.push_back({[](std::size_t n, const OracleOptions& o) { return enumerate_unlabeled_tournament_parts(n, o); },
                     unlabeled_tournaments(), 1, 6});
    cases.push_back({[](std::size_t n, const OracleOptions& o) { return enumerate_distinguishable_edge_parts(n, 2, o); },
                     tournaments(3), 1, 4});
    return cases;
}

inline void compare_oracle(VerificationSummary& s, const OracleResult& r, const CountingSequence& reference) {
    const PartsTable pt = parts_table(reference, r.n, r.n);
    for (std::size_t m = 0; m <= r.n; ++m) {
        const auto it = r.counts_by_parts.find(m);
        const Integer got = it == r.counts_by_parts.end() ? Integer(0) : it->second;
        s.check(got == pt.at(r.n, m), r.class_name + " vs " + reference.name(), detail::nm(r.n, m), pt.at(r.n, m).str(),
                got.str());
    }
    s.check(r.total_enumerated == reference.value(r.n), r.class_name, "n=" + std::to_string(r.n) + " total",
            reference.value(r.n).str(), r.total_enumerated.str());
}

inline VerificationSummary verify_oracle(const OracleOptions& opts = {}) {
    VerificationSummary s;
    s.suite = "oracle";
    for (const auto& c : oracle_cases()) {
        for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
            try {
                compare_oracle(s, c.run(n, opts), c.reference);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BudgetExceeded) throw;
                ++s.skipped;
                s.notes.push_back("skipped " + c.reference.name() + " n=" + std::to_string(n) + " (over budget)");
            }
        }
    }
    return s;
}

/// Sum over m of d_{k,m} vanishes for 1 <= k <= k_max, summing m up to
/// k/mu + 1 where mu is the least irreducible size; entries beyond that must
/// be zero.
inline VerificationSummary verify_sum_rule(std::size_t k_max = 8) {
    VerificationSummary s;
    s.suite = "sumrule";
    for (const auto& a : catalog_classes()) {
        const std::size_t size_max = a.period() * k_max;
        const std::size_t m_top = size_max + 2;
        const PartsTable pt = parts_table(a, m_top + 1, size_max);
        const CoefficientTable ct = seq_coefficients(pt, m_top);
        const std::size_t mu = minimal_irreducible_size(pt);
        for (std::size_t k = 1; k <= size_max; ++k) {
            const std::size_t support = mu == 0 ? m_top : std::min(m_top, k / mu + 1);
            Integer sum = 0;
            for (std::size_t m = 1; m <= support; ++m) sum += ct.at(k, m);
            s.check(sum == 0, a.name(), "k=" + std::to_string(k) + " sum over m<=" + std::to_string(support), "0",
                    sum.str());
            for (std::size_t m = 1; m <= m_top; ++m) {
                if (mu != 0 && (m - 1) * mu > k) {
                    s.check(ct.at(k, m) == 0, a.name(), detail::nm(k, m, 'k') + " beyond support", "0", ct.at(k, m).str());
                }
            }
        }
    }
    return s;
}

/// Series inversion against the first-component recurrence and the halving
/// identity.
inline VerificationSummary verify_recurrences(std::size_t n_max = 14) {
    VerificationSummary s;
    s.suite = "recurrences";
    for (const auto& a : catalog_classes()) {
        for (const auto& rep : {verify_simple_recurrence(a, n_max), verify_halving_identity(a, n_max)}) {
            s.checks += rep.checked;
            for (const auto& mm : rep.mismatches) {
                s.failures.push_back({a.name(), rep.name + " " + detail::nm(mm.n, mm.m), mm.expected.str(), mm.actual.str()});
            }
        }
    }
    return s;
}

inline VerificationSummary verify_lift(std::size_t n_max = 8, std::size_t m_max = 5) {
    VerificationSummary s;
    s.suite = "lift";
    const IdentityReport rep = lift_consistency(n_max, m_max);
    s.checks = rep.checked;
    for (const auto& mm : rep.mismatches) {
        s.failures.push_back({"linear_orders(2) vs n! * permutations", detail::nm(mm.n, mm.m), mm.expected.str(),
                              mm.actual.str()});
    }
    return s;
}

/// Tournament coefficients with the 2^{k(k+1)/2} factor folded in.
inline std::vector<Integer> wright_terms(std::size_t k_max = 4) {
    const CoefficientTable ct = seq_coefficients(tournaments(1), 1, k_max);
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= k_max; ++k) out.push_back(ct.at(k, 1) * pow(Integer(2), k * (k + 1) / 2));
    return out;
}

inline VerificationSummary verify_wright() {
    VerificationSummary s;
    s.suite = "wright";
    const std::vector<Integer> expected = {-4, 16, -256, -32768};
    const auto got = wright_terms(4);
    for (std::size_t k = 1; k <= 4; ++k) {
        s.check(got[k - 1] == expected[k - 1], "tournaments", "k=" + std::to_string(k), expected[k - 1].str(),
                got[k - 1].str());
    }
    return s;
}

inline VerificationSummary verify_comtet() {
    VerificationSummary s;
    s.suite = "comtet";
    const std::vector<Integer> expected = {2, 1, 4, 19, 110, 745, 5752, 49775, 476994, 5016069};
    const CoefficientTable ct = seq_coefficients(permutations(1), 1, 10);
    for (std::size_t k = 1; k <= 10; ++k) {
        const Integer got = -ct.at(k, 1);
        s.check(got == expected[k - 1], "permutations", "k=" + std::to_string(k), expected[k - 1].str(), got.str());
    }
    return s;
}

/// Convergence of residual/shape_{r+1} to d_{r+1,m} over a range of n.
struct ResidualTrace {
    std::string class_name;
    std::size_t m = 1;
    std::size_t r = 0;
    Integer target;
    /// scale the deviation is measured against: |target|, or |d_{j,m}| for the
    /// next nonzero j when the target vanishes
    Integer scale;
    std::vector<std::size_t> ns;
    std::vector<Rational> normalized;
    std::vector<Rational> deviation; // |normalized - target| / scale
    bool within_tolerance = false;
    bool monotone_tail = false;
};

inline ResidualTrace residual_trace(const CountingSequence& a, const PartsTable& pt, std::size_t m, std::size_t r,
                                    std::size_t n_lo, std::size_t n_hi, const Rational& tolerance, std::size_t tail = 5) {
    ResidualTrace t;
    t.class_name = a.name();
    t.m = m;
    t.r = r;
    const CoefficientTable ct = seq_coefficients(pt, m);
    const unsigned p = a.period();
    t.target = ct.at(p * (r + 1), m);
    t.scale = abs(t.target);
    for (std::size_t j = r + 2; t.scale == 0 && p * j <= pt.n_max; ++j) t.scale = abs(ct.at(p * j, m));
    if (t.scale == 0) t.scale = 1;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        const ExpansionReport rep = evaluate_partial_sum(a, pt, m, n, r);
        t.ns.push_back(n);
        t.normalized.push_back(rep.normalized_residual);
        t.deviation.push_back(detail::abs(rep.normalized_residual - Rational(t.target)) / Rational(t.scale));
    }
    t.within_tolerance = !t.deviation.empty() && t.deviation.back() <= tolerance;
    t.monotone_tail = true;
    const std::size_t from = t.deviation.size() > tail ? t.deviation.size() - tail : 0;
    for (std::size_t i = from + 1; i < t.deviation.size(); ++i) {
        if (!(t.deviation[i] < t.deviation[i - 1])) t.monotone_tail = false;
    }
    return t;
}

struct ResidualSweep {
    CountingSequence cls;
    std::size_t m_max;
    std::size_t r_max;
    std::size_t n_lo;
    std::size_t n_hi;
};

inline std::vector<ResidualSweep> residual_sweeps() {
    return {{tournaments(1), 2, 3, 20, 40}, {permutations(1), 2, 4, 20, 60}};
}

inline std::vector<ResidualTrace> residual_traces(const ResidualSweep& sw, const Rational& tolerance = Rational(1, 20)) {
    const unsigned p = sw.cls.period();
    const PartsTable pt = parts_table(sw.cls, sw.m_max + 1, std::max(p * sw.n_hi, p * (sw.r_max + 4)));
    std::vector<ResidualTrace> out;
    for (std::size_t m = 1; m <= sw.m_max; ++m) {
        for (std::size_t r = 0; r <= sw.r_max; ++r) {
            out.push_back(residual_trace(sw.cls, pt, m, r, sw.n_lo, sw.n_hi, tolerance));
        }
    }
    return out;
}

inline VerificationSummary verify_residual_order() {
    VerificationSummary s;
    s.suite = "residual-order";
    for (const auto& sw : residual_sweeps()) {
        for (const auto& t : residual_traces(sw)) {
            const std::string idx = "m=" + std::to_string(t.m) + " r=" + std::to_string(t.r) + " n=" +
                                    std::to_string(t.ns.back());
            s.check(t.within_tolerance, t.class_name, idx + " within 5%", "d=" + t.target.str(),
                    approx(t.normalized.back()) + ", deviation " + approx(t.deviation.back()));
            s.check(t.monotone_tail, t.class_name, idx + " deviation decreasing over last 5 n", "decreasing",
                    t.monotone_tail ? "decreasing" : "not decreasing");
        }
    }
    return s;
}

/// seq_coefficients against the W-series of the SEQ family with U = A - 1, and
/// cyc_coefficients against the CYC family with U = log(1/(1 - B)).
inline VerificationSummary verify_bender(std::size_t k_max = 8, std::size_t m_max = 5) {
    VerificationSummary s;
    s.suite = "bender";
    for (const auto& a : catalog_classes()) {
        const std::size_t order = a.period() * k_max;
        const PartsTable pt = parts_table(a, m_max + 1, order);
        const CoefficientTable ct = seq_coefficients(pt, m_max);
        const PowerSeries u = counting_to_series(a, order) - PowerSeries::constant(1, order);
        for (std::size_t m = 1; m <= m_max; ++m) {
            const auto w = series_to_counts(bender_compose(u, BenderFamily::seq, m, order).w, a.labeling());
            for (std::size_t k = 0; k <= order; ++k) {
                s.check(w[k] == ct.at(k, m), a.name() + " SEQ", detail::nm(k, m, 'k'), ct.at(k, m).str(), w[k].str());
            }
        }
        if (a.labeling() != Labeling::labeled) continue;
        const PowerSeries b = irreducible_series(a, order);
        const PowerSeries one = PowerSeries::constant(1, order);
        const PowerSeries ucyc = series_log(series_inverse(one - b));
        const CoefficientTable cyc = cyc_coefficients(pt, m_max);
        for (std::size_t m = 1; m <= m_max; ++m) {
            const auto w = series_to_counts(bender_compose(ucyc, BenderFamily::cyc, m, order).w, Labeling::labeled);
            for (std::size_t k = 0; k <= order; ++k) {
                s.check(w[k] == cyc.at(k, m), a.name() + " CYC", detail::nm(k, m, 'k'), cyc.at(k, m).str(), w[k].str());
            }
        }
    }
    return s;
}

/// Closed forms of the dominant m-component term, as exact functions of n.
inline std::optional<Rational> leading_closed_form_value(const CountingSequence& a, std::size_t m, std::size_t n) {
    const unsigned d = a.d();
    const std::size_t j = m - 1;
    switch (a.family()) {
    case Family::tournaments: {
        const Integer base = d + 1;
        return Rational(static_cast<unsigned long>(m) * falling_factorial(n, j) * pow(base, m * j / 2), pow(base, j * n));
    }
    case Family::linear_orders:
        return Rational(static_cast<unsigned long>(m), pow(falling_factorial(n, j), d - 1));
    case Family::permutations:
        return Rational(static_cast<unsigned long>(m), pow(falling_factorial(n, j), d));
    case Family::matchings:
        return Rational(static_cast<unsigned long>(m)) *
               Rational(pow(double_factorial_odd(n - j), d), pow(double_factorial_odd(n), d));
    case Family::linear_matchings:
        return Rational(static_cast<unsigned long>(m) * double_factorial_odd(n - j), double_factorial_odd(n));
    default:
        return std::nullopt;
    }
}

/// Descriptor fields and exact agreement with the closed forms for m <= m_max.
/// Unlabeled tournaments only match theirs asymptotically; the ratio to the
/// labeled closed form is checked to be within 1e-6 of 1 at n = 50.
inline VerificationSummary verify_leading_terms(std::size_t m_max = 5) {
    VerificationSummary s;
    s.suite = "leading";
    std::vector<CountingSequence> classes;
    for (unsigned d = 1; d <= 3; ++d) classes.push_back(tournaments(d));
    for (unsigned d = 2; d <= 3; ++d) classes.push_back(linear_orders(d));
    for (unsigned d = 1; d <= 3; ++d) classes.push_back(permutations(d));
    for (unsigned d = 1; d <= 3; ++d) classes.push_back(matchings(d));
    classes.push_back(linear_matchings());
    classes.push_back(unlabeled_tournaments());
    for (const auto& a : classes) {
        const bool labeled = a.labeling() == Labeling::labeled;
        const unsigned p = a.period();
        for (std::size_t m = 1; m <= m_max; ++m) {
            const LeadingTerm lt = leading_term(a, m);
            const std::string idx = "m=" + std::to_string(m);
            s.check(lt.multiplier == Rational(static_cast<unsigned long>(m)), a.name(), idx + " multiplier",
                    std::to_string(m), to_string(lt.multiplier));
            const std::size_t falling = labeled ? p * (m - 1) : 0;
            s.check(lt.falling_order == falling, a.name(), idx + " falling order", std::to_string(falling),
                    std::to_string(lt.falling_order));
            s.check(lt.ratio_shift == m - 1 && lt.period == p, a.name(), idx + " ratio indices",
                    "a_{" + std::to_string(p) + "(n-" + std::to_string(m - 1) + ")}/a_{" + std::to_string(p) + "n}",
                    "a_{" + std::to_string(lt.period) + "(n-" + std::to_string(lt.ratio_shift) + ")}/a_{" +
                        std::to_string(lt.period) + "n}");
            if (a.family() == Family::unlabeled_tournaments) {
                const std::size_t n = 50;
                const Rational ratio = lt.evaluate(a, n) / *leading_closed_form_value(tournaments(1), m, n);
                const Rational gap = detail::abs(ratio - 1);
                s.check(gap < Rational(1, 1000000), a.name(), idx + " n=50 vs labeled closed form", "|ratio - 1| < 1e-6",
                        approx(gap));
                continue;
            }
            for (std::size_t n = m + 1; n <= 30; ++n) {
                const Rational got = lt.evaluate(a, n);
                const Rational want = *leading_closed_form_value(a, m, n);
                s.check(got == want, a.name(), idx + " n=" + std::to_string(n), to_string(want), to_string(got));
            }
        }
    }
    return s;
}

/// Verdicts at N = 60 for the classes with a known answer.
inline VerificationSummary verify_audit(std::size_t N = 60) {
    VerificationSummary s;
    s.suite = "audit";
    std::vector<std::pair<CountingSequence, AuditVerdict>> expected;
    for (unsigned d = 1; d <= 3; ++d) expected.emplace_back(tournaments(d), AuditVerdict::evidence_consistent);
    expected.emplace_back(linear_orders(1), AuditVerdict::visibly_failing);
    for (unsigned d = 2; d <= 3; ++d) expected.emplace_back(linear_orders(d), AuditVerdict::evidence_consistent);
    for (unsigned d = 1; d <= 3; ++d) expected.emplace_back(permutations(d), AuditVerdict::evidence_consistent);
    for (unsigned d = 1; d <= 3; ++d) expected.emplace_back(matchings(d), AuditVerdict::evidence_consistent);
    expected.emplace_back(unlabeled_tournaments(), AuditVerdict::evidence_consistent);
    expected.emplace_back(constant_one(Labeling::unlabeled), AuditVerdict::visibly_failing);
    expected.emplace_back(constant_one(Labeling::labeled), AuditVerdict::visibly_failing);
    for (const auto& [a, want] : expected) {
        const AuditReport rep = audit(a, N);
        s.check(rep.verdict == want, rep.class_name, "N=" + std::to_string(N), std::string(to_string(want)),
                std::string(to_string(rep.verdict)));
    }
    return s;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"appendix", "oracle", "sumrule", "recurrences", "lift", "wright",
                                                   "comtet", "residual-order", "bender", "leading", "audit", "all"};
    return names;
}

inline VerificationSummary run_suite(const std::string& name, const OracleOptions& opts = {}) {
    if (name == "appendix") return verify_appendix();
    if (name == "oracle") return verify_oracle(opts);
    if (name == "sumrule") return verify_sum_rule();
    if (name == "recurrences") return verify_recurrences();
    if (name == "lift") return verify_lift();
    if (name == "wright") return verify_wright();
    if (name == "comtet") return verify_comtet();
    if (name == "residual-order") return verify_residual_order();
    if (name == "bender") return verify_bender();
    if (name == "leading") return verify_leading_terms();
    if (name == "audit") return verify_audit();
    if (name == "all") {
        VerificationSummary s;
        s.suite = "all";
        for (const auto& n : suite_names()) {
            if (n != "all") s.merge(run_suite(n, opts));
        }
        return s;
    }
    throw Error(ErrorCode::UnknownClass, "unknown suite '" + name + "'");
}

} // namespace seqasym
