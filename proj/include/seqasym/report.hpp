#pragma once

// Markdown, CSV and JSON renderings. Machine formats carry exact values only
// (integers in decimal, rationals as "p/q"); Markdown adds decimals marked
// "(approx)". Elapsed times are never printed so output is reproducible.

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seqasym/asymptotic_engine.hpp"
#include "seqasym/class_catalog.hpp"
#include "seqasym/exact_series.hpp"
#include "seqasym/gargantuan_audit.hpp"
#include "seqasym/oracle_enum.hpp"
#include "seqasym/seq_decomposition.hpp"
#include "seqasym/verify.hpp"

namespace seqasym {

using Json = nlohmann::ordered_json;

enum class Format { markdown, csv, json };

struct IndexRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

namespace detail {

inline std::string grid_markdown(const std::string& corner, const std::string& row_prefix, IndexRange rows,
                                 IndexRange cols, const std::function<std::string(std::size_t, std::size_t)>& cell) {
    std::ostringstream out;
    out << "| " << corner << " |";
    for (std::size_t c = cols.lo; c <= cols.hi; ++c) out << ' ' << c << " |";
    out << "\n|---|";
    for (std::size_t c = cols.lo; c <= cols.hi; ++c) out << "---:|";
    out << '\n';
    for (std::size_t r = rows.lo; r <= rows.hi; ++r) {
        out << "| " << row_prefix << r << " |";
        for (std::size_t c = cols.lo; c <= cols.hi; ++c) out << ' ' << cell(r, c) << " |";
        out << '\n';
    }
    return out.str();
}

inline std::string grid_csv(const std::string& row_label, const std::string& col_label, IndexRange rows,
                            IndexRange cols, const std::function<std::string(std::size_t, std::size_t)>& cell) {
    std::ostringstream out;
    out << row_label << ',' << col_label << ",value\n";
    for (std::size_t r = rows.lo; r <= rows.hi; ++r) {
        for (std::size_t c = cols.lo; c <= cols.hi; ++c) out << r << ',' << c << ',' << cell(r, c) << '\n';
    }
    return out.str();
}

inline Json grid_json(IndexRange rows, IndexRange cols,
                      const std::function<std::string(std::size_t, std::size_t)>& cell) {
    Json out = Json::array();
    for (std::size_t r = rows.lo; r <= rows.hi; ++r) {
        Json row = Json::array();
        for (std::size_t c = cols.lo; c <= cols.hi; ++c) row.push_back(cell(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

inline void require_within(IndexRange r, std::size_t lo, std::size_t hi, const char* what) {
    if (r.lo > r.hi || r.lo < lo || r.hi > hi) {
        throw Error(ErrorCode::RangeError, std::string(what) + " range " + std::to_string(r.lo) + ".." +
                                               std::to_string(r.hi) + " outside " + std::to_string(lo) + ".." +
                                               std::to_string(hi));
    }
}

} // namespace detail

inline std::string render_parts(const PartsTable& t, IndexRange m, IndexRange n, Format fmt) {
    detail::require_within(m, 0, t.m_max, "m");
    detail::require_within(n, 0, t.n_max, "n");
    auto cell = [&](std::size_t r, std::size_t c) { return t.at(c, r).str(); };
    switch (fmt) {
    case Format::markdown:
        return "parts: " + t.class_name + " (" + std::string(to_string(t.labeling)) + ")\n\n" +
               detail::grid_markdown("m \\ n", "m=", m, n, cell);
    case Format::csv: return detail::grid_csv("m", "n", m, n, cell);
    case Format::json:
        return Json{{"class", t.class_name},
                    {"labeling", to_string(t.labeling)},
                    {"kind", "parts"},
                    {"m", {m.lo, m.hi}},
                    {"n", {n.lo, n.hi}},
                    {"rows", detail::grid_json(m, n, cell)}}
            .dump();
    }
    return {};
}

inline Json parts_json(const PartsTable& t, IndexRange m, IndexRange n) {
    return Json::parse(render_parts(t, m, n, Format::json));
}

inline Json coefficients_json(const CoefficientTable& t, IndexRange m, IndexRange k) {
    detail::require_within(m, 1, t.m_max, "m");
    detail::require_within(k, 0, t.k_max, "k");
    auto cell = [&](std::size_t r, std::size_t c) { return t.at(c, r).str(); };
    return Json{{"class", t.class_name},
                {"labeling", to_string(t.labeling)},
                {"kind", "coefficients"},
                {"construction", to_string(t.construction)},
                {"m", {m.lo, m.hi}},
                {"k", {k.lo, k.hi}},
                {"rows", detail::grid_json(m, k, cell)}};
}

inline std::string render_coefficients(const CoefficientTable& t, IndexRange m, IndexRange k, Format fmt) {
    detail::require_within(m, 1, t.m_max, "m");
    detail::require_within(k, 0, t.k_max, "k");
    auto cell = [&](std::size_t r, std::size_t c) { return t.at(c, r).str(); };
    switch (fmt) {
    case Format::markdown: {
        std::string head = "coefficients d_{k,m}: " + t.class_name + " (" + std::string(to_string(t.construction)) + ")\n";
        if (t.construction == Construction::set_via_seq) head += "expansion: 1 - sum_{k>=1} d_k a_{n-k}/a_n\n";
        return head + "\n" + detail::grid_markdown("m \\ k", "m=", m, k, cell);
    }
    case Format::csv: return detail::grid_csv("m", "k", m, k, cell);
    case Format::json: return coefficients_json(t, m, k).dump();
    }
    return {};
}

/// A term d_{k,m} * shape_k rewritten with family-specific constants moved
/// into the coefficient.
struct FoldedTerm {
    Integer coefficient;
    std::string shape;
};

inline FoldedTerm fold_term(const CountingSequence& a, std::size_t k, const Integer& d) {
    const std::string ks = std::to_string(k);
    const std::string dd = std::to_string(a.d());
    switch (a.family()) {
    case Family::tournaments: {
        const Integer base = a.d() + 1;
        const std::string bs = base.str();
        return {d * pow(base, k * (k + 1) / 2), "C(n," + ks + ")/" + bs + "^(" + ks + "n)"};
    }
    case Family::permutations:
        return {d, a.d() == 1 ? "1/(n)_" + ks : "1/((n)_" + ks + ")^" + dd};
    case Family::linear_orders:
        if (a.d() == 1) return {d, "1/" + ks + "!"};
        return {d, "1/(" + ks + "! ((n)_" + ks + ")^" + std::to_string(a.d() - 1) + ")"};
    case Family::matchings:
        return {d, "((2(n-" + ks + ")-1)!!/(2n-1)!!)" + (a.d() == 1 ? std::string() : "^" + dd)};
    case Family::linear_matchings:
        return {d, "C(2n," + std::to_string(2 * k) + ") a_{2(n-" + ks + ")}/a_{2n}"};
    default:
        if (a.labeling() == Labeling::labeled) {
            if (a.period() > 1) {
                const std::string p = std::to_string(a.period());
                return {d, "C(" + p + "n," + std::to_string(a.period() * k) + ") a_{" + p + "(n-" + ks + ")}/a_{" + p + "n}"};
            }
            return {d, "C(n," + ks + ") a_{n-" + ks + "}/a_n"};
        }
        if (a.period() > 1) {
            const std::string p = std::to_string(a.period());
            return {d, "a_{" + p + "(n-" + ks + ")}/a_{" + p + "n}"};
        }
        return {d, "a_{n-" + ks + "}/a_n"};
    }
}

inline Json expansion_json(const ExpansionReport& rep, const CountingSequence& a) {
    Json terms = Json::array();
    for (std::size_t k = 0; k < rep.coefficients.size(); ++k) {
        const FoldedTerm f = fold_term(a, k, rep.coefficients[k]);
        terms.push_back({{"k", k},
                         {"coefficient", rep.coefficients[k].str()},
                         {"shape_value", to_string(rep.shapes[k])},
                         {"folded_coefficient", f.coefficient.str()},
                         {"folded_shape", f.shape},
                         {"in_partial_sum", k <= rep.terms_used}});
    }
    Json out{{"class", rep.class_name},
             {"m", rep.m},
             {"n", rep.n},
             {"period", rep.period},
             {"terms", rep.terms_used},
             {"expansion_terms", std::move(terms)},
             {"partial_sum", to_string(rep.partial_sum)},
             {"exact_probability", to_string(rep.exact_probability)},
             {"residual", to_string(rep.residual)},
             {"normalized_residual", to_string(rep.normalized_residual)}};
    out["audit_verdict"] = rep.audit_verdict ? Json(*rep.audit_verdict) : Json(nullptr);
    return out;
}

inline std::string render_expansion(const ExpansionReport& rep, const CountingSequence& a, Format fmt) {
    switch (fmt) {
    case Format::json: return expansion_json(rep, a).dump();
    case Format::csv: {
        std::ostringstream out;
        out << "k,coefficient,folded_coefficient,folded_shape,shape_value,in_partial_sum\n";
        for (std::size_t k = 0; k < rep.coefficients.size(); ++k) {
            const FoldedTerm f = fold_term(a, k, rep.coefficients[k]);
            out << k << ',' << rep.coefficients[k] << ',' << f.coefficient << ",\"" << f.shape << "\","
                << to_string(rep.shapes[k]) << ',' << (k <= rep.terms_used ? 1 : 0) << '\n';
        }
        return out.str();
    }
    case Format::markdown: {
        std::ostringstream out;
        out << "expansion: " << rep.class_name << ", m = " << rep.m << ", n = " << rep.n;
        if (rep.period > 1) out << " (size " << rep.period * rep.n << ")";
        out << ", terms k = 0.." << rep.terms_used << "\n\n";
        out << "| k | d_{k,m} | folded coefficient | folded shape | unfolded shape at n |\n|---:|---:|---:|---|---:|\n";
        for (std::size_t k = 0; k < rep.coefficients.size(); ++k) {
            const FoldedTerm f = fold_term(a, k, rep.coefficients[k]);
            out << "| " << k << (k > rep.terms_used ? " (next)" : "") << " | " << rep.coefficients[k] << " | "
                << f.coefficient << " | " << f.shape << " | " << approx(rep.shapes[k]) << " |\n";
        }
        auto line = [&](const char* label, const Rational& q) {
            out << label << to_string(q) << "\n    = " << approx(q) << '\n';
        };
        out << '\n';
        line("partial sum:         ", rep.partial_sum);
        line("exact probability:   ", rep.exact_probability);
        line("residual:            ", rep.residual);
        line("residual / shape_r+1: ", rep.normalized_residual);
        if (rep.audit_verdict) out << "audit: " << *rep.audit_verdict << '\n';
        return out.str();
    }
    }
    return {};
}

inline Json audit_json(const AuditReport& rep) {
    Json ratios = Json::array();
    for (const auto& q : rep.ratio_trace) ratios.push_back(to_string(q));
    Json conv = Json::array();
    for (std::size_t r = 1; r <= rep.convolution_trace.size(); ++r) {
        Json vals = Json::array();
        for (const auto& q : rep.convolution_trace[r - 1]) vals.push_back(to_string(q));
        const auto& b = rep.convolution_bounds[r - 1];
        conv.push_back({{"r", r},
                        {"first_n", 2 * r},
                        {"values", std::move(vals)},
                        {"bounded", b.bounded},
                        {"witnessed_constant", to_string(b.witnessed_constant)}});
    }
    Json mid{{"holds", rep.midpoint_monotone.holds}, {"fails_persistently", rep.midpoint_monotone.fails_persistently}};
    if (rep.midpoint_monotone.first_violation) {
        mid["first_violation"] = {{"n", rep.midpoint_monotone.first_violation->first},
                                  {"k", rep.midpoint_monotone.first_violation->second}};
    } else {
        mid["first_violation"] = nullptr;
    }
    return Json{{"class", rep.class_name},
                {"N", rep.N},
                {"r_max", rep.r_max},
                {"tail_start", rep.tail_start},
                {"verdict", to_string(rep.verdict)},
                {"ratio_vanishing", rep.ratio_vanishing},
                {"ratio_linear_bound",
                 {{"holds", rep.ratio_linear_bound.holds},
                  {"witnessed_constant", to_string(rep.ratio_linear_bound.witnessed_constant)}}},
                {"midpoint_monotone", std::move(mid)},
                {"zero_in_tail", rep.zero_in_tail},
                {"ratio_trace", std::move(ratios)},
                {"convolution_trace", std::move(conv)}};
}

inline std::string render_audit(const AuditReport& rep, Format fmt) {
    if (fmt == Format::json) return audit_json(rep).dump();
    if (fmt == Format::csv) {
        std::ostringstream out;
        out << "n,ratio\n";
        for (std::size_t n = 1; n <= rep.N; ++n) out << n << ',' << to_string(rep.ratio_trace[n - 1]) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "audit: " << rep.class_name << ", N = " << rep.N << ", r <= " << rep.r_max << '\n';
    out << "verdict: " << to_string(rep.verdict) << " (finite-range evidence, not a proof)\n\n";
    out << "ratio a_{n-1}/a_n vanishing over n >= " << rep.tail_start << ": " << (rep.ratio_vanishing ? "yes" : "no") << '\n';
    out << "n a_{n-1}/a_n bounded: " << (rep.ratio_linear_bound.holds ? "yes" : "no") << ", max over tail "
        << approx(rep.ratio_linear_bound.witnessed_constant) << '\n';
    out << "|a_k a_{n-k}| decreasing for k < n/2: " << (rep.midpoint_monotone.holds ? "yes" : "no");
    if (rep.midpoint_monotone.first_violation) {
        out << ", first violation n = " << rep.midpoint_monotone.first_violation->first
            << ", k = " << rep.midpoint_monotone.first_violation->second;
    }
    out << '\n';
    for (const auto& b : rep.convolution_bounds) {
        out << "S_{n," << b.r << "} bounded on n >= N/2: " << (b.bounded ? "yes" : "no") << ", max "
            << approx(b.witnessed_constant) << '\n';
    }
    out << "\n| n | a_{n-1}/a_n |\n|---:|---:|\n";
    for (std::size_t n = rep.tail_start; n <= rep.N; ++n) out << "| " << n << " | " << approx(rep.ratio_trace[n - 1]) << " |\n";
    return out.str();
}

inline Json oracle_json(const OracleResult& r) {
    Json counts = Json::object();
    for (const auto& [m, c] : r.counts_by_parts) counts[std::to_string(m)] = c.str();
    return Json{{"class", r.class_name}, {"n", r.n}, {"counts_by_parts", std::move(counts)},
                {"total_enumerated", r.total_enumerated.str()}};
}

inline std::string render_oracle(const std::vector<OracleResult>& results, Format fmt) {
    if (fmt == Format::json) {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(oracle_json(r));
        return arr.dump();
    }
    std::ostringstream out;
    if (fmt == Format::csv) {
        out << "n,m,count\n";
        for (const auto& r : results) {
            for (const auto& [m, c] : r.counts_by_parts) out << r.n << ',' << m << ',' << c << '\n';
        }
        return out.str();
    }
    for (const auto& r : results) {
        out << "oracle: " << r.class_name << ", n = " << r.n << ", " << r.total_enumerated << " objects\n\n";
        out << "| m | count |\n|---:|---:|\n";
        for (const auto& [m, c] : r.counts_by_parts) out << "| " << m << " | " << c << " |\n";
        out << '\n';
    }
    return out.str();
}

inline Json summary_json(const VerificationSummary& s) {
    Json failures = Json::array();
    for (const auto& f : s.failures) {
        failures.push_back({{"class", f.class_name}, {"indices", f.indices}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return Json{{"suite", s.suite},
                {"checks", s.checks},
                {"skipped", s.skipped},
                {"failures", std::move(failures)},
                {"notes", s.notes},
                {"exit_status", s.exit_status()}};
}

inline std::string render_summary(const VerificationSummary& s, Format fmt) {
    if (fmt == Format::json) return summary_json(s).dump();
    std::ostringstream out;
    if (fmt == Format::csv) {
        out << "class,indices,expected,actual\n";
        for (const auto& f : s.failures) {
            out << '"' << f.class_name << "\",\"" << f.indices << "\",\"" << f.expected << "\",\"" << f.actual << "\"\n";
        }
        return out.str();
    }
    for (const auto& n : s.notes) out << "note: " << n << '\n';
    for (const auto& f : s.failures) {
        out << "FAIL " << f.class_name << " [" << f.indices << "] expected " << f.expected << ", got " << f.actual << '\n';
    }
    out << "suite " << s.suite << ": " << s.checks << " checks, " << s.failures.size() << " failures, " << s.skipped
        << " skipped\n";
    return out.str();
}

} // namespace seqasym
