// seqasym: tables, expansions, verification suites, audits and brute-force
// oracles for SEQ-decomposable combinatorial classes.
//
// Exit status: 0 ok, 1 verification failure, 2 usage error or unknown class,
// 3 budget exceeded, 4 index out of range, 5 other arithmetic failure.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqasym/asymptotic_engine.hpp"
#include "seqasym/class_catalog.hpp"
#include "seqasym/gargantuan_audit.hpp"
#include "seqasym/oracle_enum.hpp"
#include "seqasym/report.hpp"
#include "seqasym/verify.hpp"

using namespace seqasym;

namespace {

struct Options {
    std::string command;
    std::string cls = "tournaments";
    unsigned d = 1;
    std::string kind = "parts";
    std::string construction = "seq";
    std::optional<std::string> m;
    std::optional<std::string> k;
    std::optional<std::string> n;
    std::size_t terms = 4;
    std::string format = "md";
    std::string suite = "all";
    std::string N = "60";
    std::size_t r_max = 3;
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
    std::optional<std::string> custom;
};

IndexRange parse_range(const std::string& text, const char* what) {
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw CLI::ValidationError(what, "expected N or A..B, got '" + text + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t v = number(text);
        return {v, v};
    }
    const IndexRange r{number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
    if (r.lo > r.hi) throw CLI::ValidationError(what, "empty range '" + text + "'");
    return r;
}

Format parse_format(const std::string& f) {
    if (f == "md" || f == "markdown") return Format::markdown;
    if (f == "csv") return Format::csv;
    if (f == "json") return Format::json;
    throw CLI::ValidationError("--format", "expected md, csv or json");
}

CountingSequence resolve_class(const Options& o) {
    if (o.custom) return read_custom_sequence_file(*o.custom);
    if (o.cls == "tournaments") return tournaments(o.d);
    if (o.cls == "linear_orders") return linear_orders(o.d);
    if (o.cls == "permutations") return permutations(o.d);
    if (o.cls == "matchings") return matchings(o.d);
    if (o.cls == "linear_matchings") return linear_matchings();
    if (o.cls == "unlabeled_tournaments") return unlabeled_tournaments();
    if (o.cls == "constant_one") return constant_one(Labeling::unlabeled);
    if (o.cls == "constant_one_labeled") return constant_one(Labeling::labeled);
    throw Error(ErrorCode::UnknownClass, "unknown class '" + o.cls + "'");
}

Json config_json(const Options& o) {
    Json c{{"command", o.command}, {"format", o.format}};
    if (o.custom) c["custom"] = *o.custom;
    else c["class"] = o.cls;
    c["d"] = o.d;
    if (o.command == "table") {
        c["kind"] = o.kind;
        c["construction"] = o.construction;
    }
    if (o.m) c["m"] = *o.m;
    if (o.k) c["k"] = *o.k;
    if (o.n) c["n"] = *o.n;
    if (o.command == "expansion") c["terms"] = o.terms;
    if (o.command == "verify") c["suite"] = o.suite;
    if (o.command == "audit") {
        c["N"] = o.N;
        c["r_max"] = o.r_max;
    }
    if (o.budget) c["budget"] = std::to_string(*o.budget);
    if (o.command == "oracle" || o.command == "verify") c["workers"] = o.workers;
    return c;
}

void emit(const Options& o, Format fmt, const std::string& body, const Json& result) {
    if (fmt == Format::json) {
        Json out{{"schema_version", 1}, {"config", config_json(o)}, {"result", result}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
    }
}

int cmd_table(const Options& o) {
    const CountingSequence a = resolve_class(o);
    const Format fmt = parse_format(o.format);
    const bool parts = o.kind == "parts";
    if (!parts && o.kind != "coefficients") throw CLI::ValidationError("--kind", "expected parts or coefficients");
    const IndexRange m = parse_range(o.m.value_or(o.construction == "set" ? "1" : "1..5"), "--m");
    if (parts) {
        const IndexRange n = parse_range(o.n.value_or("1..9"), "--n");
        const PartsTable t = parts_table(a, m.hi, n.hi);
        emit(o, fmt, render_parts(t, m, n, fmt), fmt == Format::json ? parts_json(t, m, n) : Json());
        return 0;
    }
    const IndexRange k = parse_range(o.k.value_or("0..8"), "--k");
    CoefficientTable t;
    if (o.construction == "seq") {
        t = seq_coefficients(a, m.hi, k.hi);
    } else if (o.construction == "cyc") {
        t = cyc_coefficients(parts_table(a, m.hi, k.hi), m.hi);
    } else if (o.construction == "set") {
        if (m.hi != 1) throw Error(ErrorCode::RangeError, "SET-via-SEQ coefficients exist for m = 1 only");
        t = set_via_seq_coefficients(a, k.hi);
    } else {
        throw CLI::ValidationError("--construction", "expected seq, cyc or set");
    }
    emit(o, fmt, render_coefficients(t, m, k, fmt), fmt == Format::json ? coefficients_json(t, m, k) : Json());
    return 0;
}

int cmd_expansion(const Options& o) {
    const CountingSequence a = resolve_class(o);
    const Format fmt = parse_format(o.format);
    const IndexRange m = parse_range(o.m.value_or("1"), "--m");
    const IndexRange n = parse_range(o.n.value_or("20"), "--n");
    if (m.lo != m.hi || n.lo != n.hi) throw CLI::ValidationError("expansion", "--m and --n take single values here");
    const ExpansionReport rep = evaluate_partial_sum(a, m.lo, n.lo, o.terms);
    emit(o, fmt, render_expansion(rep, a, fmt), fmt == Format::json ? expansion_json(rep, a) : Json());
    return 0;
}

int cmd_verify(const Options& o) {
    const Format fmt = parse_format(o.format);
    OracleOptions opts;
    opts.workers = o.workers;
    opts.budget = o.budget;
    const VerificationSummary s = run_suite(o.suite, opts);
    emit(o, fmt, render_summary(s, fmt), fmt == Format::json ? summary_json(s) : Json());
    return s.exit_status();
}

int cmd_audit(const Options& o) {
    const CountingSequence a = resolve_class(o);
    const Format fmt = parse_format(o.format);
    const IndexRange N = parse_range(o.N, "--N");
    const AuditReport rep = audit(a, N.hi, o.r_max);
    emit(o, fmt, render_audit(rep, fmt), fmt == Format::json ? audit_json(rep) : Json());
    return 0;
}

int cmd_oracle(const Options& o) {
    const CountingSequence a = resolve_class(o);
    const Format fmt = parse_format(o.format);
    const IndexRange n = parse_range(o.n.value_or("1..5"), "--n");
    OracleOptions opts;
    opts.workers = o.workers;
    opts.budget = o.budget;
    std::vector<OracleResult> results;
    for (std::size_t i = n.lo; i <= n.hi; ++i) results.push_back(enumerate_parts(a, i, opts));
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(oracle_json(r));
    emit(o, fmt, render_oracle(results, fmt), arr);
    return 0;
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::UnknownClass:
    case ErrorCode::ParseError: return 2;
    case ErrorCode::BudgetExceeded: return 3;
    case ErrorCode::RangeError: return 4;
    default: return 5;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact asymptotics of SEQ-decomposable combinatorial classes"};
    app.require_subcommand(1);
    Options o;

    auto add_class = [&](CLI::App* sub) {
        sub->add_option("--class", o.cls, "catalog class name");
        sub->add_option("--d", o.d, "multiplicity parameter")->check(CLI::PositiveNumber);
        sub->add_option("--custom", o.custom, "custom sequence file")->check(CLI::ExistingFile);
    };
    auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "md, csv or json"); };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "maximum enumeration space");
        sub->add_option("--workers", o.workers, "enumeration threads")->check(CLI::PositiveNumber);
    };

    auto* table = app.add_subcommand("table", "parts or coefficient table");
    add_class(table);
    add_format(table);
    table->add_option("--kind", o.kind, "parts or coefficients");
    table->add_option("--construction", o.construction, "seq, cyc or set");
    table->add_option("--m", o.m, "m range A..B");
    table->add_option("--k", o.k, "k range A..B");
    table->add_option("--n", o.n, "n range A..B");

    auto* expansion = app.add_subcommand("expansion", "truncated expansion against the exact probability");
    add_class(expansion);
    add_format(expansion);
    expansion->add_option("--m", o.m, "number of parts");
    expansion->add_option("--n", o.n, "size (pairs for matchings)");
    expansion->add_option("--terms", o.terms, "last term index r");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_format(verify);
    add_budget(verify);
    verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));

    auto* audit_cmd = app.add_subcommand("audit", "finite-range gargantuan evidence");
    add_class(audit_cmd);
    add_format(audit_cmd);
    audit_cmd->add_option("--N", o.N, "range bound N (or A..B, using B)");
    audit_cmd->add_option("--r-max", o.r_max, "largest r in the convolution traces")->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "brute-force part counts");
    add_class(oracle);
    add_format(oracle);
    add_budget(oracle);
    oracle->add_option("--n", o.n, "size N or range A..B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        o.command = app.get_subcommands().front()->get_name();
        if (o.command == "table") return cmd_table(o);
        if (o.command == "expansion") return cmd_expansion(o);
        if (o.command == "verify") return cmd_verify(o);
        if (o.command == "audit") return cmd_audit(o);
        if (o.command == "oracle") return cmd_oracle(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
    return 2;
}
