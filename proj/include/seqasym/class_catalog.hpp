#pragma once

// Counting sequences of the combinatorial classes the engine knows about,
// plus user-supplied integer lists.

#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"

namespace seqasym {

enum class Provenance { closed_form, user_list, derived };

constexpr std::string_view to_string(Provenance p) noexcept {
    switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::user_list: return "user-list";
    case Provenance::derived: return "derived";
    }
    return "unknown";
}

/// Which built-in family a sequence belongs to. Reporting uses it to render
/// family-specific term shapes; the algebra never branches on it.
enum class Family {
    tournaments,
    linear_orders,
    permutations,
    matchings,
    linear_matchings,
    unlabeled_tournaments,
    constant_one,
    custom,
};

/// Exact counts a_n of a combinatorial class. Values are produced lazily by a
/// pure generator and memoised; copies share the memo, which is guarded by a
/// mutex so concurrent readers are safe.
class CountingSequence {
public:
    using Generator = std::function<Integer(std::size_t)>;

    CountingSequence(std::string name, Labeling labeling, unsigned period, Provenance provenance, Family family,
                     unsigned d, Generator gen, std::optional<std::size_t> length = std::nullopt)
        : name_(std::move(name)), labeling_(labeling), period_(period), provenance_(provenance), family_(family),
          d_(d), length_(length), state_(std::make_shared<State>(std::move(gen))) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] Labeling labeling() const noexcept { return labeling_; }
    [[nodiscard]] unsigned period() const noexcept { return period_; }
    [[nodiscard]] Provenance provenance() const noexcept { return provenance_; }
    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] unsigned d() const noexcept { return d_; }
    /// Number of stored values for user lists; empty for infinite sequences.
    [[nodiscard]] std::optional<std::size_t> length() const noexcept { return length_; }

    [[nodiscard]] Integer value(std::size_t n) const {
        if (length_ && n >= *length_) {
            throw Error(ErrorCode::RangeError, name_ + " is only defined for n < " + std::to_string(*length_));
        }
        std::lock_guard lock(state_->mutex);
        auto it = state_->memo.find(n);
        if (it != state_->memo.end()) return it->second;
        Integer v = state_->gen(n);
        state_->memo.emplace(n, v);
        return v;
    }

    /// value(0), ..., value(n_max)
    [[nodiscard]] std::vector<Integer> values(std::size_t n_max) const {
        std::vector<Integer> out;
        out.reserve(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) out.push_back(value(n));
        return out;
    }

private:
    struct State {
        explicit State(Generator g) : gen(std::move(g)) {}
        Generator gen;
        std::mutex mutex;
        std::map<std::size_t, Integer> memo;
    };

    std::string name_;
    Labeling labeling_;
    unsigned period_;
    Provenance provenance_;
    Family family_;
    unsigned d_;
    std::optional<std::size_t> length_;
    std::shared_ptr<State> state_;
};

inline PowerSeries counting_to_series(const CountingSequence& seq, std::size_t order) {
    const auto v = seq.values(order);
    return counts_to_series(v, seq.labeling());
}

inline std::vector<Integer> series_to_counting(const PowerSeries& f, Labeling labeling) {
    return series_to_counts(f, labeling);
}

namespace detail {

inline void require_d(unsigned d) {
    if (d < 1) throw Error(ErrorCode::RangeError, "the multiplicity parameter d must be at least 1");
}

inline std::string with_d(const std::string& base, unsigned d) {
    return d == 1 ? base : base + "(" + std::to_string(d) + ")";
}

/// Partitions of n into odd parts as (part, multiplicity) lists.
inline void odd_partitions(std::size_t remaining, std::size_t max_part, std::vector<std::pair<std::size_t, std::size_t>>& cur,
                           const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& visit) {
    if (remaining == 0) {
        visit(cur);
        return;
    }
    for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
        if (part % 2 == 0) continue;
        for (std::size_t mult = remaining / part; mult >= 1; --mult) {
            cur.emplace_back(part, mult);
            odd_partitions(remaining - part * mult, part - 1, cur, visit);
            cur.pop_back();
        }
        if (part == 1) break;
    }
}

/// Number of tournaments on n vertices up to isomorphism, by Burnside's lemma.
/// Only permutations whose cycles all have odd length fix a tournament; for
/// cycle type lambda the fixed tournaments number 2^e with
/// e = sum_{i<j} gcd(l_i, l_j) + sum_i (l_i - 1)/2, and there are n!/z(lambda)
/// such permutations.
inline Integer unlabeled_tournament_count(std::size_t n) {
    if (n == 0) return 1;
    Rational total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    odd_partitions(n, n, cur, [&](const std::vector<std::pair<std::size_t, std::size_t>>& lambda) {
        std::size_t e = 0;
        Integer z = 1;
        for (std::size_t a = 0; a < lambda.size(); ++a) {
            const auto [pa, ma] = lambda[a];
            e += ma * (pa - 1) / 2;
            e += ma * (ma - 1) / 2 * pa;
            for (std::size_t b = a + 1; b < lambda.size(); ++b) {
                e += ma * lambda[b].second * std::gcd(pa, lambda[b].first);
            }
            z *= pow(Integer(pa), ma) * factorial(ma);
        }
        total += Rational(pow(Integer(2), e), z);
    });
    return numerator(total);
}

} // namespace detail

/// d-multitournaments: (d+1)^{n(n-1)/2}, labeled.
inline CountingSequence tournaments(unsigned d = 1) {
    detail::require_d(d);
    return {detail::with_d("tournaments", d), Labeling::labeled, 1, Provenance::closed_form, Family::tournaments, d,
            [d](std::size_t n) { return pow(Integer(d + 1), n == 0 ? 0 : n * (n - 1) / 2); }};
}

/// d-multiple linear orders: (n!)^d, labeled.
inline CountingSequence linear_orders(unsigned d = 1) {
    detail::require_d(d);
    return {detail::with_d("linear_orders", d), Labeling::labeled, 1, Provenance::closed_form, Family::linear_orders, d,
            [d](std::size_t n) { return pow(factorial(n), d); }};
}

/// d-multipermutations treated as unlabeled objects: (n!)^d.
inline CountingSequence permutations(unsigned d = 1) {
    detail::require_d(d);
    return {detail::with_d("permutations", d), Labeling::unlabeled, 1, Provenance::closed_form, Family::permutations, d,
            [d](std::size_t n) { return pow(factorial(n), d); }};
}

/// d-multiple perfect matchings, unlabeled, indexed by the number of pairs:
/// ((2n-1)!!)^d.
inline CountingSequence matchings(unsigned d = 1) {
    detail::require_d(d);
    return {detail::with_d("matchings", d), Labeling::unlabeled, 1, Provenance::closed_form, Family::matchings, d,
            [d](std::size_t n) { return pow(double_factorial_odd(n), d); }};
}

/// Labeled 2-periodic view of perfect matchings: the class of linear matchings,
/// pairs of linear orders exchanged by a fixed-point-free involution, with
/// (2n)! (2n-1)!! objects of size 2n and none of odd size.
inline CountingSequence linear_matchings() {
    return {"linear_matchings", Labeling::labeled, 2, Provenance::closed_form, Family::linear_matchings, 1,
            [](std::size_t n) -> Integer {
                if (n % 2 != 0) return 0;
                return factorial(n) * double_factorial_odd(n / 2);
            }};
}

/// Tournaments up to isomorphism.
inline CountingSequence unlabeled_tournaments() {
    return {"unlabeled_tournaments", Labeling::unlabeled, 1, Provenance::closed_form, Family::unlabeled_tournaments, 1,
            [](std::size_t n) { return detail::unlabeled_tournament_count(n); }};
}

/// a_n = 1 for all n.
inline CountingSequence constant_one(Labeling labeling) {
    return {"constant_one", labeling, 1, Provenance::closed_form, Family::constant_one, 1,
            [](std::size_t) { return Integer(1); }};
}

/// A user-defined class. Values beyond the list are out of range.
inline CountingSequence custom(std::vector<Integer> values, Labeling labeling, unsigned period,
                               std::string name = "custom") {
    if (values.empty() || values[0] != 1) {
        throw Error(ErrorCode::BadConstantTerm, "a SEQ-decomposable class needs exactly one object of size 0");
    }
    if (period == 0) throw Error(ErrorCode::PeriodMismatch, "period must be positive");
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (values[n] < 0) throw Error(ErrorCode::NegativeCount, "value(" + std::to_string(n) + ") is negative");
        if (period > 1 && n % period != 0 && values[n] != 0) {
            throw Error(ErrorCode::PeriodMismatch, "value(" + std::to_string(n) + ") is nonzero but " +
                                                       std::to_string(n) + " is not a multiple of " +
                                                       std::to_string(period));
        }
    }
    if (period > 1) {
        // The last listed multiple of p has to be nonzero; zeros there would
        // mean the sequence is not p-periodic on its tail.
        std::size_t last = (values.size() - 1) / period * period;
        if (last > 0 && values[last] == 0) {
            throw Error(ErrorCode::PeriodMismatch, "value(" + std::to_string(last) + ") vanishes on a multiple of the period");
        }
    }
    const std::size_t len = values.size();
    auto shared = std::make_shared<const std::vector<Integer>>(std::move(values));
    return {std::move(name), labeling, period, Provenance::user_list, Family::custom, 1,
            [shared](std::size_t n) { return (*shared)[n]; }, len};
}

/// Reads the user-sequence text format:
///
///     labeling: labeled|unlabeled
///     period: p
///     1
///     1
///     ...
///
/// Header lines may appear in any order before the values; blank lines and
/// lines starting with '#' are ignored.
inline CountingSequence read_custom_sequence(std::istream& in, std::string name = "custom") {
    std::optional<Labeling> labeling;
    unsigned period = 1;
    std::vector<Integer> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string text = line.substr(first, last - first + 1);
        auto colon = text.find(':');
        if (colon != std::string::npos) {
            std::string key = text.substr(0, colon);
            std::string val = text.substr(colon + 1);
            val.erase(0, val.find_first_not_of(" \t"));
            if (key == "labeling") {
                if (val == "labeled") labeling = Labeling::labeled;
                else if (val == "unlabeled") labeling = Labeling::unlabeled;
                else throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown labeling '" + val + "'");
            } else if (key == "period") {
                try {
                    period = static_cast<unsigned>(std::stoul(val));
                } catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad period '" + val + "'");
                }
            } else {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown header '" + key + "'");
            }
            continue;
        }
        try {
            values.emplace_back(text);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": not an integer: '" + text + "'");
        }
    }
    if (!labeling) throw Error(ErrorCode::ParseError, "missing 'labeling:' header");
    return custom(std::move(values), *labeling, period, std::move(name));
}

inline CountingSequence read_custom_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_custom_sequence(in, "custom");
}

} // namespace seqasym
