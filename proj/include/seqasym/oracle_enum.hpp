#pragma once

// Brute-force enumeration of small objects, counted by number of irreducible
// parts. Independent of the series machinery: objects are built one by one
// and their parts are found structurally (SCCs, invariant prefixes).
//
// Enumeration spaces are indexed 0..total-1 and split into contiguous ranges,
// one per worker. Per-worker counts are merged by addition, so results do not
// depend on the worker count.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "seqasym/class_catalog.hpp"
#include "seqasym/error.hpp"
#include "seqasym/exact_series.hpp"

namespace seqasym {

struct OracleResult {
    std::string class_name;
    std::size_t n = 0;
    std::map<std::size_t, Integer> counts_by_parts;
    Integer total_enumerated;
    double elapsed_seconds = 0;
};

struct OracleOptions {
    unsigned workers = 1;
    /// Maximum size of the enumeration space; unset means the per-class default.
    std::optional<std::uint64_t> budget;
};

namespace detail {

using Counts = std::vector<std::uint64_t>;

/// Runs body(begin, end, counts) over [0, total) split into `workers`
/// contiguous shards and sums the per-shard counts.
inline Counts sharded_count(std::uint64_t total, unsigned workers, std::size_t bins,
                            const std::function<void(std::uint64_t, std::uint64_t, Counts&)>& body) {
    workers = std::max(1U, workers);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    std::vector<Counts> partial(workers, Counts(bins, 0));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            try {
                body(begin, end, partial[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Counts out(bins, 0);
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < bins; ++i) out[i] += p[i];
    }
    return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw Error(ErrorCode::BudgetExceeded, "enumeration space overflows 64 bits");
        r *= base;
    }
    return r;
}

inline void check_budget(const std::string& what, std::uint64_t space, bool within_default, const OracleOptions& opts) {
    if (opts.budget) {
        if (space > *opts.budget) {
            throw Error(ErrorCode::BudgetExceeded, what + " needs " + std::to_string(space) + " objects, budget is " +
                                                       std::to_string(*opts.budget));
        }
    } else if (!within_default) {
        throw Error(ErrorCode::BudgetExceeded, what + " is beyond the default enumeration budget (" +
                                                   std::to_string(space) + " objects); pass a budget to force it");
    }
}

/// Default size limits; classes without a listed limit get 2^21 objects.
inline constexpr std::uint64_t fallback_space = std::uint64_t{1} << 21;

inline OracleResult make_result(std::string name, std::size_t n, const Counts& counts,
                                std::chrono::steady_clock::time_point start) {
    OracleResult r;
    r.class_name = std::move(name);
    r.n = n;
    r.total_enumerated = 0;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        if (counts[m] == 0) continue;
        r.counts_by_parts[m] = Integer(counts[m]);
        r.total_enumerated += counts[m];
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Tarjan's algorithm on a digraph given by out-neighbour bitmasks. Components
/// come out in reverse topological order (sinks first).
inline std::vector<std::uint32_t> strong_components(const std::vector<std::uint32_t>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<std::size_t> stack;
    std::uint32_t on_stack = 0;
    int counter = 0;
    std::vector<std::uint32_t> comps;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack |= 1U << v;
        for (std::uint32_t rest = adj[v]; rest != 0; rest &= rest - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(rest));
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack & (1U << w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::uint32_t comp = 0;
            std::size_t w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack &= ~(1U << w);
                comp |= 1U << w;
            } while (w != v);
            comps.push_back(comp);
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] < 0) visit(v);
    }
    return comps;
}

/// Every vertex of a later component beats every vertex of an earlier one and
/// no arc goes back: the condensation is a transitive chain.
inline void assert_chain(const std::vector<std::uint32_t>& adj, const std::vector<std::uint32_t>& comps) {
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            for (std::uint32_t rest = comps[b]; rest != 0; rest &= rest - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(rest));
                if ((adj[u] & comps[a]) != comps[a]) throw std::logic_error("condensation is not a chain");
            }
            for (std::uint32_t rest = comps[a]; rest != 0; rest &= rest - 1) {
                const auto u = static_cast<std::size_t>(std::countr_zero(rest));
                if ((adj[u] & comps[b]) != 0) throw std::logic_error("condensation has a backward arc");
            }
        }
    }
}

inline std::vector<std::pair<std::size_t, std::size_t>> vertex_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

/// Closed-prefix mask of a permutation of 0..n-1: bit k set when the first k
/// entries are exactly {0..k-1}.
inline std::uint32_t closed_prefixes(const std::vector<std::uint8_t>& perm) {
    std::uint32_t mask = 0;
    std::size_t mx = 0;
    for (std::size_t k = 1; k <= perm.size(); ++k) {
        mx = std::max<std::size_t>(mx, perm[k - 1]);
        if (mx == k - 1) mask |= 1U << k;
    }
    return mask;
}

inline std::vector<std::vector<std::uint8_t>> all_permutations(std::size_t n) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::uint8_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Fixed-point-free involutions on 0..2n-1 as image arrays.
inline void involutions(std::vector<std::uint8_t>& img, std::uint32_t used,
                        std::vector<std::vector<std::uint8_t>>& out) {
    const std::size_t size = img.size();
    std::size_t i = 0;
    while (i < size && (used & (1U << i))) ++i;
    if (i == size) {
        out.push_back(img);
        return;
    }
    for (std::size_t j = i + 1; j < size; ++j) {
        if (used & (1U << j)) continue;
        img[i] = static_cast<std::uint8_t>(j);
        img[j] = static_cast<std::uint8_t>(i);
        involutions(img, used | (1U << i) | (1U << j), out);
    }
}

/// d-tuples over a list of closed-prefix masks; a prefix is closed for the
/// tuple when it is closed for every member.
inline Counts count_mask_tuples(const std::vector<std::uint32_t>& masks, unsigned d, std::size_t bins,
                                unsigned workers) {
    const std::uint64_t L = masks.size();
    const std::uint64_t total = checked_pow(L, d);
    return sharded_count(total, workers, bins, [&](std::uint64_t begin, std::uint64_t end, Counts& counts) {
        std::vector<std::uint64_t> digit(d);
        std::uint64_t x = begin;
        for (unsigned j = 0; j < d; ++j) {
            digit[j] = x % L;
            x /= L;
        }
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::uint32_t mask = ~0U;
            for (unsigned j = 0; j < d; ++j) mask &= masks[digit[j]];
            ++counts[static_cast<std::size_t>(std::popcount(mask))];
            for (unsigned j = 0; j < d; ++j) {
                if (++digit[j] < L) break;
                digit[j] = 0;
            }
        }
    });
}

} // namespace detail

/// d-multitournaments on n vertices. Each pair i<j carries v in 0..d, the
/// number of its edges directed i -> j; the arc i -> j exists iff v > 0 and
/// j -> i iff v < d. Parts are strongly connected components.
inline OracleResult enumerate_tournament_parts(std::size_t n, unsigned d = 1, const OracleOptions& opts = {}) {
    if (d < 1) throw Error(ErrorCode::RangeError, "d must be at least 1");
    if (n > 12) throw Error(ErrorCode::BudgetExceeded, "tournament enumeration is limited to 12 vertices");
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = detail::vertex_pairs(n);
    const std::uint64_t base = d + 1;
    const std::uint64_t total = detail::checked_pow(base, pairs.size());
    const std::size_t limit = d == 1 ? 7 : d == 2 ? 5 : d == 3 ? 4 : 0;
    const bool within = limit ? n <= limit : total <= detail::fallback_space;
    detail::check_budget("tournaments(" + std::to_string(d) + ") at n = " + std::to_string(n), total, within, opts);

    auto counts = detail::sharded_count(total, opts.workers, n + 1, [&](std::uint64_t begin, std::uint64_t end,
                                                                        detail::Counts& out) {
        std::vector<std::uint32_t> adj(n);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::fill(adj.begin(), adj.end(), 0U);
            std::uint64_t x = idx;
            for (const auto& [i, j] : pairs) {
                const std::uint64_t v = x % base;
                x /= base;
                if (v > 0) adj[i] |= 1U << j;
                if (v < d) adj[j] |= 1U << i;
            }
            const auto comps = detail::strong_components(adj);
            detail::assert_chain(adj, comps);
            ++out[comps.size()];
        }
    });
    return detail::make_result(tournaments(d).name(), n, counts, start);
}

/// d-tuples of permutations of [n]; parts are the maximal prefixes [k]
/// mapped onto themselves by every member of the tuple.
inline OracleResult enumerate_permutation_parts(std::size_t n, unsigned d = 1, const OracleOptions& opts = {}) {
    if (d < 1) throw Error(ErrorCode::RangeError, "d must be at least 1");
    if (n > 12) throw Error(ErrorCode::BudgetExceeded, "permutation enumeration is limited to n = 12");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t nfact = factorial(n).convert_to<std::uint64_t>();
    const std::uint64_t total = detail::checked_pow(nfact, d);
    const std::size_t limit = d == 1 ? 9 : d == 2 ? 6 : d == 3 ? 5 : 0;
    const bool within = limit ? n <= limit : total <= detail::fallback_space;
    detail::check_budget("permutations(" + std::to_string(d) + ") at n = " + std::to_string(n), total, within, opts);

    std::vector<std::uint32_t> masks;
    for (const auto& p : detail::all_permutations(n)) masks.push_back(detail::closed_prefixes(p) & ~1U);
    if (n == 0) masks = {0};
    auto counts = detail::count_mask_tuples(masks, d, n + 1, opts.workers);
    return detail::make_result(permutations(d).name(), n, counts, start);
}

/// d-tuples of fixed-point-free involutions of [2n]; parts are the maximal
/// even prefixes [2k] closed under every member.
inline OracleResult enumerate_matching_parts(std::size_t pairs, unsigned d = 1, const OracleOptions& opts = {}) {
    if (d < 1) throw Error(ErrorCode::RangeError, "d must be at least 1");
    if (pairs > 8) throw Error(ErrorCode::BudgetExceeded, "matching enumeration is limited to 8 pairs");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = double_factorial_odd(pairs).convert_to<std::uint64_t>();
    const std::uint64_t total = detail::checked_pow(count, d);
    const std::size_t limit = d == 1 ? 6 : d == 2 ? 4 : 0;
    const bool within = limit ? pairs <= limit : total <= detail::fallback_space;
    detail::check_budget("matchings(" + std::to_string(d) + ") with " + std::to_string(pairs) + " pairs", total, within,
                         opts);

    std::vector<std::vector<std::uint8_t>> invs;
    std::vector<std::uint8_t> img(2 * pairs);
    detail::involutions(img, 0, invs);
    std::vector<std::uint32_t> masks;
    for (const auto& inv : invs) {
        // an involution closes [2k] exactly when the permutation does; keep the
        // even prefixes and renumber them by pair count
        const std::uint32_t full = detail::closed_prefixes(inv);
        std::uint32_t mask = 0;
        for (std::size_t k = 1; k <= pairs; ++k) {
            if (full & (1U << (2 * k))) mask |= 1U << k;
        }
        masks.push_back(mask);
    }
    auto counts = detail::count_mask_tuples(masks, d, pairs + 1, opts.workers);
    return detail::make_result(matchings(d).name(), pairs, counts, start);
}

/// d-tuples of linear orders of a labeled n-set, written as words. A prefix
/// length k splits the tuple when all d words start with the same k-set.
inline OracleResult enumerate_linear_order_parts(std::size_t n, unsigned d = 1, const OracleOptions& opts = {}) {
    if (d < 1) throw Error(ErrorCode::RangeError, "d must be at least 1");
    if (n > 12) throw Error(ErrorCode::BudgetExceeded, "linear order enumeration is limited to n = 12");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t nfact = factorial(n).convert_to<std::uint64_t>();
    const std::uint64_t total = detail::checked_pow(nfact, d);
    const std::size_t limit = d == 1 ? 9 : d == 2 ? 6 : d == 3 ? 4 : 0;
    const bool within = limit ? n <= limit : total <= detail::fallback_space;
    detail::check_budget("linear_orders(" + std::to_string(d) + ") at n = " + std::to_string(n), total, within, opts);

    // prefix sets of each word: sets[w][k] = set of the first k letters
    const auto words = detail::all_permutations(n);
    std::vector<std::vector<std::uint32_t>> sets;
    for (const auto& w : words) {
        std::vector<std::uint32_t> s(n + 1, 0);
        for (std::size_t k = 1; k <= n; ++k) s[k] = s[k - 1] | (1U << w[k - 1]);
        sets.push_back(std::move(s));
    }
    const std::uint64_t L = words.size();
    auto counts = detail::sharded_count(total, opts.workers, n + 1, [&](std::uint64_t begin, std::uint64_t end,
                                                                        detail::Counts& out) {
        std::vector<std::uint64_t> digit(d);
        std::uint64_t x = begin;
        for (unsigned j = 0; j < d; ++j) {
            digit[j] = x % L;
            x /= L;
        }
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::size_t m = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                bool same = true;
                for (unsigned j = 1; j < d && same; ++j) same = sets[digit[j]][k] == sets[digit[0]][k];
                if (same) ++m;
            }
            ++out[m];
            for (unsigned j = 0; j < d; ++j) {
                if (++digit[j] < L) break;
                digit[j] = 0;
            }
        }
    });
    return detail::make_result(linear_orders(d).name(), n, counts, start);
}

/// Tournaments on n vertices up to isomorphism. A tournament is a bitmask over
/// the pairs i<j (bit set: i -> j); it is kept only when it is the smallest
/// mask among all n! relabelings of itself.
inline OracleResult enumerate_unlabeled_tournament_parts(std::size_t n, const OracleOptions& opts = {}) {
    if (n > 7) throw Error(ErrorCode::BudgetExceeded, "unlabeled tournament enumeration is limited to n = 7");
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = detail::vertex_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    detail::check_budget("unlabeled_tournaments at n = " + std::to_string(n), total, n <= 6, opts);

    std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) pair_index[pairs[p].first][pairs[p].second] = p;

    // For each relabeling: where each pair bit goes and whether it flips.
    struct Move {
        std::size_t target;
        bool flip;
    };
    std::vector<std::vector<Move>> moves;
    for (const auto& perm : detail::all_permutations(n)) {
        std::vector<Move> mv;
        for (const auto& [i, j] : pairs) {
            const std::size_t a = perm[i], b = perm[j];
            mv.push_back(a < b ? Move{pair_index[a][b], false} : Move{pair_index[b][a], true});
        }
        moves.push_back(std::move(mv));
    }

    auto counts = detail::sharded_count(total, opts.workers, n + 1, [&](std::uint64_t begin, std::uint64_t end,
                                                                        detail::Counts& out) {
        std::vector<std::uint32_t> adj(n);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            bool canonical = true;
            for (const auto& mv : moves) {
                std::uint64_t image = 0;
                for (std::size_t p = 0; p < mv.size(); ++p) {
                    const bool bit = ((mask >> p) & 1U) != 0;
                    if (bit != mv[p].flip) image |= std::uint64_t{1} << mv[p].target;
                }
                if (image < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            std::fill(adj.begin(), adj.end(), 0U);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const auto [i, j] = pairs[p];
                if ((mask >> p) & 1U) adj[i] |= 1U << j;
                else adj[j] |= 1U << i;
            }
            const auto comps = detail::strong_components(adj);
            detail::assert_chain(adj, comps);
            ++out[comps.size()];
        }
    });
    return detail::make_result("unlabeled_tournaments", n, counts, start);
}

/// Tournaments with d distinguishable edges per pair, each directed on its
/// own; the induced digraph has i -> j iff some edge points that way. Its
/// part counts should equal those of tournaments(2^d - 1).
inline OracleResult enumerate_distinguishable_edge_parts(std::size_t n, unsigned d = 2, const OracleOptions& opts = {}) {
    if (d < 1 || d > 4) throw Error(ErrorCode::RangeError, "d must be between 1 and 4");
    const auto start = std::chrono::steady_clock::now();
    const auto pairs = detail::vertex_pairs(n);
    const std::uint64_t total = detail::checked_pow(std::uint64_t{1} << d, pairs.size());
    detail::check_budget("distinguishable-edge tournaments at n = " + std::to_string(n), total,
                         total <= detail::fallback_space, opts);
    const std::uint64_t all = (std::uint64_t{1} << d) - 1;

    auto counts = detail::sharded_count(total, opts.workers, n + 1, [&](std::uint64_t begin, std::uint64_t end,
                                                                        detail::Counts& out) {
        std::vector<std::uint32_t> adj(n);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::fill(adj.begin(), adj.end(), 0U);
            std::uint64_t x = idx;
            for (const auto& [i, j] : pairs) {
                const std::uint64_t dirs = x & all; // bit e set: edge e points i -> j
                x >>= d;
                if (dirs != 0) adj[i] |= 1U << j;
                if (dirs != all) adj[j] |= 1U << i;
            }
            const auto comps = detail::strong_components(adj);
            detail::assert_chain(adj, comps);
            ++out[comps.size()];
        }
    });
    return detail::make_result("distinguishable_edge_tournaments(" + std::to_string(d) + ")", n, counts, start);
}

/// Dispatches on a catalog class. Classes without a structural model have no
/// oracle.
inline OracleResult enumerate_parts(const CountingSequence& a, std::size_t n, const OracleOptions& opts = {}) {
    switch (a.family()) {
    case Family::tournaments: return enumerate_tournament_parts(n, a.d(), opts);
    case Family::permutations: return enumerate_permutation_parts(n, a.d(), opts);
    case Family::matchings: return enumerate_matching_parts(n, a.d(), opts);
    case Family::linear_orders: return enumerate_linear_order_parts(n, a.d(), opts);
    case Family::unlabeled_tournaments: return enumerate_unlabeled_tournament_parts(n, opts);
    default: throw Error(ErrorCode::UnknownClass, "no brute-force oracle for " + a.name());
    }
}

} // namespace seqasym
