#pragma once

// Truncated formal power series over exact rationals.
//
// A PowerSeries stores coefficients 0..N where N is its truncation order.
// Binary operations first truncate both operands to the smaller order, so
// the result never claims more precision than its inputs carry.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "seqasym/error.hpp"

namespace seqasym {

// Expression templates are off: lazily evaluated temporaries would dangle
// when returned from the generator lambdas.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

enum class Labeling { labeled, unlabeled };

constexpr std::string_view to_string(Labeling l) noexcept {
    return l == Labeling::labeled ? "labeled" : "unlabeled";
}

inline Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

/// (n)_k = n (n-1) ... (n-k+1); zero once k exceeds n.
inline Integer falling_factorial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
    return r;
}

/// (2n-1)!! with the convention (-1)!! = 1.
inline Integer double_factorial_odd(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 1; i < 2 * n; i += 2) r *= static_cast<unsigned long>(i);
    return r;
}

inline Integer pow(const Integer& base, std::size_t e) {
    Integer r = 1;
    Integer b = base;
    while (e > 0) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e > 0) b *= b;
    }
    return r;
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Six significant digits followed by "(approx)"; for display only.
inline std::string approx(const Rational& q) {
    using Float = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;
    const Float v = Float(numerator(q).str()) / Float(denominator(q).str());
    return v.str(6, std::ios_base::showpoint) + " (approx)";
}

class PowerSeries {
public:
    /// The zero series truncated at `order`.
    explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    /// Takes ownership of coefficients 0..N; an empty list is the zero series of order 0.
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    PowerSeries(std::initializer_list<Rational> coeffs, std::size_t order) : coeffs_(order + 1) {
        std::size_t i = 0;
        for (const auto& c : coeffs) {
            if (i > order) break;
            coeffs_[i++] = c;
        }
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] PowerSeries truncated(std::size_t order) const {
        std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        return PowerSeries(std::move(c));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

inline PowerSeries series_add(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = f[i] + g[i];
    return PowerSeries(std::move(c));
}

inline PowerSeries series_neg(const PowerSeries& f) {
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : c) x = -x;
    return PowerSeries(std::move(c));
}

inline PowerSeries series_sub(const PowerSeries& f, const PowerSeries& g) { return series_add(f, series_neg(g)); }

inline PowerSeries series_scale(const PowerSeries& f, const Rational& s) {
    std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : c) x *= s;
    return PowerSeries(std::move(c));
}

/// Cauchy product truncated to the smaller order.
inline PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (g[j] != 0) c[i + j] += f[i] * g[j];
        }
    }
    return PowerSeries(std::move(c));
}

/// Multiplicative inverse through the truncation order.
inline PowerSeries series_inverse(const PowerSeries& f) {
    if (f[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "series_inverse requires a nonzero constant term");
    const std::size_t n = f.order();
    std::vector<Rational> g(n + 1);
    const Rational inv0 = 1 / f[0];
    g[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (f[i] != 0) acc += f[i] * g[k - i];
        }
        g[k] = -acc * inv0;
    }
    return PowerSeries(std::move(g));
}

/// m-fold product. Repeated multiplication up to m = 8, binary powering beyond;
/// both give identical coefficients since the arithmetic is exact.
inline PowerSeries series_pow(const PowerSeries& f, std::size_t m) {
    PowerSeries result = PowerSeries::constant(1, f.order());
    if (m <= 8) {
        for (std::size_t i = 0; i < m; ++i) result = series_mul(result, f);
        return result;
    }
    PowerSeries base = f;
    while (m > 0) {
        if (m & 1U) result = series_mul(result, base);
        m >>= 1U;
        if (m > 0) base = series_mul(base, base);
    }
    return result;
}

inline PowerSeries series_derivative(const PowerSeries& f) {
    const std::size_t n = f.order();
    if (n == 0) return PowerSeries(0);
    std::vector<Rational> c(n);
    for (std::size_t i = 1; i <= n; ++i) c[i - 1] = f[i] * static_cast<unsigned long>(i);
    return PowerSeries(std::move(c));
}

/// exp(f) for f[0] = 0, from g' = f' g.
inline PowerSeries series_exp(const PowerSeries& f) {
    if (f[0] != 0) throw Error(ErrorCode::BadConstantTerm, "series_exp requires a zero constant term");
    const std::size_t n = f.order();
    std::vector<Rational> g(n + 1);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (f[i] != 0) acc += f[i] * g[k - i] * static_cast<unsigned long>(i);
        }
        g[k] = acc / static_cast<unsigned long>(k);
    }
    return PowerSeries(std::move(g));
}

/// log(f) for f[0] = 1, from f g' = f'.
inline PowerSeries series_log(const PowerSeries& f) {
    if (f[0] != 1) throw Error(ErrorCode::BadConstantTerm, "series_log requires constant term 1");
    const std::size_t n = f.order();
    std::vector<Rational> g(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = f[k] * static_cast<unsigned long>(k);
        for (std::size_t i = 1; i < k; ++i) {
            if (f[k - i] != 0) acc -= g[i] * f[k - i] * static_cast<unsigned long>(i);
        }
        g[k] = acc / static_cast<unsigned long>(k);
    }
    return PowerSeries(std::move(g));
}

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return series_add(f, g); }
inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return series_sub(f, g); }
inline PowerSeries operator-(const PowerSeries& f) { return series_neg(f); }
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return series_mul(f, g); }

/// Counting values 0..order turned into a generating function: divided by n!
/// in the labeled mode, copied as-is in the unlabeled mode.
inline PowerSeries counts_to_series(std::span<const Integer> counts, Labeling labeling) {
    std::vector<Rational> c(counts.size());
    Integer fact = 1;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (n > 1) fact *= static_cast<unsigned long>(n);
        c[n] = labeling == Labeling::labeled ? Rational(counts[n], fact) : Rational(counts[n]);
    }
    return PowerSeries(std::move(c));
}

/// Inverse of counts_to_series. Fails with NonIntegerCount when some
/// reconstructed count is fractional.
inline std::vector<Integer> series_to_counts(const PowerSeries& f, Labeling labeling) {
    std::vector<Integer> out(f.order() + 1);
    Integer fact = 1;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (n > 1) fact *= static_cast<unsigned long>(n);
        const Rational v = labeling == Labeling::labeled ? f[n] * fact : f[n];
        if (!is_integer(v)) {
            throw Error(ErrorCode::NonIntegerCount,
                        "coefficient " + std::to_string(n) + " reconstructs to " + to_string(v));
        }
        out[n] = numerator(v);
    }
    return out;
}

} // namespace seqasym
