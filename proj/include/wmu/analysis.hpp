#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "balancing.hpp"
#include "verifier.hpp"

namespace wmu {

/// 50 decimal digits; counts grow past any fixed-width float long before
/// asymptotics become visible.
using Real = boost::multiprecision::cpp_bin_float_50;

// Dyck paths --------------------------------------------------------------------

/// Number of Dyck words of length 2 n_half whose height never exceeds `height`
/// (unbounded when empty). Lattice-path DP on exact integers.
inline BigInt dyck_count(std::size_t n_half, std::optional<std::size_t> height = std::nullopt) {
    const std::size_t cap = std::min(height.value_or(n_half), n_half);
    std::vector<BigInt> at(cap + 2, 0), next(cap + 2, 0);
    at[0] = 1;
    for (std::size_t step = 0; step < 2 * n_half; ++step) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (std::size_t h = 0; h <= cap; ++h) {
            if (at[h] == 0) continue;
            if (h + 1 <= cap) next[h + 1] += at[h];
            if (h > 0) next[h - 1] += at[h];
        }
        std::swap(at, next);
    }
    return at[0];
}

/**
 * The height-bounded Dyck asymptotic in the form
 *   4^n / (D+1) * tan^2(pi/(D+1)) * cos^(2n)(pi/(D+1)).
 *
 * Note: this form does not track dyck_count (at n = 200 the ratio is ~8e59 for
 * D = 2). dyck_asymptotic_exact_form gives the convergent expression.
 */
inline Real dyck_asymptotic(std::size_t n_half, std::size_t height) {
    detail::require(height >= 2, "dyck_asymptotic needs D >= 2");
    const Real pi = boost::math::constants::pi<Real>();
    const Real x = pi / Real(height + 1);
    const Real t = tan(x);
    const Real log_value = Real(n_half) * log(Real(4)) - log(Real(height + 1)) + 2 * log(t) +
                           Real(2 * n_half) * log(cos(x));
    return exp(log_value);
}

/// de Bruijn-Knuth-Rice: Dyck(n, D) ~ 4^(n+1)/(D+2) sin^2(pi/(D+2)) cos^(2n)(pi/(D+2)).
inline Real dyck_asymptotic_exact_form(std::size_t n_half, std::size_t height) {
    detail::require(height >= 1, "height must be positive");
    const Real pi = boost::math::constants::pi<Real>();
    const Real x = pi / Real(height + 2);
    const Real log_value = Real(n_half + 1) * log(Real(4)) - log(Real(height + 2)) + 2 * log(sin(x)) +
                           Real(2 * n_half) * log(cos(x));
    return exp(log_value);
}

inline Real to_real(const BigInt& v) { return Real(v); }

// Entropy, GV, Johnson -------------------------------------------------------------

/// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
inline Real binary_entropy(const Real& x) {
    detail::require(x >= 0 && x <= 1, "entropy argument outside [0, 1]");
    if (x == 0 || x == 1) return Real(0);
    return -(x * log2(x)) - (1 - x) * log2(1 - x);
}

/// Normalised GV rate 1 - h(d/n).
inline Real gv_rate(std::size_t n, std::size_t d) {
    detail::require(n >= 1, "gv_rate needs n >= 1");
    detail::require(2 * d <= n, "gv_rate needs d <= n/2");
    return 1 - binary_entropy(Real(d) / Real(n));
}

struct JohnsonBounds {
    Real lower;
    Real upper;
};

/// The two displayed asymptotic expressions bracketing A(n, d, n/2):
///   2^(n+1) / (sqrt(2 pi) n^((d-1)/2))  and  2^((n+1)/2) e^(n/2) / (sqrt(2 pi) n^((d-1)/2)).
inline JohnsonBounds johnson_bounds(std::size_t n, std::size_t d) {
    detail::require(n >= 1, "johnson_bounds needs n >= 1");
    detail::require(2 * d <= n, "johnson_bounds needs d <= n/2");
    const Real pi = boost::math::constants::pi<Real>();
    const Real denom = sqrt(2 * pi) * pow(Real(n), Real(static_cast<double>(d) - 1) / 2);
    return {pow(Real(2), Real(n + 1)) / denom,
            pow(Real(2), Real(n + 1) / 2) * exp(Real(n) / 2) / denom};
}

// Parsing-code parameters -------------------------------------------------------------

/// Zero-run parameter maximising the component length: sqrt(n - 2).
inline Real optimal_parsing_ell(std::size_t n) {
    detail::require(n >= 2, "n must be at least 2");
    return sqrt(Real(n - 2));
}

/// Component length at the optimum, (sqrt(n-2) - 1)^2 = n - 2 sqrt(n-2) - 1.
inline Real optimal_parsing_component_length(std::size_t n) {
    const Real s = optimal_parsing_ell(n);
    return (s - 1) * (s - 1);
}

/// An integer parameterisation of the parsing template 0^l 1 (chunk 1)^t.
struct ParsingParameters {
    std::size_t ell;
    std::size_t t;
    std::size_t component_length;  ///< t (ell - 1)
    std::size_t code_length;       ///< (t + 1) ell + 1, at most the requested n
};

/// Floor and ceiling candidates around sqrt(n - 2), each with the largest t fitting in n.
inline std::vector<ParsingParameters> parsing_parameter_candidates(std::size_t n) {
    detail::require(n >= 6, "parsing parameters need n >= 6");
    const double s = std::sqrt(static_cast<double>(n - 2));
    std::vector<ParsingParameters> out;
    for (std::size_t ell : {static_cast<std::size_t>(std::floor(s)), static_cast<std::size_t>(std::ceil(s))}) {
        if (ell < 2) continue;
        if (!out.empty() && out.back().ell == ell) continue;
        if ((n - 1) / ell < 2) continue;
        const std::size_t t = (n - 1) / ell - 1;
        out.push_back({ell, t, t * (ell - 1), (t + 1) * ell + 1});
    }
    return out;
}

// Table of construction sizes --------------------------------------------------------

/// One column of the size table: a log2 magnitude or the violated precondition.
struct RateColumn {
    std::optional<Real> log2_size;
    std::string error;

    bool ok() const { return log2_size.has_value(); }
};

/**
 * Sizes of the four construction families at (n, k, d), as log2 values.
 *
 * The columns are cardinalities (not normalised rates):
 *   [0] k-WMU,                      C1 4^n / (n-k+1)
 *   [1] k-WMU + error correcting,   4^(n - sqrt(n-k-1) - 1/2) / 2^(entropy terms incl. n h(d/n))
 *   [2] k-WMU + balanced,           C3 4^(n+1) / (sqrt(2 pi) (n-k+1) n^(1/2))
 *   [3] k-WMU + EC + balanced,      4^(n - sqrt(n-k-1)) / (sqrt(2 pi) 2^(entropy terms) n^((d-1)/2))
 * with C1 = C3 = 3/2^6 and m*_H = n - k - 2 sqrt(n-k-1).
 */
struct RateReport {
    std::size_t n, k, d;
    std::array<RateColumn, 4> columns;
    std::optional<Real> m_star_h;
    std::optional<long long> m_star_h_rounded;
};

inline const Real& table_constant() {
    static const Real c = Real(3) / 64;
    return c;
}

inline RateReport rate_table(std::size_t n, std::size_t k, std::size_t d) {
    detail::require(n >= 1 && k >= 1 && k <= n, "rate_table needs 1 <= k <= n");
    RateReport r{n, k, d, {}, std::nullopt, std::nullopt};
    const Real pi = boost::math::constants::pi<Real>();
    const Real m = Real(n - k + 1);

    r.columns[0].log2_size = log2(table_constant()) + 2 * Real(n) - log2(m);
    r.columns[2].log2_size = log2(table_constant()) + 2 * Real(n + 1) - log2(sqrt(2 * pi)) - log2(m) -
                             log2(Real(n)) / 2;

    // EC columns
    std::string ec_error;
    if (k < 2) ec_error = "needs k >= 2";
    else if (n < k + 1) ec_error = "needs n - k - 1 >= 0";
    Real root;
    if (ec_error.empty()) {
        root = sqrt(Real(n - k - 1));
        const Real mh = Real(n - k) - 2 * root;
        r.m_star_h = mh;
        r.m_star_h_rounded = static_cast<long long>(llround(static_cast<double>(mh)));
        if (mh <= 0) ec_error = "needs m*_H > 0";
        else if (d < 1) ec_error = "needs d >= 1";
        else if (Real(2 * d) > Real(k - 1)) ec_error = "needs d <= (k-1)/2";
        else if (Real(2 * d) > mh) ec_error = "needs d <= m*_H/2";
    }
    if (ec_error.empty()) {
        const Real mh = *r.m_star_h;
        const Real ent = Real(k - 1) * binary_entropy(Real(d) / Real(k - 1)) + mh * binary_entropy(Real(d) / mh);
        if (2 * d > n) {
            r.columns[1].error = "needs d <= n/2";
        } else {
            const Real ent_n = Real(n) * binary_entropy(Real(d) / Real(n));
            r.columns[1].log2_size = 2 * (Real(n) - root - Real(1) / 2) - (ent + ent_n);
        }
        r.columns[3].log2_size = 2 * (Real(n) - root) - log2(sqrt(2 * pi)) - ent -
                                 (Real(static_cast<double>(d) - 1) / 2) * log2(Real(n));
    } else {
        r.columns[1].error = ec_error;
        r.columns[3].error = ec_error;
    }
    return r;
}

/// log2 of 2^(s1 + s2 + s3) with GV-rate component dimensions, m = n-k+1 and
/// m*_H = m - 2 sqrt(m-2) - 1. Same value as column [1] written as a sum.
inline Real decoupled_gv_log2_size(std::size_t n, std::size_t k, std::size_t d) {
    detail::require(k >= 2 && n >= k + 1, "needs k >= 2 and n >= k + 1");
    const Real m = Real(n - k + 1);
    const Real mh = m - 2 * sqrt(m - 2) - 1;
    const Real s1 = Real(k - 1) * (1 - binary_entropy(Real(d) / Real(k - 1)));
    const Real s2 = mh * (1 - binary_entropy(Real(d) / mh));
    const Real s3 = Real(n) * (1 - binary_entropy(Real(d) / Real(n)));
    return s1 + s2 + s3;
}

/// log2 of 2^(s1 + s2) * johnson_lower(n, d): the balanced EC sum form; equals column [3].
inline Real balanced_decoupled_log2_size(std::size_t n, std::size_t k, std::size_t d) {
    detail::require(k >= 2 && n >= k + 1, "needs k >= 2 and n >= k + 1");
    const Real m = Real(n - k + 1);
    const Real mh = m - 2 * sqrt(m - 2) - 1;
    const Real s1 = Real(k - 1) * (1 - binary_entropy(Real(d) / Real(k - 1)));
    const Real s2 = mh * (1 - binary_entropy(Real(d) / mh));
    return s1 + s2 + log2(johnson_bounds(n, d).lower);
}

/// Exact size of the near-balanced Dyck-based k-WMU DNA code:
/// A(k-1, 2, (k-1)/2) * Dyck((n-k)/2, D) * 2^n.
inline BigInt near_balanced_size(std::size_t n, std::size_t k, std::optional<std::size_t> height) {
    detail::require(k >= 3 && k <= n, "needs 3 <= k <= n");
    detail::require((k - 1) % 2 == 0 && (n - k) % 2 == 0, "needs k-1 and n-k even");
    return BigInt(binomial(k - 1, (k - 1) / 2)) * dyck_count((n - k) / 2, height) * big_pow(2, n);
}

}  // namespace wmu
