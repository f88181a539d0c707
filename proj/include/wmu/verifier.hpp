#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "codebook.hpp"

namespace wmu {

using BigInt = boost::multiprecision::cpp_int;

/// True iff no proper prefix of `a` equals the suffix of the same length.
inline bool is_self_uncorrelated(const Word& a) {
    detail::require(!a.empty(), "is_self_uncorrelated: empty word");
    const auto s = a.symbols();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (std::equal(s.begin(), s.begin() + i, s.end() - i)) return false;
    return true;
}

/// Witness of a forbidden overlap: prefix of words[prefix_of] of length
/// `length` equals the suffix of words[suffix_of].
struct Correlation {
    std::size_t prefix_of;
    std::size_t suffix_of;
    std::size_t length;
};

namespace detail {

inline std::string symbol_key(std::span<const Symbol> s) { return std::string(s.begin(), s.end()); }

}  // namespace detail

/**
 * First overlap of length in [k, n-1] between a prefix of one codeword and a
 * suffix of any codeword (the same word included), scanning shortest overlaps first.
 */
inline std::optional<Correlation> find_correlation(const Codebook& c, std::size_t k) {
    const std::size_t n = c.n();
    detail::require(k >= 1 && k <= std::max<std::size_t>(n, 1), "k must satisfy 1 <= k <= n");
    std::unordered_map<std::string, std::size_t> prefixes;
    for (std::size_t len = k; len < n; ++len) {
        prefixes.clear();
        for (std::size_t i = 0; i < c.size(); ++i)
            prefixes.try_emplace(detail::symbol_key(c[i].symbols().first(len)), i);
        for (std::size_t j = 0; j < c.size(); ++j) {
            auto it = prefixes.find(detail::symbol_key(c[j].symbols().last(len)));
            if (it != prefixes.end()) return Correlation{it->second, j, len};
        }
    }
    return std::nullopt;
}

/// k-WMU: no proper prefix of length >= k of a codeword is a suffix of any codeword.
/// k = n is legal and always true.
inline bool is_k_wmu_code(const Codebook& c, std::size_t k) { return !find_correlation(c, k).has_value(); }

/// MU is the k = 1 case. The empty codebook is MU.
inline bool is_mu_code(const Codebook& c) { return c.n() == 0 || is_k_wmu_code(c, 1); }

inline std::size_t code_min_distance(const Codebook& c) {
    detail::require(c.size() >= 2, "code_min_distance needs at least two codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) best = std::min(best, hamming_distance(c[i], c[j]));
    return best;
}

/// Every word is binary and balanced.
inline bool is_balanced_code(const Codebook& c) {
    if (c.q() != 2) return false;
    return std::all_of(c.begin(), c.end(), [](const Word& w) { return binary_disbalance(w) == 0; });
}

/// Every word is quaternary and GC-balanced under the field map.
inline bool is_gc_balanced_code(const Codebook& c) {
    if (c.q() != 4) return false;
    return std::all_of(c.begin(), c.end(), [](const Word& w) { return gc_disbalance(w) == 0; });
}

inline BigInt big_pow(unsigned base, std::size_t exp) {
    BigInt r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

/// floor(q^n / (n - k + 1)), the integer consequence of the counting bound on k-WMU codes.
inline BigInt wmu_upper_bound(std::size_t n, unsigned q, std::size_t k) {
    detail::require(k >= 1 && k <= n, "wmu_upper_bound needs 1 <= k <= n");
    return big_pow(q, n) / (n - k + 1);
}

}  // namespace wmu
