#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "codebook.hpp"

namespace wmu {

/// Exact binomial coefficient; throws when the result does not fit 64 bits.
inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw precondition_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
    return static_cast<std::uint64_t>(r);
}

// Constant-weight ranking -----------------------------------------------------

/// Lexicographic rank (0 < 1) of a binary word among words of the same length and weight.
inline std::uint64_t constant_weight_rank(const Word& w) {
    detail::require(w.q() == 2, "constant_weight_rank needs a binary word");
    std::uint64_t rank = 0;
    std::size_t ones_left = weight(w);
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n && ones_left > 0; ++i) {
        if (w[i] == 1) {
            // every word with a 0 here (and the same prefix) comes first
            rank += binomial(n - i - 1, ones_left);
            --ones_left;
        }
    }
    return rank;
}

inline Word constant_weight_unrank(std::size_t n, std::size_t weight_, std::uint64_t rank) {
    detail::require(weight_ <= n, "weight exceeds length");
    detail::require(rank < binomial(n, weight_), "rank " + std::to_string(rank) + " out of range for (" +
                                                     std::to_string(n) + ", " + std::to_string(weight_) + ")");
    std::vector<Symbol> s(n, 0);
    std::size_t ones_left = weight_;
    for (std::size_t i = 0; i < n && ones_left > 0; ++i) {
        const std::uint64_t with_zero = binomial(n - i - 1, ones_left);
        if (rank >= with_zero) {
            s[i] = 1;
            rank -= with_zero;
            --ones_left;
        }
    }
    return Word(std::move(s), 2);
}

/// All balanced binary words of even length n (a code of size binomial(n, n/2), distance 2).
inline Codebook balanced_words(std::size_t n) {
    detail::require(n % 2 == 0, "balanced words need even length");
    std::vector<Word> words;
    const std::uint64_t total = binomial(n, n / 2);
    words.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) words.push_back(constant_weight_unrank(n, n / 2, r));
    Claims claims;
    claims.balanced = true;
    if (n >= 2) claims.d = 2;
    return Codebook(n, 2, std::move(words), claims);
}

/// Greedy lexicographic constant-weight-n/2 code with pairwise distance >= d.
inline Codebook greedy_balanced_code(std::size_t n, std::size_t d) {
    detail::require(n % 2 == 0, "balanced words need even length");
    detail::require(d >= 1, "distance must be positive");
    std::vector<Word> chosen;
    for (const Word& w : balanced_words(n)) {
        bool ok = true;
        for (const Word& c : chosen)
            if (hamming_distance(w, c) < d) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(w);
    }
    Claims claims;
    claims.balanced = true;
    claims.d = d;
    return Codebook(n, 2, std::move(chosen), claims);
}

// Knuth balancing ---------------------------------------------------------------

/// Inverts the first b bits.
inline Word invert_prefix(const Word& a, std::size_t b) {
    detail::require(a.q() == 2, "invert_prefix needs a binary word");
    detail::require(b <= a.size(), "inversion index exceeds length");
    std::vector<Symbol> s(a.begin(), a.end());
    for (std::size_t i = 0; i < b; ++i) s[i] ^= 1;
    return Word(std::move(s), 2);
}

/// Smallest b in {0..n} such that inverting the first b bits balances `a`.
inline std::size_t knuth_find_index(const Word& a) {
    detail::require(a.q() == 2, "Knuth balancing needs a binary word");
    detail::require(a.size() % 2 == 0, "Knuth balancing needs even length");
    const std::size_t n = a.size();
    std::size_t w = weight(a);
    for (std::size_t b = 0; b <= n; ++b) {
        if (w == n / 2) return b;
        if (b < n) w = a[b] ? w - 1 : w + 1;
    }
    // unreachable: the weight walks from wt(a) to n - wt(a) in unit steps
    throw std::logic_error("knuth_find_index: no balancing index");
}

/// Smallest even p with binomial(p, p/2) >= n + 1.
inline std::size_t knuth_index_length(std::size_t n) {
    std::size_t p = 0;
    while (binomial(p, p / 2) < n + 1) p += 2;
    return p;
}

struct BalancedEncoding {
    Word payload;      ///< data word with its first b bits inverted
    Word index_block;  ///< b as a balanced word of length p

    /// index_block followed by payload.
    Word codeword() const { return concat(index_block, payload); }
};

inline BalancedEncoding knuth_encode(const Word& a) {
    const std::size_t b = knuth_find_index(a);
    const std::size_t p = knuth_index_length(a.size());
    return {invert_prefix(a, b), p == 0 ? Word{} : constant_weight_unrank(p, p / 2, b)};
}

inline Word knuth_decode(const BalancedEncoding& e) {
    const std::size_t n = e.payload.size();
    const std::size_t p = knuth_index_length(n);
    if (e.index_block.size() != p)
        throw format_error("index block has length " + std::to_string(e.index_block.size()) + ", expected " +
                               std::to_string(p), 0);
    if (p == 0) return e.payload;
    if (e.index_block.q() != 2 || weight(e.index_block) != p / 2)
        throw format_error("index block is not balanced", 0);
    const std::uint64_t b = constant_weight_rank(e.index_block);
    if (b > n) throw format_error("index block encodes b = " + std::to_string(b) + " > n", 0);
    return invert_prefix(e.payload, static_cast<std::size_t>(b));
}

/// Splits a full codeword (index block then payload) for a data length n.
inline Word knuth_decode(const Word& codeword, std::size_t n) {
    const std::size_t p = knuth_index_length(n);
    detail::require(codeword.size() == n + p, "codeword length does not match n + p");
    return knuth_decode(BalancedEncoding{codeword.substr(p, n), codeword.prefix(p)});
}

}  // namespace wmu
