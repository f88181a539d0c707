#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "word.hpp"

namespace wmu {

/// Properties a codebook claims about itself. They are advisory until a
/// verifier checks them.
struct Claims {
    std::optional<std::size_t> k;
    std::optional<std::size_t> d;
    std::optional<bool> balanced;
    std::optional<bool> gc_balanced;

    friend bool operator==(const Claims&, const Claims&) = default;
};

/**
 * Finite set of equal-length words over one alphabet.
 *
 * Words are kept in canonical lexicographic order, so two codebooks holding the
 * same set compare equal and serialize identically. Duplicates are rejected.
 */
class Codebook {
public:
    Codebook(std::size_t n, unsigned q) : n_(n), q_(q) {
        detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
    }

    Codebook(std::size_t n, unsigned q, std::vector<Word> words, Claims claims = {})
        : words_(std::move(words)), claims_(claims), n_(n), q_(q) {
        detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
        for (const Word& w : words_) {
            detail::require(w.size() == n, "codeword " + w.to_string() + " has length " +
                                               std::to_string(w.size()) + ", expected " + std::to_string(n));
            detail::require(w.q() == q, "codeword alphabet mismatch");
        }
        std::sort(words_.begin(), words_.end());
        auto dup = std::adjacent_find(words_.begin(), words_.end());
        detail::require(dup == words_.end(), "duplicate codeword " + (dup == words_.end() ? "" : dup->to_string()));
    }

    /// Builds a quaternary codebook from DNA words via the field map.
    static Codebook from_dna(std::size_t n, const std::vector<DnaWord>& words, Claims claims = {}) {
        std::vector<Word> w;
        w.reserve(words.size());
        for (const auto& c : words) w.push_back(dna_to_field(c));
        return Codebook(n, 4, std::move(w), claims);
    }

    std::size_t n() const noexcept { return n_; }
    unsigned q() const noexcept { return q_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

    const Claims& claims() const noexcept { return claims_; }
    Codebook with_claims(Claims c) const {
        Codebook out = *this;
        out.claims_ = c;
        return out;
    }

    std::vector<DnaWord> to_dna() const {
        std::vector<DnaWord> out;
        out.reserve(size());
        for (const Word& w : words_) out.push_back(field_to_dna(w));
        return out;
    }

    /// Equality compares the word sets and parameters, not the claims.
    friend bool operator==(const Codebook& a, const Codebook& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.words_ == b.words_;
    }

private:
    std::vector<Word> words_;
    Claims claims_;
    std::size_t n_;
    unsigned q_;
};

/// Every word of length n over F_q, in lexicographic order.
inline Codebook full_space(std::size_t n, unsigned q = 2) {
    detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
    std::vector<Word> words;
    std::vector<Symbol> cur(n, 0);
    while (true) {
        words.emplace_back(cur, q);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == q - 1) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return Codebook(n, q, std::move(words));
}

}  // namespace wmu
