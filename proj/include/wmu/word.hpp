#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wmu {

using Symbol = std::uint8_t;

/// Quaternary symbols use the GF(4) labelling 0, 1, omega = 2, omega + 1 = 3.
inline constexpr Symbol omega = 2;

inline bool is_supported_alphabet(unsigned q) { return q == 2 || q == 4; }

/**
 * Fixed-length sequence over an alphabet of size q in {2, 4}.
 *
 * Words are immutable values. Slicing and concatenation return new words.
 * The empty word is legal and is the identity for concatenation.
 */
class Word {
public:
    Word() = default;

    Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
        detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
        for (Symbol s : symbols_)
            detail::require(s < q, "symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q));
    }

    /// Parses digits such as "0110". Whitespace is not accepted.
    static Word from_string(std::string_view digits, unsigned q = 2) {
        std::vector<Symbol> symbols;
        symbols.reserve(digits.size());
        for (char c : digits) {
            detail::require(c >= '0' && c <= '9', std::string("invalid symbol '") + c + "'");
            symbols.push_back(static_cast<Symbol>(c - '0'));
        }
        return Word(std::move(symbols), q);
    }

    static Word zeros(std::size_t n, unsigned q = 2) { return Word(std::vector<Symbol>(n, 0), q); }
    static Word ones(std::size_t n, unsigned q = 2) { return Word(std::vector<Symbol>(n, 1), q); }

    /// Unit vector with a one in position `pos` (0-based).
    static Word unit(std::size_t n, std::size_t pos, unsigned q = 2) {
        std::vector<Symbol> s(n, 0);
        detail::require(pos < n, "unit position out of range");
        s[pos] = 1;
        return Word(std::move(s), q);
    }

    unsigned q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    Word substr(std::size_t pos, std::size_t len) const {
        detail::require(pos + len <= size(), "substring out of range");
        return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len), q_);
    }
    Word prefix(std::size_t len) const { return substr(0, len); }
    Word suffix(std::size_t len) const { return substr(size() - std::min(len, size()), len); }

    std::string to_string() const {
        std::string out;
        out.reserve(size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    /// Lexicographic on symbols; words of different alphabets order by q last.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.q_ <=> b.q_;
    }
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Symbol> symbols_;
    unsigned q_ = 2;
};

inline Word concat(const Word& a, const Word& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    detail::require(a.q() == b.q(), "cannot concatenate words over different alphabets");
    std::vector<Symbol> s(a.begin(), a.end());
    s.insert(s.end(), b.begin(), b.end());
    return Word(std::move(s), a.q());
}

inline std::size_t hamming_distance(const Word& a, const Word& b) {
    detail::require(a.size() == b.size(), "hamming_distance: length mismatch");
    detail::require(a.q() == b.q(), "hamming_distance: alphabet mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Number of nonzero symbols.
inline std::size_t weight(const Word& a) {
    return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](Symbol s) { return s != 0; }));
}

/// |#ones - #zeros| of a binary word.
inline std::size_t binary_disbalance(const Word& a) {
    detail::require(a.q() == 2, "binary_disbalance needs a binary word");
    const std::size_t ones = weight(a);
    const std::size_t zeros = a.size() - ones;
    return ones > zeros ? ones - zeros : zeros - ones;
}

inline bool is_balanced(const Word& a) { return binary_disbalance(a) == 0; }

// ---------------------------------------------------------------------------
// DNA words

/// Word over {A, T, C, G}.
class DnaWord {
public:
    DnaWord() = default;

    explicit DnaWord(std::string letters) : letters_(std::move(letters)) {
        for (char c : letters_)
            detail::require(c == 'A' || c == 'C' || c == 'G' || c == 'T',
                            std::string("invalid nucleotide '") + c + "'");
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    const std::string& str() const noexcept { return letters_; }

    DnaWord substr(std::size_t pos, std::size_t len) const {
        detail::require(pos + len <= size(), "substring out of range");
        return DnaWord(letters_.substr(pos, len));
    }

    friend DnaWord concat(const DnaWord& a, const DnaWord& b) { return DnaWord(a.letters_ + b.letters_); }
    friend auto operator<=>(const DnaWord&, const DnaWord&) = default;

private:
    std::string letters_;
};

inline std::size_t hamming_distance(const DnaWord& a, const DnaWord& b) {
    detail::require(a.size() == b.size(), "hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Number of G and C letters.
inline std::size_t gc_count(const DnaWord& c) {
    return static_cast<std::size_t>(std::count_if(c.str().begin(), c.str().end(),
                                                  [](char x) { return x == 'G' || x == 'C'; }));
}

/// |#{G,C} - #{A,T}|; zero iff the word is GC-balanced.
inline std::size_t gc_disbalance(const DnaWord& c) {
    const std::size_t gc = gc_count(c);
    const std::size_t at = c.size() - gc;
    return gc > at ? gc - at : at - gc;
}

/**
 * Pair map Psi: position-wise (0,0)->A, (0,1)->C, (1,0)->T, (1,1)->G.
 *
 * The number of G/C letters of psi_map(a, b) equals the weight of b, and
 * psi_map(a, b) psi_map(c, d) == psi_map(ac, bd).
 */
inline DnaWord psi_map(const Word& a, const Word& b) {
    detail::require(a.q() == 2 && b.q() == 2, "psi_map needs binary words");
    detail::require(a.size() == b.size(), "psi_map: length mismatch");
    static constexpr char table[2][2] = {{'A', 'C'}, {'T', 'G'}};
    std::string out(a.size(), 'A');
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = table[a[i]][b[i]];
    return DnaWord(std::move(out));
}

inline std::pair<Word, Word> psi_inverse(const DnaWord& c) {
    std::vector<Symbol> a(c.size()), b(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        switch (c[i]) {
            case 'A': a[i] = 0; b[i] = 0; break;
            case 'C': a[i] = 0; b[i] = 1; break;
            case 'T': a[i] = 1; b[i] = 0; break;
            case 'G': a[i] = 1; b[i] = 1; break;
        }
    }
    return {Word(std::move(a), 2), Word(std::move(b), 2)};
}

/// Field map 0->A, 1->C, omega->T, omega+1->G from GF(4) words to DNA.
inline DnaWord field_to_dna(const Word& w) {
    detail::require(w.q() == 4, "field_to_dna needs a quaternary word");
    static constexpr char letters[4] = {'A', 'C', 'T', 'G'};
    std::string out(w.size(), 'A');
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = letters[w[i]];
    return DnaWord(std::move(out));
}

/// Inverse of field_to_dna.
inline Word dna_to_field(const DnaWord& c) {
    std::vector<Symbol> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        switch (c[i]) {
            case 'A': s[i] = 0; break;
            case 'C': s[i] = 1; break;
            case 'T': s[i] = omega; break;
            case 'G': s[i] = omega + 1; break;
        }
    }
    return Word(std::move(s), 4);
}

/// GC disbalance of a quaternary word read through the field map.
inline std::size_t gc_disbalance(const Word& w) { return gc_disbalance(field_to_dna(w)); }

}  // namespace wmu
