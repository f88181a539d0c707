#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "finite_field.hpp"

namespace wmu {

inline constexpr std::uint64_t enumeration_guard = std::uint64_t{1} << 20;

namespace detail {

/// Rank of a list of vectors over the field, by Gaussian elimination.
inline std::size_t rank(const FiniteField& f, std::vector<std::vector<Symbol>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        const Symbol inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Symbol factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    return r;
}

inline void check_enumeration_guard(unsigned q, std::size_t dimension) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        total *= q;
        if (total > enumeration_guard)
            throw guard_exceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(dimension) +
                                 " codewords exceeds the 2^20 guard");
    }
}

/// All linear combinations of `rows` with coefficients in message order.
inline Codebook span_of(const FiniteField& f, std::size_t n, const std::vector<Word>& rows) {
    const unsigned q = f.order();
    check_enumeration_guard(q, rows.size());
    std::vector<Word> words;
    std::vector<Symbol> msg(rows.size(), 0);
    while (true) {
        std::vector<Symbol> cw(n, 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (msg[r] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(msg[r], rows[r][j]));
        }
        words.emplace_back(std::move(cw), q);
        std::size_t i = msg.size();
        while (i > 0 && msg[i - 1] == q - 1) msg[--i] = 0;
        if (i == 0) break;
        ++msg[i - 1];
    }
    return Codebook(n, q, std::move(words));
}

}  // namespace detail

/// Linear code given by a generator matrix with linearly independent rows.
class GeneratorMatrixCode {
public:
    GeneratorMatrixCode(FiniteField field, std::size_t length, std::vector<Word> rows)
        : field_(field), rows_(std::move(rows)), length_(length) {
        std::vector<std::vector<Symbol>> m;
        for (const Word& r : rows_) {
            detail::require(r.size() == length_, "generator row has the wrong length");
            detail::require(r.q() == field_.order(), "generator row alphabet differs from the field");
            m.emplace_back(r.begin(), r.end());
        }
        detail::require(detail::rank(field_, m) == rows_.size(), "generator rows are linearly dependent");
    }

    const FiniteField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<Word>& rows() const noexcept { return rows_; }

private:
    FiniteField field_;
    std::vector<Word> rows_;
    std::size_t length_;
};

/// Cyclic code of length n generated by g(x), which must divide x^n - 1.
class CyclicCode {
public:
    CyclicCode(FiniteField field, std::size_t length, Poly generator)
        : field_(field), g_(poly::trimmed(std::move(generator))), length_(length) {
        detail::require(length_ >= 1, "cyclic code length must be positive");
        detail::require(!g_.empty(), "generator polynomial must be nonzero");
        for (Symbol c : g_) detail::require(c < field_.order(), "generator coefficient outside the field");
        detail::require(poly::divides(field_, g_, poly::x_pow_minus_one(length_)),
                        "generator polynomial does not divide x^" + std::to_string(length_) + " - 1");
    }

    const FiniteField& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return length_; }
    const Poly& generator() const noexcept { return g_; }
    std::size_t dimension() const noexcept { return length_ - static_cast<std::size_t>(poly::degree(g_)); }

    /// Rows x^i g(x), i < dimension.
    GeneratorMatrixCode generator_matrix() const {
        std::vector<Word> rows;
        for (std::size_t i = 0; i < dimension(); ++i) {
            std::vector<Symbol> r(length_, 0);
            for (std::size_t j = 0; j < g_.size(); ++j) r[i + j] = g_[j];
            rows.emplace_back(std::move(r), field_.order());
        }
        return GeneratorMatrixCode(field_, length_, std::move(rows));
    }

private:
    FiniteField field_;
    Poly g_;
    std::size_t length_;
};

inline Codebook enumerate_codewords(const GeneratorMatrixCode& code) {
    return detail::span_of(code.field(), code.length(), code.rows());
}

inline Codebook enumerate_codewords(const CyclicCode& code) { return enumerate_codewords(code.generator_matrix()); }

/// Minimum weight over nonzero codewords (the minimum distance of a linear code);
/// 0 for the zero code.
inline std::size_t min_distance(const Codebook& linear_code_words) {
    std::size_t best = 0;
    for (const Word& w : linear_code_words) {
        const std::size_t wt = weight(w);
        if (wt != 0 && (best == 0 || wt < best)) best = wt;
    }
    return best;
}

inline std::size_t min_distance(const GeneratorMatrixCode& code) { return min_distance(enumerate_codewords(code)); }
inline std::size_t min_distance(const CyclicCode& code) { return min_distance(enumerate_codewords(code)); }

/// Longest contiguous (non-wraparound) run of zeros over all nonzero codewords.
inline std::size_t max_zero_run(const CyclicCode& code) {
    detail::require(code.dimension() >= 1, "max_zero_run needs a code of dimension >= 1");
    std::size_t best = 0;
    for (const Word& w : enumerate_codewords(code)) {
        if (weight(w) == 0) continue;
        std::size_t run = 0;
        for (Symbol s : w) {
            run = s == 0 ? run + 1 : 0;
            best = std::max(best, run);
        }
    }
    return best;
}

/// {w + e : w in c} under field addition.
inline Codebook coset_shift(const Codebook& c, const Word& e) {
    detail::require(e.size() == c.n(), "coset_shift: shift length differs from code length");
    detail::require(e.q() == c.q(), "coset_shift: shift alphabet differs from the code");
    const FiniteField f(c.q());
    std::vector<Word> out;
    out.reserve(c.size());
    for (const Word& w : c) {
        std::vector<Symbol> s(w.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = f.add(w[i], e[i]);
        out.emplace_back(std::move(s), c.q());
    }
    return Codebook(c.n(), c.q(), std::move(out));
}

/// True iff the all-ones word is a codeword, i.e. g(x) divides 1 + x + ... + x^(n-1).
inline bool contains_all_ones(const CyclicCode& code) {
    return poly::divides(code.field(), code.generator(), poly::all_ones(code.length()));
}

/// Every generator polynomial (monic divisor of x^n - 1) of a cyclic code of length n,
/// by exhaustive trial division. Includes 1 (whole space) and x^n - 1 (zero code).
inline std::vector<Poly> cyclic_generators(const FiniteField& f, std::size_t n) {
    detail::require(n >= 1, "length must be positive");
    detail::check_enumeration_guard(f.order(), n);
    const Poly target = poly::x_pow_minus_one(n);
    std::vector<Poly> out;
    for (std::size_t deg = 0; deg <= n; ++deg) {
        // lower coefficients range over F_q^deg, leading coefficient 1
        std::vector<Symbol> low(deg, 0);
        while (true) {
            Poly p(low);
            p.push_back(1);
            if (poly::divides(f, p, target)) out.push_back(p);
            std::size_t i = low.size();
            while (i > 0 && low[i - 1] == f.order() - 1) low[--i] = 0;
            if (i == 0) break;
            ++low[i - 1];
        }
    }
    return out;
}

// Standard small codes ------------------------------------------------------

inline GeneratorMatrixCode repetition_code(std::size_t n, unsigned q = 2) {
    return GeneratorMatrixCode(FiniteField(q), n, {Word::ones(n, q)});
}

/// Binary even-weight code [n, n-1, 2].
inline GeneratorMatrixCode parity_check_code(std::size_t n) {
    detail::require(n >= 2, "parity code needs n >= 2");
    std::vector<Word> rows;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Symbol> r(n, 0);
        r[i] = 1;
        r[n - 1] = 1;
        rows.emplace_back(std::move(r), 2);
    }
    return GeneratorMatrixCode(FiniteField(2), n, std::move(rows));
}

/// Whole space F_q^n as an [n, n, 1] code.
inline GeneratorMatrixCode full_space_code(std::size_t n, unsigned q = 2) {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Word::unit(n, i, q));
    return GeneratorMatrixCode(FiniteField(q), n, std::move(rows));
}

/// Binary cyclic Hamming code [7, 4, 3] with g(x) = 1 + x + x^3.
inline CyclicCode hamming_7_4() { return CyclicCode(FiniteField(2), 7, {1, 1, 0, 1}); }

/// GF(4) repetition code of length n as a cyclic code, g(x) = 1 + x + ... + x^(n-1).
inline CyclicCode quaternary_repetition_cyclic(std::size_t n) {
    return CyclicCode(FiniteField(4), n, poly::all_ones(n));
}

}  // namespace wmu
