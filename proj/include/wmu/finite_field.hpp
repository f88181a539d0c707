#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "word.hpp"

namespace wmu {

/**
 * GF(2) or GF(4) with elements labelled 0, 1, omega = 2, omega + 1 = 3.
 * Addition is XOR of the 2-bit labels; multiplication uses omega^2 = omega + 1.
 */
class FiniteField {
public:
    explicit FiniteField(unsigned q) : q_(q) {
        detail::require(is_supported_alphabet(q), "only GF(2) and GF(4) are supported");
    }

    unsigned order() const noexcept { return q_; }

    Symbol add(Symbol a, Symbol b) const { return static_cast<Symbol>(a ^ b); }
    Symbol sub(Symbol a, Symbol b) const { return add(a, b); }
    Symbol mul(Symbol a, Symbol b) const { return mul_table[a][b]; }
    Symbol inv(Symbol a) const {
        detail::require(a != 0, "zero has no inverse");
        return inv_table[a];
    }

    friend bool operator==(const FiniteField&, const FiniteField&) = default;

private:
    // rows: 0, 1, w, w+1
    static constexpr std::array<std::array<Symbol, 4>, 4> mul_table{{
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    }};
    static constexpr std::array<Symbol, 4> inv_table{0, 1, 3, 2};

    unsigned q_;
};

/// Polynomial over a FiniteField, coefficients low degree first, no trailing zeros.
using Poly = std::vector<Symbol>;

namespace poly {

inline Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// Degree, or -1 for the zero polynomial.
inline long degree(const Poly& p) { return static_cast<long>(trimmed(p).size()) - 1; }

inline Poly add(const FiniteField& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    return trimmed(std::move(r));
}

inline Poly mul(const FiniteField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    return trimmed(std::move(r));
}

/// Long division: returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(const FiniteField& f, const Poly& num, const Poly& den) {
    Poly d = trimmed(den);
    detail::require(!d.empty(), "division by the zero polynomial");
    Poly r = trimmed(num);
    if (r.size() < d.size()) return {{}, r};
    Poly quot(r.size() - d.size() + 1, 0);
    const Symbol lead_inv = f.inv(d.back());
    while (!r.empty() && r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const Symbol c = f.mul(r.back(), lead_inv);
        quot[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, d[i]));
        r = trimmed(std::move(r));
    }
    return {trimmed(std::move(quot)), r};
}

inline bool divides(const FiniteField& f, const Poly& d, const Poly& p) { return divmod(f, p, d).second.empty(); }

/// x^n - 1 (equal to x^n + 1 in characteristic 2).
inline Poly x_pow_minus_one(std::size_t n) {
    if (n == 0) return {};
    Poly p(n + 1, 0);
    p[0] = 1;
    p[n] = 1;
    return p;
}

/// 1 + x + ... + x^(n-1).
inline Poly all_ones(std::size_t n) { return Poly(n, 1); }

/// Parses "c0,c1,...,cd" (low degree first).
inline Poly parse(const std::string& text, unsigned q) {
    Poly p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        detail::require(item.size() == 1 && item[0] >= '0' && item[0] < static_cast<char>('0' + q),
                        "invalid polynomial coefficient '" + item + "'");
        p.push_back(static_cast<Symbol>(item[0] - '0'));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

}  // namespace poly
}  // namespace wmu
