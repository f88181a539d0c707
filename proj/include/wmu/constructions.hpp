#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balancing.hpp"
#include "codebook.hpp"
#include "linear_code.hpp"
#include "verifier.hpp"

namespace wmu {

namespace detail {

inline void certify_k_wmu(const Codebook& c, std::size_t k, const std::string& what) {
    if (c.n() == 0) return;
    if (auto bad = find_correlation(c, k))
        throw certification_error(what + ": prefix of " + c[bad->prefix_of].to_string() + " of length " +
                                  std::to_string(bad->length) + " is a suffix of " + c[bad->suffix_of].to_string() +
                                  " (k = " + std::to_string(k) + ")");
}

inline void check_output_guard(std::uint64_t count) {
    if (count > enumeration_guard)
        throw guard_exceeded("construction would emit " + std::to_string(count) + " words, above the 2^20 guard");
}

inline std::optional<std::size_t> distance_or_none(const Codebook& c) {
    if (c.size() < 2) return std::nullopt;
    return code_min_distance(c);
}

inline std::optional<std::size_t> min_of(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace detail

// Dyck-based MU codes -------------------------------------------------------------

/// Dyck words of length 2 n_half (1 = up step) whose height never exceeds `height`.
inline Codebook dyck_words(std::size_t n_half, std::optional<std::size_t> height = std::nullopt) {
    detail::require(n_half >= 1, "dyck_words needs n_half >= 1");
    detail::require(!height || *height >= 1, "Dyck height bound must be at least 1");
    const std::size_t n = 2 * n_half;
    const std::size_t cap = height.value_or(n_half);
    std::vector<Word> out;
    std::vector<Symbol> cur;
    cur.reserve(n);
    auto rec = [&](auto&& self, std::size_t ups, std::size_t downs) -> void {
        if (cur.size() == n) {
            out.emplace_back(cur, 2);
            detail::check_output_guard(out.size());
            return;
        }
        const std::size_t h = ups - downs;
        if (h > 0) {
            cur.push_back(0);
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < n_half && h < cap) {
            cur.push_back(1);
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return Codebook(n, 2, std::move(out));
}

/// {1 a : a a bounded Dyck word}: an MU code of odd length whose words all have disbalance 1.
inline Codebook dyck_mu_code(std::size_t n_half, std::optional<std::size_t> height = std::nullopt) {
    const Codebook dyck = dyck_words(n_half, height);
    std::vector<Word> out;
    out.reserve(dyck.size());
    const Word one = Word::ones(1);
    for (const Word& a : dyck) out.push_back(concat(one, a));
    Claims claims;
    claims.k = 1;
    Codebook c(2 * n_half + 1, 2, std::move(out), claims);
    detail::certify_k_wmu(c, 1, "dyck_mu_code");
    return c;
}

// Zero-run MU codes -----------------------------------------------------------------

/**
 * Words 0^l a_{l+1} ... a_n with a_{l+1} != 0, a_n != 0 and no run of l zeros
 * inside positions l+2 .. n-1.
 */
inline Codebook levenshtein_mu_code(std::size_t n, std::size_t ell, unsigned q = 2) {
    detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
    detail::require(ell >= 1 && ell + 2 <= n, "levenshtein_mu_code needs 1 <= l and n >= l + 2");
    std::vector<Word> out;
    std::vector<Symbol> cur(n, 0);
    // positions are 0-based here: zeros at [0, ell), nonzero at ell and n-1, interior (ell, n-1)
    auto rec = [&](auto&& self, std::size_t pos, std::size_t run) -> void {
        if (pos == n - 1) {
            for (unsigned last = 1; last < q; ++last) {
                cur[pos] = static_cast<Symbol>(last);
                out.emplace_back(cur, q);
                detail::check_output_guard(out.size());
            }
            return;
        }
        for (unsigned s = 0; s < q; ++s) {
            if (s == 0 && run + 1 >= ell) continue;
            cur[pos] = static_cast<Symbol>(s);
            self(self, pos + 1, s == 0 ? run + 1 : 0);
        }
    };
    for (unsigned lead = 1; lead < q; ++lead) {
        cur[ell] = static_cast<Symbol>(lead);
        rec(rec, ell + 1, 0);
    }
    Claims claims;
    claims.k = 1;
    Codebook c(n, q, std::move(out), claims);
    detail::certify_k_wmu(c, 1, "levenshtein_mu_code");
    return c;
}

/// Writes each inner word b as 0^l 1 chunk_1 1 chunk_2 1 ... chunk_t 1 with chunks of length l-1.
inline Codebook parsing_ec_mu_code(const Codebook& inner, std::size_t ell, std::size_t t) {
    detail::require(ell >= 2 && t >= 1, "parsing_ec_mu_code needs l >= 2 and t >= 1");
    detail::require(inner.n() == t * (ell - 1), "inner code length " + std::to_string(inner.n()) +
                                                    " differs from t(l-1) = " + std::to_string(t * (ell - 1)));
    const std::size_t n = (t + 1) * ell + 1;
    const unsigned q = inner.q();
    std::vector<Word> out;
    out.reserve(inner.size());
    for (const Word& b : inner) {
        std::vector<Symbol> s(ell, 0);
        s.push_back(1);
        for (std::size_t i = 0; i < t; ++i) {
            const auto chunk = b.symbols().subspan(i * (ell - 1), ell - 1);
            s.insert(s.end(), chunk.begin(), chunk.end());
            s.push_back(1);
        }
        out.emplace_back(std::move(s), q);
    }
    Claims claims;
    claims.k = 1;
    claims.d = detail::distance_or_none(inner);
    Codebook c(n, q, std::move(out), claims);
    detail::certify_k_wmu(c, 1, "parsing_ec_mu_code");
    return c;
}

inline Codebook parsing_ec_mu_code(const GeneratorMatrixCode& inner, std::size_t ell, std::size_t t) {
    return parsing_ec_mu_code(enumerate_codewords(inner), ell, t);
}

inline Codebook parsing_ec_mu_code(const CyclicCode& inner, std::size_t ell, std::size_t t) {
    return parsing_ec_mu_code(enumerate_codewords(inner), ell, t);
}

// Concatenation with an MU core -----------------------------------------------------

/// {a b : a in prefix_set, b in mu_core}; k-WMU with k = |a| + 1.
inline Codebook wmu_concat(const Codebook& prefix_set, const Codebook& mu_core) {
    detail::require(prefix_set.q() == mu_core.q(), "prefix set and core use different alphabets");
    if (!is_mu_code(mu_core)) throw certification_error("wmu_concat: core code is not MU");
    const std::size_t k = prefix_set.n() + 1;
    detail::check_output_guard(static_cast<std::uint64_t>(prefix_set.size()) * mu_core.size());
    std::vector<Word> out;
    out.reserve(prefix_set.size() * mu_core.size());
    for (const Word& a : prefix_set)
        for (const Word& b : mu_core) out.push_back(concat(a, b));
    Claims claims;
    claims.k = k;
    Codebook c(prefix_set.n() + mu_core.n(), mu_core.q(), std::move(out), claims);
    detail::certify_k_wmu(c, k, "wmu_concat");
    return c;
}

// Psi-based DNA constructions ----------------------------------------------------------

namespace detail {

/// {Psi(u, v) : u in first, v in second} as a quaternary codebook (field labels).
inline Codebook psi_product(const std::vector<Word>& first, const Codebook& second, Claims claims) {
    check_output_guard(static_cast<std::uint64_t>(first.size()) * second.size());
    std::vector<Word> out;
    out.reserve(first.size() * second.size());
    for (const Word& u : first)
        for (const Word& v : second) out.push_back(dna_to_field(psi_map(u, v)));
    return Codebook(second.n(), 4, std::move(out), claims);
}

inline void require_binary(const Codebook& c, const char* name) {
    require(c.q() == 2, std::string(name) + " must be binary");
}

}  // namespace detail

/**
 * Psi(u v, w) for u in c1 (length k-1), v in c2 (MU, length n-k+1), w in c3 (length n).
 * The first argument set is k-WMU, so the DNA code is k-WMU with distance at
 * least the smallest component distance.
 */
inline Codebook decoupled_ec_wmu(const Codebook& c1, const Codebook& c2, const Codebook& c3) {
    detail::require_binary(c1, "c1");
    detail::require_binary(c2, "c2");
    detail::require_binary(c3, "c3");
    detail::require(c1.n() + c2.n() == c3.n(), "component lengths do not satisfy (k-1) + m = n");
    if (!is_mu_code(c2)) throw certification_error("decoupled_ec_wmu: c2 is not MU");
    const std::size_t k = c1.n() + 1;
    std::vector<Word> first;
    first.reserve(c1.size() * c2.size());
    for (const Word& u : c1)
        for (const Word& v : c2) first.push_back(concat(u, v));
    Claims claims;
    claims.k = k;
    claims.d = detail::min_of(detail::min_of(detail::distance_or_none(c1), detail::distance_or_none(c2)),
                              detail::distance_or_none(c3));
    if (is_balanced_code(c3)) claims.gc_balanced = true;
    Codebook c = detail::psi_product(first, c3, claims);
    detail::certify_k_wmu(c, k, "decoupled_ec_wmu");
    return c;
}

/// Psi(u, v) for u in a k-WMU code c1 and v in a balanced code c2: GC-balanced and k-WMU.
inline Codebook balanced_wmu(const Codebook& c1, const Codebook& c2, std::size_t k) {
    detail::require_binary(c1, "c1");
    detail::require_binary(c2, "c2");
    detail::require(c1.n() == c2.n(), "c1 and c2 lengths differ");
    detail::require(c2.n() % 2 == 0, "balanced words need even length");
    detail::require(is_balanced_code(c2), "c2 contains an unbalanced word");
    detail::require(k >= 1 && k <= c1.n(), "k must satisfy 1 <= k <= n");
    if (!is_k_wmu_code(c1, k)) throw certification_error("balanced_wmu: c1 is not " + std::to_string(k) + "-WMU");
    Claims claims;
    claims.k = k;
    claims.gc_balanced = true;
    Codebook c = detail::psi_product(c1.words(), c2, claims);
    detail::certify_k_wmu(c, k, "balanced_wmu");
    return c;
}

/// Decoupled construction with a balanced third component: k-WMU, GC-balanced, distance >= d.
inline Codebook balanced_ec_wmu(const Codebook& c1, const Codebook& c2, const Codebook& c3) {
    detail::require(c3.n() % 2 == 0, "balanced words need even length");
    detail::require(is_balanced_code(c3), "c3 contains an unbalanced word");
    return decoupled_ec_wmu(c1, c2, c3);
}

/**
 * Psi(x, y) with x ranging over all of {0,1}^n and y over
 * (balanced words of length k-1) . dyck_mu_code((n-k)/2, D).
 * The Dyck block has disbalance one, so every word has GC disbalance at most one.
 */
inline Codebook near_balanced_wmu(std::size_t n, std::size_t k, std::optional<std::size_t> height = std::nullopt) {
    detail::require(k >= 3 && k <= n, "near_balanced_wmu needs 3 <= k <= n");
    detail::require((k - 1) % 2 == 0, "k - 1 must be even");
    detail::require(n > k && (n - k) % 2 == 0, "n - k must be even and positive");
    const Codebook second = wmu_concat(balanced_words(k - 1), dyck_mu_code((n - k) / 2, height));
    const Codebook first = full_space(n, 2);
    Claims claims;
    claims.k = k;
    // Psi(first, second): the second argument carries the GC content
    detail::check_output_guard(static_cast<std::uint64_t>(first.size()) * second.size());
    std::vector<Word> out;
    out.reserve(first.size() * second.size());
    for (const Word& x : first)
        for (const Word& y : second) out.push_back(dna_to_field(psi_map(x, y)));
    Codebook c(n, 4, std::move(out), claims);
    detail::certify_k_wmu(c, k, "near_balanced_wmu");
    return c;
}

// Cyclic-code constructions -------------------------------------------------------------

/// Codewords of a cyclic code shifted by e = 10...0: a (dim+1)-WMU code with the same distance.
inline Codebook cyclic_coset_wmu(const CyclicCode& code) {
    detail::require(code.dimension() >= 1, "cyclic_coset_wmu needs dimension >= 1");
    const Codebook words = enumerate_codewords(code);
    const std::size_t k = code.dimension() + 1;
    Claims claims;
    claims.k = std::min(k, code.length());
    claims.d = detail::distance_or_none(words);
    Codebook c = coset_shift(words, Word::unit(code.length(), 0, code.field().order())).with_claims(claims);
    detail::certify_k_wmu(c, *claims.k, "cyclic_coset_wmu");
    return c;
}

/// {(c + e, c + 1 + e) : c in code} over GF(4), uncertified. GC-balanced with
/// distance twice the code distance; carries no WMU claim.
inline Codebook gc_balanced_cyclic_words(const CyclicCode& code) {
    detail::require(code.field().order() == 4, "gc_balanced_cyclic_wmu needs a code over GF(4)");
    detail::require(code.dimension() >= 1, "gc_balanced_cyclic_wmu needs dimension >= 1");
    if (!contains_all_ones(code)) throw precondition_error("the all-ones word is not a codeword");
    const std::size_t n = code.length();
    const Codebook words = enumerate_codewords(code);
    const FiniteField f(4);
    std::vector<Word> out;
    out.reserve(words.size());
    for (const Word& w : words) {
        std::vector<Symbol> s(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const Symbol e = i == 0 ? 1 : 0;
            s[i] = f.add(w[i], e);
            s[n + i] = f.add(f.add(w[i], 1), e);
        }
        out.emplace_back(std::move(s), 4);
    }
    Claims claims;
    claims.gc_balanced = true;
    if (auto d = detail::distance_or_none(words)) claims.d = 2 * *d;
    return Codebook(2 * n, 4, std::move(out), claims);
}

/// The same set claimed (dim+1)-WMU. Since 1 is a codeword, c + e opens the word
/// built from c + 1 and closes the word built from c, so a length-n overlap always
/// exists and certification throws with that witness.
inline Codebook gc_balanced_cyclic_wmu(const CyclicCode& code) {
    const Codebook raw = gc_balanced_cyclic_words(code);
    Claims claims = raw.claims();
    claims.k = std::min(code.dimension() + 1, raw.n());
    Codebook c = raw.with_claims(claims);
    detail::certify_k_wmu(c, *claims.k, "gc_balanced_cyclic_wmu");
    return c;
}

// Concatenated construction ---------------------------------------------------------------

/// First r in 1..m-1 for which no i <= r has blocks[i] and blocks[m-r+i] disjoint (1-based).
inline std::optional<std::size_t> concatenation_violation(const std::vector<Codebook>& blocks) {
    const std::size_t m = blocks.size();
    auto disjoint = [&](std::size_t a, std::size_t b) {
        for (const Word& w : blocks[a - 1])
            if (blocks[b - 1].contains(w)) return false;
        return true;
    };
    for (std::size_t r = 1; r < m; ++r) {
        bool ok = false;
        for (std::size_t i = 1; i <= r && !ok; ++i) ok = disjoint(i, m - r + i);
        if (!ok) return r;
    }
    return std::nullopt;
}

/**
 * {a_1 ... a_m : a_i in blocks[i]} for subsets of a k-WMU code c0.
 * Balance and the distance bound of c0 carry over.
 */
inline Codebook concatenated_wmu(const Codebook& c0, std::size_t k, const std::vector<Codebook>& blocks) {
    detail::require(!blocks.empty(), "concatenated_wmu needs at least one block");
    detail::require(k >= 1 && k <= std::max<std::size_t>(c0.n(), 1), "k must satisfy 1 <= k <= s");
    if (!is_k_wmu_code(c0, k)) throw certification_error("concatenated_wmu: c0 is not " + std::to_string(k) + "-WMU");
    std::uint64_t total = 1;
    for (const Codebook& b : blocks) {
        detail::require(b.n() == c0.n() && b.q() == c0.q(), "block length or alphabet differs from c0");
        for (const Word& w : b) detail::require(c0.contains(w), "block word " + w.to_string() + " is not in c0");
        total *= b.size();
        detail::check_output_guard(total);
    }
    if (auto r = concatenation_violation(blocks))
        throw precondition_error("intersection condition violated at r = " + std::to_string(*r));

    std::vector<Word> out{Word(std::vector<Symbol>{}, c0.q())};
    for (const Codebook& b : blocks) {
        std::vector<Word> next;
        next.reserve(out.size() * b.size());
        for (const Word& prefix : out)
            for (const Word& w : b) next.push_back(concat(prefix, w));
        out = std::move(next);
    }
    Claims claims;
    claims.k = k;
    claims.d = detail::distance_or_none(c0);
    if (is_balanced_code(c0)) claims.balanced = true;
    Codebook c(c0.n() * blocks.size(), c0.q(), std::move(out), claims);
    detail::certify_k_wmu(c, k, "concatenated_wmu");
    return c;
}

/// Splits c0 (in canonical order) into X = first half and Y = second half and
/// returns the blocks spelled by a pattern such as "XY" or "XXY".
inline std::vector<Codebook> partition_blocks(const Codebook& c0, const std::string& pattern) {
    detail::require(c0.size() >= 2, "partition needs at least two codewords");
    detail::require(!pattern.empty(), "empty block pattern");
    const auto mid = c0.words().begin() + static_cast<std::ptrdiff_t>(c0.size() / 2);
    const Codebook x(c0.n(), c0.q(), std::vector<Word>(c0.words().begin(), mid));
    const Codebook y(c0.n(), c0.q(), std::vector<Word>(mid, c0.words().end()));
    std::vector<Codebook> blocks;
    for (char ch : pattern) {
        detail::require(ch == 'X' || ch == 'Y', std::string("block pattern letter must be X or Y, got '") + ch + "'");
        blocks.push_back(ch == 'X' ? x : y);
    }
    return blocks;
}

}  // namespace wmu
