#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "verifier.hpp"

namespace wmu {

/// Which overlaps are forbidden: all proper overlaps of length >= min_overlap.
/// MU is min_overlap = 1.
struct CorrelationMode {
    std::size_t min_overlap = 1;

    static CorrelationMode mu() { return {1}; }
    static CorrelationMode weak(std::size_t k) { return {k}; }
    bool is_mu() const { return min_overlap == 1; }
};

struct SearchOptions {
    /// Abort with search_limit_exceeded after this many branch nodes; 0 = unlimited.
    std::uint64_t node_limit = 0;
};

struct SearchResult {
    std::size_t max_size = 0;
    Codebook witness{0, 2};
    std::uint64_t nodes_explored = 0;
};

/// Outcome of an exhaustive search for a code strictly larger than a threshold.
/// An empty witness is a proof that no such code exists.
struct ExceedResult {
    std::optional<Codebook> witness;
    std::uint64_t nodes_explored = 0;

    bool exists() const { return witness.has_value(); }
};

/// Instances above this many candidate words are refused.
inline constexpr std::uint64_t search_space_guard = std::uint64_t{1} << 20;
/// Compatibility graphs above this many vertices are refused (bit matrix memory).
inline constexpr std::size_t search_vertex_guard = std::size_t{1} << 14;

/**
 * De Bruijn sequence of order n over {0..q-1}, generated by the
 * Fredricksen-Kessler-Maiorana (Lyndon word) algorithm. Every word of length n
 * appears exactly once as a cyclic window.
 */
inline std::vector<Symbol> de_bruijn_sequence(unsigned q, std::size_t n) {
    std::vector<Symbol> seq;
    if (n == 0) return seq;
    std::vector<Symbol> a(n + 1, 0);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
        if (t > n) {
            if (n % p == 0) seq.insert(seq.end(), a.begin() + 1, a.begin() + static_cast<std::ptrdiff_t>(p) + 1);
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p);
        for (unsigned j = a[t - p] + 1u; j < q; ++j) {
            a[t] = static_cast<Symbol>(j);
            gen(t + 1, t);
        }
    };
    gen(1, 1);
    return seq;
}

namespace detail {

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::vector<std::uint64_t>& raw() { return words_; }
    const std::vector<std::uint64_t>& raw() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
};

/**
 * Branch-and-bound maximum clique on a bit-matrix graph (colour-sorted
 * candidate order, greedy sequential colouring as the bound). The colouring
 * follows the vertex index order, so the caller controls bound quality by
 * how it numbers vertices.
 */
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bitset> adjacency, std::uint64_t node_limit)
        : adj_(std::move(adjacency)), node_limit_(node_limit) {}

    /// Largest clique of size > floor_size, or empty when none exists.
    /// With stop_early, returns the first clique exceeding floor_size.
    std::vector<std::size_t> run(std::size_t floor_size, bool stop_early) {
        best_size_ = floor_size;
        best_.clear();
        stop_early_ = stop_early;
        done_ = false;
        const std::size_t v = adj_.size();
        Bitset all(v);
        for (std::size_t i = 0; i < v; ++i) all.set(i);
        std::vector<std::size_t> current;
        expand(current, all);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(std::vector<std::size_t>& current, Bitset candidates) {
        if (++nodes_ > node_limit_ && node_limit_ != 0)
            throw search_limit_exceeded("max_code_search: node limit of " + std::to_string(node_limit_) +
                                        " reached");
        if (candidates.none()) {
            if (current.size() > best_size_) {
                best_size_ = current.size();
                best_ = current;
                if (stop_early_) done_ = true;
            }
            return;
        }

        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        colour_candidates(candidates, order, colour);

        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (done_ || current.size() + colour[idx] <= best_size_) return;
            const std::size_t v = order[idx];
            Bitset next = candidates;
            auto& nr = next.raw();
            const auto& ar = adj_[v].raw();
            for (std::size_t w = 0; w < nr.size(); ++w) nr[w] &= ar[w];
            current.push_back(v);
            expand(current, std::move(next));
            current.pop_back();
            candidates.reset(v);
        }
    }

    void colour_candidates(const Bitset& candidates, std::vector<std::size_t>& order,
                           std::vector<std::size_t>& colour) const {
        Bitset uncoloured = candidates;
        auto& ur = uncoloured.raw();
        std::size_t c = 0;
        while (!uncoloured.none()) {
            ++c;
            Bitset q = uncoloured;
            auto& qr = q.raw();
            for (std::size_t w = 0; w < qr.size(); ++w) {
                while (qr[w]) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(qr[w]));
                    const std::size_t v = w * 64 + bit;
                    qr[w] &= qr[w] - 1;
                    ur[w] &= ~(std::uint64_t{1} << bit);
                    const auto& ar = adj_[v].raw();
                    for (std::size_t x = w; x < qr.size(); ++x) qr[x] &= ~ar[x];
                    order.push_back(v);
                    colour.push_back(c);
                }
            }
        }
    }

    std::vector<Bitset> adj_;
    std::vector<std::size_t> best_;
    std::size_t best_size_ = 0;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool stop_early_ = false;
    bool done_ = false;
};

/// Candidate words (self-compatible) in de Bruijn order plus their compatibility graph.
struct CompatibilityGraph {
    std::vector<std::uint64_t> values;  // base-q value, first symbol most significant
    std::vector<Bitset> adjacency;
};

inline CompatibilityGraph build_compatibility_graph(std::size_t n, unsigned q, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= q;
        if (total > search_space_guard)
            throw guard_exceeded("max_code_search: q^n exceeds the 2^20 enumeration guard");
    }
    std::vector<std::uint64_t> pow(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) pow[i] = pow[i - 1] * q;

    auto conflicts = [&](std::uint64_t a, std::uint64_t b) {
        for (std::size_t len = k; len < n; ++len)
            if (a / pow[n - len] == b % pow[len]) return true;
        return false;
    };

    // Consecutive windows of a de Bruijn sequence are one-symbol shifts of each
    // other, so runs of n-k+1 consecutive candidates pairwise conflict.
    const auto seq = de_bruijn_sequence(q, n);
    CompatibilityGraph g;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint64_t value = 0;
        for (std::size_t j = 0; j < n; ++j) value = value * q + seq[(i + j) % seq.size()];
        if (!conflicts(value, value)) g.values.push_back(value);
    }
    const std::size_t v = g.values.size();
    if (v > search_vertex_guard)
        throw guard_exceeded("max_code_search: " + std::to_string(v) + " candidate words exceed the graph guard");

    g.adjacency.assign(v, Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (!conflicts(g.values[i], g.values[j]) && !conflicts(g.values[j], g.values[i])) {
                g.adjacency[i].set(j);
                g.adjacency[j].set(i);
            }
    return g;
}

inline Codebook codebook_from_values(const std::vector<std::uint64_t>& values, const std::vector<std::size_t>& picked,
                                     std::size_t n, unsigned q, std::size_t k) {
    std::vector<Word> words;
    for (std::size_t idx : picked) {
        std::vector<Symbol> s(n);
        std::uint64_t x = values[idx];
        for (std::size_t j = n; j-- > 0;) {
            s[j] = static_cast<Symbol>(x % q);
            x /= q;
        }
        words.emplace_back(std::move(s), q);
    }
    Claims claims;
    claims.k = k;
    return Codebook(n, q, std::move(words), claims);
}

inline void check_search_args(std::size_t n, unsigned q, const CorrelationMode& mode) {
    detail::require(is_supported_alphabet(q), "alphabet size must be 2 or 4");
    detail::require(n >= 1, "max_code_search needs n >= 1");
    detail::require(mode.min_overlap >= 1 && mode.min_overlap <= n, "k must satisfy 1 <= k <= n");
}

}  // namespace detail

/**
 * Exact maximum size of an MU or k-WMU code of length n over F_q.
 *
 * Vertices are the self-compatible words, edges join mutually compatible
 * pairs, and a maximum clique is a maximum code. The witness is deterministic
 * (first maximum found under the fixed vertex order).
 */
inline SearchResult max_code_search(std::size_t n, unsigned q, CorrelationMode mode, SearchOptions options = {}) {
    detail::check_search_args(n, q, mode);
    const std::size_t k = mode.min_overlap;
    auto graph = detail::build_compatibility_graph(n, q, k);

    // First-fit clique in vertex order seeds the incumbent.
    std::vector<std::size_t> greedy;
    for (std::size_t v = 0; v < graph.values.size(); ++v) {
        bool ok = true;
        for (std::size_t u : greedy) ok = ok && graph.adjacency[u].test(v);
        if (ok) greedy.push_back(v);
    }

    detail::CliqueSearch search(graph.adjacency, options.node_limit);
    auto improved = search.run(greedy.size(), false);
    const auto& best = improved.empty() ? greedy : improved;

    SearchResult r;
    r.max_size = best.size();
    r.witness = detail::codebook_from_values(graph.values, best, n, q, k);
    r.nodes_explored = search.nodes();
    return r;
}

/**
 * Exhaustive search for a code of size strictly greater than `threshold`.
 * Returns the first such code found, or no witness when the search proves
 * that every code has at most `threshold` words.
 */
inline ExceedResult find_code_larger_than(std::size_t n, unsigned q, CorrelationMode mode, std::size_t threshold,
                                          SearchOptions options = {}) {
    detail::check_search_args(n, q, mode);
    auto graph = detail::build_compatibility_graph(n, q, mode.min_overlap);
    detail::CliqueSearch search(graph.adjacency, options.node_limit);
    auto found = search.run(threshold, true);
    ExceedResult r;
    r.nodes_explored = search.nodes();
    if (!found.empty()) r.witness = detail::codebook_from_values(graph.values, found, n, q, mode.min_overlap);
    return r;
}

}  // namespace wmu
