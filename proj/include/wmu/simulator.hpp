#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "codebook.hpp"
#include "verifier.hpp"

namespace wmu {

/// Identifier of the pseudo-random source recorded in every report.
inline constexpr const char* sim_generator_id = "mt19937_64/splitmix64-per-trial";

struct SimReport {
    std::uint64_t seed = 0;
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::uint64_t ambiguous = 0;
    std::uint64_t collisions = 0;
    std::size_t n = 0;
    unsigned q = 2;
    std::size_t code_size = 0;

    std::string to_key_value() const {
        std::ostringstream os;
        os << "generator=" << sim_generator_id << '\n'
           << "seed=" << seed << '\n'
           << "p=" << std::setprecision(17) << p << '\n'
           << "trials=" << trials << '\n'
           << "successes=" << successes << '\n'
           << "failures=" << failures << '\n'
           << "ambiguous=" << ambiguous << '\n'
           << "collisions=" << collisions << '\n'
           << "n=" << n << '\n'
           << "q=" << q << '\n'
           << "size=" << code_size << '\n';
        return os.str();
    }

    static std::string csv_header() {
        return "generator,seed,p,trials,successes,failures,ambiguous,collisions,n,q,size";
    }

    std::string to_csv_row() const {
        std::ostringstream os;
        os << sim_generator_id << ',' << seed << ',' << std::setprecision(17) << p << ',' << trials << ','
           << successes << ',' << failures << ',' << ambiguous << ',' << collisions << ',' << n << ',' << q << ','
           << code_size;
        return os.str();
    }

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Generator for one trial, derived from (seed, trial) only.
inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

/// Uniform integer in [0, bound) by rejection; identical on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

enum class DecodeOutcome { success, failure, ambiguous };

inline DecodeOutcome nearest_codeword(const Codebook& c, const Word& received, std::size_t sent) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t best_index = 0;
    bool tie = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t dist = hamming_distance(c[i], received);
        if (dist < best) {
            best = dist;
            best_index = i;
            tie = false;
        } else if (dist == best) {
            tie = true;
        }
    }
    if (tie) return DecodeOutcome::ambiguous;
    return best_index == sent ? DecodeOutcome::success : DecodeOutcome::failure;
}

}  // namespace detail

/**
 * q-ary symmetric substitution channel: each symbol is replaced, with
 * probability p, by a uniformly chosen different symbol. Received words are
 * decoded to the nearest codeword; ties count as ambiguous.
 */
inline SimReport run_channel_sim(const Codebook& c, double p, std::uint64_t trials, std::uint64_t seed) {
    detail::require(!c.empty(), "run_channel_sim needs a nonempty codebook");
    detail::require(c.size() >= 2, "run_channel_sim needs at least two codewords");
    detail::require(p >= 0 && p <= 1, "error probability must lie in [0, 1]");
    SimReport r;
    r.seed = seed;
    r.p = p;
    r.trials = trials;
    r.n = c.n();
    r.q = c.q();
    r.code_size = c.size();
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto rng = detail::trial_engine(seed, trial);
        const auto sent = static_cast<std::size_t>(detail::uniform_below(rng, c.size()));
        std::vector<Symbol> s(c[sent].begin(), c[sent].end());
        for (auto& x : s)
            if (detail::uniform_unit(rng) < p)
                x = static_cast<Symbol>((x + 1 + detail::uniform_below(rng, c.q() - 1)) % c.q());
        switch (detail::nearest_codeword(c, Word(std::move(s), c.q()), sent)) {
            case detail::DecodeOutcome::success: ++r.successes; break;
            case detail::DecodeOutcome::failure: ++r.failures; break;
            case detail::DecodeOutcome::ambiguous: ++r.ambiguous; break;
        }
    }
    return r;
}

/// Decoding work above this many (codeword, error pattern) pairs is refused.
inline constexpr std::uint64_t error_pattern_guard = std::uint64_t{1} << 22;

/// True iff every codeword hit by every error pattern of weight <= t decodes uniquely to itself.
inline bool exhaustive_error_check(const Codebook& c, std::size_t t) {
    if (t == 0 || c.size() < 2) return true;
    const std::size_t n = c.n();
    const unsigned q = c.q();
    // sum_{w <= t} C(n, w) (q-1)^w patterns per codeword
    long double patterns = 0;
    for (std::size_t w = 0; w <= std::min(t, n); ++w) {
        long double term = 1;
        for (std::size_t i = 0; i < w; ++i) term = term * static_cast<long double>(n - i) / (i + 1) * (q - 1);
        patterns += term;
    }
    if (patterns * static_cast<long double>(c.size()) > static_cast<long double>(error_pattern_guard))
        throw guard_exceeded("exhaustive_error_check: too many error patterns for the guard");

    for (std::size_t sent = 0; sent < c.size(); ++sent) {
        std::vector<Symbol> s(c[sent].begin(), c[sent].end());
        bool ok = true;
        // depth-first over error positions in increasing order, each with q-1 replacements
        auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
            if (!ok) return;
            if (detail::nearest_codeword(c, Word(s, q), sent) != detail::DecodeOutcome::success) {
                ok = false;
                return;
            }
            if (left == 0) return;
            for (std::size_t pos = start; pos < n && ok; ++pos) {
                const Symbol orig = s[pos];
                for (unsigned delta = 1; delta < q && ok; ++delta) {
                    s[pos] = static_cast<Symbol>((orig + delta) % q);
                    self(self, pos + 1, left - 1);
                }
                s[pos] = orig;
            }
        };
        rec(rec, 0, t);
        if (!ok) return false;
    }
    return true;
}

/**
 * Concatenates `concatenations` random codewords and counts, inside every
 * codeword occurrence, the offsets whose remaining suffix (length r with
 * k <= r < n) equals the length-r prefix of some codeword. A k-WMU code
 * always scores zero.
 */
inline std::uint64_t prefix_collision_scan(const Codebook& c, std::size_t k, std::uint64_t concatenations,
                                           std::uint64_t seed) {
    detail::require(!c.empty(), "prefix_collision_scan needs a nonempty codebook");
    detail::require(k >= 1, "k must be positive");
    const std::size_t n = c.n();
    std::vector<std::unordered_set<std::string>> prefixes(n);
    for (std::size_t len = k; len < n; ++len)
        for (const Word& w : c) prefixes[len].insert(detail::symbol_key(w.symbols().first(len)));

    auto rng = detail::trial_engine(seed, 0);
    std::vector<Symbol> stream;
    stream.reserve(n * concatenations);
    for (std::uint64_t i = 0; i < concatenations; ++i) {
        const Word& w = c[static_cast<std::size_t>(detail::uniform_below(rng, c.size()))];
        stream.insert(stream.end(), w.begin(), w.end());
    }

    std::uint64_t hits = 0;
    const std::span<const Symbol> all(stream);
    for (std::size_t start = 0; start < stream.size(); start += n)
        for (std::size_t off = 1; off < n; ++off) {
            const std::size_t r = n - off;
            if (r < k) break;
            if (prefixes[r].contains(detail::symbol_key(all.subspan(start + off, r)))) ++hits;
        }
    return hits;
}

}  // namespace wmu
