#pragma once

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "balancing.hpp"
#include "codebook_io.hpp"
#include "constructions.hpp"
#include "linear_code.hpp"
#include "search.hpp"
#include "simulator.hpp"
#include "verifier.hpp"

namespace wmu::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Every name accepted by `generate`.
inline const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names{
        "dyck",         "levenshtein",   "parsing",   "wmu-concat",     "decoupled",
        "balanced",     "balanced-ec",   "near-balanced", "cyclic-coset", "gc-cyclic",
        "concatenated", "full",          "balanced-words", "greedy-balanced"};
    return names;
}

namespace detail {

struct GenerateArgs {
    std::string name;
    std::string output;
    std::string alpha;
    std::optional<std::size_t> n, k, l, t, q, height, d, n_half;
    std::string inner = "repetition";
    std::string c0, c1, c2, c3, core, prefix;
    std::string generator;
    std::string pattern = "XY";
};

inline std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw precondition_error(std::string("missing required option ") + flag);
    return *v;
}

inline Codebook words_of(std::size_t n, std::initializer_list<const char*> digits, unsigned q = 2) {
    std::vector<Word> w;
    for (const char* s : digits) w.push_back(Word::from_string(s, q));
    return Codebook(n, q, std::move(w));
}

inline Codebook load_or(const std::string& path, const std::function<Codebook()>& fallback) {
    return path.empty() ? fallback() : read_codebook_file(path);
}

inline CyclicCode cyclic_from_args(const GenerateArgs& a, unsigned default_q, std::size_t default_n,
                                   const Poly& default_g) {
    if (a.generator.empty()) {
        const unsigned q = a.q ? static_cast<unsigned>(*a.q) : default_q;
        const std::size_t n = a.n.value_or(default_n);
        return CyclicCode(FiniteField(q), n, default_g);
    }
    const unsigned q = static_cast<unsigned>(a.q.value_or(default_q));
    return CyclicCode(FiniteField(q), need(a.n, "--n"), poly::parse(a.generator, q));
}

inline Codebook inner_code(const GenerateArgs& a, std::size_t length) {
    if (a.inner == "repetition") return enumerate_codewords(repetition_code(length));
    if (a.inner == "parity") return enumerate_codewords(parity_check_code(length));
    if (a.inner == "hamming") return enumerate_codewords(hamming_7_4());
    if (a.inner == "full") return enumerate_codewords(full_space_code(length));
    return enumerate_codewords(read_generator_matrix_file(a.inner));
}

/// Builds the requested construction. Defaults reproduce small worked instances.
inline Codebook build(const GenerateArgs& a) {
    const std::string& name = a.name;
    if (name == "dyck") return dyck_mu_code(need(a.n_half, "--n-half"), a.height);
    if (name == "levenshtein")
        return levenshtein_mu_code(need(a.n, "--n"), need(a.l, "--l"), static_cast<unsigned>(a.q.value_or(2)));
    if (name == "parsing") {
        const std::size_t l = need(a.l, "--l"), t = need(a.t, "--t");
        if (l < 2) throw precondition_error("parsing needs l >= 2");
        return parsing_ec_mu_code(inner_code(a, t * (l - 1)), l, t);
    }
    if (name == "wmu-concat") {
        const std::size_t n = need(a.n, "--n"), k = need(a.k, "--k");
        if (k < 1 || k > n) throw precondition_error("k must satisfy 1 <= k <= n");
        const Codebook prefix = load_or(a.prefix, [&] { return full_space(k - 1, 2); });
        const Codebook core = load_or(a.core, [&] {
            std::vector<Word> w{concat(Word::ones(1), Word::zeros(n - k))};
            return Codebook(n - k + 1, 2, std::move(w));
        });
        return wmu_concat(prefix, core);
    }
    if (name == "decoupled" || name == "balanced-ec") {
        const Codebook c1 = load_or(a.c1, [] { return words_of(1, {"0", "1"}); });
        const Codebook c2 = load_or(a.c2, [] { return words_of(3, {"100"}); });
        if (name == "decoupled") return decoupled_ec_wmu(c1, c2, load_or(a.c3, [] { return full_space(4, 2); }));
        return balanced_ec_wmu(c1, c2, load_or(a.c3, [] { return balanced_words(4); }));
    }
    if (name == "balanced") {
        const Codebook c1 = load_or(a.c1, [] { return words_of(4, {"0010", "0110", "1010", "1110"}); });
        const Codebook c2 = load_or(a.c2, [&] { return balanced_words(c1.n()); });
        const std::size_t k = a.k.value_or(c1.claims().k.value_or(3));
        return balanced_wmu(c1, c2, k);
    }
    if (name == "near-balanced") return near_balanced_wmu(need(a.n, "--n"), need(a.k, "--k"), a.height);
    if (name == "cyclic-coset") return cyclic_coset_wmu(cyclic_from_args(a, 2, 7, Poly{1, 1, 0, 1}));
    if (name == "gc-cyclic") {
        const std::size_t n = a.n.value_or(3);
        if (a.q && *a.q != 4) throw precondition_error("gc-cyclic works over GF(4)");
        GenerateArgs b = a;
        b.q = 4;
        return gc_balanced_cyclic_wmu(cyclic_from_args(b, 4, n, poly::all_ones(n)));
    }
    if (name == "concatenated") {
        Codebook c0 = a.c0.empty() ? cyclic_coset_wmu(CyclicCode(FiniteField(2), 7, {1, 1, 1, 0, 1}))
                                    : read_codebook_file(a.c0);
        const std::size_t k = a.k.value_or(c0.claims().k.value_or(0));
        if (k == 0) throw precondition_error("missing required option --k");
        return concatenated_wmu(c0, k, partition_blocks(c0, a.pattern));
    }
    if (name == "full") return full_space(need(a.n, "--n"), static_cast<unsigned>(a.q.value_or(2)));
    if (name == "balanced-words") return balanced_words(need(a.n, "--n"));
    if (name == "greedy-balanced") return greedy_balanced_code(need(a.n, "--n"), need(a.d, "--d"));
    throw precondition_error("unknown construction '" + name + "'");
}

inline bool is_dna_construction(const std::string& name) {
    return name == "decoupled" || name == "balanced" || name == "balanced-ec" || name == "near-balanced" ||
           name == "gc-cyclic";
}

inline std::string fmt(const Real& x, int digits = 12) { return x.str(digits, std::ios_base::fixed); }

inline std::string fmt_opt(const std::optional<Real>& x) { return x ? fmt(*x, 6) : std::string(); }

inline void print_rate_row(std::ostream& out, const RateReport& r, bool csv) {
    if (csv) {
        out << r.n << ',' << r.k << ',' << r.d;
        for (const auto& c : r.columns) out << ',' << fmt_opt(c.log2_size);
        out << ',' << fmt_opt(r.m_star_h) << '\n';
        return;
    }
    static const char* labels[4] = {"k-WMU", "k-WMU+EC", "k-WMU+balanced", "k-WMU+EC+balanced"};
    out << "n=" << r.n << " k=" << r.k << " d=" << r.d << '\n';
    for (std::size_t i = 0; i < 4; ++i) {
        out << "col" << i + 1 << "_log2_size (" << labels[i] << ")=";
        if (r.columns[i].ok()) out << fmt(*r.columns[i].log2_size, 6) << '\n';
        else out << "n/a (" << r.columns[i].error << ")\n";
    }
    if (r.m_star_h) out << "m_star_H=" << fmt(*r.m_star_h, 6) << " (rounded " << *r.m_star_h_rounded << ")\n";
}

struct Check {
    std::string name;
    bool pass;
};

}  // namespace detail

/**
 * Runs one command line (args exclude the program name). Returns 0 on
 * success, 1 when a verification fails, 2 on usage errors or bad input.
 */
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weakly mutually uncorrelated code toolkit", "wmu"};
    app.require_subcommand(1);

    // generate
    detail::GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "build a code construction");
    g->add_option("name", gen.name, "construction name")->required()->check(CLI::IsMember(construction_names()));
    g->add_option("-o,--output", gen.output, "output file (stdout when omitted)");
    g->add_option("--alpha", gen.alpha, "digits or dna")->check(CLI::IsMember({"digits", "dna"}));
    g->add_option("--n", gen.n, "code length");
    g->add_option("--k", gen.k, "WMU parameter");
    g->add_option("--l", gen.l, "zero-run parameter");
    g->add_option("--t", gen.t, "chunk count");
    g->add_option("--q", gen.q, "alphabet size");
    g->add_option("--height,--D", gen.height, "Dyck height bound");
    g->add_option("--d", gen.d, "minimum distance");
    g->add_option("--n-half", gen.n_half, "Dyck half length");
    g->add_option("--inner", gen.inner, "repetition, parity, hamming, full or a generator matrix file");
    g->add_option("--c0", gen.c0, "base code file");
    g->add_option("--c1", gen.c1, "first component file");
    g->add_option("--c2", gen.c2, "second component file");
    g->add_option("--c3", gen.c3, "third component file");
    g->add_option("--core", gen.core, "MU core file");
    g->add_option("--prefix", gen.prefix, "prefix code file");
    g->add_option("--g,--gen-poly", gen.generator, "generator polynomial c0,c1,... (low degree first)");
    g->add_option("--pattern", gen.pattern, "block pattern over X and Y");

    // verify
    std::string verify_file;
    std::optional<std::size_t> verify_k, verify_dist;
    bool verify_mu = false, verify_balanced = false, verify_gc = false;
    auto* v = app.add_subcommand("verify", "check a codebook file");
    v->add_option("file", verify_file)->required();
    v->add_option("--k", verify_k, "check the k-WMU property");
    v->add_flag("--mu", verify_mu, "check the MU property");
    v->add_option("--min-dist", verify_dist, "check the minimum distance");
    v->add_flag("--balanced", verify_balanced, "check binary balance");
    v->add_flag("--gc", verify_gc, "check GC balance");

    // search-max
    std::size_t search_n = 0, search_q = 2;
    std::optional<std::size_t> search_k;
    std::uint64_t node_limit = 0;
    bool bound_only = false;
    auto* s = app.add_subcommand("search-max", "exact maximum MU / k-WMU code size");
    s->add_option("--n", search_n)->required();
    s->add_option("--q", search_q)->check(CLI::IsMember({2, 4}));
    s->add_option("--k", search_k, "WMU parameter (MU when omitted)");
    s->add_option("--node-limit", node_limit, "abort after this many search nodes (0 = none)");
    s->add_flag("--bound-only", bound_only, "only prove that no code exceeds floor(q^n/(n-k+1))");

    // rates
    std::size_t rate_n = 0, rate_k = 0, rate_d = 0;
    std::optional<std::size_t> rate_n_max;
    bool rate_csv = false;
    auto* r = app.add_subcommand("rates", "log2 sizes of the four construction families");
    r->add_option("--n", rate_n)->required();
    r->add_option("--k", rate_k)->required();
    r->add_option("--d", rate_d)->required();
    r->add_option("--n-max", rate_n_max, "sweep n up to this value");
    r->add_flag("--csv", rate_csv);

    // count-dyck
    std::size_t dyck_n = 0;
    std::optional<std::size_t> dyck_height;
    bool dyck_asym = false;
    auto* c = app.add_subcommand("count-dyck", "count height-bounded Dyck words");
    c->add_option("--n", dyck_n, "half length")->required();
    c->add_option("--height", dyck_height);
    c->add_flag("--asymptotic", dyck_asym);

    // simulate
    std::string sim_file;
    double sim_p = 0;
    std::uint64_t sim_trials = 1000, sim_seed = 1;
    bool sim_csv = false;
    auto* m = app.add_subcommand("simulate", "substitution channel with nearest-codeword decoding");
    m->add_option("file", sim_file)->required();
    m->add_option("--p", sim_p)->required();
    m->add_option("--trials", sim_trials);
    m->add_option("--seed", sim_seed);
    m->add_flag("--csv", sim_csv);

    // collision-scan
    std::string scan_file;
    std::size_t scan_k = 1;
    std::uint64_t scan_seed = 1, scan_count = 1000;
    auto* x = app.add_subcommand("collision-scan", "count prefix/suffix collisions in random concatenations");
    x->add_option("file", scan_file)->required();
    x->add_option("--k", scan_k)->required();
    x->add_option("--seed", scan_seed);
    x->add_option("--concatenations", scan_count);

    std::vector<const char*> argv{"wmu"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*g) {
            const Codebook code = detail::build(gen);
            const bool dna = gen.alpha.empty() ? detail::is_dna_construction(gen.name) : gen.alpha == "dna";
            const Alphabet alpha = dna ? Alphabet::dna : Alphabet::digits;
            if (gen.output.empty()) write_codebook(code, out, alpha);
            else {
                write_codebook_file(code, gen.output, alpha);
                out << "wrote " << code.size() << " words of length " << code.n() << " to " << gen.output << '\n';
            }
            return exit_ok;
        }
        if (*v) {
            const Codebook code = read_codebook_file(verify_file);
            const Claims& cl = code.claims();
            std::vector<detail::Check> checks;
            std::optional<std::size_t> k = verify_k ? verify_k : cl.k;
            if (verify_mu) checks.push_back({"mu", is_mu_code(code)});
            if (k) {
                if (*k < 1 || *k > std::max<std::size_t>(code.n(), 1))
                    throw precondition_error("k must satisfy 1 <= k <= n");
                checks.push_back({"k-wmu(k=" + std::to_string(*k) + ")", is_k_wmu_code(code, *k)});
            }
            std::optional<std::size_t> d = verify_dist ? verify_dist : cl.d;
            if (d) checks.push_back({"min-dist>=" + std::to_string(*d), code.size() < 2 || code_min_distance(code) >= *d});
            if (verify_balanced || cl.balanced.value_or(false)) checks.push_back({"balanced", is_balanced_code(code)});
            if (verify_gc || cl.gc_balanced.value_or(false)) checks.push_back({"gc-balanced", is_gc_balanced_code(code)});
            bool all = true;
            out << "size=" << code.size() << " n=" << code.n() << " q=" << code.q() << '\n';
            for (const auto& ch : checks) {
                out << ch.name << ": " << (ch.pass ? "pass" : "FAIL") << '\n';
                all = all && ch.pass;
            }
            if (checks.empty()) out << "no properties requested or claimed\n";
            return all ? exit_ok : exit_failed;
        }
        if (*s) {
            const std::size_t k = search_k.value_or(1);
            const auto mode = CorrelationMode::weak(k);
            const unsigned q = static_cast<unsigned>(search_q);
            if (search_n < 1 || k < 1 || k > search_n) throw precondition_error("k must satisfy 1 <= k <= n");
            const BigInt bound = wmu_upper_bound(search_n, q, k);
            out << "n=" << search_n << " q=" << q << " k=" << k << '\n' << "upper_bound=" << bound << '\n';
            if (bound_only) {
                const auto res = find_code_larger_than(search_n, q, mode, static_cast<std::size_t>(bound),
                                                       SearchOptions{node_limit});
                out << "exceeds_bound=" << (res.exists() ? "yes" : "no") << '\n'
                    << "nodes=" << res.nodes_explored << '\n';
                return res.exists() ? exit_failed : exit_ok;
            }
            const auto res = max_code_search(search_n, q, mode, SearchOptions{node_limit});
            out << "max_size=" << res.max_size << '\n' << "nodes=" << res.nodes_explored << '\n';
            for (const Word& w : res.witness) out << w.to_string() << '\n';
            return exit_ok;
        }
        if (*r) {
            if (rate_csv) out << "n,k,d,col1_log2,col2_log2,col3_log2,col4_log2,m_star_H\n";
            const std::size_t last = rate_n_max.value_or(rate_n);
            for (std::size_t n = rate_n; n <= last; ++n) detail::print_rate_row(out, rate_table(n, rate_k, rate_d), rate_csv);
            return exit_ok;
        }
        if (*c) {
            const BigInt count = dyck_count(dyck_n, dyck_height);
            out << "count=" << count << '\n';
            if (dyck_asym) {
                if (!dyck_height) throw precondition_error("--asymptotic needs --height");
                const Real printed = dyck_asymptotic(dyck_n, *dyck_height);
                const Real corrected = dyck_asymptotic_exact_form(dyck_n, *dyck_height);
                out << "asymptotic=" << printed.str(17) << '\n'
                    << "ratio=" << (Real(count) / printed).str(17) << '\n'
                    << "asymptotic_corrected=" << corrected.str(17) << '\n'
                    << "ratio_corrected=" << (Real(count) / corrected).str(17) << '\n';
            }
            return exit_ok;
        }
        if (*m) {
            const SimReport rep = run_channel_sim(read_codebook_file(sim_file), sim_p, sim_trials, sim_seed);
            if (sim_csv) out << SimReport::csv_header() << '\n' << rep.to_csv_row() << '\n';
            else out << rep.to_key_value();
            return exit_ok;
        }
        if (*x) {
            const Codebook code = read_codebook_file(scan_file);
            out << "collisions=" << prefix_collision_scan(code, scan_k, scan_count, scan_seed) << '\n';
            return exit_ok;
        }
    } catch (const format_error& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return exit_usage;
    } catch (const certification_error& e) {
        err << "error: certification failed: " << e.what() << '\n';
        return exit_failed;
    } catch (const search_limit_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace wmu::cli
