#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "codebook.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"

namespace wmu {

enum class Alphabet { digits, dna };

namespace detail {

inline std::size_t parse_count(const std::string& key, const std::string& value, std::size_t line) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw format_error("header field " + key + " is not a nonnegative integer: '" + value + "'", line);
    try {
        return static_cast<std::size_t>(std::stoull(value));
    } catch (const std::out_of_range&) {
        throw format_error("header field " + key + " is out of range", line);
    }
}

inline bool parse_flag(const std::string& key, const std::string& value, std::size_t line) {
    if (value == "0") return false;
    if (value == "1") return true;
    throw format_error("header field " + key + " must be 0 or 1, got '" + value + "'", line);
}

inline std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace detail

/**
 * Reads the text codebook format:
 *   #wmu n=<n> q=<q> [k=<k>] [d=<d>] [balanced=0|1] [gc=0|1] [alpha=dna]
 * followed by one codeword per line.
 */
inline Codebook read_codebook(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw format_error("missing #wmu header", 1);
    header = detail::strip_cr(header);
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "#wmu") throw format_error("missing #wmu header", 1);

    std::optional<std::size_t> n;
    std::optional<unsigned> q;
    Claims claims;
    Alphabet alpha = Alphabet::digits;
    std::set<std::string> seen;
    std::string field;
    while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw format_error("malformed header field '" + field + "'", 1);
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (!seen.insert(key).second) throw format_error("repeated header field " + key, 1);
        if (key == "n") n = detail::parse_count(key, value, 1);
        else if (key == "q") {
            const std::size_t v = detail::parse_count(key, value, 1);
            if (v != 2 && v != 4) throw format_error("q must be 2 or 4", 1);
            q = static_cast<unsigned>(v);
        } else if (key == "k") claims.k = detail::parse_count(key, value, 1);
        else if (key == "d") claims.d = detail::parse_count(key, value, 1);
        else if (key == "balanced") claims.balanced = detail::parse_flag(key, value, 1);
        else if (key == "gc") claims.gc_balanced = detail::parse_flag(key, value, 1);
        else if (key == "alpha") {
            if (value != "dna") throw format_error("unknown alphabet '" + value + "'", 1);
            alpha = Alphabet::dna;
        } else throw format_error("unknown header field " + key, 1);
    }
    if (!n) throw format_error("header lacks n=", 1);
    if (!q) throw format_error("header lacks q=", 1);
    if (alpha == Alphabet::dna && *q != 4) throw format_error("alpha=dna requires q=4", 1);

    std::vector<Word> words;
    std::set<Word> unique;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.size() != *n)
            throw format_error("codeword has length " + std::to_string(line.size()) + ", expected " +
                                   std::to_string(*n),
                               line_no);
        Word w;
        try {
            w = alpha == Alphabet::dna ? dna_to_field(DnaWord(line)) : Word::from_string(line, *q);
        } catch (const precondition_error& e) {
            throw format_error(std::string("invalid symbol: ") + e.what(), line_no);
        }
        if (!unique.insert(w).second) throw format_error("duplicate codeword " + line, line_no);
        words.push_back(std::move(w));
    }
    return Codebook(*n, *q, std::move(words), claims);
}

inline Codebook read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_codebook(in);
}

inline void write_codebook(const Codebook& c, std::ostream& out, Alphabet alpha = Alphabet::digits) {
    detail::require(alpha == Alphabet::digits || c.q() == 4, "DNA output needs a quaternary codebook");
    out << "#wmu n=" << c.n() << " q=" << c.q();
    const Claims& cl = c.claims();
    if (cl.k) out << " k=" << *cl.k;
    if (cl.d) out << " d=" << *cl.d;
    if (cl.balanced) out << " balanced=" << (*cl.balanced ? 1 : 0);
    if (cl.gc_balanced) out << " gc=" << (*cl.gc_balanced ? 1 : 0);
    if (alpha == Alphabet::dna) out << " alpha=dna";
    out << '\n';
    for (const Word& w : c) out << (alpha == Alphabet::dna ? field_to_dna(w).str() : w.to_string()) << '\n';
}

inline void write_codebook_file(const Codebook& c, const std::string& path, Alphabet alpha = Alphabet::digits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_codebook(c, out, alpha);
}

/**
 * Generator matrix text: optional "#gen q=<q>" line (q = 2 by default), then
 * one row per line with symbols separated by spaces or written contiguously.
 */
inline GeneratorMatrixCode read_generator_matrix(std::istream& in) {
    unsigned q = 2;
    std::vector<Word> rows;
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> length;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::strip_cr(line);
        if (line.empty()) continue;
        if (line.rfind("#gen", 0) == 0) {
            if (line_no != 1) throw format_error("#gen header must be the first line", line_no);
            const auto pos = line.find("q=");
            if (pos == std::string::npos) throw format_error("#gen header lacks q=", line_no);
            const std::size_t v = detail::parse_count("q", line.substr(pos + 2), line_no);
            if (v != 2 && v != 4) throw format_error("q must be 2 or 4", line_no);
            q = static_cast<unsigned>(v);
            continue;
        }
        std::string digits;
        for (char ch : line)
            if (ch != ' ' && ch != '\t') digits.push_back(ch);
        try {
            rows.push_back(Word::from_string(digits, q));
        } catch (const precondition_error& e) {
            throw format_error(std::string("invalid symbol: ") + e.what(), line_no);
        }
        if (length && *length != digits.size()) throw format_error("rows differ in length", line_no);
        length = digits.size();
    }
    if (rows.empty()) throw format_error("generator matrix has no rows", line_no);
    try {
        return GeneratorMatrixCode(FiniteField(q), *length, std::move(rows));
    } catch (const precondition_error& e) {
        throw format_error(e.what(), 0);
    }
}

inline GeneratorMatrixCode read_generator_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_generator_matrix(in);
}

}  // namespace wmu
