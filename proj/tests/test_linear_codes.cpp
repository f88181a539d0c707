#include <gtest/gtest.h>

#include <random>

#include <wmu/linear_code.hpp>
#include <wmu/verifier.hpp>

#include "oracles.hpp"

using namespace wmu;

TEST(Field, Gf4Arithmetic) {
    const FiniteField f(4);
    for (Symbol a = 0; a < 4; ++a) {
        EXPECT_EQ(f.add(a, a), 0);
        EXPECT_EQ(f.mul(a, 1), a);
        if (a) {
            EXPECT_EQ(f.mul(a, f.inv(a)), 1);
        }
    }
    EXPECT_EQ(f.mul(omega, omega), omega + 1);
    EXPECT_EQ(f.add(omega, 1), omega + 1);
    // associativity and distributivity over all triples
    for (Symbol a = 0; a < 4; ++a)
        for (Symbol b = 0; b < 4; ++b)
            for (Symbol c = 0; c < 4; ++c) {
                EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
    EXPECT_THROW(f.inv(0), precondition_error);
    EXPECT_THROW(FiniteField(3), precondition_error);
}

TEST(Poly, DivisionAndParsing) {
    const FiniteField f2(2);
    EXPECT_TRUE(poly::divides(f2, {1, 1, 0, 1}, poly::x_pow_minus_one(7)));
    EXPECT_FALSE(poly::divides(f2, {1, 1, 0, 1}, poly::x_pow_minus_one(6)));
    auto [q, r] = poly::divmod(f2, poly::x_pow_minus_one(7), {1, 1, 0, 1});
    EXPECT_TRUE(r.empty());
    EXPECT_EQ(poly::mul(f2, q, {1, 1, 0, 1}), poly::x_pow_minus_one(7));
    EXPECT_EQ(poly::parse("1,0,3", 4), (Poly{1, 0, 3}));
    EXPECT_THROW(poly::parse("1,2", 2), precondition_error);
    EXPECT_THROW(poly::parse("1,,1", 2), precondition_error);
}

TEST(CyclicCode, Hamming74) {
    const auto h = hamming_7_4();
    EXPECT_EQ(h.dimension(), 4u);
    const Codebook words = enumerate_codewords(h);
    EXPECT_EQ(words.size(), 16u);
    EXPECT_EQ(oracle::min_distance(oracle::strings(words)), 3u);
    EXPECT_EQ(min_distance(h), 3u);
    EXPECT_EQ(max_zero_run(h), 3u);
}

TEST(CyclicCode, RejectsNonDivisors) {
    EXPECT_THROW(CyclicCode(FiniteField(2), 6, {1, 1, 0, 1}), precondition_error);
    EXPECT_THROW(CyclicCode(FiniteField(2), 4, {}), precondition_error);
}

TEST(CyclicCode, Gf4Repetition) {
    const auto rep = quaternary_repetition_cyclic(3);
    EXPECT_EQ(rep.dimension(), 1u);
    EXPECT_EQ(oracle::strings(enumerate_codewords(rep)), (std::vector<std::string>{"000", "111", "222", "333"}));
    EXPECT_TRUE(contains_all_ones(rep));
}

TEST(CyclicCode, DimensionZeroIsZeroWord) {
    const CyclicCode zero(FiniteField(2), 5, poly::x_pow_minus_one(5));
    EXPECT_EQ(zero.dimension(), 0u);
    EXPECT_EQ(oracle::strings(enumerate_codewords(zero)), (std::vector<std::string>{"00000"}));
    EXPECT_THROW(max_zero_run(zero), precondition_error);
}

TEST(CyclicCode, ZeroRunExamples) {
    EXPECT_EQ(max_zero_run(CyclicCode(FiniteField(2), 5, poly::all_ones(5))), 0u);
    EXPECT_EQ(max_zero_run(CyclicCode(FiniteField(2), 6, {1})), 5u);
}

TEST(CyclicCode, AllOnesMembership) {
    EXPECT_FALSE(contains_all_ones(CyclicCode(FiniteField(2), 3, {1, 1})));
    EXPECT_TRUE(contains_all_ones(CyclicCode(FiniteField(2), 4, {1, 1})));
    EXPECT_TRUE(contains_all_ones(CyclicCode(FiniteField(4), 5, {1})));
}

TEST(CyclicCode, ZeroRunBoundForEveryBinaryCyclicCodeUpToLength15) {
    const FiniteField f(2);
    for (std::size_t n = 1; n <= 15; ++n) {
        const auto gens = cyclic_generators(f, n);
        ASSERT_GE(gens.size(), 2u);
        for (const Poly& g : gens) {
            const CyclicCode c(f, n, g);
            if (c.dimension() == 0) continue;
            ASSERT_LE(max_zero_run(c), c.dimension() - 1) << "n=" << n << " deg g=" << poly::degree(g);
        }
    }
}

TEST(CyclicCode, ClosedUnderShiftAndAddition) {
    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 4u}) {
        const FiniteField f(q);
        for (std::size_t n : {5u, 7u, 9u}) {
            if (q == 4 && n > 7) continue;
            for (const Poly& g : cyclic_generators(f, n)) {
                const CyclicCode c(f, n, g);
                const Codebook words = enumerate_codewords(c);
                for (const Word& w : words) {
                    std::vector<Symbol> s(w.begin(), w.end());
                    std::rotate(s.begin(), s.begin() + 1, s.end());
                    ASSERT_TRUE(words.contains(Word(s, q)));
                }
                for (int i = 0; i < 200; ++i) {
                    const Word& a = words[rng() % words.size()];
                    const Word& b = words[rng() % words.size()];
                    std::vector<Symbol> s(n);
                    for (std::size_t j = 0; j < n; ++j) s[j] = f.add(a[j], b[j]);
                    ASSERT_TRUE(words.contains(Word(s, q)));
                }
            }
        }
    }
}

TEST(GeneratorMatrix, RejectsDependentRows) {
    const Word r = Word::from_string("1100");
    EXPECT_THROW(GeneratorMatrixCode(FiniteField(2), 4, {r, r}), precondition_error);
    EXPECT_EQ(enumerate_codewords(parity_check_code(4)).size(), 8u);
    EXPECT_EQ(min_distance(parity_check_code(4)), 2u);
    EXPECT_EQ(enumerate_codewords(repetition_code(2)).size(), 2u);
}

TEST(Coset, ShiftPreservesDistanceAndIsInvolution) {
    const Codebook words = enumerate_codewords(hamming_7_4());
    const Word e = Word::unit(7, 0);
    const Codebook shifted = coset_shift(words, e);
    EXPECT_EQ(code_min_distance(shifted), 3u);
    EXPECT_EQ(coset_shift(shifted, e), words);
    EXPECT_EQ(coset_shift(words, Word::zeros(7)), words);
    EXPECT_TRUE(is_k_wmu_code(shifted, 5));
    EXPECT_THROW(coset_shift(words, Word::zeros(6)), precondition_error);
}

TEST(Enumeration, Guard) {
    EXPECT_THROW(enumerate_codewords(full_space_code(21)), guard_exceeded);
}
