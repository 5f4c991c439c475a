#include <doctest.h>

#include <map>
#include <stdexcept>
#include <cmath>
#include <set>

#include "eot/gf2.hpp"

using namespace eot;

namespace {

// Brute-force solution set of m*x = pi over all 2^cols vectors.
std::vector<BitVec> brute_solutions(const BitMatrix& m, const BitVec& pi) {
    std::vector<BitVec> out;
    for (uint64_t v = 0; v < (uint64_t{1} << m.cols()); ++v) {
        BitVec x(m.cols());
        for (int64_t i = 0; i < m.cols(); ++i) x.set(i, (v >> i) & 1);
        if (m.mul(x) == pi) out.push_back(x);
    }
    return out;
}

BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    auto it = rows.begin();
    BitMatrix m(static_cast<int64_t>(rows.size()), static_cast<int64_t>(it->size()));
    int64_t r = 0;
    for (const auto& row : rows) {
        int64_t c = 0;
        for (int b : row) m.set(r, c++, b);
        ++r;
    }
    return m;
}

} // namespace

TEST_CASE("mat_vec_mul basics") {
    BitVec v{1, 0, 1};
    CHECK(BitMatrix::identity(3).mul(v) == v);
    CHECK(BitMatrix(2, 3).mul(v) == BitVec{0, 0});
    auto m = from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(m.mul(v) == BitVec{1, 1});
    CHECK_THROWS_AS(m.mul(BitVec{1, 0}), std::invalid_argument);
}

TEST_CASE("mat_vec_mul distributes over xor") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        auto m = BitMatrix::random(5, 9, rng);
        auto u = BitVec::random(9, rng), v = BitVec::random(9, rng);
        CHECK(m.mul(u ^ v) == (m.mul(u) ^ m.mul(v)));
    }
}

TEST_CASE("rank") {
    CHECK(BitMatrix::identity(4).rank() == 4);
    CHECK(BitMatrix(3, 5).rank() == 0);
    CHECK(from_rows({{1, 1}, {1, 1}}).rank() == 1);
    CHECK(from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}).rank() == 2);
}

TEST_CASE("random_full_rank shape and rank") {
    Rng rng(11);
    CHECK_THROWS_AS(BitMatrix::random_full_rank(3, 2, rng), std::invalid_argument);
    auto one = BitMatrix::random_full_rank(1, 1, rng);
    CHECK(one.get(0, 0) == 1);
    for (int t = 0; t < 40; ++t) {
        auto m = BitMatrix::random_full_rank(4, 7, rng);
        CHECK(m.rank() == 4);
    }
}

TEST_CASE("random_full_rank is uniform over rank-2 2x3 matrices") {
    // Exhaust: count all 2x3 rank-2 matrices, then sample and compare. (The
    // family has exactly (2^3-1)(2^3-2) = 42 members.)
    std::set<uint64_t> family;
    for (uint64_t bits = 0; bits < 64; ++bits) {
        BitMatrix m(2, 3);
        for (int i = 0; i < 6; ++i)
            if ((bits >> i) & 1) m.set(i / 3, i % 3, 1);
        if (m.rank() == 2) family.insert(bits);
    }
    CHECK(family.size() == 42);

    Rng rng(1234);
    std::map<uint64_t, int64_t> counts;
    const int64_t samples = 100000;
    for (int64_t t = 0; t < samples; ++t) {
        auto m = BitMatrix::random_full_rank(2, 3, rng);
        uint64_t bits = 0;
        for (int i = 0; i < 6; ++i)
            if (m.get(i / 3, i % 3)) bits |= uint64_t{1} << i;
        CHECK(family.count(bits) == 1);
        counts[bits]++;
    }
    double expect = static_cast<double>(samples) / 42.0;
    double sigma = std::sqrt(static_cast<double>(samples) * (1.0 / 42) * (41.0 / 42));
    for (auto [bits, c] : counts)
        CHECK(std::abs(static_cast<double>(c) - expect) <= 4 * sigma);
    CHECK(counts.size() == 42);
}

TEST_CASE("solve_affine_pair matches brute force") {
    SUBCASE("hand cases") {
        auto [s0, s1] = solve_affine_pair(from_rows({{1, 1}}), BitVec{1});
        CHECK(s0 == BitVec{0, 1});
        CHECK(s1 == BitVec{1, 0});
        auto [t0, t1] = solve_affine_pair(from_rows({{1, 0}}), BitVec{0});
        CHECK(t0 == BitVec{0, 0});
        CHECK(t1 == BitVec{0, 1});
    }
    SUBCASE("rank-deficient rejected") {
        CHECK_THROWS_AS(solve_affine_pair(from_rows({{1, 1, 0}, {1, 1, 0}}), BitVec{0, 0}),
                        std::invalid_argument);
    }
    SUBCASE("random instances up to 12 columns") {
        Rng rng(99);
        for (int64_t cols = 2; cols <= 12; ++cols) {
            for (int t = 0; t < 10; ++t) {
                auto m = BitMatrix::random_full_rank(cols - 1, cols, rng);
                BitVec pi = BitVec::random(cols - 1, rng);
                auto [s0, s1] = solve_affine_pair(m, pi);
                CHECK(s0 != s1);
                CHECK(s0.lex_less(s1));
                CHECK(m.mul(s0) == pi);
                CHECK(m.mul(s1) == pi);
                auto brute = brute_solutions(m, pi);
                REQUIRE(brute.size() == 2);
                bool match = (brute[0] == s0 && brute[1] == s1) ||
                             (brute[0] == s1 && brute[1] == s0);
                CHECK(match);
            }
        }
    }
}

TEST_CASE("lexicographic order reads the sequence left to right") {
    CHECK(BitVec{0, 1, 1}.lex_less(BitVec{1, 0, 0}));
    CHECK_FALSE(BitVec{1, 0, 0}.lex_less(BitVec{0, 1, 1}));
    CHECK_FALSE(BitVec{1, 0, 1}.lex_less(BitVec{1, 0, 1}));
    CHECK(BitVec::from_string("0101").to_string() == "0101");
}

TEST_CASE("affine-pair solving at challenge-protocol scale") {
    Rng rng(404);
    for (int64_t k : {257, 941}) {
        auto m = BitMatrix::random_full_rank(k - 1, k, rng);
        BitVec pi = BitVec::random(k - 1, rng);
        auto [s0, s1] = solve_affine_pair(m, pi);
        CHECK(s0 != s1);
        CHECK(s0.lex_less(s1));
        CHECK(m.mul(s0) == pi);
        CHECK(m.mul(s1) == pi);
        // the two solutions differ by the kernel vector
        BitVec d = s0 ^ s1;
        CHECK(m.mul(d).popcount() == 0);
    }
}
