#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eot/hashing.hpp"
#include "eot/oracle.hpp"

using namespace eot;

namespace {

// Independent oracle for the averaged output entropy: enumerate every matrix
// of the full linear family (feasible only for tiny in*out).
double brute_hash_entropy(const FiniteDistribution& d, int in_len, int out_len) {
    const int cells = in_len * out_len;
    REQUIRE(cells <= 20);
    double total = 0;
    for (uint64_t bits = 0; bits < (uint64_t{1} << cells); ++bits) {
        BitMatrix m(out_len, in_len);
        for (int i = 0; i < cells; ++i)
            if ((bits >> i) & 1) m.set(i / in_len, i % in_len, 1);
        std::vector<double> py(size_t{1} << out_len, 0.0);
        for (size_t i = 0; i < d.support.size(); ++i) {
            BitVec x(in_len);
            for (int b = 0; b < in_len; ++b) x.set(b, (d.support[i] >> b) & 1);
            BitVec y = m.mul(x);
            uint64_t yv = 0;
            for (int b = 0; b < out_len; ++b) yv |= uint64_t(y.get(b)) << b;
            py[yv] += d.mass[i];
        }
        double h = 0;
        for (double p : py)
            if (p > 0) h -= p * std::log2(p);
        total += h;
    }
    return total / std::exp2(cells);
}

} // namespace

TEST_CASE("collision probability and order-2 entropy") {
    auto u4 = FiniteDistribution::uniform_over({0, 1, 2, 3});
    CHECK(collision_probability(u4) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(collision_probability(FiniteDistribution::point_mass(5)) == doctest::Approx(1.0));
    FiniteDistribution mixed{{0, 1, 2}, {0.5, 0.25, 0.25}};
    CHECK(collision_probability(mixed) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(renyi2(mixed) == doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-12));
    CHECK(renyi2(FiniteDistribution::uniform_over({0, 1, 2, 3, 4, 5, 6, 7})) ==
          doctest::Approx(3.0));
    CHECK(renyi2(FiniteDistribution::point_mass(0)) == doctest::Approx(0.0));
    FiniteDistribution bad{{0}, {0.5}};
    CHECK_THROWS_AS(collision_probability(bad), std::invalid_argument);
}

TEST_CASE("extraction bound values") {
    CHECK(pa_bound(3, 3).log_form == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pa_bound(1, 3).log_form == doctest::Approx(1 - std::log2(1.25)).epsilon(1e-12));
    CHECK(pa_bound(1, 3).log_form == doctest::Approx(0.678071905).epsilon(1e-6));
    CHECK(pa_bound(2, 1000).log_form == doctest::Approx(2.0));
    CHECK(pa_bound(1, 3).weak_form == doctest::Approx(1 - 0.25 / std::log(2.0)).epsilon(1e-12));
    // never exceeds the key length; monotone in the entropy floor
    for (double l : {0.0, 1.0, 4.0}) {
        double prev = -1e9;
        for (double c = 0; c < 10; c += 0.25) {
            auto b = pa_bound(l, c);
            CHECK(b.log_form <= l + 1e-12);
            CHECK(b.log_form >= prev);
            prev = b.log_form;
        }
    }
}

TEST_CASE("sampled family is the full linear family") {
    Rng rng(21);
    CHECK_THROWS_AS(sample_hash(2, 3, rng), std::invalid_argument);
    SUBCASE("one-cell matrices are balanced") {
        int ones = 0;
        for (int t = 0; t < 4000; ++t) ones += sample_hash(1, 1, rng).m.get(0, 0);
        CHECK(std::abs(ones - 2000) < 4 * std::sqrt(1000.0));
    }
    SUBCASE("linearity") {
        for (int t = 0; t < 20; ++t) {
            auto f = sample_hash(8, 3, rng);
            BitVec a = BitVec::random(8, rng), b = BitVec::random(8, rng);
            CHECK(f.apply(a ^ b) == (f.apply(a) ^ f.apply(b)));
        }
    }
    SUBCASE("sampled pair-collision rate") {
        BitVec a{1, 0, 1, 0}, b{0, 1, 1, 0};
        int coll = 0;
        const int samples = 20000;
        for (int t = 0; t < samples; ++t) {
            auto f = sample_hash(4, 2, rng);
            if (f.apply(a) == f.apply(b)) ++coll;
        }
        double sigma = std::sqrt(samples * 0.25 * 0.75);
        CHECK(coll <= 0.25 * samples + 3 * sigma);
    }
}

TEST_CASE("exact pairwise collision counting for small families") {
    // the full linear family collides on exactly a 1/2^out fraction
    for (int in = 2; in <= 4; ++in) {
        std::vector<BitMatrix> family;
        const int out = 2, cells = in * out;
        for (uint64_t bits = 0; bits < (uint64_t{1} << cells); ++bits) {
            BitMatrix m(out, in);
            for (int i = 0; i < cells; ++i)
                if ((bits >> i) & 1) m.set(i / in, i % in, 1);
            family.push_back(std::move(m));
        }
        CHECK(max_pair_collision_fraction(family, in) == doctest::Approx(0.25).epsilon(1e-12));
    }
    // declared sub-families used by the oracle stay within the bound
    CHECK(max_pair_collision_fraction(projection_pair_family(), 2) <= 0.5 + 1e-12);
    CHECK(max_pair_collision_fraction(toeplitz_family(2, 3), 3) <= 0.25 + 1e-12);
    CHECK(max_pair_collision_fraction(toeplitz_family(1, 2), 2) <= 0.5 + 1e-12);
}

TEST_CASE("averaged output entropy: subspace method equals brute force") {
    Rng rng(31);
    std::vector<FiniteDistribution> battery = {
        FiniteDistribution::uniform_over({0, 1, 2, 3}),
        FiniteDistribution::point_mass(5),
        FiniteDistribution{{0, 3, 5, 6}, {0.25, 0.25, 0.25, 0.25}},
        FiniteDistribution{{0, 1, 7}, {0.5, 0.25, 0.25}},
    };
    for (const auto& d : battery) {
        for (int out = 1; out <= 2; ++out) {
            double fast = exact_hash_entropy(d, 3, out);
            double slow = brute_hash_entropy(d, 3, out);
            CHECK(fast == doctest::Approx(slow).epsilon(1e-11));
        }
    }
    // 2-bit uniform source, 1-bit output: mean entropy 3/4, above the bound
    auto u2 = FiniteDistribution::uniform_over({0, 1, 2, 3});
    CHECK(exact_hash_entropy(u2, 2, 1) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(exact_hash_entropy(u2, 2, 1) >= pa_bound(1, 2).log_form);
    CHECK(exact_hash_entropy(FiniteDistribution::point_mass(3), 3, 2) == doctest::Approx(0.0));
    // uniform on a 4-subset of {0,1}^3: order-2 entropy 2
    FiniteDistribution sub{{1, 2, 4, 7}, {0.25, 0.25, 0.25, 0.25}};
    CHECK(renyi2(sub) == doctest::Approx(2.0));
    CHECK(exact_hash_entropy(sub, 3, 1) >= pa_bound(1, 2).log_form - 1e-12);
    CHECK(pa_bound(1, 2).log_form == doctest::Approx(1 - std::log2(1.5)).epsilon(1e-9));
    CHECK_THROWS_AS(exact_hash_entropy(u2, 11, 1), std::invalid_argument);
}

TEST_CASE("subspace enumeration counts") {
    // Galois numbers: total subspaces of F_2^n
    CHECK(enumerate_subspaces(1, 0).size() == 2);
    CHECK(enumerate_subspaces(2, 0).size() == 5);
    CHECK(enumerate_subspaces(3, 0).size() == 16);
    CHECK(enumerate_subspaces(4, 0).size() == 67);
    CHECK(enumerate_subspaces(5, 0).size() == 374);
    CHECK(enumerate_subspaces(6, 0).size() == 2825);
    // dimension filter: hyperplanes + full space
    CHECK(enumerate_subspaces(4, 3).size() == 15 + 1);
}

TEST_CASE("extraction bound verified exhaustively over a battery") {
    // every distribution, every output length: averaged entropy meets the
    // order-2 bound for the full linear family
    std::vector<FiniteDistribution> battery;
    for (int j = 0; j <= 4; ++j) { // uniform over 2^j-subsets of {0,1}^4
        std::vector<uint64_t> sup;
        for (uint64_t v = 0; v < (uint64_t{1} << j); ++v) sup.push_back(v * 3 % 16);
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        battery.push_back(FiniteDistribution::uniform_over(sup));
    }
    battery.push_back(FiniteDistribution{{0, 5, 9}, {0.6, 0.3, 0.1}});
    battery.push_back(FiniteDistribution{{1, 2, 3, 11}, {0.4, 0.3, 0.2, 0.1}});
    for (const auto& d : battery) {
        double c = renyi2(d);
        for (int out = 1; out <= 4; ++out) {
            double h = exact_hash_entropy(d, 4, out);
            CHECK(h >= pa_bound(out, c).log_form - 1e-12);
        }
    }
}
