#include <doctest.h>

#include <memory>

#include "eot/ih.hpp"
#include "eot/transcript.hpp"

using namespace eot;

TEST_CASE("honest run basics") {
    Rng rng(17);
    SUBCASE("k=2 forced case") {
        // with the single full-rank 1x2 matrix [1 1], input (1,0) responds 1
        for (int t = 0; t < 20; ++t) {
            HonestIHSender sender(BitVec{1, 0});
            auto out = ih_run(2, sender, rng);
            CHECK(out.s0 != out.s1);
            REQUIRE(out.phi.has_value());
            CHECK(out.other(*out.phi) != BitVec{1, 0});
            if (out.challenge.get(0, 0) == 1 && out.challenge.get(0, 1) == 1) {
                CHECK(out.responses == BitVec{1});
                CHECK(out.s0 == BitVec{0, 1});
                CHECK(out.s1 == BitVec{1, 0});
                CHECK(*out.phi == 1);
            }
        }
    }
    SUBCASE("input always among outputs, outputs ordered") {
        for (int64_t k = 2; k <= 6; ++k) {
            for (int t = 0; t < 25; ++t) {
                BitVec s = BitVec::random(k, rng);
                HonestIHSender sender(s);
                auto out = ih_run(k, sender, rng);
                REQUIRE(out.phi.has_value());
                CHECK((out.s0 == s || out.s1 == s));
                CHECK(out.s0.lex_less(out.s1));
                CHECK(out.challenge.mul(out.s0) == out.responses);
                CHECK(out.challenge.mul(out.s1) == out.responses);
            }
        }
    }
    SUBCASE("rounds are recorded") {
        Transcript tr;
        HonestIHSender sender(BitVec{1, 0, 1});
        ih_run(3, sender, rng, &tr);
        int rows = 0, bits = 0;
        for (const auto& rec : tr.records()) {
            if (rec.label == "ih-row") ++rows;
            if (rec.label == "ih-bit") ++bits;
        }
        CHECK(rows == 2);
        CHECK(bits == 2);
    }
}

TEST_CASE("exhaustive checks at k = 2, 3, 4") {
    // full-rank (k-1) x k matrix counts: prod_{i<k-1} (2^k - 2^i)
    auto rep2 = ih_exhaustive_check(2);
    CHECK(rep2.matrix_count == 3);
    auto rep3 = ih_exhaustive_check(3);
    CHECK(rep3.matrix_count == 42);
    auto rep4 = ih_exhaustive_check(4);
    CHECK(rep4.matrix_count == 15 * 14 * 12);
    for (const auto& rep : {rep2, rep3, rep4}) {
        CHECK(rep.outputs_distinct);
        CHECK(rep.input_in_outputs);
        CHECK(rep.co_output_uniform);
        CHECK(rep.phi_balanced);
    }
}

TEST_CASE("adversarial hit rate") {
    Rng rng(23);
    SUBCASE("everything good") {
        std::vector<BitVec> good;
        for (uint64_t v = 0; v < 16; ++v) {
            BitVec s(4);
            for (int i = 0; i < 4; ++i) s.set(i, (v >> i) & 1);
            good.push_back(s);
        }
        double rate = ih_adversarial_hit_rate(
            4, good, [&] { return std::make_unique<GreedyIHSender>(good); }, 200, rng);
        CHECK(rate == doctest::Approx(1.0));
    }
    SUBCASE("empty set") {
        double rate = ih_adversarial_hit_rate(
            4, {}, [] { return std::make_unique<GreedyIHSender>(std::vector<BitVec>{}); }, 50,
            rng);
        CHECK(rate == doctest::Approx(0.0));
    }
    SUBCASE("greedy adversary stays under the constant") {
        const int64_t k = 8;
        std::vector<BitVec> good;
        for (uint64_t v = 0; v < 32; ++v) { // |G|/2^k = 2^-3
            BitVec s(k);
            for (int64_t i = 0; i < k; ++i) s.set(i, ((v * 0x9e3779b9u) >> i) & 1);
            bool dup = false;
            for (auto& g : good)
                if (g == s) dup = true;
            if (!dup) good.push_back(s);
        }
        double rate = ih_adversarial_hit_rate(
            k, good, [&] { return std::make_unique<GreedyIHSender>(good); }, 2000, rng);
        CHECK(rate <= 15.6805 * static_cast<double>(good.size()) / 256.0);
    }
}
