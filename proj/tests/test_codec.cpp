#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <map>

#include "eot/codec.hpp"

using namespace eot;

namespace {

// Independent oracle: enumerate all k-subsets of {0..n-1} in colex order.
std::vector<std::vector<int64_t>> colex_enumerate(int64_t n, int64_t k) {
    std::vector<std::vector<int64_t>> all;
    std::vector<int64_t> cur;
    // generate all subsets, then sort by colex (compare largest elements first)
    std::function<void(int64_t)> rec = [&](int64_t next) {
        if (static_cast<int64_t>(cur.size()) == k) {
            all.push_back(cur);
            return;
        }
        for (int64_t v = next; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        for (int64_t i = static_cast<int64_t>(a.size()) - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return all;
}

} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
    // brute-force cross-check against subset enumeration
    CHECK(BigInt(colex_enumerate(9, 4).size()) == binomial(9, 4));
    // big values stay exact
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(BigInt(1) << 40) == 40);
    CHECK(ceil_log2((BigInt(1) << 40) + 1) == 41);
}

TEST_CASE("bit-string integers are MSB-first so lexicographic = numeric") {
    CHECK(int_from_bits(BitVec{1, 0, 0}) == 4);
    CHECK(int_from_bits(BitVec{0, 1, 1}) == 3);
    CHECK(bits_from_int(4, 3) == BitVec{1, 0, 0});
    CHECK_THROWS_AS(bits_from_int(8, 3), std::invalid_argument);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        BitVec a = BitVec::random(9, rng), b = BitVec::random(9, rng);
        CHECK(a.lex_less(b) == (int_from_bits(a) < int_from_bits(b)));
    }
}

TEST_CASE("subset rank/unrank in colex order") {
    auto codec = make_subset_codec(5, 2);
    CHECK(codec.count == 10);
    CHECK(codec.m_bits == 4);
    CHECK(subset_unrank(codec, 0) == std::vector<int64_t>{0, 1});
    CHECK(subset_unrank(codec, 9) == std::vector<int64_t>{3, 4});
    CHECK_THROWS_AS(subset_unrank(codec, 10), std::invalid_argument);
    CHECK(subset_rank(codec, {0, 1}) == 0);
    CHECK(subset_rank(codec, {3, 4}) == 9);
    CHECK_THROWS_AS(subset_rank(codec, {0, 1, 2}), std::invalid_argument);

    SUBCASE("full enumeration agreement up to universe 12") {
        for (int64_t n : {4, 7, 12}) {
            for (int64_t k : {1, 2, 3}) {
                auto codec2 = make_subset_codec(n, k);
                auto all = colex_enumerate(n, k);
                REQUIRE(BigInt(all.size()) == codec2.count);
                for (size_t r = 0; r < all.size(); ++r) {
                    CHECK(subset_unrank(codec2, BigInt(static_cast<unsigned long>(r))) == all[r]);
                    CHECK(subset_rank(codec2, all[r]) == BigInt(static_cast<unsigned long>(r)));
                }
            }
        }
    }
}

TEST_CASE("onto map wraps modulo the subset count") {
    auto codec = make_subset_codec(6, 2); // 15 subsets, m_bits = 4
    CHECK(codec.m_bits == 4);
    CHECK(string_to_subset_onto(codec, bits_from_int(0, 4)) == subset_unrank(codec, 0));
    CHECK(string_to_subset_onto(codec, bits_from_int(15, 4)) == subset_unrank(codec, 0));

    std::map<std::vector<int64_t>, int64_t> hits;
    for (uint64_t v = 0; v < 16; ++v)
        hits[string_to_subset_onto(codec, bits_from_int(BigInt(v), 4))]++;
    CHECK(hits.size() == 15);
    for (const auto& [s, c] : hits) {
        CHECK(c >= 1); // floor(16/15)
        CHECK(c <= 2); // ceil(16/15)
    }
}

TEST_CASE("range membership is the integer comparison") {
    auto codec = make_subset_codec(6, 2);
    CHECK(string_in_codec_range(codec, bits_from_int(14, 4)));
    CHECK_FALSE(string_in_codec_range(codec, bits_from_int(15, 4)));
}

TEST_CASE("rank/unrank stay mutually inverse at protocol scale") {
    // the hashing-selected protocol ranks ~500-element subsets of ~2000
    auto codec = make_subset_codec(2000, 500);
    CHECK(codec.m_bits >= 1600); // a genuinely big integer range
    Rng rng(77);
    for (int t = 0; t < 5; ++t) {
        BigInt r = 0;
        for (int w = 0; w < (codec.m_bits + 63) / 64; ++w) {
            r <<= 64;
            r |= BigInt(rng.next_u64());
        }
        r %= codec.count;
        auto s = subset_unrank(codec, r);
        CHECK(static_cast<int64_t>(s.size()) == 500);
        CHECK(subset_rank(codec, s) == r);
        for (size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
        CHECK(s.back() < 2000);
    }
}
