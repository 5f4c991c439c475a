#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eot/channel.hpp"

using namespace eot;

TEST_CASE("noiseless and fully erased channels") {
    Rng rng(5);
    BitVec x = BitVec::random(64, rng);
    ChannelConfig cfg{0.0, 0.0, Topology::independent};
    auto out = transmit(x, cfg, rng);
    REQUIRE(out.z.has_value());
    for (int64_t i = 0; i < 64; ++i) {
        CHECK(out.y.get(i) == x.get(i));
        CHECK(out.z->get(i) == x.get(i));
    }
    cfg.eps1 = 1.0;
    auto out2 = transmit(x, cfg, rng);
    CHECK(out2.y.count_erased() == 64);
}

TEST_CASE("unerased symbols always equal the input") {
    Rng rng(6);
    BitVec x = BitVec::random(200, rng);
    ChannelConfig cfg{0.4, 0.7, Topology::independent};
    auto out = transmit(x, cfg, rng);
    for (int64_t i = 0; i < 200; ++i) {
        if (!out.y.erased(i)) CHECK(out.y.get(i) == x.get(i));
        if (!out.z->erased(i)) CHECK(out.z->get(i) == x.get(i));
    }
}

TEST_CASE("degraded cascade: tap erasures contain receiver erasures") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        BitVec x = BitVec::random(128, rng);
        auto out = transmit(x, {0.3, 0.4, Topology::degraded}, rng);
        for (int64_t i = 0; i < 128; ++i)
            if (out.y.erased(i)) CHECK(out.z->erased(i));
    }
}

TEST_CASE("single topology emits no tap output") {
    Rng rng(8);
    auto out = transmit(BitVec::random(16, rng), {0.5, 0.5, Topology::single}, rng);
    CHECK_FALSE(out.z.has_value());
}

TEST_CASE("erasure_sets partitions positions") {
    TritString y = TritString::from_ascii("1e0");
    auto [e, eb] = erasure_sets(y);
    CHECK(e == std::vector<int64_t>{1});
    CHECK(eb == std::vector<int64_t>{0, 2});

    Rng rng(9);
    BitVec x = BitVec::random(300, rng);
    auto out = transmit(x, {0.25, 0, Topology::single}, rng);
    auto [e2, eb2] = erasure_sets(out.y);
    CHECK(static_cast<int64_t>(e2.size() + eb2.size()) == 300);
    TritString all_erased = TritString::from_ascii("eee");
    CHECK(erasure_sets(all_erased).first.size() == 3);
}

TEST_CASE("merged view prefers the receiver symbol") {
    TritString y = TritString::from_ascii("1ee");
    TritString z = TritString::from_ascii("e0e");
    CHECK(merge_psi(y, z).to_ascii() == "10e");

    TritString w = TritString::from_ascii("101");
    TritString none = TritString::from_ascii("eee");
    CHECK(merge_psi(w, none) == w);
    CHECK(merge_psi(none, w) == w);
    CHECK_THROWS_AS(merge_psi(TritString::from_ascii("1"), TritString::from_ascii("0")),
                    std::invalid_argument);
}

TEST_CASE("erasure frequency concentrates") {
    // at eps = 0.3 and n = 1e5, the erased fraction stays within
    // 4*sqrt(0.21/n) of 0.3 in nearly every run
    const int64_t n = 100000;
    const double eps = 0.3;
    const double width = 4 * std::sqrt(0.21 / static_cast<double>(n));
    Rng master(424242);
    int violations = 0;
    const int runs = 1000;
    for (int t = 0; t < runs; ++t) {
        Rng rng = master.derive(t);
        BitVec x(n); // all-zero input is fine, erasures are input-independent
        auto out = transmit(x, {eps, 0, Topology::single}, rng);
        double frac = static_cast<double>(out.y.count_erased()) / static_cast<double>(n);
        if (std::abs(frac - eps) > width) ++violations;
    }
    CHECK(violations <= 1); // >= 99.9% of runs in the window
}

TEST_CASE("ascii round trip") {
    TritString t = TritString::from_ascii("01e10e");
    CHECK(t.to_ascii() == "01e10e");
    CHECK(t.count_erased() == 2);
    CHECK(t.count_erased_at({2, 5}) == 2);
    CHECK(t.count_erased_at({0, 1}) == 0);
}

TEST_CASE("merged-view algebra") {
    Rng rng(31);
    BitVec x = BitVec::random(120, rng);
    auto out = transmit(x, {0.5, 0.5, Topology::independent}, rng);
    TritString psi = merge_psi(out.y, *out.z);
    // folding in either constituent again changes nothing
    CHECK(merge_psi(psi, out.y) == psi);
    CHECK(merge_psi(psi, *out.z) == psi);
    // erased exactly where both legs erased
    for (int64_t i = 0; i < 120; ++i)
        CHECK(psi.erased(i) == (out.y.erased(i) && out.z->erased(i)));
}
