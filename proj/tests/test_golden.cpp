#include <doctest.h>

#include <fstream>
#include <sstream>

#include "eot/analysis.hpp"
#include "eot/protocols.hpp"

using namespace eot;

// Pins serialization and generator-consumption order: a refactor that
// changes either breaks this byte-for-byte comparison.
TEST_CASE("tiny extraction run matches the frozen transcript") {
    SlackOptions s;
    s.delta = 0.1;
    s.delta_tilde = 0.07;
    auto params = derive_params(Variant::c2p, 0.16, 0.5, 0.5, 24, 2, s);
    REQUIRE(params.sel_size == 9);
    REQUIRE(params.key_len == 2);
    Rng rng(1);
    auto inputs = random_inputs(params, rng);
    auto out = run_c2p(params, inputs, default_channel(params), rng);
    REQUIRE_FALSE(out.aborted);
    CHECK(*out.k_hat == inputs.keys[inputs.choice]);

    std::ifstream f(std::string(EOT_SOURCE_DIR) + "/tests/golden/c2p_n24_seed1.txt",
                    std::ios::binary);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(out.transcript.serialize() == buf.str());
}
