#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eot/channel.hpp"
#include "eot/gf2.hpp"
#include "eot/hashing.hpp"
#include "eot/ih.hpp"
#include "eot/params.hpp"
#include "eot/transcript.hpp"

namespace eot {

struct PartyInputs {
    std::vector<BitVec> keys;        // the sender's N strings, key_len bits each
    int choice = 0;                  // receiver's choice in {0..N-1}
    std::vector<BitVec> second_keys; // independent_pair: the second string pair
    int second_choice = 0;
};

PartyInputs random_inputs(const ProtocolParams& params, Rng& rng);

struct SessionOptions {
    bool record_transcript = true;
};

// Full record of one protocol execution. Abort is an outcome, not an error.
struct SessionOutcome {
    ProtocolParams params;
    uint64_t seed = 0;
    bool aborted = false;
    std::string abort_site;

    PartyInputs inputs;
    std::optional<BitVec> k_hat;
    std::optional<BitVec> j_hat; // second receiver's estimate

    BitVec x;
    TritString y;
    std::optional<TritString> z;

    // Published selections, indexed by string: selections[i] feeds the key
    // that encrypts string i. Tuples keep sampling order; sets are ascending.
    std::vector<std::vector<int64_t>> selections;
    std::vector<HashFn> hashes;
    std::vector<BitVec> ciphertexts;

    // malicious-variant extras
    std::optional<IHOutcome> ih;
    std::optional<int> theta;
    std::vector<std::vector<int64_t>> check_subsets;  // J_0, J_1 (mal_le_half)
    std::vector<std::vector<int64_t>> stripped;       // L_i minus the overlap (mal_gt_half)

    // degraded extras
    std::vector<int64_t> gtilde, btilde, gl_sel, gs_sel;
    std::optional<BitVec> q_bits;
    std::optional<HashFn> pad_hash;

    // independent_pair extras
    std::vector<int64_t> bridge;
    std::vector<std::vector<int64_t>> second_selections;
    std::vector<BitVec> second_ciphertexts;

    Transcript transcript;
};

// A party's view: everything it saw or generated. Used by collusion merges
// and the leakage accounting.
struct View {
    std::set<Party> parties;
    bool has_x = false;               // knows the channel input exactly
    std::optional<TritString> channel; // merged channel observation
    std::vector<std::pair<std::string, std::string>> items; // labeled values
    const Transcript* transcript = nullptr;
};

View merge_views(const SessionOutcome& outcome, const std::set<Party>& parties);

// Positions of `selection` erased in the observers' merged channel view;
// equals the conditional order-2 entropy (in bits) of the input bits there.
int64_t residual_min_entropy(const SessionOutcome& outcome, const std::set<Party>& observers,
                             const std::vector<int64_t>& selection);

} // namespace eot
