#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eot/channel.hpp"
#include "eot/codec.hpp"
#include "eot/gf2.hpp"
#include "eot/params.hpp"
#include "eot/rng.hpp"

namespace eot {

// Sender-side strategy: only controls the channel input block. The probe
// variant biases the block to exercise the choice-privacy guarantee.
class AliceStrategy {
public:
    virtual ~AliceStrategy() = default;
    virtual BitVec choose_block(int64_t n, Rng& rng) = 0;
};

class HonestAlice : public AliceStrategy {
public:
    BitVec choose_block(int64_t n, Rng& rng) override { return BitVec::random(n, rng); }
};

class ProbeAlice : public AliceStrategy {
public:
    explicit ProbeAlice(double one_bias) : bias_(one_bias) {}
    BitVec choose_block(int64_t n, Rng& rng) override {
        BitVec x(n);
        for (int64_t i = 0; i < n; ++i) x.set(i, rng.bernoulli(bias_));
        return x;
    }

private:
    double bias_;
};

// What the receiver-side strategy is allowed to see. psi is non-null only
// for strategies colluding with the eavesdropper; the engine grants it, a
// strategy cannot reach any other party's values.
struct BobView {
    const ProtocolParams* params;
    const TritString* y;
    const TritString* psi; // null unless colluding
};

// Strategy for the tuple-based malicious protocol (receiver erasure <= 1/2).
class MalLeBobStrategy {
public:
    virtual ~MalLeBobStrategy() = default;
    virtual bool colludes() const { return false; }
    virtual BitVec choose_string(const BobView& v, Rng& rng); // uniform m_bits by default
    // Fill the two tuples; check_slots are the positions inside the hidden
    // tuple that must come from unerased ground.
    virtual void build_tuples(const BobView& v, const std::vector<int64_t>& check_slots,
                              Rng& rng, std::vector<int64_t>& good_tuple,
                              std::vector<int64_t>& hidden_tuple);
    // Claimed input bit at `position` during the reveal step.
    virtual int reveal_bit(const BobView& v, int64_t position, Rng& rng);
};

// Moves `swaps` merged-view-unerased indices into the hidden tuple,
// displacing erased ones into the good tuple. Colludes with the tap.
class SwapBob : public MalLeBobStrategy {
public:
    explicit SwapBob(int64_t swaps) : swaps_(swaps) {}
    bool colludes() const override { return true; }
    void build_tuples(const BobView& v, const std::vector<int64_t>& check_slots, Rng& rng,
                      std::vector<int64_t>& good_tuple,
                      std::vector<int64_t>& hidden_tuple) override;

private:
    int64_t swaps_;
};

// Strategy for the hashing-selected protocol (receiver erasure > 1/2).
class MalGtBobStrategy {
public:
    virtual ~MalGtBobStrategy() = default;
    virtual bool colludes() const { return false; }
    // Chooses the committed string (biased over in-range encodings of
    // unerased-ground subsets for the honest party).
    virtual BitVec choose_string(const BobView& v, const SubsetCodec& codec, Rng& rng);
    virtual int reveal_bit(const BobView& v, int64_t position, Rng& rng);
};

// Commits to the subset with the most merged-view-unerased positions.
class PackBob : public MalGtBobStrategy {
public:
    bool colludes() const override { return true; }
    BitVec choose_string(const BobView& v, const SubsetCodec& codec, Rng& rng) override;
};

// Shared reveal logic: answer from the merged view when available, else from
// the receiver's own output, else guess a uniform bit.
int best_knowledge_bit(const BobView& v, int64_t position, Rng& rng);

// Uniform big integer below bound.
BigInt bigint_below(const BigInt& bound, Rng& rng);

} // namespace eot
