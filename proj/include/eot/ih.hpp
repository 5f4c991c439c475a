#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "eot/gf2.hpp"
#include "eot/rng.hpp"

namespace eot {

class Transcript;

// Sender side of the challenge/response rounds. respond() is called once per
// round with the receiver's challenge row; adaptive (malicious) senders may
// keep state across rounds.
class IHSender {
public:
    virtual ~IHSender() = default;
    virtual int respond(const BitVec& challenge_row) = 0;
    // The committed input, when the sender has one (used to label which
    // output equals the input). Malicious senders may return nullopt.
    virtual std::optional<BitVec> committed_input() const { return std::nullopt; }
};

class HonestIHSender : public IHSender {
public:
    explicit HonestIHSender(BitVec s) : s_(std::move(s)) {}
    int respond(const BitVec& challenge_row) override { return challenge_row.dot(s_); }
    std::optional<BitVec> committed_input() const override { return s_; }

private:
    BitVec s_;
};

// Adaptive adversary that answers each round so as to keep as many strings
// of a designated set consistent with the responses as possible.
class GreedyIHSender : public IHSender {
public:
    GreedyIHSender(std::vector<BitVec> target_set) : survivors_(std::move(target_set)) {}
    int respond(const BitVec& challenge_row) override;
    int64_t surviving() const { return static_cast<int64_t>(survivors_.size()); }

private:
    std::vector<BitVec> survivors_;
};

struct IHOutcome {
    BitVec s0, s1;            // the two outputs, s0 < s1 lexicographically
    std::optional<int> phi;   // index with s_phi == sender input (honest sender)
    BitMatrix challenge;      // the (k-1) x k full-rank matrix
    BitVec responses;         // the k-1 response bits

    const BitVec& other(int which) const { return which == 0 ? s1 : s0; }
};

// One run of the two-party hashing sub-protocol on k-bit strings: the
// receiver samples a uniform rank-(k-1) matrix, sends rows one at a time,
// collects one response bit each, and both sides solve the resulting affine
// system for its two solutions. Construction guarantees s0 != s1 and
// m*s0 = m*s1 = responses; both are asserted here.
IHOutcome ih_run(int64_t k, IHSender& sender, Rng& rng, Transcript* transcript = nullptr);

// Empirical probability that both outputs land in good_set under the given
// sender factory (fresh sender per trial).
double ih_adversarial_hit_rate(int64_t k,
                               const std::vector<BitVec>& good_set,
                               const std::function<std::unique_ptr<IHSender>()>& make_sender,
                               int64_t trials, Rng& rng);

// Exhaustive checks over every rank-(k-1) matrix and every input (tiny k).
struct IHExhaustiveReport {
    int64_t matrix_count = 0;        // number of rank-(k-1) matrices found
    bool outputs_distinct = false;   // s0 != s1 everywhere
    bool input_in_outputs = false;   // sender input always among outputs
    bool co_output_uniform = false;  // co-output counts equal over the 2^k - 1 others
    bool phi_balanced = false;       // each receiver view consistent with phi=0 and phi=1
};
IHExhaustiveReport ih_exhaustive_check(int64_t k);

} // namespace eot
