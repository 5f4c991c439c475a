#pragma once

#include "eot/session.hpp"
#include "eot/strategies.hpp"

namespace eot {

// Honest-but-curious sessions. Each run consumes its own Rng; identical
// (params, inputs, cfg, seed) replays produce identical transcripts.
SessionOutcome run_c2p(const ProtocolParams& params, const PartyInputs& inputs,
                       const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts = {});
SessionOutcome run_c1p(const ProtocolParams& params, const PartyInputs& inputs,
                       const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts = {});
SessionOutcome run_one_of_n(const ProtocolParams& params, const PartyInputs& inputs,
                            const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts = {});
SessionOutcome run_two_party(const ProtocolParams& params, const PartyInputs& inputs,
                             const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts = {});
SessionOutcome run_independent_pair(const ProtocolParams& params, const PartyInputs& inputs,
                                    const ChannelConfig& cfg, Rng& rng,
                                    const SessionOptions& opts = {});
SessionOutcome run_degraded(const ProtocolParams& params, const PartyInputs& inputs,
                            const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts = {});

// Malicious-model sessions with pluggable strategies.
SessionOutcome run_malicious_le_half(const ProtocolParams& params, const PartyInputs& inputs,
                                     AliceStrategy& alice, MalLeBobStrategy& bob,
                                     const ChannelConfig& cfg, Rng& rng,
                                     const SessionOptions& opts = {});
SessionOutcome run_malicious_gt_half(const ProtocolParams& params, const PartyInputs& inputs,
                                     AliceStrategy& alice, MalGtBobStrategy& bob,
                                     const ChannelConfig& cfg, Rng& rng,
                                     const SessionOptions& opts = {});

// Abort sites where the sender catches a cheating receiver.
bool is_detection_site(const std::string& site);

} // namespace eot
