#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eot/protocols.hpp"

namespace eot {

struct CapacityReport {
    double eps1 = 0, eps2 = 0;
    int N = 2;
    double c2p = 0, c1p = 0;
    double c2p_N = 0, c1p_N = 0;
    double degraded_lower = 0, degraded_upper = 0;
    std::string c1p_regime; // which branch of the piecewise formula applies
};

// Exact closed-form transfer capacities at (eps1, eps2); N >= 2.
CapacityReport capacities(double eps1, double eps2, int N = 2);

using Polygon = std::vector<std::pair<double, double>>; // CCW, no repeated endpoint

struct RateRegion {
    Polygon inner;
    Polygon outer;
    // the defining linear constraints, for containment checks
    double rb_max = 0, rc_max = 0, sum_inner = 0, sum_outer = 0;

    bool inner_contains(double rb, double rc, double tol = 1e-12) const;
    bool outer_contains(double rb, double rc, double tol = 1e-12) const;
};

// Achievable-rate-pair polygons for the two-receiver setup.
RateRegion rate_region(double eps1, double eps2);

enum class AttackKind { honest, bob_swap, bob_pack, alice_probe };

struct AttackSpec {
    AttackKind kind = AttackKind::honest;
    int64_t strength = 0; // swapped-index count for bob_swap
    double bias = 0.9;    // block bias for alice_probe

    static AttackSpec parse(const std::string& name, int64_t strength, double bias);
    std::string name() const;
};

struct TrialRow {
    int64_t trial = 0;
    bool aborted = false;
    std::string abort_site;
    bool detected = false;
    bool decoded = false;
    bool correct = false;
    bool second_correct = false;
    int64_t residual = 0;        // observer erasure count at the tracked key
    int64_t residual_margin = 0; // residual - key length
    double leak_bound_weak = 0;  // extraction-bound leakage for that key
    int64_t theta = -1;
};

struct Stats {
    ProtocolParams params;
    AttackSpec attack;
    uint64_t master_seed = 0;
    int64_t trials = 0;
    int64_t aborts = 0;
    std::map<std::string, int64_t> aborts_by_site;
    int64_t detected = 0;
    int64_t decoded = 0;
    int64_t correct = 0;
    int64_t second_correct = 0;
    int64_t residual_ok = 0; // residual >= key length among non-aborted
    double mean_residual_margin = 0;
    double mean_leak_bound_weak = 0;
    std::vector<TrialRow> rows;

    double abort_rate() const { return trials ? double(aborts) / double(trials) : 0; }
    double detection_rate() const { return trials ? double(detected) / double(trials) : 0; }
    double correct_rate() const { return decoded ? double(correct) / double(decoded) : 0; }
};

// Seeded trial fan-out; reduction is order-independent and the result is a
// deterministic function of (params, cfg, attack, trials, master_seed).
Stats monte_carlo(const ProtocolParams& params, const ChannelConfig& cfg,
                  const AttackSpec& attack, int64_t trials, uint64_t master_seed,
                  int threads = 0);

// One session under the given attack; used by monte_carlo and the bindings.
SessionOutcome run_session(const ProtocolParams& params, const PartyInputs& inputs,
                           const ChannelConfig& cfg, const AttackSpec& attack, Rng& rng,
                           const SessionOptions& opts = {});

// Channel topology implied by a variant.
ChannelConfig default_channel(const ProtocolParams& params);

} // namespace eot
