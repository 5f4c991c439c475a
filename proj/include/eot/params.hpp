#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eot/channel.hpp"

namespace eot {

enum class Variant {
    c2p,              // two-key extraction, both selections hidden from the tap
    c1p,              // relaxed bad-selection composition (single-party privacy)
    oneofN_2p,        // N-string generalization of c2p
    oneofN_1p,        // N-string generalization of c1p
    mal_le_half,      // malicious parties, receiver erasure <= 1/2
    mal_gt_half,      // malicious parties, receiver erasure > 1/2
    independent_pair, // two receivers, one transfer each
    degraded,         // cascade channel, selections sent encrypted
    two_party         // raw-pad baseline without extraction, no tap
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// Rate ceiling the variant can approach at (eps1, eps2, N).
double achievable_limit(Variant v, double eps1, double eps2, int N = 2);

struct SlackOptions {
    std::optional<double> delta;
    std::optional<double> delta_tilde;
    std::optional<double> delta_prime;
    // independent_pair: target rate for the second receiver (m_C / n).
    std::optional<double> r_second;
};

struct ProtocolParams {
    Variant variant = Variant::c2p;
    double eps1 = 0, eps2 = 0;
    int64_t n = 0;
    int N = 2;
    double r = 0; // requested rate
    double delta = 0, delta_tilde = 0, delta_prime = 0;
    double beta = 0, gamma = 0;

    int64_t sel_size = 0;    // per-selection block size
    int64_t key_len = 0;     // message/string length m
    int64_t erased_core = 0; // guaranteed-erased positions per hidden selection; pad length for two_party
    int64_t gamma_n = 0;     // check-tuple size (mal_le_half)
    int64_t m_bits = 0;      // interactive-hashing string length (malicious variants)

    // degraded-channel extras
    int64_t gl_size = 0, gs_size = 0, q_len = 0, hash_in = 0;

    // independent_pair extras
    int64_t bridge_len = 0;    // positions handed to the second transfer
    int64_t second_key_len = 0;

    // abort thresholds checked against |unerased| / |erased| of the block
    int64_t min_unerased = 0, min_erased = 0;
};

// Chooses slacks (when not given), derives all integer sizes by flooring,
// and verifies the variant's rate inequality still holds after rounding.
// Throws std::invalid_argument with a diagnostic when r is not achievable or
// n is too small for positive lengths.
ProtocolParams derive_params(Variant v, double r, double eps1, double eps2, int64_t n,
                             int N = 2, const SlackOptions& slacks = {});

// For mal_gt_half: block lengths with beta*n integral whose subset count
// C(n, beta*n) nearly fills 2^ceil(log2 C) keep the hashing-range abort rare.
// Scans [n_center - window, n_center + window] and returns the best length.
int64_t search_block_len_mal_gt(double beta, int64_t n_center, int64_t window);

} // namespace eot
