#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eot/gf2.hpp"
#include "eot/params.hpp"

namespace eot {

// Exhaustive-enumeration configuration. The hash families are explicit,
// declared sub-families (enumerating the full linear family is infeasible
// beyond toy sizes); results are labeled with the restriction.
struct OracleConfig {
    Variant variant = Variant::c2p; // c2p or degraded
    int n = 6;
    double eps1 = 0.5, eps2 = 0.5;
    int sel_size = 2;  // per-selection size
    int key_len = 1;   // string length
    int gl_size = 0, gs_size = 0; // degraded pad/source extras
    std::vector<BitMatrix> key_family; // F_0 / F_1 candidates
    std::vector<BitMatrix> pad_family; // F_L candidates (degraded)
    std::string family_label;
    // When false, every view component is enumerated and serialized with no
    // conditional-independence reductions (tiny n only; used to validate the
    // reduced paths).
    bool reduced = true;
};

// Ready-made tiny instances.
OracleConfig oracle_config_c2p(int n = 6, double eps1 = 0.5, double eps2 = 0.5,
                               int sel_size = 2, int key_len = 1);
OracleConfig oracle_config_degraded(int n = 8, double eps1 = 0.25, double eps2 = 0.5,
                                    int sel_size = 1, int gl_size = 3, int gs_size = 1,
                                    int key_len = 1);

struct OracleBudgetError : std::runtime_error {
    explicit OracleBudgetError(uint64_t est)
        : std::runtime_error("oracle enumeration budget exceeded: ~" + std::to_string(est) +
                             " events (limit 2^30)"),
          estimate(est) {}
    uint64_t estimate;
};

struct LeakageReport {
    double p_abort = 0;
    double p_err_given_ok = 0; // exact, conditioned on no abort

    // extraction-protocol quantities (all conditioned on no abort)
    double i_u_aliceeve = 0;  // choice vs sender+tap views
    double i_kbar_bobeve = 0; // unpicked string vs receiver+tap views
    double i_all_eve = 0;     // strings+choice vs tap view
    double i_u_eve = 0;       // choice vs tap view alone
    double bound_kbar = 0;    // extraction-bound chain for i_kbar_bobeve
    double bound_all = 0;     // chain for i_all_eve

    // degraded-channel quantities
    double i_u_alice = 0;
    double bound_u_eve_pad_deficit = 0; // E[max(0, |Q| - pad-source erasures at the tap)]
    double bound_u_eve_log = 0;         // log-form bound on the pad leak

    uint64_t enum_size = 0;
    std::string family_label;
    std::map<std::string, std::string> method; // per-quantity tag
};

// Exact joint-distribution enumeration of one tiny protocol instance.
// Throws OracleBudgetError when the event-count estimate exceeds 2^30 and
// std::invalid_argument for n > 8 or malformed configs.
LeakageReport exact_leakage_oracle(const OracleConfig& cfg);

// Event-count estimate used for the budget check (also reported).
uint64_t oracle_enum_estimate(const OracleConfig& cfg);

// Toeplitz sub-family (all diagonal-constant matrices), a compact universal
// family used where full linear-family enumeration would blow the budget.
std::vector<BitMatrix> toeplitz_family(int64_t out_len, int64_t in_len);

// The two coordinate-projection maps {0,1}^2 -> {0,1}; minimal universal
// family for one-bit keys.
std::vector<BitMatrix> projection_pair_family();

} // namespace eot
