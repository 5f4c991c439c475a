// Acceptance suite: one check per release criterion, each printing a single
// PASS/FAIL line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "eot/analysis.hpp"
#include "eot/hashing.hpp"
#include "eot/ih.hpp"
#include "eot/io.hpp"
#include "eot/oracle.hpp"
#include "eot/protocols.hpp"

using namespace eot;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, double seconds) {
    std::printf("%s  [%2d] %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
void criterion(int id, const std::string& what, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, ok, what + (detail.empty() ? "" : " -- " + detail), secs);
}

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

// ---- criterion bodies ----

bool crit1(std::string& detail) {
    bool ok = close(capacities(0.5, 0.5).c2p, 0.25);
    ok = ok && close(capacities(0.2, 0.6).c1p, 0.2);
    ok = ok && close(capacities(0.4, 0.6).c1p, 0.3);
    ok = ok && close(capacities(0.7, 0.6).c1p, 0.18);
    for (int i = 1; i <= 99; ++i) {
        double e1 = i / 100.0;
        ok = ok && close(capacities(e1, 1.0).c2p, std::min(e1, 1 - e1));
    }
    detail = "pairwise formulas + no-tap reduction on a 99-point grid";
    return ok;
}

bool crit2(std::string& detail) {
    bool ok = true;
    for (int i = 1; i < 19; ++i)
        for (int j = 1; j < 19; ++j) {
            double e1 = i / 19.0, e2 = j / 19.0;
            auto c2 = capacities(e1, e2, 2);
            ok = ok && close(c2.c2p_N, c2.c2p) && close(c2.c1p_N, c2.c1p);
            double prev2 = c2.c2p_N, prev1 = c2.c1p_N;
            for (int N = 3; N <= 8; ++N) {
                auto cn = capacities(e1, e2, N);
                ok = ok && cn.c2p_N <= prev2 + 1e-12 && cn.c1p_N <= prev1 + 1e-12;
                prev2 = cn.c2p_N;
                prev1 = cn.c1p_N;
            }
        }
    detail = "N=2 reduction and monotonicity on an 18x18 grid, N up to 8";
    return ok;
}

bool crit3(std::string& detail) {
    bool ok = true;
    for (int i = 1; i < 20; ++i)
        for (int j = 1; j < 20; ++j) {
            auto r = rate_region(i / 20.0, j / 20.0);
            for (auto [x, y] : r.inner) ok = ok && r.outer_contains(x, y, 1e-12);
        }
    auto r = rate_region(0.4, 0.7);
    ok = ok && close(r.rc_max, 0.12) && close(r.rb_max, 0.28) && close(r.sum_inner, 0.28);
    bool corner = false;
    for (auto [x, y] : r.inner)
        if (close(x, 0.16) && close(y, 0.12)) corner = true;
    ok = ok && corner;
    detail = "inner in outer on a 19x19 grid; breakpoints 0.12/0.16/0.28 at (0.4,0.7)";
    return ok;
}

bool crit4(std::string& detail) {
    bool ok = close(capacities(0.1, 0.6).degraded_lower, 0.1) &&
              close(capacities(0.1, 0.6).degraded_upper, 0.1);
    for (int i = 1; i < 40; ++i)
        for (int j = 1; j < 40; ++j) {
            double e1 = i / 40.0, e2 = j / 40.0;
            auto c = capacities(e1, e2);
            ok = ok && c.degraded_lower <= c.degraded_upper + 1e-12;
            if (e1 <= e2 * (1 - e1) / 3.0)
                ok = ok && close(c.degraded_lower, c.degraded_upper);
        }
    detail = "cascade bounds meet whenever eps1 <= eps2(1-eps1)/3; value 0.1 at (0.1,0.6)";
    return ok;
}

bool crit5(std::string& detail) {
    bool ok = true;
    // exact uniformity: every rank-(k-1) challenge matrix times every input
    auto rep = ih_exhaustive_check(3);
    ok = ok && rep.outputs_distinct && rep.input_in_outputs && rep.co_output_uniform &&
         rep.phi_balanced && rep.matrix_count == 42;
    // constructed-outcome invariants on random runs
    Rng rng(5001);
    for (int t = 0; t < 200; ++t) {
        BitVec s = BitVec::random(9, rng);
        HonestIHSender sender(s);
        auto out = ih_run(9, sender, rng);
        ok = ok && out.s0 != out.s1 && out.phi.has_value();
    }
    // greedy adaptive sender against the hit-rate constant
    Rng arng(5002);
    for (int64_t k : {8, 10, 12}) {
        for (int shift : {3, 5}) {
            std::vector<BitVec> good;
            int64_t want = int64_t{1} << (k - shift);
            for (uint64_t v = 0; static_cast<int64_t>(good.size()) < want; ++v) {
                BitVec g(k);
                uint64_t h = (v * 0x9e3779b97f4a7c15ULL) >> 11;
                for (int64_t i = 0; i < k; ++i) g.set(i, (h >> i) & 1);
                bool dup = false;
                for (auto& e : good)
                    if (e == g) dup = true;
                if (!dup) good.push_back(g);
            }
            double rate = ih_adversarial_hit_rate(
                k, good, [&] { return std::make_unique<GreedyIHSender>(good); }, 10000, arng);
            ok = ok && rate <= 15.6805 * std::exp2(static_cast<double>(-shift));
        }
    }
    detail = "42-matrix exhaustive uniformity at k=3; greedy sender under 15.6805*|G|/2^k";
    return ok;
}

bool crit6(std::string& detail) {
    bool ok = true;
    int configs = 0;
    for (int in = 2; in <= 6; ++in) {
        std::vector<FiniteDistribution> battery;
        battery.push_back(FiniteDistribution::point_mass(uint64_t(in) % (1ull << in)));
        for (int j = 0; j <= in; ++j) {
            std::vector<uint64_t> sup;
            for (uint64_t v = 0; v < (uint64_t{1} << in) && sup.size() < (size_t{1} << j); ++v)
                sup.push_back((v * 2654435761u) % (uint64_t{1} << in));
            std::sort(sup.begin(), sup.end());
            sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
            battery.push_back(FiniteDistribution::uniform_over(sup));
        }
        battery.push_back(FiniteDistribution{{0, 1, uint64_t(1) << (in - 1)}, {0.5, 0.3, 0.2}});
        battery.push_back(FiniteDistribution{{1, 2, 3}, {0.7, 0.2, 0.1}});
        for (const auto& d : battery) {
            double c = renyi2(d);
            for (int out = 1; out <= in; ++out) {
                double h = exact_hash_entropy(d, in, out);
                ok = ok && h >= pa_bound(out, c).log_form - 1e-12;
                ++configs;
            }
        }
    }
    detail = "averaged output entropy meets the order-2 bound on " + std::to_string(configs) +
             " (distribution, width) configurations";
    return ok;
}

bool crit7(std::string& detail) {
    SlackOptions s;
    s.delta = 0.025;
    s.delta_tilde = 0.02;
    auto params = derive_params(Variant::c2p, 0.2, 0.5, 0.5, 20000, 2, s);
    auto st = monte_carlo(params, default_channel(params), {}, 200, 20240501);
    bool ok = st.correct == st.decoded && st.decoded == st.trials - st.aborts;
    ok = ok && st.abort_rate() <= 0.01;
    int64_t nonabort = st.trials - st.aborts;
    ok = ok && st.residual_ok * 100 >= nonabort * 99;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "correct %lld/%lld, abort %.3f, key-covered residual %lld/%lld",
                  static_cast<long long>(st.correct), static_cast<long long>(st.decoded),
                  st.abort_rate(), static_cast<long long>(st.residual_ok),
                  static_cast<long long>(nonabort));
    detail = buf;
    return ok;
}

bool crit8(std::string& detail) {
    OracleConfig cfg = oracle_config_c2p(6, 0.5, 0.5, 2, 1);
    auto rep = exact_leakage_oracle(cfg);
    bool ok = std::abs(rep.i_u_aliceeve) <= 1e-9;
    ok = ok && rep.p_err_given_ok == 0.0;
    ok = ok && rep.i_kbar_bobeve <= rep.bound_kbar + 1e-9;
    ok = ok && rep.i_all_eve <= rep.bound_all + 1e-9;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "i_u=%.2e, i_kbar=%.4f<=%.4f, i_all=%.4f<=%.4f (%s)", rep.i_u_aliceeve,
                  rep.i_kbar_bobeve, rep.bound_kbar, rep.i_all_eve, rep.bound_all,
                  rep.family_label.c_str());
    detail = buf;
    return ok;
}

bool crit9(std::string& detail) {
    SlackOptions s;
    s.delta = 0.05;
    s.delta_tilde = 0.02;
    auto params = derive_params(Variant::c1p, 0.24, 0.4, 0.6, 20000, 2, s);
    auto st = monte_carlo(params, default_channel(params), {}, 100, 20240502);
    bool ok = st.correct == st.decoded && st.decoded == st.trials - st.aborts;
    // the hidden selection carries at least floor(n r) receiver-erased positions
    for (const auto& row : st.rows)
        if (!row.aborted) ok = ok && row.residual >= params.erased_core;
    char buf[120];
    std::snprintf(buf, sizeof buf, "correct %lld/%lld, erased core >= %lld in every run",
                  static_cast<long long>(st.correct), static_cast<long long>(st.decoded),
                  static_cast<long long>(params.erased_core));
    detail = buf;
    return ok;
}

bool crit10(std::string& detail) {
    SlackOptions s;
    s.delta = 0.03;
    s.delta_tilde = 0.015;
    s.delta_prime = 0.005;
    auto params = derive_params(Variant::mal_le_half, 0.015, 0.4, 0.5, 3000, 2, s);
    auto honest = monte_carlo(params, default_channel(params), {}, 200, 20240503);
    AttackSpec swap = AttackSpec::parse("bob-swap", 300, 0); // ceil(0.1 n)
    auto attacked = monte_carlo(params, default_channel(params), swap, 200, 20240504);
    bool ok = honest.abort_rate() <= 0.02;
    ok = ok && honest.correct == honest.decoded;
    ok = ok && attacked.detection_rate() >= 0.95;
    char buf[120];
    std::snprintf(buf, sizeof buf, "honest abort %.3f, swap detection %.3f",
                  honest.abort_rate(), attacked.detection_rate());
    detail = buf;
    return ok;
}

bool crit11(std::string& detail) {
    SlackOptions s;
    s.delta = 0.05;
    s.delta_prime = 0.05;
    int64_t n = search_block_len_mal_gt(0.25, 2000, 120);
    auto params = derive_params(Variant::mal_gt_half, 0.25 * 0.15, 0.7, 0.5, n, 2, s);
    auto honest = monte_carlo(params, default_channel(params), {}, 200, 20240505);
    AttackSpec pack = AttackSpec::parse("bob-pack", 0, 0);
    auto attacked = monte_carlo(params, default_channel(params), pack, 200, 20240506);
    bool ok = honest.abort_rate() <= 0.10;
    ok = ok && honest.correct == honest.decoded;
    int64_t threshold = static_cast<int64_t>(
        std::floor(params.sel_size * (params.eps1 * params.eps2 - 2 * params.delta)));
    double leak_target =
        std::exp2(-(params.delta + params.delta_prime) * static_cast<double>(params.sel_size)) /
        std::log(2.0);
    int64_t nonabort = 0, covered = 0;
    for (const auto& row : attacked.rows) {
        if (row.aborted) continue;
        ++nonabort;
        if (row.residual >= threshold && row.leak_bound_weak <= leak_target + 1e-12) ++covered;
    }
    ok = ok && nonabort > 0 && covered * 100 >= nonabort * 95;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "n=%lld, honest abort %.3f; packed runs with a key at residual>=%lld: "
                  "%lld/%lld (leak bound 2^-%lld-ish)",
                  static_cast<long long>(n), honest.abort_rate(),
                  static_cast<long long>(threshold), static_cast<long long>(covered),
                  static_cast<long long>(nonabort),
                  static_cast<long long>((params.delta + params.delta_prime) * params.sel_size));
    detail = buf;
    return ok;
}

bool crit12(std::string& detail) {
    SlackOptions s;
    s.delta = 0.05;
    s.delta_tilde = 0.02;
    s.r_second = 0.1;
    auto params = derive_params(Variant::independent_pair, 0.1, 0.7, 0.5, 4000, 2, s);
    auto st = monte_carlo(params, default_channel(params), {}, 100, 20240507);
    int64_t nonabort = st.trials - st.aborts;
    bool ok = st.correct == st.decoded && st.decoded == nonabort;
    ok = ok && st.second_correct == nonabort;
    auto region = rate_region(0.7, 0.5);
    double rb = static_cast<double>(params.key_len) / static_cast<double>(params.n);
    double rc = static_cast<double>(params.second_key_len) / static_cast<double>(params.n);
    ok = ok && region.inner_contains(rb, rc, 1e-9);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "both transfers correct in %lld/%lld runs; pair (%.4f, %.4f) inside the "
                  "inner region",
                  static_cast<long long>(st.second_correct), static_cast<long long>(nonabort),
                  rb, rc);
    detail = buf;
    return ok;
}

bool crit13(std::string& detail) {
    SlackOptions s;
    s.delta = 0.01;
    s.delta_tilde = 0.01;
    auto params = derive_params(Variant::degraded, 0.08, 0.1, 0.6, 30000, 2, s);
    auto st = monte_carlo(params, default_channel(params), {}, 100, 20240508);
    bool ok = st.correct == st.decoded && st.decoded == st.trials - st.aborts;
    // reconstruction exactness: the engine halts a session whose selection
    // round-trip fails; verify explicitly on replayed sessions too
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        auto inputs = random_inputs(params, rng);
        auto out = run_degraded(params, inputs, default_channel(params), rng);
        if (out.aborted) continue;
        ok = ok && out.q_bits.has_value() &&
             out.q_bits->size() == static_cast<int64_t>(2 * params.sel_size);
    }
    OracleConfig cfg = oracle_config_degraded(8, 0.25, 0.5, 1, 3, 1, 1);
    auto rep = exact_leakage_oracle(cfg);
    ok = ok && std::abs(rep.i_u_alice) <= 1e-9;
    ok = ok && rep.p_err_given_ok == 0.0;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "correct %lld/%lld; oracle i_u_alice=%.2e, i_u_eve=%.4f "
                  "(pad-deficit bound %.4f)",
                  static_cast<long long>(st.correct), static_cast<long long>(st.decoded),
                  rep.i_u_alice, rep.i_u_eve, rep.bound_u_eve_pad_deficit);
    detail = buf;
    return ok;
}

bool crit14(std::string& detail) {
    SlackOptions s;
    s.delta = 0.1;
    s.delta_tilde = 0.04;
    auto params = derive_params(Variant::c2p, 0.16, 0.5, 0.5, 1000, 2, s);
    auto cfg = default_channel(params);
    bool ok = true;
    for (uint64_t seed : {1ull, 31337ull}) {
        auto a = monte_carlo(params, cfg, {}, 50, seed);
        auto b = monte_carlo(params, cfg, {}, 50, seed);
        ok = ok && stats_summary_csv(a) == stats_summary_csv(b);
        ok = ok && stats_rows_csv(a) == stats_rows_csv(b);
        ok = ok && stats_json(a) == stats_json(b);
    }
    OracleConfig ocfg = oracle_config_c2p(5, 0.5, 0.5, 2, 1);
    ok = ok && leakage_json(ocfg, exact_leakage_oracle(ocfg)) ==
                   leakage_json(ocfg, exact_leakage_oracle(ocfg));
    AttackSpec swap = AttackSpec::parse("bob-swap", 30, 0);
    SlackOptions ms;
    ms.delta = 0.03;
    ms.delta_tilde = 0.015;
    ms.delta_prime = 0.005;
    auto mp = derive_params(Variant::mal_le_half, 0.015, 0.4, 0.5, 600, 2, ms);
    ok = ok && stats_rows_csv(monte_carlo(mp, default_channel(mp), swap, 20, 5)) ==
                   stats_rows_csv(monte_carlo(mp, default_channel(mp), swap, 20, 5));
    detail = "summary/raw/json outputs byte-identical across repeated seeded runs";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    auto want = [&](int id) { return only == 0 || only == id; };

    if (want(1)) criterion(1, "pairwise capacity formulas", crit1);
    if (want(2)) criterion(2, "1-of-N capacity consistency", crit2);
    if (want(3)) criterion(3, "two-receiver rate-region polygons", crit3);
    if (want(4)) criterion(4, "cascade-channel capacity bounds", crit4);
    if (want(5)) criterion(5, "interactive hashing properties", crit5);
    if (want(6)) criterion(6, "extraction bound, exhaustive battery", crit6);
    if (want(7)) criterion(7, "two-sided extraction protocol end-to-end", crit7);
    if (want(8)) criterion(8, "exact leakage enumeration, extraction protocol", crit8);
    if (want(9)) criterion(9, "relaxed-composition protocol structure", crit9);
    if (want(10)) criterion(10, "tuple protocol swap-attack detection", crit10);
    if (want(11)) criterion(11, "hashing-selected protocol under packing", crit11);
    if (want(12)) criterion(12, "paired transfers inside the rate region", crit12);
    if (want(13)) criterion(13, "cascade-channel protocol and its oracle", crit13);
    if (want(14)) criterion(14, "seeded determinism of output files", crit14);

    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
