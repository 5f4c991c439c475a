// otsim: batch experiment runner for the transfer-protocol library.
//
// Subcommands:
//   capacity  closed-form capacity evaluation (single point or grid)
//   simulate  seeded protocol trials with CSV/JSON outputs
//   oracle    exhaustive tiny-instance leakage enumeration
//   ih-check  interactive-hashing property suite
//
// Exit codes: 0 success, 2 invalid configuration, 3 budget/resource,
// 4 property-suite failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eot/analysis.hpp"
#include "eot/ih.hpp"
#include "eot/io.hpp"
#include "eot/oracle.hpp"

using namespace eot;
using nlohmann::json;

namespace {

struct SimulateConfig {
    std::string variant = "c2p";
    double eps1 = 0.5, eps2 = 0.5;
    double rate = 0;       // absolute rate; 0 = use rate_frac
    double rate_frac = 0.8; // fraction of the variant's achievable limit
    std::vector<int64_t> n_list = {2000};
    int N = 2;
    int64_t trials = 100;
    std::string attack = "honest";
    int64_t attack_strength = 0;
    double attack_bias = 0.9;
    uint64_t master_seed = 1;
    std::string out;           // summary path ('' = stdout)
    std::string raw_out;       // optional per-trial CSV
    std::string format = "csv"; // csv | json
    double delta = -1, delta_tilde = -1, delta_prime = -1, r_second = -1;
    int threads = 0;
};

void load_config_file(const std::string& path, SimulateConfig& c) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    json j = json::parse(f);
    if (j.contains("variant")) c.variant = j["variant"];
    if (j.contains("eps1")) c.eps1 = j["eps1"];
    if (j.contains("eps2")) c.eps2 = j["eps2"];
    if (j.contains("rate")) c.rate = j["rate"];
    if (j.contains("rate_frac")) c.rate_frac = j["rate_frac"];
    if (j.contains("n")) {
        c.n_list.clear();
        if (j["n"].is_array())
            for (auto& v : j["n"]) c.n_list.push_back(v.get<int64_t>());
        else c.n_list.push_back(j["n"].get<int64_t>());
    }
    if (j.contains("N")) c.N = j["N"];
    if (j.contains("trials")) c.trials = j["trials"];
    if (j.contains("attack")) c.attack = j["attack"];
    if (j.contains("attack_strength")) c.attack_strength = j["attack_strength"];
    if (j.contains("attack_bias")) c.attack_bias = j["attack_bias"];
    if (j.contains("master_seed")) c.master_seed = j["master_seed"];
    if (j.contains("out")) c.out = j["out"];
    if (j.contains("raw_out")) c.raw_out = j["raw_out"];
    if (j.contains("format")) c.format = j["format"];
    if (j.contains("delta")) c.delta = j["delta"];
    if (j.contains("delta_tilde")) c.delta_tilde = j["delta_tilde"];
    if (j.contains("delta_prime")) c.delta_prime = j["delta_prime"];
    if (j.contains("r_second")) c.r_second = j["r_second"];
    if (j.contains("threads")) c.threads = j["threads"];
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) std::cout << content;
    else write_file(path, content);
}

int cmd_capacity(double eps1, double eps2, int N, double grid_step, const std::string& out) {
    std::string content = "# version: ";
    content += kArtifactVersion;
    content += "\n# config: {\"cmd\":\"capacity\",\"eps1\":" + format_double(eps1) +
               ",\"eps2\":" + format_double(eps2) + ",\"N\":" + std::to_string(N) +
               ",\"grid_step\":" + format_double(grid_step) + "}\n";
    content += capacity_csv_header();
    if (grid_step > 0) {
        for (double e1 = grid_step; e1 < 1.0 - grid_step / 2; e1 += grid_step)
            for (double e2 = grid_step; e2 < 1.0 - grid_step / 2; e2 += grid_step)
                content += capacity_csv_row(capacities(e1, e2, N));
    } else {
        content += capacity_csv_row(capacities(eps1, eps2, N));
    }
    emit(out, content);
    return 0;
}

int cmd_simulate(const SimulateConfig& c) {
    Variant v = variant_from_name(c.variant);
    AttackSpec attack = AttackSpec::parse(c.attack, c.attack_strength, c.attack_bias);
    SlackOptions slacks;
    if (c.delta >= 0) slacks.delta = c.delta;
    if (c.delta_tilde >= 0) slacks.delta_tilde = c.delta_tilde;
    if (c.delta_prime >= 0) slacks.delta_prime = c.delta_prime;
    if (c.r_second >= 0) slacks.r_second = c.r_second;

    std::string summary, raw;
    for (int64_t n : c.n_list) {
        double rate = c.rate > 0 ? c.rate : c.rate_frac * achievable_limit(v, c.eps1, c.eps2, c.N);
        int64_t block = n;
        if (v == Variant::mal_gt_half) {
            double beta = 1 - c.eps1 - (c.delta >= 0 ? c.delta : 0.05);
            block = search_block_len_mal_gt(beta, n, std::max<int64_t>(20, n / 20));
        }
        ProtocolParams params = derive_params(v, rate, c.eps1, c.eps2, block, c.N, slacks);
        Stats st = monte_carlo(params, default_channel(params), attack, c.trials, c.master_seed,
                               c.threads);
        if (c.format == "json") summary += stats_json(st);
        else summary += stats_summary_csv(st);
        if (!c.raw_out.empty()) raw += stats_rows_csv(st);
    }
    emit(c.out, summary);
    if (!c.raw_out.empty()) write_file(c.raw_out, raw);
    return 0;
}

int cmd_oracle(const std::string& variant, int n, double eps1, double eps2, int sel, int key_len,
               int gl, int gs, const std::string& out) {
    OracleConfig cfg;
    if (variant == "c2p") cfg = oracle_config_c2p(n, eps1, eps2, sel, key_len);
    else if (variant == "degraded") cfg = oracle_config_degraded(n, eps1, eps2, sel, gl, gs, key_len);
    else throw std::invalid_argument("oracle supports the c2p and degraded variants");
    LeakageReport rep = exact_leakage_oracle(cfg);
    emit(out, leakage_json(cfg, rep));
    return 0;
}

int cmd_ih_check(int64_t k_max, int64_t trials, uint64_t seed) {
    bool all_ok = true;
    auto line = [&](const char* prop, bool ok, const std::string& detail) {
        std::printf("%s  %-12s %s\n", ok ? "PASS" : "FAIL", prop, detail.c_str());
        all_ok = all_ok && ok;
    };
    for (int64_t k = 2; k <= std::min<int64_t>(k_max, 4); ++k) {
        auto rep = ih_exhaustive_check(k);
        line("distinct", rep.outputs_distinct, "k=" + std::to_string(k));
        line("contains", rep.input_in_outputs, "k=" + std::to_string(k));
        line("co-uniform", rep.co_output_uniform,
             "k=" + std::to_string(k) + " matrices=" + std::to_string(rep.matrix_count));
        line("label-even", rep.phi_balanced, "k=" + std::to_string(k));
    }
    Rng rng(seed);
    for (int64_t k : {8, 10, 12}) {
        if (k > k_max) break;
        for (int shift : {3, 5}) {
            std::vector<BitVec> good;
            int64_t want = int64_t{1} << (k - shift);
            for (uint64_t v = 0; static_cast<int64_t>(good.size()) < want; ++v) {
                BitVec s(k);
                uint64_t h = (v * 0x9e3779b97f4a7c15ULL) >> 13;
                for (int64_t i = 0; i < k; ++i) s.set(i, (h >> i) & 1);
                bool dup = false;
                for (auto& g : good)
                    if (g == s) dup = true;
                if (!dup) good.push_back(s);
            }
            double rate = ih_adversarial_hit_rate(
                k, good, [&] { return std::make_unique<GreedyIHSender>(good); }, trials, rng);
            double bound = 15.6805 * std::exp2(static_cast<double>(-shift));
            char detail[128];
            std::snprintf(detail, sizeof detail, "k=%lld ratio=2^-%d rate=%.5f bound=%.5f",
                          static_cast<long long>(k), shift, rate, bound);
            line("adversary", rate <= bound, detail);
        }
    }
    return all_ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transfer-protocol simulation harness"};
    app.require_subcommand(1);

    // capacity
    auto* cap = app.add_subcommand("capacity", "evaluate closed-form capacities");
    double eps1 = 0.5, eps2 = 0.5, grid = 0;
    int N = 2;
    std::string out;
    cap->add_option("--eps1", eps1, "receiver-leg erasure probability");
    cap->add_option("--eps2", eps2, "tap-leg erasure probability");
    cap->add_option("--grid-step", grid, "emit a grid with this step instead of one point");
    cap->add_option("--branches", N, "string count for the 1-of-N formulas");
    cap->add_option("--out", out, "output path (default stdout)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run seeded protocol trials");
    SimulateConfig sc;
    std::string config_path;
    sim->add_option("--config", config_path, "JSON config file (flags override)");
    sim->add_option("--variant", sc.variant, "protocol variant");
    sim->add_option("--eps1", sc.eps1, "receiver-leg erasure probability");
    sim->add_option("--eps2", sc.eps2, "tap-leg erasure probability");
    sim->add_option("--rate", sc.rate, "absolute target rate");
    sim->add_option("--rate-frac", sc.rate_frac, "rate as a fraction of the achievable limit");
    sim->add_option("--block-len", sc.n_list, "block length(s)");
    sim->add_option("--branches", sc.N, "string count (1-of-N variants)");
    sim->add_option("--trials", sc.trials, "trial count");
    sim->add_option("--attack", sc.attack, "honest | bob-swap | bob-pack | alice-probe");
    sim->add_option("--attack-strength", sc.attack_strength, "swapped-index count");
    sim->add_option("--attack-bias", sc.attack_bias, "probe block bias");
    sim->add_option("--master-seed", sc.master_seed, "seed for the whole run");
    sim->add_option("--out", sc.out, "summary output path (default stdout)");
    sim->add_option("--raw-out", sc.raw_out, "optional per-trial CSV path");
    sim->add_option("--format", sc.format, "csv | json");
    sim->add_option("--delta", sc.delta, "slack override");
    sim->add_option("--delta-tilde", sc.delta_tilde, "slack override");
    sim->add_option("--delta-prime", sc.delta_prime, "slack override");
    sim->add_option("--r-second", sc.r_second, "second-receiver rate (paired variant)");
    sim->add_option("--threads", sc.threads, "worker count (0 = hardware)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact tiny-instance leakage enumeration");
    std::string ovariant = "c2p", oout;
    int on = 6, osel = 2, okey = 1, ogl = 3, ogs = 1;
    double oe1 = 0.5, oe2 = 0.5;
    orc->add_option("--variant", ovariant, "c2p | degraded");
    orc->add_option("--block-len", on, "block length (<= 8)");
    orc->add_option("--eps1", oe1, "receiver-leg erasure probability");
    orc->add_option("--eps2", oe2, "tap-leg erasure probability");
    orc->add_option("--sel-size", osel, "selection size");
    orc->add_option("--key-len", okey, "string length");
    orc->add_option("--gl-size", ogl, "pad-source size (degraded)");
    orc->add_option("--gs-size", ogs, "shared-source size (degraded)");
    orc->add_option("--out", oout, "output path (default stdout)");

    // ih-check
    auto* ihc = app.add_subcommand("ih-check", "interactive-hashing property suite");
    int64_t k_max = 12, ih_trials = 10000;
    uint64_t ih_seed = 1;
    ihc->add_option("--k-max", k_max, "largest string length to test (<= 12)");
    ihc->add_option("--trials", ih_trials, "adversarial trials per configuration");
    ihc->add_option("--master-seed", ih_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap->parsed()) return cmd_capacity(eps1, eps2, N, grid, out);
        if (sim->parsed()) {
            if (!config_path.empty()) {
                SimulateConfig file_cfg;
                load_config_file(config_path, file_cfg);
                // flags override file values: reparse flags on top
                SimulateConfig merged = file_cfg;
                for (const auto* opt : sim->get_options()) {
                    if (opt->count() == 0) continue;
                    const std::string& n = opt->get_name();
                    if (n == "--variant") merged.variant = sc.variant;
                    else if (n == "--eps1") merged.eps1 = sc.eps1;
                    else if (n == "--eps2") merged.eps2 = sc.eps2;
                    else if (n == "--rate") merged.rate = sc.rate;
                    else if (n == "--rate-frac") merged.rate_frac = sc.rate_frac;
                    else if (n == "--block-len") merged.n_list = sc.n_list;
                    else if (n == "--branches") merged.N = sc.N;
                    else if (n == "--trials") merged.trials = sc.trials;
                    else if (n == "--attack") merged.attack = sc.attack;
                    else if (n == "--attack-strength") merged.attack_strength = sc.attack_strength;
                    else if (n == "--attack-bias") merged.attack_bias = sc.attack_bias;
                    else if (n == "--master-seed") merged.master_seed = sc.master_seed;
                    else if (n == "--out") merged.out = sc.out;
                    else if (n == "--raw-out") merged.raw_out = sc.raw_out;
                    else if (n == "--format") merged.format = sc.format;
                    else if (n == "--delta") merged.delta = sc.delta;
                    else if (n == "--delta-tilde") merged.delta_tilde = sc.delta_tilde;
                    else if (n == "--delta-prime") merged.delta_prime = sc.delta_prime;
                    else if (n == "--r-second") merged.r_second = sc.r_second;
                    else if (n == "--threads") merged.threads = sc.threads;
                }
                return cmd_simulate(merged);
            }
            return cmd_simulate(sc);
        }
        if (orc->parsed())
            return cmd_oracle(ovariant, on, oe1, oe2, osel, okey, ogl, ogs, oout);
        if (ihc->parsed()) return cmd_ih_check(k_max, ih_trials, ih_seed);
    } catch (const OracleBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
