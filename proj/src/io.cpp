#include "eot/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace eot {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

ordered_json params_json(const ProtocolParams& p) {
    ordered_json j;
    j["variant"] = variant_name(p.variant);
    j["eps1"] = p.eps1;
    j["eps2"] = p.eps2;
    j["n"] = p.n;
    j["N"] = p.N;
    j["r"] = p.r;
    j["delta"] = p.delta;
    j["delta_tilde"] = p.delta_tilde;
    j["delta_prime"] = p.delta_prime;
    j["sel_size"] = p.sel_size;
    j["key_len"] = p.key_len;
    j["erased_core"] = p.erased_core;
    j["gamma_n"] = p.gamma_n;
    j["m_bits"] = p.m_bits;
    j["gl_size"] = p.gl_size;
    j["gs_size"] = p.gs_size;
    j["q_len"] = p.q_len;
    j["bridge_len"] = p.bridge_len;
    j["second_key_len"] = p.second_key_len;
    return j;
}

std::string provenance(const ProtocolParams& params, const AttackSpec& attack, int64_t trials,
                       uint64_t master_seed) {
    std::string s;
    s += "# version: ";
    s += kArtifactVersion;
    s += "\n# config: ";
    s += config_json(params, attack, trials, master_seed);
    s += "\n";
    return s;
}

} // namespace

std::string config_json(const ProtocolParams& params, const AttackSpec& attack,
                        int64_t trials, uint64_t master_seed) {
    ordered_json j;
    j["params"] = params_json(params);
    j["attack"] = attack.name();
    j["attack_strength"] = attack.strength;
    j["trials"] = trials;
    j["master_seed"] = master_seed;
    return j.dump();
}

std::string stats_summary_csv(const Stats& st) {
    std::string out = provenance(st.params, st.attack, st.trials, st.master_seed);
    out += "n,eps1,eps2,rate,trials,correct_rate,abort_rate,mean_residual_margin";
    bool attack = st.attack.kind != AttackKind::honest;
    if (attack) out += ",detection_rate";
    out += "\n";
    out += std::to_string(st.params.n) + "," + format_double(st.params.eps1) + "," +
           format_double(st.params.eps2) + "," +
           format_double(static_cast<double>(st.params.key_len) /
                         static_cast<double>(st.params.n)) +
           "," + std::to_string(st.trials) + "," + format_double(st.correct_rate()) + "," +
           format_double(st.abort_rate()) + "," + format_double(st.mean_residual_margin);
    if (attack) out += "," + format_double(st.detection_rate());
    out += "\n";
    return out;
}

std::string stats_rows_csv(const Stats& st) {
    std::string out = provenance(st.params, st.attack, st.trials, st.master_seed);
    out += "trial,aborted,abort_site,detected,correct,residual,residual_margin,leak_bound_weak\n";
    for (const auto& r : st.rows) {
        out += std::to_string(r.trial) + "," + (r.aborted ? "1" : "0") + "," + r.abort_site +
               "," + (r.detected ? "1" : "0") + "," + (r.correct ? "1" : "0") + "," +
               std::to_string(r.residual) + "," + std::to_string(r.residual_margin) + "," +
               format_double(r.leak_bound_weak) + "\n";
    }
    return out;
}

std::string stats_json(const Stats& st) {
    ordered_json j;
    j["version"] = kArtifactVersion;
    j["config"] = ordered_json::parse(config_json(st.params, st.attack, st.trials, st.master_seed));
    j["trials"] = st.trials;
    j["aborts"] = st.aborts;
    j["abort_rate"] = st.abort_rate();
    ordered_json sites = ordered_json::object();
    for (const auto& [site, count] : st.aborts_by_site) sites[site] = count;
    j["aborts_by_site"] = sites;
    j["detected"] = st.detected;
    j["detection_rate"] = st.detection_rate();
    j["decoded"] = st.decoded;
    j["correct"] = st.correct;
    j["correct_rate"] = st.correct_rate();
    j["second_correct"] = st.second_correct;
    j["residual_ok"] = st.residual_ok;
    j["mean_residual_margin"] = st.mean_residual_margin;
    j["mean_leak_bound_weak"] = st.mean_leak_bound_weak;
    return j.dump(2) + "\n";
}

std::string capacity_csv_header() {
    return "eps1,eps2,N,c2p,c1p,c2p_N,c1p_N,degraded_lower,degraded_upper,c1p_regime\n";
}

std::string capacity_csv_row(const CapacityReport& r) {
    return format_double(r.eps1) + "," + format_double(r.eps2) + "," + std::to_string(r.N) + "," +
           format_double(r.c2p) + "," + format_double(r.c1p) + "," + format_double(r.c2p_N) +
           "," + format_double(r.c1p_N) + "," + format_double(r.degraded_lower) + "," +
           format_double(r.degraded_upper) + "," + r.c1p_regime + "\n";
}

std::string capacity_json(const CapacityReport& r) {
    ordered_json j;
    j["version"] = kArtifactVersion;
    j["eps1"] = r.eps1;
    j["eps2"] = r.eps2;
    j["N"] = r.N;
    j["c2p"] = r.c2p;
    j["c1p"] = r.c1p;
    j["c2p_N"] = r.c2p_N;
    j["c1p_N"] = r.c1p_N;
    j["degraded_lower"] = r.degraded_lower;
    j["degraded_upper"] = r.degraded_upper;
    j["c1p_regime"] = r.c1p_regime;
    return j.dump(2) + "\n";
}

std::string region_json(double eps1, double eps2, const RateRegion& r) {
    ordered_json j;
    j["version"] = kArtifactVersion;
    j["eps1"] = eps1;
    j["eps2"] = eps2;
    j["rb_max"] = r.rb_max;
    j["rc_max"] = r.rc_max;
    j["sum_inner"] = r.sum_inner;
    j["sum_outer"] = r.sum_outer;
    auto poly = [](const Polygon& p) {
        ordered_json a = ordered_json::array();
        for (auto [x, y] : p) a.push_back({x, y});
        return a;
    };
    j["inner"] = poly(r.inner);
    j["outer"] = poly(r.outer);
    return j.dump(2) + "\n";
}

std::string leakage_json(const OracleConfig& cfg, const LeakageReport& rep) {
    ordered_json j;
    j["version"] = kArtifactVersion;
    j["variant"] = variant_name(cfg.variant);
    j["n"] = cfg.n;
    j["eps1"] = cfg.eps1;
    j["eps2"] = cfg.eps2;
    j["sel_size"] = cfg.sel_size;
    j["key_len"] = cfg.key_len;
    j["gl_size"] = cfg.gl_size;
    j["gs_size"] = cfg.gs_size;
    j["family_label"] = rep.family_label;
    j["family_size"] = cfg.key_family.size();
    j["pad_family_size"] = cfg.pad_family.size();
    j["enum_size"] = rep.enum_size;
    j["p_abort"] = rep.p_abort;
    j["p_err_given_ok"] = rep.p_err_given_ok;
    if (cfg.variant == Variant::c2p) {
        j["i_u_aliceeve"] = rep.i_u_aliceeve;
        j["i_kbar_bobeve"] = rep.i_kbar_bobeve;
        j["i_all_eve"] = rep.i_all_eve;
        j["i_u_eve"] = rep.i_u_eve;
        j["bound_kbar"] = rep.bound_kbar;
        j["bound_all"] = rep.bound_all;
    } else {
        j["i_u_alice"] = rep.i_u_alice;
        j["i_u_eve"] = rep.i_u_eve;
        j["bound_u_eve_pad_deficit"] = rep.bound_u_eve_pad_deficit;
        j["bound_u_eve_log"] = rep.bound_u_eve_log;
    }
    ordered_json m = ordered_json::object();
    for (const auto& [k, v] : rep.method) m[k] = v;
    j["method"] = m;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace eot
