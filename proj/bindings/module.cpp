#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eot/analysis.hpp"
#include "eot/io.hpp"
#include "eot/oracle.hpp"

namespace py = pybind11;
using namespace eot;

namespace {

py::dict capacities_py(double eps1, double eps2, int N) {
    auto r = capacities(eps1, eps2, N);
    py::dict d;
    d["eps1"] = r.eps1;
    d["eps2"] = r.eps2;
    d["N"] = r.N;
    d["c2p"] = r.c2p;
    d["c1p"] = r.c1p;
    d["c2p_N"] = r.c2p_N;
    d["c1p_N"] = r.c1p_N;
    d["degraded_lower"] = r.degraded_lower;
    d["degraded_upper"] = r.degraded_upper;
    d["c1p_regime"] = r.c1p_regime;
    return d;
}

py::dict rate_region_py(double eps1, double eps2) {
    auto r = rate_region(eps1, eps2);
    py::dict d;
    d["rb_max"] = r.rb_max;
    d["rc_max"] = r.rc_max;
    d["sum_inner"] = r.sum_inner;
    d["sum_outer"] = r.sum_outer;
    d["inner"] = r.inner;
    d["outer"] = r.outer;
    return d;
}

ProtocolParams make_params(const std::string& variant, double rate, double eps1, double eps2,
                           int64_t n, int N, py::object delta, py::object delta_tilde,
                           py::object delta_prime, py::object r_second) {
    SlackOptions s;
    if (!delta.is_none()) s.delta = delta.cast<double>();
    if (!delta_tilde.is_none()) s.delta_tilde = delta_tilde.cast<double>();
    if (!delta_prime.is_none()) s.delta_prime = delta_prime.cast<double>();
    if (!r_second.is_none()) s.r_second = r_second.cast<double>();
    return derive_params(variant_from_name(variant), rate, eps1, eps2, n, N, s);
}

py::dict run_session_py(const std::string& variant, double rate, double eps1, double eps2,
                        int64_t n, uint64_t seed, int N, const std::string& attack,
                        int64_t attack_strength, py::object delta, py::object delta_tilde,
                        py::object delta_prime, py::object r_second) {
    ProtocolParams params = make_params(variant, rate, eps1, eps2, n, N, delta, delta_tilde,
                                        delta_prime, r_second);
    Rng rng(seed);
    PartyInputs inputs = random_inputs(params, rng);
    AttackSpec atk = AttackSpec::parse(attack, attack_strength, 0.9);
    SessionOutcome out = run_session(params, inputs, default_channel(params), atk, rng);
    py::dict d;
    d["aborted"] = out.aborted;
    d["abort_site"] = out.abort_site;
    d["choice"] = out.inputs.choice;
    d["key_len"] = params.key_len;
    d["n"] = params.n;
    d["transcript"] = out.transcript.serialize();
    d["correct"] = out.k_hat && *out.k_hat == inputs.keys[inputs.choice];
    if (out.k_hat) d["decoded"] = out.k_hat->to_string();
    std::vector<std::string> keys;
    for (const auto& k : inputs.keys) keys.push_back(k.to_string());
    d["keys"] = keys;
    return d;
}

py::dict monte_carlo_py(const std::string& variant, double rate, double eps1, double eps2,
                        int64_t n, int64_t trials, uint64_t master_seed, int N,
                        const std::string& attack, int64_t attack_strength, py::object delta,
                        py::object delta_tilde, py::object delta_prime, py::object r_second,
                        int threads) {
    ProtocolParams params = make_params(variant, rate, eps1, eps2, n, N, delta, delta_tilde,
                                        delta_prime, r_second);
    AttackSpec atk = AttackSpec::parse(attack, attack_strength, 0.9);
    Stats st = monte_carlo(params, default_channel(params), atk, trials, master_seed, threads);
    py::dict d;
    d["trials"] = st.trials;
    d["aborts"] = st.aborts;
    d["abort_rate"] = st.abort_rate();
    d["detected"] = st.detected;
    d["detection_rate"] = st.detection_rate();
    d["decoded"] = st.decoded;
    d["correct"] = st.correct;
    d["correct_rate"] = st.correct_rate();
    d["residual_ok"] = st.residual_ok;
    d["mean_residual_margin"] = st.mean_residual_margin;
    d["summary_csv"] = stats_summary_csv(st);
    py::dict sites;
    for (const auto& [site, cnt] : st.aborts_by_site) sites[py::str(site)] = cnt;
    d["aborts_by_site"] = sites;
    return d;
}

py::dict oracle_py(const std::string& variant, int n, double eps1, double eps2, int sel_size,
                   int key_len, int gl_size, int gs_size) {
    OracleConfig cfg;
    if (variant == "c2p") cfg = oracle_config_c2p(n, eps1, eps2, sel_size, key_len);
    else if (variant == "degraded")
        cfg = oracle_config_degraded(n, eps1, eps2, sel_size, gl_size, gs_size, key_len);
    else throw std::invalid_argument("oracle supports c2p and degraded");
    LeakageReport rep = exact_leakage_oracle(cfg);
    py::dict d;
    d["p_abort"] = rep.p_abort;
    d["p_err_given_ok"] = rep.p_err_given_ok;
    d["i_u_aliceeve"] = rep.i_u_aliceeve;
    d["i_kbar_bobeve"] = rep.i_kbar_bobeve;
    d["i_all_eve"] = rep.i_all_eve;
    d["i_u_eve"] = rep.i_u_eve;
    d["i_u_alice"] = rep.i_u_alice;
    d["bound_kbar"] = rep.bound_kbar;
    d["bound_all"] = rep.bound_all;
    d["bound_u_eve_pad_deficit"] = rep.bound_u_eve_pad_deficit;
    d["family_label"] = rep.family_label;
    d["enum_size"] = rep.enum_size;
    d["json"] = leakage_json(cfg, rep);
    return d;
}

py::dict subset_codec_py(int64_t universe, int64_t k) {
    auto c = make_subset_codec(universe, k);
    py::dict d;
    d["count"] = c.count.get_str();
    d["m_bits"] = c.m_bits;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "1-of-N string transfer over erasure broadcast channels: "
              "capacities, protocol simulation and exact tiny-instance leakage";

    m.def("capacities", &capacities_py, py::arg("eps1"), py::arg("eps2"), py::arg("N") = 2);
    m.def("rate_region", &rate_region_py, py::arg("eps1"), py::arg("eps2"));
    m.def("achievable_limit",
          [](const std::string& v, double e1, double e2, int N) {
              return achievable_limit(variant_from_name(v), e1, e2, N);
          },
          py::arg("variant"), py::arg("eps1"), py::arg("eps2"), py::arg("N") = 2);
    m.def("pa_bound",
          [](double l, double c) {
              auto b = pa_bound(l, c);
              return py::make_tuple(b.log_form, b.weak_form);
          },
          py::arg("key_len"), py::arg("entropy"));
    m.def("renyi2", [](const std::vector<uint64_t>& support, const std::vector<double>& mass) {
        return renyi2(FiniteDistribution{support, mass});
    });
    m.def("run_session", &run_session_py, py::arg("variant"), py::arg("rate"), py::arg("eps1"),
          py::arg("eps2"), py::arg("n"), py::arg("seed"), py::arg("N") = 2,
          py::arg("attack") = "honest", py::arg("attack_strength") = 0,
          py::arg("delta") = py::none(), py::arg("delta_tilde") = py::none(),
          py::arg("delta_prime") = py::none(), py::arg("r_second") = py::none());
    m.def("monte_carlo", &monte_carlo_py, py::arg("variant"), py::arg("rate"), py::arg("eps1"),
          py::arg("eps2"), py::arg("n"), py::arg("trials"), py::arg("master_seed"),
          py::arg("N") = 2, py::arg("attack") = "honest", py::arg("attack_strength") = 0,
          py::arg("delta") = py::none(), py::arg("delta_tilde") = py::none(),
          py::arg("delta_prime") = py::none(), py::arg("r_second") = py::none(),
          py::arg("threads") = 0);
    m.def("exact_leakage_oracle", &oracle_py, py::arg("variant"), py::arg("n"), py::arg("eps1"),
          py::arg("eps2"), py::arg("sel_size") = 2, py::arg("key_len") = 1,
          py::arg("gl_size") = 3, py::arg("gs_size") = 1);
    m.def("subset_codec", &subset_codec_py, py::arg("universe"), py::arg("k"));
    m.def("ih_exhaustive_check", [](int64_t k) {
        auto r = ih_exhaustive_check(k);
        py::dict d;
        d["matrix_count"] = r.matrix_count;
        d["outputs_distinct"] = r.outputs_distinct;
        d["input_in_outputs"] = r.input_in_outputs;
        d["co_output_uniform"] = r.co_output_uniform;
        d["phi_balanced"] = r.phi_balanced;
        return d;
    });
    m.attr("__version__") = kArtifactVersion;
}
