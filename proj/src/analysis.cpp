#include "eot/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace eot {

CapacityReport capacities(double eps1, double eps2, int N) {
    if (!(eps1 >= 0 && eps1 <= 1 && eps2 >= 0 && eps2 <= 1))
        throw std::invalid_argument("capacities: probabilities out of [0,1]");
    if (N < 2) throw std::invalid_argument("capacities: N < 2");
    CapacityReport r;
    r.eps1 = eps1;
    r.eps2 = eps2;
    r.N = N;
    r.c2p = eps2 * std::min(eps1, 1 - eps1);
    if (eps1 < eps2 / 2) {
        r.c1p = eps1;
        r.c1p_regime = "receiver-limited";
    } else if (eps1 < 0.5) {
        r.c1p = eps2 / 2;
        r.c1p_regime = "tap-limited";
    } else {
        r.c1p = eps2 * (1 - eps1);
        r.c1p_regime = "high-erasure";
    }
    r.c2p_N = eps2 * std::min(eps1 / (N - 1), 1 - eps1);
    double a = eps1 / (N - 1);
    if (a < eps2 / N) r.c1p_N = a;
    else if (a < 1.0 / N) r.c1p_N = eps2 / N;
    else r.c1p_N = eps2 * (1 - eps1);
    r.degraded_lower = std::min(eps2 * (1 - eps1) / 3.0, eps1);
    r.degraded_upper = std::min(eps2 * (1 - eps1), eps1);
    return r;
}

namespace {

Polygon clip_box_diag(double a, double b, double s) {
    // {0 <= x <= a, 0 <= y <= b, x + y <= s} with a,b,s >= 0
    std::vector<std::pair<double, double>> cand = {
        {0, 0}, {a, 0}, {0, b}, {a, b}, {a, s - a}, {s - b, b}, {s, 0}, {0, s}};
    Polygon pts;
    for (auto [x, y] : cand) {
        if (x < -1e-12 || y < -1e-12) continue;
        if (x > a + 1e-12 || y > b + 1e-12 || x + y > s + 1e-12) continue;
        bool dup = false;
        for (auto [px, py] : pts)
            if (std::abs(px - x) < 1e-12 && std::abs(py - y) < 1e-12) dup = true;
        if (!dup) pts.push_back({std::max(0.0, x), std::max(0.0, y)});
    }
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) { cx += x; cy += y; }
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](auto& p, auto& q) {
        return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
    });
    // start at the lexicographically smallest vertex; drop collinear middles
    size_t start = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i] < pts[start]) start = i;
    std::rotate(pts.begin(), pts.begin() + start, pts.end());
    Polygon out;
    for (size_t i = 0; i < pts.size(); ++i) {
        auto& prev = out.empty() ? pts[(i + pts.size() - 1) % pts.size()] : out.back();
        auto& cur = pts[i];
        auto& next = pts[(i + 1) % pts.size()];
        double cross = (cur.first - prev.first) * (next.second - prev.second) -
                       (cur.second - prev.second) * (next.first - prev.first);
        if (std::abs(cross) < 1e-12 && i != 0) continue;
        out.push_back(cur);
    }
    return out;
}

} // namespace

bool RateRegion::inner_contains(double rb, double rc, double tol) const {
    return rb >= -tol && rc >= -tol && rb <= rb_max + tol && rc <= rc_max + tol &&
           rb + rc <= sum_inner + tol;
}

bool RateRegion::outer_contains(double rb, double rc, double tol) const {
    return rb >= -tol && rc >= -tol && rb <= rb_max + tol && rc <= rc_max + tol &&
           rb + rc <= sum_outer + tol;
}

RateRegion rate_region(double eps1, double eps2) {
    if (!(eps1 > 0 && eps1 < 1 && eps2 > 0 && eps2 < 1))
        throw std::invalid_argument("rate_region: probabilities must lie in (0,1)");
    RateRegion r;
    double m1 = std::min(eps1, 1 - eps1), m2 = std::min(eps2, 1 - eps2);
    r.rb_max = eps2 * m1;
    r.rc_max = eps1 * m2;
    r.sum_inner = eps2 * m1 + eps1 * m2 - m1 * m2;
    r.sum_outer = eps1 * eps2;
    r.inner = clip_box_diag(r.rb_max, r.rc_max, r.sum_inner);
    r.outer = clip_box_diag(r.rb_max, r.rc_max, r.sum_outer);
    return r;
}

AttackSpec AttackSpec::parse(const std::string& name, int64_t strength, double bias) {
    AttackSpec a;
    a.strength = strength;
    a.bias = bias;
    if (name == "honest") a.kind = AttackKind::honest;
    else if (name == "bob-swap") a.kind = AttackKind::bob_swap;
    else if (name == "bob-pack") a.kind = AttackKind::bob_pack;
    else if (name == "alice-probe") a.kind = AttackKind::alice_probe;
    else throw std::invalid_argument("unknown attack: " + name);
    return a;
}

std::string AttackSpec::name() const {
    switch (kind) {
        case AttackKind::honest: return "honest";
        case AttackKind::bob_swap: return "bob-swap";
        case AttackKind::bob_pack: return "bob-pack";
        case AttackKind::alice_probe: return "alice-probe";
    }
    return "?";
}

ChannelConfig default_channel(const ProtocolParams& params) {
    ChannelConfig cfg;
    cfg.eps1 = params.eps1;
    cfg.eps2 = params.eps2;
    switch (params.variant) {
        case Variant::degraded: cfg.topology = Topology::degraded; break;
        case Variant::two_party: cfg.topology = Topology::single; break;
        default: cfg.topology = Topology::independent; break;
    }
    return cfg;
}

SessionOutcome run_session(const ProtocolParams& params, const PartyInputs& inputs,
                           const ChannelConfig& cfg, const AttackSpec& attack, Rng& rng,
                           const SessionOptions& opts) {
    switch (params.variant) {
        case Variant::c2p:
        case Variant::c1p:
        case Variant::oneofN_2p:
        case Variant::oneofN_1p:
            if (attack.kind != AttackKind::honest)
                throw std::invalid_argument("attacks apply to the malicious variants only");
            return run_one_of_n(params, inputs, cfg, rng, opts);
        case Variant::two_party:
            return run_two_party(params, inputs, cfg, rng, opts);
        case Variant::independent_pair:
            return run_independent_pair(params, inputs, cfg, rng, opts);
        case Variant::degraded:
            return run_degraded(params, inputs, cfg, rng, opts);
        case Variant::mal_le_half: {
            HonestAlice honest_alice;
            ProbeAlice probe_alice(attack.bias);
            AliceStrategy& alice =
                attack.kind == AttackKind::alice_probe
                    ? static_cast<AliceStrategy&>(probe_alice)
                    : static_cast<AliceStrategy&>(honest_alice);
            MalLeBobStrategy honest_bob;
            SwapBob swap_bob(attack.strength);
            MalLeBobStrategy& bob = attack.kind == AttackKind::bob_swap
                                        ? static_cast<MalLeBobStrategy&>(swap_bob)
                                        : honest_bob;
            return run_malicious_le_half(params, inputs, alice, bob, cfg, rng, opts);
        }
        case Variant::mal_gt_half: {
            HonestAlice honest_alice;
            ProbeAlice probe_alice(attack.bias);
            AliceStrategy& alice =
                attack.kind == AttackKind::alice_probe
                    ? static_cast<AliceStrategy&>(probe_alice)
                    : static_cast<AliceStrategy&>(honest_alice);
            MalGtBobStrategy honest_bob;
            PackBob pack_bob;
            MalGtBobStrategy& bob = attack.kind == AttackKind::bob_pack
                                        ? static_cast<MalGtBobStrategy&>(pack_bob)
                                        : honest_bob;
            return run_malicious_gt_half(params, inputs, alice, bob, cfg, rng, opts);
        }
    }
    throw std::logic_error("run_session: unreachable");
}

namespace {

// Residual-entropy accounting for one finished session: the erasure count of
// the tracked hidden key's source in the relevant observer's merged view.
void account_residual(const SessionOutcome& s, TrialRow& row) {
    const auto& p = s.params;
    const int u = s.inputs.choice;
    std::set<Party> bob_eve = {Party::bob, Party::eve};
    switch (p.variant) {
        case Variant::c2p:
        case Variant::oneofN_2p:
        case Variant::independent_pair: {
            int64_t worst = INT64_MAX;
            for (int i = 0; i < p.N; ++i)
                if (i != u)
                    worst = std::min(worst, residual_min_entropy(s, bob_eve, s.selections[i]));
            row.residual = worst;
            break;
        }
        case Variant::c1p:
        case Variant::oneofN_1p: {
            int64_t worst = INT64_MAX;
            for (int i = 0; i < p.N; ++i)
                if (i != u)
                    worst = std::min(worst, residual_min_entropy(s, {Party::bob}, s.selections[i]));
            row.residual = worst;
            break;
        }
        case Variant::two_party:
            row.residual = residual_min_entropy(s, {Party::bob}, s.selections[1 - u]);
            break;
        case Variant::mal_le_half:
            row.residual = residual_min_entropy(s, bob_eve, s.selections[1 - u]);
            break;
        case Variant::mal_gt_half: {
            // at least one stripped selection must stay mostly unknown
            int64_t a = residual_min_entropy(s, bob_eve, s.stripped[0]);
            int64_t b = residual_min_entropy(s, bob_eve, s.stripped[1]);
            row.residual = std::max(a, b);
            break;
        }
        case Variant::degraded: {
            std::vector<int64_t> src = s.selections[1 - u];
            src.insert(src.end(), s.gs_sel.begin(), s.gs_sel.end());
            row.residual = residual_min_entropy(s, {Party::bob}, src);
            break;
        }
    }
    row.residual_margin = row.residual - p.key_len;
    row.leak_bound_weak = std::exp2(static_cast<double>(p.key_len - row.residual)) / std::log(2.0);
}

TrialRow run_trial(const ProtocolParams& params, const ChannelConfig& cfg,
                   const AttackSpec& attack, Rng rng, int64_t index) {
    PartyInputs inputs = random_inputs(params, rng);
    SessionOptions opts;
    opts.record_transcript = false;
    SessionOutcome s = run_session(params, inputs, cfg, attack, rng, opts);
    TrialRow row;
    row.trial = index;
    row.aborted = s.aborted;
    row.abort_site = s.abort_site;
    row.detected = s.aborted && is_detection_site(s.abort_site);
    if (s.theta) row.theta = *s.theta;
    if (!s.aborted) {
        if (s.k_hat) {
            row.decoded = true;
            row.correct = (*s.k_hat == inputs.keys[inputs.choice]);
        }
        if (params.variant == Variant::independent_pair && s.j_hat) {
            row.second_correct =
                params.second_key_len == 0 ||
                (*s.j_hat == inputs.second_keys[inputs.second_choice]);
        }
        account_residual(s, row);
    }
    return row;
}

} // namespace

Stats monte_carlo(const ProtocolParams& params, const ChannelConfig& cfg,
                  const AttackSpec& attack, int64_t trials, uint64_t master_seed, int threads) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials < 1");
    Stats st;
    st.params = params;
    st.attack = attack;
    st.master_seed = master_seed;
    st.trials = trials;
    st.rows.resize(trials);

    Rng master(master_seed);
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::min<int64_t>(
                                     trials, std::max(1u, std::thread::hardware_concurrency())));
    std::vector<std::thread> pool;
    std::atomic<int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            int64_t t = next.fetch_add(1);
            if (t >= trials) return;
            st.rows[t] = run_trial(params, cfg, attack, master.derive(t), t);
        }
    };
    if (nthreads <= 1) worker();
    else {
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    double margin_sum = 0, leak_sum = 0;
    int64_t nonabort = 0;
    for (const auto& row : st.rows) {
        if (row.aborted) {
            ++st.aborts;
            st.aborts_by_site[row.abort_site]++;
            if (row.detected) ++st.detected;
            continue;
        }
        ++nonabort;
        if (row.decoded) {
            ++st.decoded;
            if (row.correct) ++st.correct;
        }
        if (row.second_correct) ++st.second_correct;
        if (row.residual >= params.key_len) ++st.residual_ok;
        margin_sum += static_cast<double>(row.residual_margin);
        leak_sum += row.leak_bound_weak;
    }
    if (nonabort) {
        st.mean_residual_margin = margin_sum / static_cast<double>(nonabort);
        st.mean_leak_bound_weak = leak_sum / static_cast<double>(nonabort);
    }
    return st;
}

} // namespace eot
