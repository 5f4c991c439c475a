#include "eot/protocols.hpp"

#include <algorithm>
#include <stdexcept>

#include "eot/codec.hpp"

namespace eot {

PartyInputs random_inputs(const ProtocolParams& params, Rng& rng) {
    PartyInputs in;
    for (int i = 0; i < params.N; ++i) in.keys.push_back(BitVec::random(params.key_len, rng));
    in.choice = static_cast<int>(rng.below(params.N));
    if (params.variant == Variant::independent_pair) {
        for (int i = 0; i < 2; ++i)
            in.second_keys.push_back(BitVec::random(params.second_key_len, rng));
        in.second_choice = rng.bit();
    }
    return in;
}

namespace {

std::vector<int64_t> draw_subset(std::vector<int64_t>& pool, int64_t k, Rng& rng) {
    if (k > static_cast<int64_t>(pool.size()))
        throw std::invalid_argument("draw_subset: pool too small");
    std::vector<int64_t> out;
    out.reserve(k);
    for (int64_t i = 0; i < k; ++i) {
        uint64_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    pool.erase(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

BitVec bits_at(const BitVec& x, const std::vector<int64_t>& sel) {
    BitVec out(static_cast<int64_t>(sel.size()));
    for (size_t i = 0; i < sel.size(); ++i) out.set(static_cast<int64_t>(i), x.get(sel[i]));
    return out;
}

BitVec trit_bits_at(const TritString& t, const std::vector<int64_t>& sel) {
    BitVec out(static_cast<int64_t>(sel.size()));
    for (size_t i = 0; i < sel.size(); ++i) {
        if (t.erased(sel[i])) throw std::logic_error("trit_bits_at: erased position");
        out.set(static_cast<int64_t>(i), t.get(sel[i]));
    }
    return out;
}

void abort_session(SessionOutcome& s, const std::string& site) {
    s.aborted = true;
    s.abort_site = site;
    s.transcript.add(Party::bob, "abort", site);
}

SessionOutcome make_session(const ProtocolParams& params, const PartyInputs& inputs, Rng& rng) {
    SessionOutcome s;
    s.params = params;
    s.inputs = inputs;
    s.seed = rng.seed();
    return s;
}

void record_block(SessionOutcome& s, const ChannelConfig& cfg, AliceStrategy* alice, Rng& rng) {
    HonestAlice honest;
    AliceStrategy& a = alice ? *alice : static_cast<AliceStrategy&>(honest);
    s.x = a.choose_block(s.params.n, rng);
    ChannelOutput ch = transmit(s.x, cfg, rng);
    s.y = std::move(ch.y);
    s.z = std::move(ch.z);
}

} // namespace

bool is_detection_site(const std::string& site) {
    return site == "mal-le:reveal-mismatch" || site == "mal-le:tuples-overlap" ||
           site == "mal-gt:reveal-mismatch";
}

// Shared body for the honest extraction protocols (c2p, c1p and their
// N-string generalizations). Selection composition is the only difference:
// two-sided privacy puts every hidden selection fully inside the erased set,
// one-sided privacy pins erased_core erased positions per hidden selection
// and fills the rest from the leftovers.
SessionOutcome run_one_of_n(const ProtocolParams& params, const PartyInputs& inputs,
                            const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts) {
    const bool two_sided = params.variant == Variant::c2p ||
                           params.variant == Variant::oneofN_2p ||
                           params.variant == Variant::independent_pair;
    if (!two_sided && params.variant != Variant::c1p && params.variant != Variant::oneofN_1p)
        throw std::invalid_argument("run_one_of_n: wrong variant");
    if (static_cast<int>(inputs.keys.size()) != params.N)
        throw std::invalid_argument("run_one_of_n: need N strings");

    SessionOutcome s = make_session(params, inputs, rng);
    record_block(s, cfg, nullptr, rng);

    auto [erased, unerased] = erasure_sets(s.y);
    if (static_cast<int64_t>(unerased.size()) < params.min_unerased ||
        static_cast<int64_t>(erased.size()) < params.min_erased) {
        abort_session(s, "insufficient erasures/non-erasures");
        return s;
    }

    const int N = params.N;
    const int u = inputs.choice;
    s.selections.assign(N, {});
    s.selections[u] = draw_subset(unerased, params.sel_size, rng);

    if (two_sided) {
        for (int i = 0; i < N; ++i)
            if (i != u) s.selections[i] = draw_subset(erased, params.sel_size, rng);
    } else {
        std::vector<std::vector<int64_t>> cores;
        for (int i = 0; i < N - 1; ++i) cores.push_back(draw_subset(erased, params.erased_core, rng));
        // leftovers: unused unerased positions plus unused erased positions
        std::vector<int64_t> pool = unerased;
        pool.insert(pool.end(), erased.begin(), erased.end());
        std::sort(pool.begin(), pool.end());
        int ci = 0;
        for (int i = 0; i < N; ++i) {
            if (i == u) continue;
            auto extra = draw_subset(pool, params.sel_size - params.erased_core, rng);
            auto& sel = s.selections[i];
            sel = cores[ci++];
            sel.insert(sel.end(), extra.begin(), extra.end());
            std::sort(sel.begin(), sel.end());
        }
    }
    for (int i = 0; i < N; ++i)
        s.transcript.add(Party::bob, "sel-" + std::to_string(i), s.selections[i]);

    for (int i = 0; i < N; ++i) {
        s.hashes.push_back(sample_hash(params.sel_size, params.key_len, rng));
        s.ciphertexts.push_back(inputs.keys[i] ^ s.hashes[i].apply(bits_at(s.x, s.selections[i])));
    }
    if (opts.record_transcript) {
        for (int i = 0; i < N; ++i)
            s.transcript.add(Party::alice, "hash-" + std::to_string(i), s.hashes[i].m);
    }
    for (int i = 0; i < N; ++i)
        s.transcript.add(Party::alice, "cipher-" + std::to_string(i), s.ciphertexts[i]);

    s.k_hat = s.ciphertexts[u] ^ s.hashes[u].apply(trit_bits_at(s.y, s.selections[u]));
    return s;
}

SessionOutcome run_c2p(const ProtocolParams& params, const PartyInputs& inputs,
                       const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts) {
    if (params.variant != Variant::c2p) throw std::invalid_argument("run_c2p: wrong variant");
    return run_one_of_n(params, inputs, cfg, rng, opts);
}

SessionOutcome run_c1p(const ProtocolParams& params, const PartyInputs& inputs,
                       const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts) {
    if (params.variant != Variant::c1p) throw std::invalid_argument("run_c1p: wrong variant");
    return run_one_of_n(params, inputs, cfg, rng, opts);
}

namespace {

// Raw-pad transfer over an explicit set of positions with channel output
// `recv` for the receiver. Returns false on abort. Used standalone and as
// the second phase of the paired protocol.
bool two_party_core(SessionOutcome& s, const std::vector<int64_t>& domain, const BitVec& x,
                    const TritString& recv, const std::vector<BitVec>& keys, int choice,
                    int64_t pad_len, Party receiver, Rng& rng,
                    std::vector<std::vector<int64_t>>& selections_out,
                    std::vector<BitVec>& ciphers_out, BitVec& decoded) {
    std::vector<int64_t> erased, unerased;
    for (int64_t i : domain)
        (recv.erased(i) ? erased : unerased).push_back(i);
    if (static_cast<int64_t>(erased.size()) < pad_len ||
        static_cast<int64_t>(unerased.size()) < pad_len)
        return false;
    selections_out.assign(2, {});
    selections_out[choice] = draw_subset(unerased, pad_len, rng);
    selections_out[1 - choice] = draw_subset(erased, pad_len, rng);
    const char* labels[2] = {"pad-sel-0", "pad-sel-1"};
    for (int i = 0; i < 2; ++i)
        s.transcript.add(receiver, labels[i], selections_out[i]);
    ciphers_out.clear();
    for (int i = 0; i < 2; ++i) {
        ciphers_out.push_back(keys[i] ^ bits_at(x, selections_out[i]));
        s.transcript.add(Party::alice, std::string("pad-cipher-") + std::to_string(i),
                         ciphers_out[i]);
    }
    decoded = ciphers_out[choice] ^ trit_bits_at(recv, selections_out[choice]);
    return true;
}

} // namespace

SessionOutcome run_two_party(const ProtocolParams& params, const PartyInputs& inputs,
                             const ChannelConfig& cfg, Rng& rng, const SessionOptions&) {
    if (params.variant != Variant::two_party)
        throw std::invalid_argument("run_two_party: wrong variant");
    SessionOutcome s = make_session(params, inputs, rng);
    record_block(s, cfg, nullptr, rng);
    std::vector<int64_t> domain(params.n);
    for (int64_t i = 0; i < params.n; ++i) domain[i] = i;
    BitVec decoded;
    if (!two_party_core(s, domain, s.x, s.y, inputs.keys, inputs.choice, params.erased_core,
                        Party::bob, rng, s.selections, s.ciphertexts, decoded)) {
        abort_session(s, "insufficient erasures/non-erasures");
        return s;
    }
    s.k_hat = decoded;
    return s;
}

SessionOutcome run_independent_pair(const ProtocolParams& params, const PartyInputs& inputs,
                                    const ChannelConfig& cfg, Rng& rng,
                                    const SessionOptions& opts) {
    if (params.variant != Variant::independent_pair)
        throw std::invalid_argument("run_independent_pair: wrong variant");
    if (cfg.topology != Topology::independent)
        throw std::invalid_argument("run_independent_pair: needs the independent topology");
    SessionOutcome s = run_one_of_n(params, inputs, cfg, rng, opts);
    if (s.aborted) return s;

    // Second receiver's turn: positions erased for the first receiver and
    // untouched by its selections are handed over.
    if (params.eps1 > 0.5 && params.bridge_len > 0) {
        auto [erased, unerased] = erasure_sets(s.y);
        (void)unerased;
        std::vector<char> used(params.n, 0);
        for (const auto& sel : s.selections)
            for (int64_t i : sel) used[i] = 1;
        std::vector<int64_t> pool;
        for (int64_t i : erased)
            if (!used[i]) pool.push_back(i);
        if (static_cast<int64_t>(pool.size()) < params.bridge_len) {
            abort_session(s, "pair:bridge-underflow");
            return s;
        }
        s.bridge = draw_subset(pool, params.bridge_len, rng);
    }
    s.transcript.add(Party::bob, "bridge", s.bridge);

    if (params.second_key_len == 0 || s.bridge.empty()) {
        s.j_hat = BitVec(0); // nothing to transfer on the second leg
        return s;
    }
    BitVec decoded;
    if (!two_party_core(s, s.bridge, s.x, *s.z, inputs.second_keys, inputs.second_choice,
                        params.second_key_len, Party::cathy, rng, s.second_selections,
                        s.second_ciphertexts, decoded)) {
        abort_session(s, "pair:second-insufficient");
        return s;
    }
    s.j_hat = decoded;
    return s;
}

SessionOutcome run_malicious_le_half(const ProtocolParams& params, const PartyInputs& inputs,
                                     AliceStrategy& alice, MalLeBobStrategy& bob,
                                     const ChannelConfig& cfg, Rng& rng,
                                     const SessionOptions& opts) {
    if (params.variant != Variant::mal_le_half)
        throw std::invalid_argument("run_malicious_le_half: wrong variant");
    SessionOutcome s = make_session(params, inputs, rng);
    record_block(s, cfg, &alice, rng);

    TritString psi;
    if (bob.colludes() && s.z) psi = merge_psi(s.y, *s.z);
    BobView view{&params, &s.y, bob.colludes() && s.z ? &psi : nullptr};

    auto [erased, unerased] = erasure_sets(s.y);
    if (static_cast<int64_t>(unerased.size()) < params.min_unerased ||
        static_cast<int64_t>(erased.size()) < params.min_erased) {
        abort_session(s, "insufficient erasures/non-erasures");
        return s;
    }

    // Committed string and its check-slot subset.
    SubsetCodec codec = make_subset_codec(params.sel_size, params.gamma_n);
    BitVec commit = bob.choose_string(view, rng);
    std::vector<int64_t> check_slots = string_to_subset_onto(codec, commit);

    std::vector<int64_t> good_tuple, hidden_tuple;
    bob.build_tuples(view, check_slots, rng, good_tuple, hidden_tuple);
    const int u = inputs.choice;
    s.selections.assign(2, {});
    s.selections[u] = good_tuple;
    s.selections[1 - u] = hidden_tuple;
    s.transcript.add(Party::bob, "tuple-0", s.selections[0]);
    s.transcript.add(Party::bob, "tuple-1", s.selections[1]);

    { // sender-side disjointness check
        std::vector<int64_t> all = s.selections[0];
        all.insert(all.end(), s.selections[1].begin(), s.selections[1].end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            abort_session(s, "mal-le:tuples-overlap");
            return s;
        }
    }

    HonestIHSender sender(commit);
    s.ih = ih_run(params.m_bits, sender, rng, opts.record_transcript ? &s.transcript : nullptr);
    const int phi = *s.ih->phi;
    std::vector<std::vector<int64_t>> j(2);
    j[0] = string_to_subset_onto(codec, s.ih->s0);
    j[1] = string_to_subset_onto(codec, s.ih->s1);
    s.check_subsets = j;

    s.theta = phi ^ u;
    s.transcript.add(Party::bob, "theta", static_cast<int64_t>(*s.theta));

    // Reveal: tuple-0 entries at slots J_{1-theta}, tuple-1 entries at J_theta.
    auto positions_at = [&](const std::vector<int64_t>& tuple, const std::vector<int64_t>& slots) {
        std::vector<int64_t> out;
        out.reserve(slots.size());
        for (int64_t sIdx : slots) out.push_back(tuple[sIdx]);
        return out;
    };
    std::vector<int64_t> reveal0 = positions_at(s.selections[0], j[1 - *s.theta]);
    std::vector<int64_t> reveal1 = positions_at(s.selections[1], j[*s.theta]);
    BitVec claim0(static_cast<int64_t>(reveal0.size())), claim1(static_cast<int64_t>(reveal1.size()));
    for (size_t i = 0; i < reveal0.size(); ++i)
        claim0.set(static_cast<int64_t>(i), bob.reveal_bit(view, reveal0[i], rng));
    for (size_t i = 0; i < reveal1.size(); ++i)
        claim1.set(static_cast<int64_t>(i), bob.reveal_bit(view, reveal1[i], rng));
    s.transcript.add(Party::bob, "reveal-0", claim0);
    s.transcript.add(Party::bob, "reveal-1", claim1);

    if (claim0 != bits_at(s.x, reveal0) || claim1 != bits_at(s.x, reveal1)) {
        s.aborted = true;
        s.abort_site = "mal-le:reveal-mismatch";
        s.transcript.add(Party::alice, "abort", s.abort_site);
        return s;
    }

    for (int i = 0; i < 2; ++i) {
        s.hashes.push_back(sample_hash(params.sel_size, params.key_len, rng));
        s.ciphertexts.push_back(inputs.keys[i] ^ s.hashes[i].apply(bits_at(s.x, s.selections[i])));
    }
    if (opts.record_transcript)
        for (int i = 0; i < 2; ++i)
            s.transcript.add(Party::alice, "hash-" + std::to_string(i), s.hashes[i].m);
    for (int i = 0; i < 2; ++i)
        s.transcript.add(Party::alice, "cipher-" + std::to_string(i), s.ciphertexts[i]);

    // Honest decode path; the hidden tuple stays unknown to an honest Bob.
    bool decodable = true;
    for (int64_t idx : s.selections[u])
        if (s.y.erased(idx)) decodable = false;
    if (decodable)
        s.k_hat = s.ciphertexts[u] ^ s.hashes[u].apply(trit_bits_at(s.y, s.selections[u]));
    return s;
}

SessionOutcome run_malicious_gt_half(const ProtocolParams& params, const PartyInputs& inputs,
                                     AliceStrategy& alice, MalGtBobStrategy& bob,
                                     const ChannelConfig& cfg, Rng& rng,
                                     const SessionOptions& opts) {
    if (params.variant != Variant::mal_gt_half)
        throw std::invalid_argument("run_malicious_gt_half: wrong variant");
    SessionOutcome s = make_session(params, inputs, rng);
    record_block(s, cfg, &alice, rng);

    TritString psi;
    if (bob.colludes() && s.z) psi = merge_psi(s.y, *s.z);
    BobView view{&params, &s.y, bob.colludes() && s.z ? &psi : nullptr};

    auto [erased, unerased] = erasure_sets(s.y);
    (void)erased;
    if (static_cast<int64_t>(unerased.size()) < params.min_unerased) {
        abort_session(s, "insufficient erasures/non-erasures");
        return s;
    }

    SubsetCodec codec = make_subset_codec(params.n, params.sel_size);
    BitVec commit = bob.choose_string(view, codec, rng);

    HonestIHSender sender(commit);
    s.ih = ih_run(params.m_bits, sender, rng, opts.record_transcript ? &s.transcript : nullptr);
    if (!string_in_codec_range(codec, s.ih->s0) || !string_in_codec_range(codec, s.ih->s1)) {
        abort_session(s, "mal-gt:hash-output-out-of-range");
        return s;
    }
    const int phi = *s.ih->phi;
    std::vector<std::vector<int64_t>> sel(2);
    sel[0] = subset_unrank(codec, int_from_bits(s.ih->s0));
    sel[1] = subset_unrank(codec, int_from_bits(s.ih->s1));

    std::vector<int64_t> overlap;
    std::set_intersection(sel[0].begin(), sel[0].end(), sel[1].begin(), sel[1].end(),
                          std::back_inserter(overlap));
    double frac = static_cast<double>(overlap.size()) / static_cast<double>(params.sel_size);
    if (frac < params.beta - params.delta || frac > params.beta + params.delta) {
        abort_session(s, "mal-gt:overlap-window");
        return s;
    }

    const int u = inputs.choice;
    s.theta = phi ^ u;
    s.transcript.add(Party::bob, "theta", static_cast<int64_t>(*s.theta));
    BitVec claim(static_cast<int64_t>(overlap.size()));
    for (size_t i = 0; i < overlap.size(); ++i)
        claim.set(static_cast<int64_t>(i), bob.reveal_bit(view, overlap[i], rng));
    s.transcript.add(Party::bob, "reveal-overlap", claim);
    if (claim != bits_at(s.x, overlap)) {
        s.aborted = true;
        s.abort_site = "mal-gt:reveal-mismatch";
        s.transcript.add(Party::alice, "abort", s.abort_site);
        return s;
    }

    auto strip = [&](const std::vector<int64_t>& a) {
        std::vector<int64_t> out;
        std::set_difference(a.begin(), a.end(), overlap.begin(), overlap.end(),
                            std::back_inserter(out));
        return out;
    };
    std::vector<std::vector<int64_t>> stripped_ih = {strip(sel[0]), strip(sel[1])};
    s.stripped = stripped_ih;

    // String i is keyed from the hash-output indexed theta^i, so the
    // receiver's committed set always backs its chosen string.
    const int64_t in_len = params.sel_size - static_cast<int64_t>(overlap.size());
    s.selections.assign(2, {});
    for (int i = 0; i < 2; ++i) {
        const auto& src = stripped_ih[*s.theta ^ i];
        s.selections[i] = src;
        s.hashes.push_back(sample_hash(in_len, params.key_len, rng));
        s.ciphertexts.push_back(inputs.keys[i] ^ s.hashes[i].apply(bits_at(s.x, src)));
    }
    if (opts.record_transcript)
        for (int i = 0; i < 2; ++i)
            s.transcript.add(Party::alice, "hash-" + std::to_string(i), s.hashes[i].m);
    for (int i = 0; i < 2; ++i)
        s.transcript.add(Party::alice, "cipher-" + std::to_string(i), s.ciphertexts[i]);

    bool decodable = true;
    for (int64_t idx : s.selections[u])
        if (s.y.erased(idx)) decodable = false;
    if (decodable)
        s.k_hat = s.ciphertexts[u] ^ s.hashes[u].apply(trit_bits_at(s.y, s.selections[u]));
    return s;
}

SessionOutcome run_degraded(const ProtocolParams& params, const PartyInputs& inputs,
                            const ChannelConfig& cfg, Rng& rng, const SessionOptions& opts) {
    if (params.variant != Variant::degraded)
        throw std::invalid_argument("run_degraded: wrong variant");
    if (cfg.topology != Topology::degraded)
        throw std::invalid_argument("run_degraded: needs the degraded topology");
    SessionOutcome s = make_session(params, inputs, rng);
    record_block(s, cfg, nullptr, rng);

    auto [erased, unerased] = erasure_sets(s.y);
    if (static_cast<int64_t>(unerased.size()) < params.min_unerased ||
        static_cast<int64_t>(erased.size()) < params.min_erased) {
        abort_session(s, "insufficient erasures/non-erasures");
        return s;
    }

    const int u = inputs.choice;
    s.selections.assign(2, {});
    s.selections[u] = draw_subset(unerased, params.sel_size, rng);
    s.selections[1 - u] = draw_subset(erased, params.sel_size, rng);
    // Only the leftovers are published; the selections travel encrypted.
    s.gtilde = unerased; // already sorted, selections removed by draw_subset
    s.btilde = erased;
    std::sort(s.gtilde.begin(), s.gtilde.end());
    std::sort(s.btilde.begin(), s.btilde.end());
    s.transcript.add(Party::bob, "leftover-unerased", s.gtilde);
    s.transcript.add(Party::bob, "leftover-erased", s.btilde);

    if (static_cast<int64_t>(s.gtilde.size()) < params.gl_size + params.gs_size) {
        abort_session(s, "degraded:leftover-underflow");
        return s;
    }
    s.gl_sel.assign(s.gtilde.begin(), s.gtilde.begin() + params.gl_size);
    s.gs_sel.assign(s.gtilde.begin() + params.gl_size,
                    s.gtilde.begin() + params.gl_size + params.gs_size);

    // Membership word over the merged selection, encrypted with a hashed pad.
    std::vector<int64_t> merged;
    std::merge(s.selections[0].begin(), s.selections[0].end(), s.selections[1].begin(),
               s.selections[1].end(), std::back_inserter(merged));
    BitVec q(params.q_len);
    {
        std::vector<char> in_one(params.n, 0);
        for (int64_t i : s.selections[1]) in_one[i] = 1;
        for (size_t i = 0; i < merged.size(); ++i) q.set(static_cast<int64_t>(i), in_one[merged[i]]);
    }
    s.q_bits = q;
    s.pad_hash = sample_hash(params.gl_size, params.q_len, rng);
    BitVec q_cipher = q ^ s.pad_hash->apply(trit_bits_at(s.y, s.gl_sel));
    if (opts.record_transcript) s.transcript.add(Party::bob, "pad-hash", s.pad_hash->m);
    s.transcript.add(Party::bob, "cipher-membership", q_cipher);

    // Sender side: recover the split, then publish hashed-key ciphertexts.
    BitVec q_alice = q_cipher ^ s.pad_hash->apply(bits_at(s.x, s.gl_sel));
    std::vector<std::vector<int64_t>> rec(2);
    for (size_t i = 0; i < merged.size(); ++i)
        rec[q_alice.get(static_cast<int64_t>(i))].push_back(merged[i]);
    if (rec[0] != s.selections[0] || rec[1] != s.selections[1])
        throw std::logic_error("degraded: selection reconstruction failed");

    for (int i = 0; i < 2; ++i) {
        std::vector<int64_t> key_src = rec[i];
        key_src.insert(key_src.end(), s.gs_sel.begin(), s.gs_sel.end());
        std::sort(key_src.begin(), key_src.end());
        s.hashes.push_back(sample_hash(params.hash_in, params.key_len, rng));
        s.ciphertexts.push_back(inputs.keys[i] ^ s.hashes[i].apply(bits_at(s.x, key_src)));
    }
    if (opts.record_transcript)
        for (int i = 0; i < 2; ++i)
            s.transcript.add(Party::alice, "hash-" + std::to_string(i), s.hashes[i].m);
    for (int i = 0; i < 2; ++i)
        s.transcript.add(Party::alice, "cipher-" + std::to_string(i), s.ciphertexts[i]);

    std::vector<int64_t> mine = s.selections[u];
    mine.insert(mine.end(), s.gs_sel.begin(), s.gs_sel.end());
    std::sort(mine.begin(), mine.end());
    s.k_hat = s.ciphertexts[u] ^ s.hashes[u].apply(trit_bits_at(s.y, mine));
    return s;
}

View merge_views(const SessionOutcome& outcome, const std::set<Party>& parties) {
    for (Party p : parties)
        if (p != Party::alice && p != Party::bob && p != Party::cathy && p != Party::eve)
            throw std::invalid_argument("merge_views: unknown party");
    View v;
    v.parties = parties;
    v.transcript = parties.empty() ? nullptr : &outcome.transcript;
    const int64_t n = outcome.params.n;
    TritString merged(n);
    for (int64_t i = 0; i < n; ++i) merged.set(i, kErased);
    auto fold = [&](const TritString& t) { merged = merge_psi(merged, t); };
    for (Party p : parties) {
        switch (p) {
            case Party::alice: {
                v.has_x = true;
                TritString all(n);
                for (int64_t i = 0; i < n; ++i) all.set(i, outcome.x.get(i));
                fold(all);
                for (size_t i = 0; i < outcome.inputs.keys.size(); ++i)
                    v.items.push_back({"key-" + std::to_string(i),
                                       outcome.inputs.keys[i].to_string()});
                break;
            }
            case Party::bob:
                fold(outcome.y);
                v.items.push_back({"choice", std::to_string(outcome.inputs.choice)});
                break;
            case Party::eve:
            case Party::cathy:
                if (outcome.z) fold(*outcome.z);
                break;
        }
    }
    if (!parties.empty()) v.channel = merged;
    return v;
}

int64_t residual_min_entropy(const SessionOutcome& outcome, const std::set<Party>& observers,
                             const std::vector<int64_t>& selection) {
    for (int64_t i : selection)
        if (i < 0 || i >= outcome.params.n)
            throw std::invalid_argument("residual_min_entropy: selection out of block");
    View v = merge_views(outcome, observers);
    if (v.has_x) return 0;
    if (!v.channel) return static_cast<int64_t>(selection.size());
    return v.channel->count_erased_at(selection);
}

} // namespace eot
