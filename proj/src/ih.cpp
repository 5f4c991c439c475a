#include "eot/ih.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include "eot/transcript.hpp"

namespace eot {

int GreedyIHSender::respond(const BitVec& challenge_row) {
    int64_t ones = 0;
    for (const auto& s : survivors_) ones += challenge_row.dot(s);
    int answer = (2 * ones > static_cast<int64_t>(survivors_.size())) ? 1 : 0;
    std::vector<BitVec> next;
    next.reserve(survivors_.size());
    for (auto& s : survivors_)
        if (challenge_row.dot(s) == answer) next.push_back(std::move(s));
    survivors_ = std::move(next);
    return answer;
}

IHOutcome ih_run(int64_t k, IHSender& sender, Rng& rng, Transcript* transcript) {
    if (k < 2) throw std::invalid_argument("ih_run: k < 2");
    BitMatrix m = BitMatrix::random_full_rank(k - 1, k, rng);
    BitVec pi(k - 1);
    for (int64_t i = 0; i < k - 1; ++i) {
        BitVec row = m.row(i);
        if (transcript) transcript->add(Party::alice, "ih-row", row);
        int b = sender.respond(row);
        if (b != 0 && b != 1) throw std::invalid_argument("ih sender: non-bit response");
        pi.set(i, b);
        if (transcript) transcript->add(Party::bob, "ih-bit", static_cast<int64_t>(b));
    }
    auto [s0, s1] = solve_affine_pair(m, pi);

    IHOutcome out;
    out.s0 = std::move(s0);
    out.s1 = std::move(s1);
    out.challenge = std::move(m);
    out.responses = std::move(pi);
    if (out.s0 == out.s1) throw std::logic_error("ih_run: outputs not distinct");
    if (out.challenge.mul(out.s0) != out.responses ||
        out.challenge.mul(out.s1) != out.responses)
        throw std::logic_error("ih_run: outputs do not solve the system");
    if (auto s = sender.committed_input()) {
        if (*s == out.s0) out.phi = 0;
        else if (*s == out.s1) out.phi = 1;
        // honest senders always land here; leave unset otherwise
    }
    return out;
}

double ih_adversarial_hit_rate(int64_t k,
                               const std::vector<BitVec>& good_set,
                               const std::function<std::unique_ptr<IHSender>()>& make_sender,
                               int64_t trials, Rng& rng) {
    if (k > 20) throw std::invalid_argument("ih_adversarial_hit_rate: k > 20");
    if (trials < 1) throw std::invalid_argument("ih_adversarial_hit_rate: trials < 1");
    auto in_set = [&](const BitVec& v) {
        for (const auto& g : good_set)
            if (g == v) return true;
        return false;
    };
    int64_t hits = 0;
    for (int64_t t = 0; t < trials; ++t) {
        auto sender = make_sender();
        IHOutcome out = ih_run(k, *sender, rng);
        if (in_set(out.s0) && in_set(out.s1)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

IHExhaustiveReport ih_exhaustive_check(int64_t k) {
    if (k < 2 || k > 4) throw std::invalid_argument("ih_exhaustive_check: k must be in [2,4]");
    IHExhaustiveReport rep;
    rep.outputs_distinct = true;
    rep.input_in_outputs = true;

    const int64_t rows = k - 1;
    const int64_t cells = rows * k;
    const uint64_t n_inputs = uint64_t{1} << k;

    auto bits_of = [&](uint64_t v) {
        BitVec s(k);
        for (int64_t i = 0; i < k; ++i) s.set(i, (v >> (k - 1 - i)) & 1);
        return s;
    };

    // co_counts[s][t]: times t came out as the co-output for input s
    std::vector<std::vector<int64_t>> co_counts(n_inputs, std::vector<int64_t>(n_inputs, 0));
    // per receiver view (matrix, responses): which inputs are consistent
    std::map<std::pair<uint64_t, uint64_t>, std::pair<int64_t, int64_t>> view_phi;

    for (uint64_t mb = 0; mb < (uint64_t{1} << cells); ++mb) {
        BitMatrix m(rows, k);
        for (int64_t i = 0; i < cells; ++i)
            if ((mb >> i) & 1) m.set(i / k, i % k, 1);
        if (m.rank() != rows) continue;
        ++rep.matrix_count;
        for (uint64_t sv = 0; sv < n_inputs; ++sv) {
            BitVec s = bits_of(sv);
            BitVec pi = m.mul(s);
            auto [s0, s1] = solve_affine_pair(m, pi);
            if (s0 == s1) rep.outputs_distinct = false;
            int phi;
            if (s == s0) phi = 0;
            else if (s == s1) phi = 1;
            else { rep.input_in_outputs = false; continue; }
            const BitVec& co = phi == 0 ? s1 : s0;
            uint64_t cov = 0;
            for (int64_t i = 0; i < k; ++i) cov = (cov << 1) | uint64_t(co.get(i));
            co_counts[sv][cov]++;
            uint64_t piv = 0;
            for (int64_t i = 0; i < rows; ++i) piv = (piv << 1) | uint64_t(pi.get(i));
            auto& slot = view_phi[{mb, piv}];
            if (phi == 0) slot.first++;
            else slot.second++;
        }
    }

    rep.co_output_uniform = true;
    for (uint64_t sv = 0; sv < n_inputs; ++sv) {
        int64_t expect = rep.matrix_count / (static_cast<int64_t>(n_inputs) - 1);
        for (uint64_t t = 0; t < n_inputs; ++t) {
            int64_t want = (t == sv) ? 0 : expect;
            if (co_counts[sv][t] != want) rep.co_output_uniform = false;
        }
    }
    rep.phi_balanced = true;
    for (const auto& [view, cnt] : view_phi)
        if (cnt.first != cnt.second) rep.phi_balanced = false;
    return rep;
}

} // namespace eot
