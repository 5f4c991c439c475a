#include "eot/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace eot {

BigInt bigint_below(const BigInt& bound, Rng& rng) {
    if (bound <= 0) throw std::invalid_argument("bigint_below: bound < 1");
    int64_t bits = ceil_log2(bound);
    if (bits == 0) return 0;
    for (;;) {
        BigInt v = 0;
        for (int64_t got = 0; got < bits; got += 64) {
            v <<= 64;
            v |= BigInt(rng.next_u64());
        }
        v >>= static_cast<unsigned long>((bits + 63) / 64 * 64 - bits);
        if (v < bound) return v;
    }
}

int best_knowledge_bit(const BobView& v, int64_t position, Rng& rng) {
    if (v.psi && !v.psi->erased(position)) return v.psi->get(position);
    if (!v.y->erased(position)) return v.y->get(position);
    return rng.bit();
}

BitVec MalLeBobStrategy::choose_string(const BobView& v, Rng& rng) {
    return BitVec::random(v.params->m_bits, rng);
}

namespace {

// Partial Fisher-Yates: k uniform draws without replacement from pool
// (consumed in place).
std::vector<int64_t> draw_without_replacement(std::vector<int64_t>& pool, int64_t k, Rng& rng) {
    if (k > static_cast<int64_t>(pool.size()))
        throw std::invalid_argument("draw_without_replacement: pool too small");
    std::vector<int64_t> out;
    out.reserve(k);
    for (int64_t i = 0; i < k; ++i) {
        uint64_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    pool.erase(pool.begin(), pool.begin() + k);
    return out;
}

} // namespace

void MalLeBobStrategy::build_tuples(const BobView& v, const std::vector<int64_t>& check_slots,
                                    Rng& rng, std::vector<int64_t>& good_tuple,
                                    std::vector<int64_t>& hidden_tuple) {
    const auto& p = *v.params;
    auto [erased, unerased] = erasure_sets(*v.y);
    good_tuple = draw_without_replacement(unerased, p.sel_size, rng);
    hidden_tuple.assign(p.sel_size, -1);
    std::vector<char> is_check(p.sel_size, 0);
    for (int64_t s : check_slots) is_check[s] = 1;
    auto from_unerased = draw_without_replacement(unerased, p.gamma_n, rng);
    auto from_erased = draw_without_replacement(erased, p.sel_size - p.gamma_n, rng);
    int64_t iu = 0, ie = 0;
    for (int64_t s = 0; s < p.sel_size; ++s)
        hidden_tuple[s] = is_check[s] ? from_unerased[iu++] : from_erased[ie++];
}

void SwapBob::build_tuples(const BobView& v, const std::vector<int64_t>& check_slots, Rng& rng,
                           std::vector<int64_t>& good_tuple,
                           std::vector<int64_t>& hidden_tuple) {
    MalLeBobStrategy::build_tuples(v, check_slots, rng, good_tuple, hidden_tuple);
    // Exchange slots: known bits move into the hidden tuple, displacing
    // receiver-erased entries into the good tuple. Both tuples end up with a
    // linear-in-n count of merged-view-erased positions.
    std::vector<char> is_check(v.params->sel_size, 0);
    for (int64_t s : check_slots) is_check[s] = 1;
    std::vector<int64_t> candidates; // displaceable hidden-tuple slots
    for (int64_t s = 0; s < v.params->sel_size; ++s)
        if (!is_check[s]) candidates.push_back(s);
    int64_t nswap = std::min<int64_t>(swaps_, static_cast<int64_t>(candidates.size()));
    auto hidden_slots = draw_without_replacement(candidates, nswap, rng);
    std::vector<int64_t> good_slots_pool(v.params->sel_size);
    for (int64_t i = 0; i < v.params->sel_size; ++i) good_slots_pool[i] = i;
    auto good_slots = draw_without_replacement(good_slots_pool, nswap, rng);
    for (int64_t i = 0; i < nswap; ++i)
        std::swap(good_tuple[good_slots[i]], hidden_tuple[hidden_slots[i]]);
}

int MalLeBobStrategy::reveal_bit(const BobView& v, int64_t position, Rng& rng) {
    return best_knowledge_bit(v, position, rng);
}

BitVec MalGtBobStrategy::choose_string(const BobView& v, const SubsetCodec& codec, Rng& rng) {
    const auto& p = *v.params;
    // In-range strings are weighted so the committed string is uniform over
    // all m-bit strings: with probability count/2^m encode a uniform
    // ground-unerased subset, otherwise pick uniformly among the out-of-range
    // strings.
    long exp2part = 0;
    double mant = mpz_get_d_2exp(&exp2part, codec.count.get_mpz_t());
    double in_range_prob = mant * std::exp2(static_cast<double>(exp2part) -
                                            static_cast<double>(codec.m_bits));
    if (rng.bernoulli(in_range_prob)) {
        auto [erased, unerased] = erasure_sets(*v.y);
        (void)erased;
        auto sel = draw_without_replacement(unerased, p.sel_size, rng);
        std::sort(sel.begin(), sel.end());
        return bits_from_int(subset_rank(codec, sel), codec.m_bits);
    }
    BigInt span = (BigInt(1) << static_cast<unsigned long>(codec.m_bits)) - codec.count;
    return bits_from_int(codec.count + bigint_below(span, rng), codec.m_bits);
}

int MalGtBobStrategy::reveal_bit(const BobView& v, int64_t position, Rng& rng) {
    return best_knowledge_bit(v, position, rng);
}

BitVec PackBob::choose_string(const BobView& v, const SubsetCodec& codec, Rng& rng) {
    (void)rng;
    const auto& p = *v.params;
    const TritString& known = v.psi ? *v.psi : *v.y;
    std::vector<int64_t> sel;
    sel.reserve(p.sel_size);
    for (int64_t i = 0; i < p.n && static_cast<int64_t>(sel.size()) < p.sel_size; ++i)
        if (!known.erased(i)) sel.push_back(i);
    for (int64_t i = 0; i < p.n && static_cast<int64_t>(sel.size()) < p.sel_size; ++i)
        if (known.erased(i)) sel.push_back(i);
    std::sort(sel.begin(), sel.end());
    return bits_from_int(subset_rank(codec, sel), codec.m_bits);
}

} // namespace eot
