#include "eot/hashing.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace eot {

HashFn sample_hash(int64_t in_len, int64_t out_len, Rng& rng) {
    if (out_len > in_len)
        throw std::invalid_argument("sample_hash: output longer than input");
    return HashFn{BitMatrix::random(out_len, in_len, rng)};
}

void FiniteDistribution::validate() const {
    if (support.size() != mass.size())
        throw std::invalid_argument("FiniteDistribution: size mismatch");
    double s = 0;
    for (double p : mass) {
        if (p < 0) throw std::invalid_argument("FiniteDistribution: negative mass");
        s += p;
    }
    if (std::abs(s - 1.0) > 1e-12)
        throw std::invalid_argument("FiniteDistribution: masses do not sum to 1");
}

FiniteDistribution FiniteDistribution::uniform_over(const std::vector<uint64_t>& values) {
    FiniteDistribution d;
    d.support = values;
    d.mass.assign(values.size(), 1.0 / static_cast<double>(values.size()));
    return d;
}

FiniteDistribution FiniteDistribution::point_mass(uint64_t value) {
    return FiniteDistribution{{value}, {1.0}};
}

double collision_probability(const FiniteDistribution& d) {
    d.validate();
    double s = 0;
    for (double p : d.mass) s += p * p;
    return s;
}

double renyi2(const FiniteDistribution& d) {
    return std::log2(1.0 / collision_probability(d));
}

PaBound pa_bound(double l, double c) {
    if (l < 0) throw std::invalid_argument("pa_bound: l < 0");
    double e = l - c;
    double log_form;
    if (e > 52) log_form = l - e; // log2(1+2^e) ~ e for large e
    else log_form = l - std::log2(1.0 + std::exp2(e));
    double weak_form = l - std::exp2(e) / std::log(2.0);
    return {log_form, weak_form};
}

std::vector<std::vector<uint32_t>> enumerate_subspaces(int n, int dmin) {
    if (n < 0 || n > 20) throw std::invalid_argument("enumerate_subspaces: n out of range");
    std::vector<std::vector<uint32_t>> out;
    // A subspace of dimension d has a unique RREF basis: pivot columns
    // p_1 < ... < p_d, row i has a 1 at p_i, 0 at the other pivots, and free
    // bits at non-pivot columns right of p_i.
    for (int d = std::max(dmin, 0); d <= n; ++d) {
        if (d == 0) { out.push_back({}); continue; }
        std::vector<int> piv(d);
        for (int i = 0; i < d; ++i) piv[i] = i;
        for (;;) {
            // free positions per row
            std::vector<std::vector<int>> free_pos(d);
            int total_free = 0;
            std::vector<char> is_piv(n, 0);
            for (int p : piv) is_piv[p] = 1;
            for (int i = 0; i < d; ++i) {
                for (int c = piv[i] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos[i].push_back(c);
                total_free += static_cast<int>(free_pos[i].size());
            }
            if (total_free > 30)
                throw std::invalid_argument("enumerate_subspaces: too many subspaces");
            for (uint32_t bits = 0; bits < (uint32_t{1} << total_free); ++bits) {
                std::vector<uint32_t> basis(d);
                int b = 0;
                for (int i = 0; i < d; ++i) {
                    uint32_t row = uint32_t{1} << piv[i];
                    for (int fp : free_pos[i]) {
                        if ((bits >> b) & 1) row |= uint32_t{1} << fp;
                        ++b;
                    }
                    basis[i] = row;
                }
                out.push_back(std::move(basis));
            }
            // next pivot combination
            int i = d - 1;
            while (i >= 0 && piv[i] == n - d + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

namespace {

// P[random l x s binary matrix has full column rank s], s <= l.
double full_column_rank_prob(int64_t l, int64_t s) {
    if (s > l) return 0.0;
    double p = 1.0;
    for (int64_t i = 0; i < s; ++i) p *= 1.0 - std::exp2(static_cast<double>(i - l));
    return p;
}

// Canonical coset representative of v modulo span(basis); basis in RREF.
uint32_t reduce_mod(uint32_t v, const std::vector<uint32_t>& basis) {
    for (uint32_t row : basis) {
        uint32_t pivot = row & (~row + 1); // lowest set bit is the pivot
        if (v & pivot) v ^= row;
    }
    return v;
}

} // namespace

double exact_hash_entropy(const FiniteDistribution& d, int64_t in_len, int64_t out_len) {
    d.validate();
    if (in_len > 10) throw std::invalid_argument("exact_hash_entropy: in_len > 10");
    if (out_len > in_len) throw std::invalid_argument("exact_hash_entropy: out_len > in_len");
    for (uint64_t v : d.support)
        if (v >> in_len) throw std::invalid_argument("exact_hash_entropy: support out of range");

    // H(F(A)|F) = sum over kernels K of P[ker F = K] * H(A mod K).
    // P depends only on dim K: rows lie in the annihilator (2^-l*dim) and the
    // induced map on the quotient must be injective.
    int dmin = static_cast<int>(std::max<int64_t>(0, in_len - out_len));
    auto subspaces = enumerate_subspaces(static_cast<int>(in_len), dmin);

    double total = 0;
    std::unordered_map<uint32_t, double> coset_mass;
    for (const auto& basis : subspaces) {
        int64_t dim = static_cast<int64_t>(basis.size());
        double pk = std::exp2(-static_cast<double>(out_len * dim)) *
                    full_column_rank_prob(out_len, in_len - dim);
        if (pk == 0.0) continue;
        coset_mass.clear();
        for (size_t i = 0; i < d.support.size(); ++i) {
            uint32_t rep = reduce_mod(static_cast<uint32_t>(d.support[i]), basis);
            coset_mass[rep] += d.mass[i];
        }
        double h = 0;
        for (const auto& [rep, p] : coset_mass)
            if (p > 0) h -= p * std::log2(p);
        total += pk * h;
    }
    return total;
}

double max_pair_collision_fraction(const std::vector<BitMatrix>& family, int64_t in_len) {
    if (family.empty()) throw std::invalid_argument("empty family");
    if (in_len > 16) throw std::invalid_argument("max_pair_collision_fraction: in_len > 16");
    double worst = 0;
    const uint64_t n = uint64_t{1} << in_len;
    for (uint64_t a = 0; a < n; ++a) {
        for (uint64_t b = a + 1; b < n; ++b) {
            // linear family: F(a) = F(b) iff F(a^b) = 0
            BitVec v(in_len);
            uint64_t x = a ^ b;
            for (int64_t i = 0; i < in_len; ++i) v.set(i, (x >> i) & 1);
            int64_t coll = 0;
            for (const auto& m : family)
                if (m.mul(v).popcount() == 0) ++coll;
            worst = std::max(worst, static_cast<double>(coll) / static_cast<double>(family.size()));
        }
    }
    return worst;
}

} // namespace eot
