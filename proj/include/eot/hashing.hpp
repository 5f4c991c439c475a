#pragma once

#include <cstdint>
#include <vector>

#include "eot/gf2.hpp"
#include "eot/rng.hpp"

namespace eot {

// Member of the universal family of all linear maps {0,1}^in -> {0,1}^out.
struct HashFn {
    BitMatrix m;

    int64_t in_len() const { return m.cols(); }
    int64_t out_len() const { return m.rows(); }
    BitVec apply(const BitVec& x) const { return m.mul(x); }
};

// Uniform over all out_len x in_len binary matrices; out_len <= in_len.
HashFn sample_hash(int64_t in_len, int64_t out_len, Rng& rng);

// Distribution over a finite support of values packed into uint64 (used for
// sources over {0,1}^k with k <= 63). Masses must be nonnegative and sum to
// 1 within 1e-12.
struct FiniteDistribution {
    std::vector<uint64_t> support;
    std::vector<double> mass;

    void validate() const;

    static FiniteDistribution uniform_over(const std::vector<uint64_t>& values);
    static FiniteDistribution point_mass(uint64_t value);
};

double collision_probability(const FiniteDistribution& d);
double renyi2(const FiniteDistribution& d);

// Key-extraction bound for a universal family: extracting l bits from a
// source of order-2 Renyi entropy c leaves the output entropy at least
// l - log2(1 + 2^(l-c)) (log form) and at least l - 2^(l-c)/ln2 (weak form).
struct PaBound {
    double log_form;
    double weak_form;
};
PaBound pa_bound(double l, double c);

// Exact H(F(A) | F) averaged over the entire family of linear maps
// {0,1}^in_len -> {0,1}^out_len, for A distributed as d over {0,1}^in_len.
// Computed by grouping maps by kernel: only kernels of dimension
// >= in_len - out_len contribute, and P[ker F = K] depends only on dim K.
// in_len <= 10; throws when the subspace enumeration would be too large.
double exact_hash_entropy(const FiniteDistribution& d, int64_t in_len, int64_t out_len);

// All subspaces of F_2^n with dimension in [dmin, n], each as a reduced
// row-echelon basis (rows are bitmasks, bit i = coordinate i). Helper for
// exact_hash_entropy, exposed for tests.
std::vector<std::vector<uint32_t>> enumerate_subspaces(int n, int dmin);

// Exhaustive collision check: max over pairs a != b of the fraction of
// family members with F(a) = F(b). family given as explicit matrices.
double max_pair_collision_fraction(const std::vector<BitMatrix>& family, int64_t in_len);

} // namespace eot
