#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "eot/gf2.hpp"

namespace eot {

using BigInt = mpz_class;

// Exact C(n, k); throws if k > n.
BigInt binomial(int64_t n, int64_t k);

// ceil(log2(v)) for v >= 1.
int64_t ceil_log2(const BigInt& v);

// Fixed-length bit-string <-> integer, bit 0 most significant, so that
// lexicographic order on strings equals numeric order.
BigInt int_from_bits(const BitVec& s);
BitVec bits_from_int(const BigInt& v, int64_t len);

// Encoder between subsets of {0..universe_size-1} of a fixed cardinality and
// their colexicographic ranks (combinatorial number system).
struct SubsetCodec {
    int64_t universe_size = 0;
    int64_t subset_size = 0;
    BigInt count;     // C(universe_size, subset_size)
    int64_t m_bits = 0; // ceil(log2(count))
};

SubsetCodec make_subset_codec(int64_t universe_size, int64_t subset_size);

// r-th subset in colex order, elements ascending; r < codec.count.
std::vector<int64_t> subset_unrank(const SubsetCodec& codec, const BigInt& r);

// Inverse of subset_unrank; s must be sorted ascending, within range, of the
// codec's cardinality.
BigInt subset_rank(const SubsetCodec& codec, const std::vector<int64_t>& s);

// Onto map {0,1}^m_bits -> subsets: unrank(int(s) mod count). Every subset
// has floor(2^m/count) or ceil(2^m/count) preimages.
std::vector<int64_t> string_to_subset_onto(const SubsetCodec& codec, const BitVec& s);

// Membership test for the bijective-map domain: an m_bits string encodes a
// subset iff its integer value is below count.
bool string_in_codec_range(const SubsetCodec& codec, const BitVec& s);

} // namespace eot
