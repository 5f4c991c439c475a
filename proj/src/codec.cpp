#include "eot/codec.hpp"

#include <stdexcept>

namespace eot {

BigInt binomial(int64_t n, int64_t k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) throw std::invalid_argument("binomial: k > n");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int64_t ceil_log2(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("ceil_log2: v < 1");
    if (v == 1) return 0;
    size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2); // floor(log2 v) + 1
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(bits - 1));
    return (pw == v) ? static_cast<int64_t>(bits - 1) : static_cast<int64_t>(bits);
}

BigInt int_from_bits(const BitVec& s) {
    BigInt v = 0;
    for (int64_t i = 0; i < s.size(); ++i) {
        v <<= 1;
        if (s.get(i)) v |= 1;
    }
    return v;
}

BitVec bits_from_int(const BigInt& v, int64_t len) {
    if (v < 0) throw std::invalid_argument("bits_from_int: negative");
    BitVec s(len);
    for (int64_t i = 0; i < len; ++i) {
        if (mpz_tstbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(len - 1 - i)))
            s.set(i, 1);
    }
    BigInt top = v >> static_cast<unsigned long>(len);
    if (top != 0) throw std::invalid_argument("bits_from_int: value does not fit length");
    return s;
}

SubsetCodec make_subset_codec(int64_t universe_size, int64_t subset_size) {
    if (subset_size > universe_size)
        throw std::invalid_argument("subset codec: subset_size > universe_size");
    SubsetCodec c;
    c.universe_size = universe_size;
    c.subset_size = subset_size;
    c.count = binomial(universe_size, subset_size);
    c.m_bits = ceil_log2(c.count);
    return c;
}

std::vector<int64_t> subset_unrank(const SubsetCodec& codec, const BigInt& r) {
    if (r < 0 || r >= codec.count) throw std::invalid_argument("subset_unrank: rank out of range");
    std::vector<int64_t> out(codec.subset_size);
    BigInt rem = r;
    int64_t c = codec.universe_size - 1;
    for (int64_t i = codec.subset_size; i >= 1; --i) {
        // largest c with C(c, i) <= rem
        while (c >= i && binomial(c, i) > rem) --c;
        if (c < i) { // rem < C(i, i) = 1, so rem = 0: take {i-1, ..., 0}
            for (int64_t j = i; j >= 1; --j) out[j - 1] = j - 1;
            break;
        }
        out[i - 1] = c;
        rem -= binomial(c, i);
    }
    return out;
}

BigInt subset_rank(const SubsetCodec& codec, const std::vector<int64_t>& s) {
    if (static_cast<int64_t>(s.size()) != codec.subset_size)
        throw std::invalid_argument("subset_rank: wrong cardinality");
    BigInt r = 0;
    int64_t prev = -1;
    for (int64_t i = 0; i < codec.subset_size; ++i) {
        int64_t e = s[i];
        if (e <= prev || e >= codec.universe_size)
            throw std::invalid_argument("subset_rank: elements must be ascending and in range");
        prev = e;
        if (e >= i + 1) r += binomial(e, i + 1);
    }
    return r;
}

std::vector<int64_t> string_to_subset_onto(const SubsetCodec& codec, const BitVec& s) {
    if (s.size() != codec.m_bits)
        throw std::invalid_argument("string_to_subset_onto: wrong string length");
    BigInt v = int_from_bits(s) % codec.count;
    return subset_unrank(codec, v);
}

bool string_in_codec_range(const SubsetCodec& codec, const BitVec& s) {
    if (s.size() != codec.m_bits)
        throw std::invalid_argument("string_in_codec_range: wrong string length");
    return int_from_bits(s) < codec.count;
}

} // namespace eot
