#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eot/rng.hpp"

namespace eot {

// Bit vector over GF(2), word-packed. Bit 0 is the first element of the
// sequence; unused high bits of the last word are kept zero.
class BitVec {
public:
    BitVec() : len_(0) {}
    explicit BitVec(int64_t len) : len_(len), w_((len + 63) / 64, 0) {}
    BitVec(std::initializer_list<int> bits);

    static BitVec random(int64_t len, Rng& rng);
    static BitVec from_string(const std::string& s); // "0101"

    int64_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int get(int64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int64_t i, int b) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    BitVec operator^(const BitVec& o) const;
    BitVec& operator^=(const BitVec& o);
    bool operator==(const BitVec& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    // Order of the bit sequence read left to right (index 0 first).
    bool lex_less(const BitVec& o) const;

    int64_t popcount() const;
    int dot(const BitVec& o) const; // inner product mod 2, same length

    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    int64_t len_;
    std::vector<uint64_t> w_;
};

// Row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BitMatrix(int64_t rows, int64_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static BitMatrix identity(int64_t n);
    static BitMatrix random(int64_t rows, int64_t cols, Rng& rng);
    // Uniform over all rank-`rows` matrices of the given shape (rows <= cols),
    // by rejection: resample until full rank. Acceptance probability is at
    // least prod_{j>=1}(1 - 2^-j) ~ 0.29, so expected retries are small.
    static BitMatrix random_full_rank(int64_t rows, int64_t cols, Rng& rng);

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }

    int get(int64_t r, int64_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int64_t r, int64_t c, int b) {
        uint64_t m = uint64_t{1} << (c & 63);
        uint64_t& word = w_[r * wpr_ + (c >> 6)];
        if (b) word |= m; else word &= ~m;
    }

    BitVec row(int64_t r) const;
    void set_row(int64_t r, const BitVec& v);

    BitVec mul(const BitVec& v) const; // throws on dimension mismatch
    int64_t rank() const;

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    std::string to_string() const; // rows joined by '/'

private:
    int64_t rows_, cols_, wpr_;
    std::vector<uint64_t> w_;

    friend std::pair<BitVec, BitVec> solve_affine_pair(const BitMatrix&, const BitVec&);
};

// For m with rows = cols-1 and full row rank, returns the exactly two
// solutions x of m*x = pi, ordered lexicographically (first < second).
// Throws on rank-deficient input.
std::pair<BitVec, BitVec> solve_affine_pair(const BitMatrix& m, const BitVec& pi);

} // namespace eot
