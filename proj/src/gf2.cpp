#include "eot/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace eot {

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(static_cast<int64_t>(bits.size())) {
    int64_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

BitVec BitVec::random(int64_t len, Rng& rng) {
    BitVec v(len);
    for (auto& w : v.w_) w = rng.next_u64();
    if (len & 63) v.w_.back() &= (~uint64_t{0}) >> (64 - (len & 63));
    return v;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec v(static_cast<int64_t>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVec: bad char");
        v.set(static_cast<int64_t>(i), s[i] == '1');
    }
    return v;
}

BitVec BitVec::operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec xor: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::lex_less(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec lex_less: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            int64_t bit = static_cast<int64_t>(std::countr_zero(d));
            return ((w_[i] >> bit) & 1) == 0;
        }
    }
    return false;
}

int64_t BitVec::popcount() const {
    int64_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

int BitVec::dot(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec dot: length mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (int64_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(int64_t n) {
    BitMatrix m(n, n);
    for (int64_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

BitMatrix BitMatrix::random(int64_t rows, int64_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    uint64_t tail = (cols & 63) ? (~uint64_t{0}) >> (64 - (cols & 63)) : ~uint64_t{0};
    for (int64_t r = 0; r < rows; ++r) {
        for (int64_t k = 0; k < m.wpr_; ++k) m.w_[r * m.wpr_ + k] = rng.next_u64();
        m.w_[r * m.wpr_ + m.wpr_ - 1] &= tail;
    }
    return m;
}

BitMatrix BitMatrix::random_full_rank(int64_t rows, int64_t cols, Rng& rng) {
    if (rows > cols) throw std::invalid_argument("random_full_rank: rows > cols");
    if (rows == 0) return BitMatrix(0, cols);
    for (;;) {
        BitMatrix m = random(rows, cols, rng);
        if (m.rank() == rows) return m;
    }
}

BitVec BitMatrix::row(int64_t r) const {
    BitVec v(cols_);
    for (int64_t k = 0; k < wpr_; ++k) v.words()[k] = w_[r * wpr_ + k];
    return v;
}

void BitMatrix::set_row(int64_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (int64_t k = 0; k < wpr_; ++k) w_[r * wpr_ + k] = v.words()[k];
}

BitVec BitMatrix::mul(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    BitVec out(rows_);
    const auto& vw = v.words();
    for (int64_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint64_t* rw = &w_[r * wpr_];
        for (int64_t k = 0; k < wpr_; ++k) acc ^= rw[k] & vw[k];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

int64_t BitMatrix::rank() const {
    std::vector<uint64_t> a(w_);
    int64_t rank = 0;
    for (int64_t c = 0; c < cols_ && rank < rows_; ++c) {
        int64_t wi = c >> 6;
        uint64_t mask = uint64_t{1} << (c & 63);
        int64_t pivot = -1;
        for (int64_t r = rank; r < rows_; ++r) {
            if (a[r * wpr_ + wi] & mask) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int64_t k = wi; k < wpr_; ++k)
                std::swap(a[pivot * wpr_ + k], a[rank * wpr_ + k]);
        }
        for (int64_t r = rank + 1; r < rows_; ++r) {
            if (a[r * wpr_ + wi] & mask) {
                for (int64_t k = wi; k < wpr_; ++k)
                    a[r * wpr_ + k] ^= a[rank * wpr_ + k];
            }
        }
        ++rank;
    }
    return rank;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (int64_t r = 0; r < rows_; ++r) {
        if (r) s += '/';
        s += row(r).to_string();
    }
    return s;
}

std::pair<BitVec, BitVec> solve_affine_pair(const BitMatrix& m, const BitVec& pi) {
    const int64_t rows = m.rows(), cols = m.cols();
    if (rows != cols - 1) throw std::invalid_argument("solve_affine_pair: need rows = cols-1");
    if (pi.size() != rows) throw std::invalid_argument("solve_affine_pair: rhs length mismatch");

    // Reduce the augmented system [m | pi] to RREF.
    const int64_t wpr = (cols + 63) / 64;
    std::vector<uint64_t> a(m.w_);
    std::vector<int> rhs(rows);
    for (int64_t r = 0; r < rows; ++r) rhs[r] = pi.get(r);

    std::vector<int64_t> pivot_col(rows, -1);
    int64_t rank = 0;
    for (int64_t c = 0; c < cols && rank < rows; ++c) {
        int64_t wi = c >> 6;
        uint64_t mask = uint64_t{1} << (c & 63);
        int64_t pivot = -1;
        for (int64_t r = rank; r < rows; ++r)
            if (a[r * wpr + wi] & mask) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int64_t k = 0; k < wpr; ++k)
                std::swap(a[pivot * wpr + k], a[rank * wpr + k]);
            std::swap(rhs[pivot], rhs[rank]);
        }
        for (int64_t r = 0; r < rows; ++r) {
            if (r != rank && (a[r * wpr + wi] & mask)) {
                for (int64_t k = 0; k < wpr; ++k) a[r * wpr + k] ^= a[rank * wpr + k];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col[rank] = c;
        ++rank;
    }
    if (rank != rows) throw std::invalid_argument("solve_affine_pair: rank-deficient matrix");

    // Exactly one free column; the null space is spanned by one vector.
    int64_t free_col = -1;
    {
        std::vector<char> is_pivot(cols, 0);
        for (int64_t r = 0; r < rows; ++r) is_pivot[pivot_col[r]] = 1;
        for (int64_t c = 0; c < cols; ++c) if (!is_pivot[c]) { free_col = c; break; }
    }

    BitVec x0(cols), nullv(cols);
    nullv.set(free_col, 1);
    for (int64_t r = 0; r < rows; ++r) {
        x0.set(pivot_col[r], rhs[r]);
        int64_t wi = free_col >> 6;
        nullv.set(pivot_col[r], (a[r * wpr + wi] >> (free_col & 63)) & 1);
    }
    BitVec x1 = x0 ^ nullv;
    if (x1.lex_less(x0)) std::swap(x0, x1);
    return {x0, x1};
}

} // namespace eot
