#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eot/gf2.hpp"
#include "eot/rng.hpp"

namespace eot {

inline constexpr uint8_t kErased = 2;

// Sequence over {0, 1, erased}.
class TritString {
public:
    TritString() = default;
    explicit TritString(int64_t len) : s_(len, 0) {}

    static TritString from_ascii(const std::string& t); // alphabet {0,1,e}

    int64_t size() const { return static_cast<int64_t>(s_.size()); }
    uint8_t get(int64_t i) const { return s_[i]; }
    void set(int64_t i, uint8_t v) { s_[i] = v; }
    bool erased(int64_t i) const { return s_[i] == kErased; }

    int64_t count_erased() const;
    int64_t count_unerased() const { return size() - count_erased(); }

    // Erasure count within a selection of positions.
    int64_t count_erased_at(const std::vector<int64_t>& sel) const;

    std::string to_ascii() const;

    bool operator==(const TritString& o) const { return s_ == o.s_; }

private:
    std::vector<uint8_t> s_;
};

enum class Topology { independent, degraded, single };

struct ChannelConfig {
    double eps1 = 0.0; // erasure probability on the receiver leg
    double eps2 = 0.0; // erasure probability on the eavesdropper leg
    Topology topology = Topology::independent;
};

struct ChannelOutput {
    TritString y;
    std::optional<TritString> z;
};

// Broadcast one block of input bits.
//  independent: Y_i = X_i w.p. 1-eps1 else erased, Z_i likewise with eps2,
//               all erasure draws mutually independent.
//  degraded:    Y as above; Z_i = Y_i w.p. 1-eps2 else erased (cascade), so
//               Z's erasure set contains Y's.
//  single:      only Y is produced.
ChannelOutput transmit(const BitVec& x, const ChannelConfig& cfg, Rng& rng);

// Positions partitioned by erasure status: (erased, unerased).
std::pair<std::vector<int64_t>, std::vector<int64_t>> erasure_sets(const TritString& y);

// Merged eavesdropper view: per position Y_i if unerased, else Z_i if
// unerased, else erased. Throws if both are unerased but disagree (cannot
// arise from a genuine broadcast).
TritString merge_psi(const TritString& y, const TritString& z);

} // namespace eot
