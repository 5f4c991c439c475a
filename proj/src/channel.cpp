#include "eot/channel.hpp"

#include <stdexcept>

namespace eot {

TritString TritString::from_ascii(const std::string& t) {
    TritString r(static_cast<int64_t>(t.size()));
    for (size_t i = 0; i < t.size(); ++i) {
        switch (t[i]) {
            case '0': r.s_[i] = 0; break;
            case '1': r.s_[i] = 1; break;
            case 'e': r.s_[i] = kErased; break;
            default: throw std::invalid_argument("TritString: bad char");
        }
    }
    return r;
}

int64_t TritString::count_erased() const {
    int64_t c = 0;
    for (uint8_t v : s_) c += (v == kErased);
    return c;
}

int64_t TritString::count_erased_at(const std::vector<int64_t>& sel) const {
    int64_t c = 0;
    for (int64_t i : sel) c += (s_[i] == kErased);
    return c;
}

std::string TritString::to_ascii() const {
    std::string t(s_.size(), '0');
    for (size_t i = 0; i < s_.size(); ++i) t[i] = s_[i] == kErased ? 'e' : char('0' + s_[i]);
    return t;
}

ChannelOutput transmit(const BitVec& x, const ChannelConfig& cfg, Rng& rng) {
    if (cfg.eps1 < 0 || cfg.eps1 > 1 || cfg.eps2 < 0 || cfg.eps2 > 1)
        throw std::invalid_argument("transmit: erasure probability out of [0,1]");
    const int64_t n = x.size();
    ChannelOutput out;
    out.y = TritString(n);
    for (int64_t i = 0; i < n; ++i)
        out.y.set(i, rng.bernoulli(cfg.eps1) ? kErased : uint8_t(x.get(i)));
    if (cfg.topology == Topology::single) return out;

    TritString z(n);
    if (cfg.topology == Topology::independent) {
        for (int64_t i = 0; i < n; ++i)
            z.set(i, rng.bernoulli(cfg.eps2) ? kErased : uint8_t(x.get(i)));
    } else { // degraded cascade: Z is a further-erased copy of Y
        for (int64_t i = 0; i < n; ++i) {
            if (out.y.erased(i) || rng.bernoulli(cfg.eps2)) z.set(i, kErased);
            else z.set(i, out.y.get(i));
        }
    }
    out.z = std::move(z);
    return out;
}

std::pair<std::vector<int64_t>, std::vector<int64_t>> erasure_sets(const TritString& y) {
    std::vector<int64_t> erased, unerased;
    erased.reserve(y.size());
    unerased.reserve(y.size());
    for (int64_t i = 0; i < y.size(); ++i)
        (y.erased(i) ? erased : unerased).push_back(i);
    return {std::move(erased), std::move(unerased)};
}

TritString merge_psi(const TritString& y, const TritString& z) {
    if (y.size() != z.size()) throw std::invalid_argument("merge_psi: length mismatch");
    TritString psi(y.size());
    for (int64_t i = 0; i < y.size(); ++i) {
        if (!y.erased(i)) {
            if (!z.erased(i) && z.get(i) != y.get(i))
                throw std::invalid_argument("merge_psi: conflicting unerased symbols");
            psi.set(i, y.get(i));
        } else if (!z.erased(i)) {
            psi.set(i, z.get(i));
        } else {
            psi.set(i, kErased);
        }
    }
    return psi;
}

} // namespace eot
