#include "eot/oracle.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

// Exhaustive joint-distribution enumeration at tiny block lengths.
//
// The reduced passes shrink view tuples with two mechanical rules, each a
// standard mutual-information identity:
//   (1) a component that is a deterministic function of the remaining view
//       components can be dropped (or bijectively substituted);
//   (2) a component whose conditional law given the secret and the remaining
//       components does not depend on the secret can be dropped. This covers
//       fresh uniform values (hash choices) and one-time-padded ciphertexts
//       whose pad key is independent of the secret.
// Every reduced pass has a no-reduction twin (reduced = false) that
// serializes the complete view; the unit tests assert both agree to 1e-12
// on the same tiny configuration.

namespace eot {

namespace {

constexpr double kBudget = 1073741824.0; // 2^30 events

std::vector<int> positions_of(uint32_t mask) {
    std::vector<int> pos;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1) pos.push_back(i);
    return pos;
}

// 2 bits per position; value 2 = erased, else the data bit from x.
uint64_t pack_trits(uint32_t x, uint32_t erased_mask, int n) {
    uint64_t t = 0;
    for (int i = 0; i < n; ++i) {
        uint64_t v = ((erased_mask >> i) & 1) ? 2 : ((x >> i) & 1);
        t |= v << (2 * i);
    }
    return t;
}

// Row r of the matrix, gathered over the ascending positions of sel_mask,
// as one mask in block coordinates: output bit r = parity(x & row_masks[r]).
struct GatheredHash {
    std::vector<uint32_t> row_masks;
    int out_len = 0;

    uint32_t apply(uint32_t x) const {
        uint32_t out = 0;
        for (int r = 0; r < out_len; ++r)
            out |= uint32_t(std::popcount(x & row_masks[r]) & 1) << r;
        return out;
    }
};

GatheredHash gather(const BitMatrix& m, uint32_t sel_mask) {
    auto pos = positions_of(sel_mask);
    if (static_cast<int64_t>(pos.size()) != m.cols())
        throw std::invalid_argument("oracle: selection size does not match hash input");
    GatheredHash g;
    g.out_len = static_cast<int>(m.rows());
    g.row_masks.assign(g.out_len, 0);
    for (int r = 0; r < g.out_len; ++r)
        for (size_t j = 0; j < pos.size(); ++j)
            if (m.get(r, static_cast<int64_t>(j))) g.row_masks[r] |= uint32_t{1} << pos[j];
    return g;
}

struct FamilyCache {
    const std::vector<BitMatrix>* family = nullptr;
    std::unordered_map<uint32_t, std::vector<GatheredHash>> by_mask;

    const std::vector<GatheredHash>& at(uint32_t mask) {
        auto it = by_mask.find(mask);
        if (it != by_mask.end()) return it->second;
        std::vector<GatheredHash> g;
        g.reserve(family->size());
        for (const auto& m : *family) g.push_back(gather(m, mask));
        return by_mask.emplace(mask, std::move(g)).first->second;
    }
};

struct MiAcc {
    std::unordered_map<uint64_t, std::array<double, 8>> m;
    int secret_count;

    explicit MiAcc(int secrets) : secret_count(secrets) { m.reserve(1 << 16); }

    void add(uint64_t key, int secret, double w) { m[key][secret] += w; }

    double mutual_information() const {
        double total = 0;
        std::array<double, 8> ps{};
        for (const auto& [k, arr] : m) {
            (void)k;
            for (int s = 0; s < secret_count; ++s) {
                total += arr[s];
                ps[s] += arr[s];
            }
        }
        if (total <= 0) return 0;
        double mi = 0;
        for (const auto& [k, arr] : m) {
            (void)k;
            double pv = 0;
            for (int s = 0; s < secret_count; ++s) pv += arr[s];
            for (int s = 0; s < secret_count; ++s) {
                double p = arr[s];
                if (p <= 0) continue;
                mi += (p / total) * std::log2(p * total / (pv * ps[s]));
            }
        }
        return std::max(0.0, mi);
    }
};

// min(l, log2(1 + 2^(l - erased))): the extraction-bound leak cap for an
// l-bit key whose source keeps `erased` unknown bits.
double cap_bound_term(int key_len, int erased) {
    double e = static_cast<double>(key_len - erased);
    double t = e > 52 ? e : std::log2(1.0 + std::exp2(e));
    return std::min(static_cast<double>(key_len), t);
}

void check_family(const std::vector<BitMatrix>& fam, int64_t out_len, int64_t in_len,
                  const char* what) {
    if (fam.empty()) throw std::invalid_argument(std::string(what) + ": empty hash family");
    for (const auto& m : fam)
        if (m.rows() != out_len || m.cols() != in_len)
            throw std::invalid_argument(std::string(what) + ": family shape mismatch");
}

struct SelPair {
    uint32_t lu, lb; // receiver's unerased-ground pick, erased-ground pick
};

struct Branch {
    uint32_t yp;  // erased-position mask of the receiver's block
    double wy;    // probability of that mask
    std::vector<SelPair> pairs;
    double wsel;  // 1 / (#lu choices * #lb choices)
};

// Enumerate non-abort erasure patterns with their selection choices.
std::vector<Branch> branches(const OracleConfig& cfg, double* p_abort) {
    const int n = cfg.n;
    const uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<Branch> out;
    *p_abort = 0;
    for (uint32_t yp = 0; yp <= full; ++yp) {
        int er = std::popcount(yp), ue = n - er;
        double wy = std::pow(1 - cfg.eps1, ue) * std::pow(cfg.eps1, er);
        bool abort = ue < cfg.sel_size || er < cfg.sel_size;
        if (cfg.variant == Variant::degraded)
            abort = abort || (ue - cfg.sel_size < cfg.gl_size + cfg.gs_size);
        if (abort) {
            *p_abort += wy;
            continue;
        }
        Branch b;
        b.yp = yp;
        b.wy = wy;
        auto lus = [&] {
            std::vector<uint32_t> v;
            uint32_t eb = full & ~yp, sub = eb;
            for (;;) {
                if (std::popcount(sub) == cfg.sel_size) v.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & eb;
            }
            return v;
        }();
        auto lbs = [&] {
            std::vector<uint32_t> v;
            uint32_t sub = yp;
            for (;;) {
                if (std::popcount(sub) == cfg.sel_size) v.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & yp;
            }
            return v;
        }();
        b.wsel = 1.0 / (static_cast<double>(lus.size()) * static_cast<double>(lbs.size()));
        for (uint32_t lu : lus)
            for (uint32_t lb : lbs) b.pairs.push_back({lu, lb});
        out.push_back(std::move(b));
    }
    return out;
}

double selpair_events(const OracleConfig& cfg) {
    double total = 0;
    const int n = cfg.n;
    auto choose = [](int a, int b) {
        if (b < 0 || b > a) return 0.0;
        double c = 1;
        for (int i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
        return c;
    };
    for (int ue = 0; ue <= n; ++ue) {
        int er = n - ue;
        bool abort = ue < cfg.sel_size || er < cfg.sel_size;
        if (cfg.variant == Variant::degraded)
            abort = abort || (ue - cfg.sel_size < cfg.gl_size + cfg.gs_size);
        if (abort) continue;
        total += choose(n, ue) * choose(ue, cfg.sel_size) * choose(er, cfg.sel_size);
    }
    return total;
}

} // namespace

std::vector<BitMatrix> toeplitz_family(int64_t out_len, int64_t in_len) {
    int64_t nparams = in_len + out_len - 1;
    if (nparams > 24) throw std::invalid_argument("toeplitz_family: too large");
    std::vector<BitMatrix> fam;
    fam.reserve(size_t{1} << nparams);
    for (uint32_t c = 0; c < (uint32_t{1} << nparams); ++c) {
        BitMatrix m(out_len, in_len);
        for (int64_t i = 0; i < out_len; ++i)
            for (int64_t j = 0; j < in_len; ++j)
                m.set(i, j, (c >> (i - j + in_len - 1)) & 1);
        fam.push_back(std::move(m));
    }
    return fam;
}

std::vector<BitMatrix> projection_pair_family() {
    BitMatrix a(1, 2), b(1, 2);
    a.set(0, 0, 1);
    b.set(0, 1, 1);
    return {a, b};
}

OracleConfig oracle_config_c2p(int n, double eps1, double eps2, int sel_size, int key_len) {
    OracleConfig c;
    c.variant = Variant::c2p;
    c.n = n;
    c.eps1 = eps1;
    c.eps2 = eps2;
    c.sel_size = sel_size;
    c.key_len = key_len;
    if (sel_size == 2 && key_len == 1) {
        c.key_family = projection_pair_family();
        c.family_label = "restricted-family:projection-pair";
    } else {
        c.key_family = toeplitz_family(key_len, sel_size);
        c.family_label = "restricted-family:toeplitz";
    }
    return c;
}

OracleConfig oracle_config_degraded(int n, double eps1, double eps2, int sel_size, int gl_size,
                                    int gs_size, int key_len) {
    OracleConfig c;
    c.variant = Variant::degraded;
    c.n = n;
    c.eps1 = eps1;
    c.eps2 = eps2;
    c.sel_size = sel_size;
    c.gl_size = gl_size;
    c.gs_size = gs_size;
    c.key_len = key_len;
    c.key_family = toeplitz_family(key_len, sel_size + gs_size);
    c.pad_family = toeplitz_family(2 * sel_size, gl_size);
    c.family_label = "restricted-family:toeplitz";
    return c;
}

uint64_t oracle_enum_estimate(const OracleConfig& cfg) {
    const double n2 = std::exp2(cfg.n);
    const double fam = static_cast<double>(std::max<size_t>(1, cfg.key_family.size()));
    const double pfam = static_cast<double>(std::max<size_t>(1, cfg.pad_family.size()));
    const double keys = std::exp2(cfg.key_len);
    auto choose = [](int a, int b) {
        if (b < 0 || b > a) return 0.0;
        double c = 1;
        for (int i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
        return c;
    };
    double events = 0;
    if (cfg.variant == Variant::c2p) {
        const double sp = selpair_events(cfg);
        if (cfg.reduced) {
            events = sp * 2                                      // selection pass
                     + sp * n2 * fam * keys                      // decode pass
                     + sp * 2 * n2 * n2 * keys * fam             // hidden-string pass
                     + sp * 2 * n2 * n2                          // tap-choice pass
                     + sp * 2 * n2 * n2 * keys * keys * fam * fam; // tap-strings pass
        } else {
            events = sp * 2 * n2 * n2 * keys * keys * fam * fam;
        }
    } else {
        // per unerased-count ue: sum over z-unerased submasks is 4^gl *
        // 3^(ue-gl) for the partial-x pass and 2^ue for the full pass
        for (int ue = 0; ue <= cfg.n; ++ue) {
            int er = cfg.n - ue;
            if (ue < cfg.sel_size || er < cfg.sel_size ||
                ue - cfg.sel_size < cfg.gl_size + cfg.gs_size)
                continue;
            double sp = choose(cfg.n, ue) * choose(ue, cfg.sel_size) * choose(er, cfg.sel_size);
            events += sp * 2 * n2; // sender-view pass
            if (cfg.reduced) {
                events += sp * 2 * pfam * std::exp2(2 * cfg.gl_size) *
                          std::pow(3.0, ue - cfg.gl_size);
            } else {
                events += sp * std::exp2(ue) * 2 * n2 * keys * keys * fam * fam * pfam;
            }
            events += sp * n2 * fam * keys; // decode pass
        }
    }
    if (events > 1.8e19) return UINT64_MAX;
    return static_cast<uint64_t>(events);
}

namespace {

LeakageReport oracle_c2p(const OracleConfig& cfg) {
    const int n = cfg.n, len = cfg.key_len, nfam = static_cast<int>(cfg.key_family.size());
    const uint32_t xmax = uint32_t{1} << n;
    const double wx = std::exp2(-n), wk = std::exp2(-len);
    const double wf = 1.0 / nfam;
    check_family(cfg.key_family, len, cfg.sel_size, "key family");
    FamilyCache fc{&cfg.key_family, {}};

    LeakageReport rep;
    rep.family_label = cfg.family_label;
    auto brs = branches(cfg, &rep.p_abort);
    const double ok_mass = 1.0 - rep.p_abort;

    auto zw = [&](uint32_t zp) {
        return std::pow(1 - cfg.eps2, n - std::popcount(zp)) *
               std::pow(cfg.eps2, std::popcount(zp));
    };

    if (cfg.reduced) {
        rep.method["i_u_aliceeve"] = rep.method["i_kbar_bobeve"] = rep.method["i_all_eve"] =
            "reduced-enumeration";
        // --- choice vs sender+tap: only the published selections can carry
        // the choice; everything else is deterministic given them or
        // independent of the choice (validated against the full pass).
        MiAcc accA(2);
        for (const auto& b : brs)
            for (const auto& pr : b.pairs)
                for (int u = 0; u < 2; ++u) {
                    uint32_t l0 = u == 0 ? pr.lu : pr.lb, l1 = u == 0 ? pr.lb : pr.lu;
                    accA.add(uint64_t(l0) | (uint64_t(l1) << 8), u, b.wy * b.wsel * 0.5);
                }
        rep.i_u_aliceeve = accA.mutual_information();

        // --- decode exactness on every non-abort branch: the decode source
        // must avoid erased positions and the recomputed pad must cancel
        double perr = 0;
        for (const auto& b : brs)
            for (const auto& pr : b.pairs) {
                const auto& fams = fc.at(pr.lu);
                for (uint32_t x = 0; x < xmax; ++x)
                    for (int f = 0; f < nfam; ++f)
                        for (uint32_t ku = 0; ku < (uint32_t{1} << len); ++ku) {
                            uint32_t cu = ku ^ fams[f].apply(x);
                            uint32_t receiver_bits = x & ~b.yp; // the unerased view
                            bool ok = (pr.lu & b.yp) == 0 &&
                                      (cu ^ fams[f].apply(receiver_bits)) == ku;
                            if (!ok) perr += b.wy * b.wsel * wx * wf * wk;
                        }
            }
        rep.p_err_given_ok = perr / ok_mass;

        // --- unpicked string vs receiver+tap views
        MiAcc accC(1 << len);
        double bound_kbar = 0;
        for (const auto& b : brs)
            for (const auto& pr : b.pairs) {
                const auto& fams = fc.at(pr.lb);
                for (int u = 0; u < 2; ++u) {
                    uint32_t l0 = u == 0 ? pr.lu : pr.lb, l1 = u == 0 ? pr.lb : pr.lu;
                    double w0 = b.wy * b.wsel * 0.5;
                    for (uint32_t zp = 0; zp < xmax; ++zp) {
                        double w1 = w0 * zw(zp);
                        bound_kbar += w1 * cap_bound_term(len, std::popcount(pr.lb & zp));
                        for (uint32_t x = 0; x < xmax; ++x) {
                            uint64_t ytr = pack_trits(x, b.yp, n);
                            uint64_t ztr = pack_trits(x, zp, n);
                            for (int f = 0; f < nfam; ++f) {
                                uint32_t pad = fams[f].apply(x);
                                for (uint32_t kb = 0; kb < (uint32_t{1} << len); ++kb) {
                                    uint64_t key = uint64_t(u) | (ytr << 1) | (ztr << 17) |
                                                   (uint64_t(l0) << 33) | (uint64_t(l1) << 41) |
                                                   (uint64_t(f) << 49) |
                                                   (uint64_t(kb ^ pad) << 51);
                                    accC.add(key, static_cast<int>(kb), w1 * wx * wf * wk);
                                }
                            }
                        }
                    }
                }
            }
        rep.i_kbar_bobeve = accC.mutual_information();
        rep.bound_kbar = bound_kbar / ok_mass;

        // --- choice vs tap alone (first term of the bound chain)
        MiAcc accU(2);
        for (const auto& b : brs)
            for (const auto& pr : b.pairs)
                for (int u = 0; u < 2; ++u) {
                    uint32_t l0 = u == 0 ? pr.lu : pr.lb, l1 = u == 0 ? pr.lb : pr.lu;
                    double w0 = b.wy * b.wsel * 0.5;
                    for (uint32_t zp = 0; zp < xmax; ++zp) {
                        double w1 = w0 * zw(zp) * wx;
                        for (uint32_t x = 0; x < xmax; ++x) {
                            uint64_t key = pack_trits(x, zp, n) | (uint64_t(l0) << 16) |
                                           (uint64_t(l1) << 24);
                            accU.add(key, u, w1);
                        }
                    }
                }
        rep.i_u_eve = accU.mutual_information();

        // --- both strings + choice vs tap view
        MiAcc accD(1 << (2 * len + 1));
        double bound_pa = 0;
        for (const auto& b : brs)
            for (const auto& pr : b.pairs)
                for (int u = 0; u < 2; ++u) {
                    uint32_t l0 = u == 0 ? pr.lu : pr.lb, l1 = u == 0 ? pr.lb : pr.lu;
                    const auto& f0s = fc.at(l0);
                    const auto& f1s = fc.at(l1);
                    double w0 = b.wy * b.wsel * 0.5;
                    for (uint32_t zp = 0; zp < xmax; ++zp) {
                        double w1 = w0 * zw(zp);
                        bound_pa += w1 * (cap_bound_term(len, std::popcount(l0 & zp)) +
                                          cap_bound_term(len, std::popcount(l1 & zp)));
                        for (uint32_t x = 0; x < xmax; ++x) {
                            uint64_t ztr = pack_trits(x, zp, n);
                            for (int f0 = 0; f0 < nfam; ++f0)
                                for (int f1 = 0; f1 < nfam; ++f1) {
                                    uint32_t p0 = f0s[f0].apply(x), p1 = f1s[f1].apply(x);
                                    double w2 = w1 * wx * wf * wf * wk * wk;
                                    for (uint32_t k0 = 0; k0 < (uint32_t{1} << len); ++k0)
                                        for (uint32_t k1 = 0; k1 < (uint32_t{1} << len); ++k1) {
                                            uint64_t key =
                                                ztr | (uint64_t(l0) << 16) | (uint64_t(l1) << 24) |
                                                (uint64_t(f0 * nfam + f1) << 32) |
                                                (uint64_t(k0 ^ p0) << 38) |
                                                (uint64_t(k1 ^ p1) << 42);
                                            int secret = static_cast<int>((uint32_t(u) << (2 * len)) |
                                                                          (k0 << len) | k1);
                                            accD.add(key, secret, w2);
                                        }
                                }
                        }
                    }
                }
        rep.i_all_eve = accD.mutual_information();
        rep.bound_all = rep.i_u_eve + bound_pa / ok_mass;
        rep.enum_size = oracle_enum_estimate(cfg);
        return rep;
    }

    // --- no-reduction twin: one pass, complete views serialized
    rep.method["i_u_aliceeve"] = rep.method["i_kbar_bobeve"] = rep.method["i_all_eve"] =
        "full-enumeration";
    MiAcc accA(2), accC(1 << len), accD(1 << (2 * len + 1)), accU(2);
    double bound_kbar = 0, bound_pa = 0, perr = 0;
    for (const auto& b : brs)
        for (const auto& pr : b.pairs)
            for (int u = 0; u < 2; ++u) {
                uint32_t l0 = u == 0 ? pr.lu : pr.lb, l1 = u == 0 ? pr.lb : pr.lu;
                const auto& f0s = fc.at(l0);
                const auto& f1s = fc.at(l1);
                double w0 = b.wy * b.wsel * 0.5;
                for (uint32_t zp = 0; zp < xmax; ++zp) {
                    double w1 = w0 * zw(zp);
                    bound_kbar += w1 * cap_bound_term(len, std::popcount(pr.lb & zp));
                    bound_pa += w1 * (cap_bound_term(len, std::popcount(l0 & zp)) +
                                      cap_bound_term(len, std::popcount(l1 & zp)));
                    for (uint32_t x = 0; x < xmax; ++x) {
                        uint64_t ytr = pack_trits(x, b.yp, n);
                        uint64_t ztr = pack_trits(x, zp, n);
                        for (int f0 = 0; f0 < nfam; ++f0)
                            for (int f1 = 0; f1 < nfam; ++f1) {
                                uint32_t p0 = f0s[f0].apply(x), p1 = f1s[f1].apply(x);
                                uint32_t pu = u == 0 ? p0 : p1;
                                double w2 = w1 * wx * wf * wf * wk * wk;
                                for (uint32_t k0 = 0; k0 < (uint32_t{1} << len); ++k0)
                                    for (uint32_t k1 = 0; k1 < (uint32_t{1} << len); ++k1) {
                                        uint32_t c0 = k0 ^ p0, c1 = k1 ^ p1;
                                        uint32_t ku = u == 0 ? k0 : k1;
                                        uint32_t kb = u == 0 ? k1 : k0;
                                        uint64_t lam = uint64_t(l0) | (uint64_t(l1) << 8) |
                                                       (uint64_t(f0 * nfam + f1) << 16) |
                                                       (uint64_t(c0) << 22) | (uint64_t(c1) << 26);
                                        // sender+tap: k0,k1,x,z + public messages
                                        accA.add((uint64_t(k0 | (k1 << len))) | (uint64_t(x) << 4) |
                                                     (ztr << 12) | (lam << 28),
                                                 u, w2);
                                        // receiver+tap: u,y,z + public messages
                                        accC.add(uint64_t(u) | (ytr << 1) | (ztr << 17) |
                                                     (lam << 33),
                                                 static_cast<int>(kb), w2);
                                        // tap alone: z + public messages
                                        accD.add(ztr | (lam << 16),
                                                 static_cast<int>((uint32_t(u) << (2 * len)) |
                                                                  (k0 << len) | k1),
                                                 w2);
                                        accU.add(ztr | (lam << 16), u, w2);
                                        // receiver decode exactness
                                        uint32_t cu = u == 0 ? c0 : c1;
                                        if ((cu ^ pu) != ku) perr += w2;
                                    }
                            }
                    }
                }
            }
    rep.i_u_aliceeve = accA.mutual_information();
    rep.i_kbar_bobeve = accC.mutual_information();
    rep.i_all_eve = accD.mutual_information();
    rep.i_u_eve = accU.mutual_information();
    rep.bound_kbar = bound_kbar / ok_mass;
    rep.bound_all = rep.i_u_eve + bound_pa / ok_mass;
    rep.p_err_given_ok = perr / ok_mass;
    rep.enum_size = oracle_enum_estimate(cfg);
    return rep;
}

LeakageReport oracle_degraded(const OracleConfig& cfg) {
    const int n = cfg.n, len = cfg.key_len;
    const int q_len = 2 * cfg.sel_size;
    if (q_len > 4) throw std::invalid_argument("degraded oracle: sel_size > 2 unsupported");
    const uint32_t full = (uint32_t{1} << n) - 1;
    const int nfam = static_cast<int>(cfg.key_family.size());
    const int npad = static_cast<int>(cfg.pad_family.size());
    check_family(cfg.key_family, len, cfg.sel_size + cfg.gs_size, "key family");
    check_family(cfg.pad_family, q_len, cfg.gl_size, "pad family");
    FamilyCache kc{&cfg.key_family, {}}, pc{&cfg.pad_family, {}};

    LeakageReport rep;
    rep.family_label = cfg.family_label;
    auto brs = branches(cfg, &rep.p_abort);
    const double ok_mass = 1.0 - rep.p_abort;

    auto low_bits_of = [](uint32_t mask, int k) {
        uint32_t out = 0;
        for (int i = 0; i < 32 && k > 0; ++i)
            if ((mask >> i) & 1) {
                out |= uint32_t{1} << i;
                --k;
            }
        return out;
    };
    auto q_word = [&](uint32_t merged, uint32_t sel1) {
        uint32_t q = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            if ((merged >> i) & 1) {
                if ((sel1 >> i) & 1) q |= uint32_t{1} << bit;
                ++bit;
            }
        return q;
    };

    rep.method["i_u_alice"] = rep.method["i_u_eve"] =
        cfg.reduced ? "reduced-enumeration" : "full-enumeration";

    // --- choice vs sender view. Reduced form: the sender view determines
    // (and is determined by) the block, the published leftovers and the
    // decrypted membership word; key and hash draws drop by rule (2).
    if (cfg.reduced) {
        MiAcc accE(2);
        for (const auto& b : brs) {
            uint32_t eb = full & ~b.yp;
            for (const auto& pr : b.pairs) {
                uint32_t gt = eb & ~pr.lu, bt = b.yp & ~pr.lb;
                uint32_t merged = pr.lu | pr.lb;
                for (int u = 0; u < 2; ++u) {
                    uint32_t sel1 = u == 0 ? pr.lb : pr.lu;
                    uint64_t q = q_word(merged, sel1);
                    double w0 = b.wy * b.wsel * 0.5 * std::exp2(-n);
                    for (uint32_t x = 0; x <= full; ++x) {
                        uint64_t key = uint64_t(x) | (uint64_t(gt) << 8) | (uint64_t(bt) << 16) |
                                       (q << 24);
                        accE.add(key, u, w0);
                    }
                }
            }
        }
        rep.i_u_alice = accE.mutual_information();

        // --- choice vs tap view: z, leftovers, pad hash and encrypted
        // membership word; string ciphertexts drop by rule (2) (their pads
        // are fresh uniform keys unseen by the tap).
        MiAcc accF(2);
        double pad_deficit = 0, pad_log = 0;
        for (const auto& b : brs) {
            uint32_t eb = full & ~b.yp;
            int ue = std::popcount(eb);
            for (const auto& pr : b.pairs) {
                uint32_t gt = eb & ~pr.lu, bt = b.yp & ~pr.lb;
                uint32_t gl_mask = low_bits_of(gt, cfg.gl_size);
                uint32_t merged = pr.lu | pr.lb;
                const auto& pads = pc.at(gl_mask);
                // z-unerased sets are submasks of the receiver's unerased set
                uint32_t zm = eb;
                for (;;) {
                    double wz = std::pow(1 - cfg.eps2, std::popcount(zm)) *
                                std::pow(cfg.eps2, ue - std::popcount(zm));
                    uint32_t rel = zm | gl_mask;
                    auto relpos = positions_of(rel);
                    double wxr = std::exp2(-static_cast<double>(relpos.size()));
                    int pad_unknown = cfg.gl_size - std::popcount(gl_mask & zm);
                    double w_site = b.wy * b.wsel * wz;
                    pad_deficit += w_site * std::max(0, q_len - pad_unknown);
                    pad_log += w_site * cap_bound_term(q_len, pad_unknown);
                    for (int u = 0; u < 2; ++u) {
                        uint32_t sel1 = u == 0 ? pr.lb : pr.lu;
                        uint64_t q = q_word(merged, sel1);
                        double w0 = w_site * 0.5 * wxr / npad;
                        const uint64_t nrel = uint64_t{1} << relpos.size();
                        for (uint64_t xr = 0; xr < nrel; ++xr) {
                            uint32_t x = 0;
                            for (size_t i = 0; i < relpos.size(); ++i)
                                if ((xr >> i) & 1) x |= uint32_t{1} << relpos[i];
                            uint64_t ztr = pack_trits(x, full & ~zm, n);
                            for (int fl = 0; fl < npad; ++fl) {
                                uint64_t encq = q ^ pads[fl].apply(x);
                                uint64_t key = ztr | (uint64_t(gt) << 16) | (uint64_t(bt) << 24) |
                                               (uint64_t(fl) << 32) | (encq << 40);
                                accF.add(key, u, w0);
                            }
                        }
                    }
                    if (zm == 0) break;
                    zm = (zm - 1) & eb;
                }
            }
        }
        rep.i_u_eve = accF.mutual_information();
        rep.bound_u_eve_pad_deficit = pad_deficit / ok_mass;
        rep.bound_u_eve_log = pad_log / ok_mass;
    } else {
        // --- no-reduction twin
        MiAcc accE(2), accF(2);
        double pad_deficit = 0, pad_log = 0;
        const double wk = std::exp2(-len), wf = 1.0 / nfam, wl = 1.0 / npad;
        for (const auto& b : brs) {
            uint32_t eb = full & ~b.yp;
            int ue = std::popcount(eb);
            for (const auto& pr : b.pairs) {
                uint32_t gt = eb & ~pr.lu, bt = b.yp & ~pr.lb;
                uint32_t gl_mask = low_bits_of(gt, cfg.gl_size);
                uint32_t gs_mask = low_bits_of(gt & ~gl_mask, cfg.gs_size);
                uint32_t merged = pr.lu | pr.lb;
                const auto& pads = pc.at(gl_mask);
                uint32_t zm = eb;
                for (;;) {
                    double wz = std::pow(1 - cfg.eps2, std::popcount(zm)) *
                                std::pow(cfg.eps2, ue - std::popcount(zm));
                    int pad_unknown = cfg.gl_size - std::popcount(gl_mask & zm);
                    double w_site = b.wy * b.wsel * wz;
                    pad_deficit += w_site * std::max(0, q_len - pad_unknown);
                    pad_log += w_site * cap_bound_term(q_len, pad_unknown);
                    for (int u = 0; u < 2; ++u) {
                        uint32_t sel0 = u == 0 ? pr.lu : pr.lb;
                        uint32_t sel1 = u == 0 ? pr.lb : pr.lu;
                        uint64_t q = q_word(merged, sel1);
                        const auto& f0s = kc.at(sel0 | gs_mask);
                        const auto& f1s = kc.at(sel1 | gs_mask);
                        double w0 = w_site * 0.5 * std::exp2(-n) * wk * wk * wf * wf * wl;
                        for (uint32_t x = 0; x <= full; ++x) {
                            uint64_t ztr = pack_trits(x, full & ~zm, n);
                            for (int fl = 0; fl < npad; ++fl) {
                                uint64_t encq = q ^ pads[fl].apply(x);
                                for (int f0 = 0; f0 < nfam; ++f0)
                                    for (int f1 = 0; f1 < nfam; ++f1) {
                                        uint32_t p0 = f0s[f0].apply(x), p1 = f1s[f1].apply(x);
                                        for (uint32_t k0 = 0; k0 < (uint32_t{1} << len); ++k0)
                                            for (uint32_t k1 = 0; k1 < (uint32_t{1} << len);
                                                 ++k1) {
                                                uint64_t lam =
                                                    uint64_t(gt) | (uint64_t(bt) << 8) |
                                                    (uint64_t(fl) << 16) | (encq << 20) |
                                                    (uint64_t(f0 * nfam + f1) << 24) |
                                                    (uint64_t(k0 ^ p0) << 30) |
                                                    (uint64_t(k1 ^ p1) << 32);
                                                accE.add((uint64_t(k0 | (k1 << len))) |
                                                             (uint64_t(x) << 4) | (lam << 12),
                                                         u, w0);
                                                accF.add(ztr | (lam << 16), u, w0);
                                            }
                                    }
                            }
                        }
                    }
                    if (zm == 0) break;
                    zm = (zm - 1) & eb;
                }
            }
        }
        rep.i_u_alice = accE.mutual_information();
        rep.i_u_eve = accF.mutual_information();
        rep.bound_u_eve_pad_deficit = pad_deficit / ok_mass;
        rep.bound_u_eve_log = pad_log / ok_mass;
    }

    // decode exactness: the receiver's key source is fully unerased for it
    double perr = 0;
    for (const auto& b : brs)
        for (const auto& pr : b.pairs) {
            uint32_t eb = full & ~b.yp;
            uint32_t gt = eb & ~pr.lu;
            uint32_t gl_mask = low_bits_of(gt, cfg.gl_size);
            uint32_t gs_mask = low_bits_of(gt & ~gl_mask, cfg.gs_size);
            const auto& fs = kc.at(pr.lu | gs_mask);
            for (uint32_t x = 0; x <= full; ++x)
                for (int f = 0; f < nfam; ++f)
                    for (uint32_t ku = 0; ku < (uint32_t{1} << len); ++ku) {
                        uint32_t cu = ku ^ fs[f].apply(x);
                        uint32_t receiver_bits = x & ~b.yp;
                        bool ok = ((pr.lu | gs_mask) & b.yp) == 0 &&
                                  (cu ^ fs[f].apply(receiver_bits)) == ku;
                        if (!ok) perr += b.wy * b.wsel * std::exp2(-n - len) / nfam;
                    }
        }
    rep.p_err_given_ok = perr / ok_mass;
    rep.enum_size = oracle_enum_estimate(cfg);
    return rep;
}

} // namespace

LeakageReport exact_leakage_oracle(const OracleConfig& cfg) {
    uint64_t est = oracle_enum_estimate(cfg);
    if (static_cast<double>(est) > kBudget) throw OracleBudgetError(est);
    if (cfg.n > 8) throw std::invalid_argument("oracle: n > 8");
    if (cfg.key_len != 1) throw std::invalid_argument("oracle: key_len must be 1");
    if (cfg.sel_size < 1 || cfg.sel_size > 4)
        throw std::invalid_argument("oracle: sel_size out of range");
    if (cfg.variant == Variant::c2p) return oracle_c2p(cfg);
    if (cfg.variant == Variant::degraded) return oracle_degraded(cfg);
    throw std::invalid_argument("oracle: only the c2p and degraded variants are supported");
}

} // namespace eot
