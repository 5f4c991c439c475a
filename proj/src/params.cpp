#include "eot/params.hpp"

#include <cmath>
#include <stdexcept>

#include "eot/codec.hpp"

namespace eot {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::c2p: return "c2p";
        case Variant::c1p: return "c1p";
        case Variant::oneofN_2p: return "oneofN-2p";
        case Variant::oneofN_1p: return "oneofN-1p";
        case Variant::mal_le_half: return "mal-le-half";
        case Variant::mal_gt_half: return "mal-gt-half";
        case Variant::independent_pair: return "independent-pair";
        case Variant::degraded: return "degraded";
        case Variant::two_party: return "two-party";
    }
    return "?";
}

Variant variant_from_name(const std::string& s) {
    for (Variant v : {Variant::c2p, Variant::c1p, Variant::oneofN_2p, Variant::oneofN_1p,
                      Variant::mal_le_half, Variant::mal_gt_half, Variant::independent_pair,
                      Variant::degraded, Variant::two_party}) {
        if (s == variant_name(v)) return v;
    }
    throw std::invalid_argument("unknown variant: " + s);
}

namespace {

// floor() after a tiny nudge: the size expressions multiply small rationals
// whose binary representation can land a hair under the intended integer.
int64_t floor_count(double v) { return static_cast<int64_t>(std::floor(v + 1e-9)); }

void check_probs(double eps1, double eps2) {
    if (!(eps1 >= 0 && eps1 <= 1 && eps2 >= 0 && eps2 <= 1))
        throw std::invalid_argument("erasure probabilities must lie in [0,1]");
}

double c1p_limit(double eps1, double eps2) {
    if (eps1 < eps2 / 2) return eps1;
    if (eps1 < 0.5) return eps2 / 2;
    return eps2 * (1 - eps1);
}

// Largest delta (halved for margin) keeping `feasible` true; feasible must be
// monotone decreasing in delta and true at 0+.
template <class F>
double default_delta(F feasible, double hi) {
    double lo = 0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid)) lo = mid; else hi = mid;
    }
    return 0.5 * lo;
}

} // namespace

double achievable_limit(Variant v, double eps1, double eps2, int N) {
    check_probs(eps1, eps2);
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    switch (v) {
        case Variant::c2p: return eps2 * std::min(eps1, 1 - eps1);
        case Variant::c1p: return c1p_limit(eps1, eps2);
        case Variant::oneofN_2p: return eps2 * std::min(eps1 / (N - 1), 1 - eps1);
        case Variant::oneofN_1p: {
            double a = eps1 / (N - 1);
            if (a < eps2 / N) return a;
            if (a < 1.0 / N) return eps2 / N;
            return eps2 * (1 - eps1);
        }
        case Variant::mal_le_half:
            if (eps1 > 0.5) throw std::invalid_argument("mal_le_half requires eps1 <= 1/2");
            return eps1 * eps2;
        case Variant::mal_gt_half:
            if (eps1 <= 0.5) throw std::invalid_argument("mal_gt_half requires eps1 > 1/2");
            return eps1 * eps2 * (1 - eps1);
        case Variant::independent_pair: return eps2 * std::min(eps1, 1 - eps1);
        case Variant::degraded:
            return std::min(eps2 * (1 - eps1) / 3.0, eps1);
        case Variant::two_party: return std::min(eps1, 1 - eps1);
    }
    return 0;
}

ProtocolParams derive_params(Variant v, double r, double eps1, double eps2, int64_t n,
                             int N, const SlackOptions& slacks) {
    check_probs(eps1, eps2);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    if (v != Variant::oneofN_1p && v != Variant::oneofN_2p) N = 2;

    ProtocolParams p;
    p.variant = v;
    p.eps1 = eps1;
    p.eps2 = eps2;
    p.n = n;
    p.N = N;
    p.r = r;

    const double cap = achievable_limit(v, eps1, eps2, N);
    if (!(r > 0) || r >= cap)
        throw std::invalid_argument(std::string("rate not achievable for ") + variant_name(v) +
                                    ": need 0 < r < " + std::to_string(cap));

    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("parameter derivation failed: ") + what);
    };

    switch (v) {
        case Variant::c2p:
        case Variant::oneofN_2p:
        case Variant::independent_pair: {
            const double mu = (v == Variant::oneofN_2p)
                                  ? std::min(eps1 / (N - 1), 1 - eps1)
                                  : std::min(eps1, 1 - eps1);
            p.delta = slacks.delta.value_or(default_delta(
                [&](double d) { return d < eps2 && d < mu && r <= (eps2 - d) * (mu - d); },
                std::min(eps2, mu)));
            require(p.delta >= 0 && p.delta < eps2 && p.delta < mu, "delta out of range");
            // Post-rounding rate feasibility is checked non-strictly: the
            // delta_tilde subtraction supplies the finite-n margin.
            require(r <= (eps2 - p.delta) * (mu - p.delta) + 1e-12, "delta too large for r");
            p.delta_tilde = slacks.delta_tilde.value_or(std::min(r / 10.0, 0.02));
            require(p.delta_tilde > 0 && p.delta_tilde < r, "delta_tilde out of range");
            p.beta = r / (eps2 - p.delta);
            p.sel_size = floor_count((p.beta * n));
            p.key_len = floor_count((n * (r - p.delta_tilde)));
            p.erased_core = p.sel_size;
            p.min_unerased = p.sel_size;
            p.min_erased = (N - 1) * p.sel_size;
            require(p.sel_size >= 1, "selection size rounds to zero");
            require(p.key_len >= 1, "key length rounds to zero (n too small)");
            require(p.key_len <= p.sel_size, "key longer than hash input");
            require(N * p.sel_size <= n, "selections exceed block");
            if (v == Variant::independent_pair) {
                double second_cap = std::max(0.0, (2 * eps1 - 1) * std::min(eps2, 1 - eps2));
                double rc = slacks.r_second.value_or(0.8 * second_cap);
                if (eps1 > 0.5) {
                    p.bridge_len = floor_count(((eps1 - p.delta - p.beta) * n));
                    require(p.bridge_len >= 0, "no bridge positions left");
                    p.second_key_len = floor_count((rc * n));
                    if (p.second_key_len > 0) {
                        require(rc < second_cap, "second-receiver rate not achievable");
                        double per_use = static_cast<double>(p.second_key_len) /
                                         std::max<double>(1.0, static_cast<double>(p.bridge_len));
                        require(per_use < std::min(eps2, 1 - eps2),
                                "second-receiver pad exceeds bridge capacity");
                    }
                } else {
                    p.bridge_len = 0;
                    p.second_key_len = 0;
                    require(rc == 0 || !slacks.r_second.has_value(),
                            "second receiver needs eps1 > 1/2");
                }
            }
            break;
        }
        case Variant::c1p:
        case Variant::oneofN_1p: {
            auto limit = [&](double d) {
                double a = (eps1 - d) / (N - 1);
                return std::min({a, (eps2 - d) / N, (eps2 - d) * (1 - eps1 - d)});
            };
            p.delta = slacks.delta.value_or(default_delta(
                [&](double d) { return d < eps2 && d < eps1 && r <= limit(d); },
                std::min(eps1, eps2)));
            require(p.delta >= 0, "delta out of range");
            require(r <= limit(p.delta) + 1e-12, "delta too large for r");
            p.delta_tilde = slacks.delta_tilde.value_or(std::min(r / 10.0, 0.02));
            require(p.delta_tilde > 0 && p.delta_tilde < r, "delta_tilde out of range");
            p.beta = r / (eps2 - p.delta);
            p.sel_size = floor_count((p.beta * n));
            p.key_len = floor_count((n * (r - p.delta_tilde)));
            p.erased_core = floor_count((n * r));
            p.min_unerased = p.sel_size;
            p.min_erased = (N - 1) * p.erased_core;
            require(p.sel_size >= 1 && p.erased_core >= 1, "sizes round to zero");
            require(p.erased_core <= p.sel_size, "erased core exceeds selection");
            require(p.key_len >= 1, "key length rounds to zero (n too small)");
            require(N * p.sel_size <= n, "selections exceed block");
            break;
        }
        case Variant::two_party: {
            p.erased_core = floor_count((n * r));
            p.key_len = p.erased_core;
            p.sel_size = p.erased_core;
            p.min_unerased = p.erased_core;
            p.min_erased = p.erased_core;
            require(p.key_len >= 1, "pad length rounds to zero");
            require(2 * p.sel_size <= n, "selections exceed block");
            break;
        }
        case Variant::mal_le_half: {
            const double gap = eps1 * eps2 - r;
            require(gap > 0, "rate above achievable expression");
            if (eps1 < 0.5) {
                p.delta_tilde = slacks.delta_tilde.value_or(
                    std::min(gap / 8.0, (0.5 - eps1) / 2.0));
                require(p.delta_tilde > 0 && p.delta_tilde < 0.5 - eps1,
                        "delta_tilde out of range (needs 0 < dt < 1/2 - eps1)");
            } else { // eps1 == 0.5: the check tuple still needs gamma > 0
                p.delta_tilde = slacks.delta_tilde.value_or(-std::min(gap / 14.0, 0.02));
                require(p.delta_tilde < 0, "eps1 = 1/2 needs delta_tilde < 0");
            }
            double rem = gap - 2 * p.delta_tilde;
            require(rem > 0, "slack budget exhausted by delta_tilde");
            p.delta = slacks.delta.value_or(rem / 6.0);
            p.delta_prime = slacks.delta_prime.value_or(rem - 5 * (rem / 6.0));
            require(p.delta > 0 && p.delta_prime > 0, "slacks must be positive");
            p.gamma = 0.5 - eps1 - p.delta_tilde;
            p.beta = 0.5 - p.delta - p.delta_tilde;
            require(p.gamma > 0 && p.beta > p.gamma, "gamma/beta out of range");
            double rate_eff = eps1 * eps2 - 5 * p.delta - 2 * p.delta_tilde - p.delta_prime;
            require(rate_eff > 0, "effective rate not positive");
            p.sel_size = floor_count((p.beta * n));
            p.gamma_n = floor_count((p.gamma * n));
            p.key_len = floor_count((rate_eff * n));
            p.min_unerased = p.sel_size + p.gamma_n;
            p.min_erased = p.sel_size - p.gamma_n;
            require(p.gamma_n >= 1 && p.key_len >= 1, "sizes round to zero");
            require(2 * p.sel_size <= n, "tuples exceed block");
            p.m_bits = make_subset_codec(p.sel_size, p.gamma_n).m_bits;
            break;
        }
        case Variant::mal_gt_half: {
            p.delta = slacks.delta.value_or([&] {
                // pick delta = delta' = x with (1-eps1-x)(eps1*eps2-4x) = r
                auto val = [&](double x) { return (1 - eps1 - x) * (eps1 * eps2 - 4 * x); };
                double lo = 0, hi = std::min(1 - eps1, eps1 * eps2 / 4);
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (val(mid) > r) lo = mid; else hi = mid;
                }
                return lo;
            }());
            p.delta_prime = slacks.delta_prime.value_or(p.delta);
            p.beta = 1 - eps1 - p.delta;
            require(p.beta > 0, "beta not positive");
            double rate_eff = p.beta * (eps1 * eps2 - 3 * p.delta - p.delta_prime);
            require(rate_eff > 0, "effective rate not positive");
            p.sel_size = floor_count((p.beta * n));
            p.key_len = floor_count((rate_eff * n));
            p.min_unerased = p.sel_size;
            p.min_erased = 0;
            require(p.sel_size >= 1 && p.key_len >= 1, "sizes round to zero");
            p.m_bits = make_subset_codec(n, p.sel_size).m_bits;
            break;
        }
        case Variant::degraded: {
            auto limit = [&](double d) {
                return std::min((eps2 - d) * (1 - eps1 - d) / 3.0, eps1 - d);
            };
            p.delta = slacks.delta.value_or(default_delta(
                [&](double d) { return d < eps1 && d < eps2 && d < 1 - eps1 && r <= limit(d); },
                std::min({eps1, eps2, 1 - eps1})));
            require(r <= limit(p.delta) + 1e-12, "delta too large for r");
            p.delta_tilde = slacks.delta_tilde.value_or(std::min(r / 8.0, 0.02));
            require(p.delta_tilde > 0 && 2 * p.delta_tilde < r, "delta_tilde out of range");
            p.beta = (r - p.delta_tilde) / (eps2 - p.delta);
            p.sel_size = floor_count((p.beta * n * (eps2 - p.delta)));
            p.gl_size = floor_count((2 * p.beta * n * r / (r - p.delta_tilde)));
            p.gs_size = floor_count((p.beta * n * (1 - (eps2 - p.delta))));
            p.q_len = 2 * p.sel_size;
            p.hash_in = p.sel_size + p.gs_size;
            p.key_len = floor_count((n * (r - 2 * p.delta_tilde)));
            p.min_unerased = static_cast<int64_t>(std::ceil((1 - eps1 - p.delta) * n));
            p.min_erased = static_cast<int64_t>(std::ceil((eps1 - p.delta) * n));
            require(p.sel_size >= 1 && p.gl_size >= 1 && p.key_len >= 1, "sizes round to zero");
            require(p.key_len <= p.hash_in, "key longer than hash input");
            require(p.q_len <= p.gl_size, "selection cipher longer than its pad source");
            break;
        }
    }
    return p;
}

int64_t search_block_len_mal_gt(double beta, int64_t n_center, int64_t window) {
    if (!(beta > 0 && beta < 1)) throw std::invalid_argument("beta out of (0,1)");
    int64_t best_n = -1;
    double best_score = -1;
    for (int64_t n = std::max<int64_t>(4, n_center - window); n <= n_center + window; ++n) {
        int64_t k = floor_count((beta * n));
        if (k < 1 || k >= n) continue;
        BigInt c = binomial(n, k);
        int64_t m = ceil_log2(c);
        long exp2part = 0;
        double mant = mpz_get_d_2exp(&exp2part, c.get_mpz_t());
        double score = std::log2(mant) + static_cast<double>(exp2part) - static_cast<double>(m);
        if (score > best_score) {
            best_score = score;
            best_n = n;
        }
    }
    if (best_n < 0) throw std::invalid_argument("search window empty");
    return best_n;
}

} // namespace eot
