#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "uavcic/cic.hpp"
#include "uavcic/rng.hpp"

namespace uavcic::testutil {

struct RealizationOptions {
    int j_min = 1;
    int j_max = 8;
    double log10_power_min = -6.0;  // applied to p1, pu, sigma2, finite q
    double log10_power_max = 6.0;
    double inf_q_probability = 0.25;
    bool force_one_finite_helper = false;  // keep at least one forwarding helper
};

inline int uniform_int(Rng& rng, int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(rng.uniform01() * span);
    return v > hi ? hi : v;
}

inline double log_uniform(Rng& rng, const RealizationOptions& opt) {
    return std::pow(10.0, rng.uniform(opt.log10_power_min, opt.log10_power_max));
}

inline LinkRealization make_random_realization(Rng& rng, const RealizationOptions& opt = {}) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const int j = uniform_int(rng, opt.j_min, opt.j_max);

    LinkRealization r;
    r.p1_w = log_uniform(rng, opt);
    r.pu_w = log_uniform(rng, opt);
    r.h1 = rng.complex_gaussian();
    r.f.resize(j + 1);
    r.sigma2_w.resize(j + 1);
    r.q_w.resize(j + 1);
    for (int i = 0; i <= j; ++i) {
        r.f[i] = rng.complex_gaussian();
        r.sigma2_w[i] = log_uniform(rng, opt);
    }
    r.q_w[0] = 0.0;
    bool any_finite = false;
    for (int i = 1; i <= j; ++i) {
        if (rng.uniform01() < opt.inf_q_probability) {
            r.q_w[i] = kInf;
        } else {
            r.q_w[i] = log_uniform(rng, opt);
            any_finite = true;
        }
    }
    if (opt.force_one_finite_helper && !any_finite) {
        r.q_w[uniform_int(rng, 1, j)] = log_uniform(rng, opt);
    }
    return r;
}

// Recomputes every helper's quantization noise from its bit budget, as the
// uniform scalar quantizer model prescribes. bits.size() must be J.
inline void apply_quantizer(LinkRealization& r, const std::vector<int>& bits) {
    for (int i = 1; i <= r.helper_count(); ++i) {
        r.q_w[i] = quantization_noise_w(r.pu_w * std::norm(r.f[i]), r.sigma2_w[i],
                                        bits[static_cast<std::size_t>(i - 1)]);
    }
}

}  // namespace uavcic::testutil
