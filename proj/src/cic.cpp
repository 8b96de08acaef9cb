#include "uavcic/cic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log2_1p(double x) { return std::log2(1.0 + x); }

// Sum over helpers of |f_i|^2 / (sigma_i^2 + q_i). Helpers with infinite q
// contribute exactly zero (finite / inf == +0 in IEEE arithmetic).
double helper_gain_noise_sum(const LinkRealization& r) {
    double sum = 0.0;
    for (int i = 1; i <= r.helper_count(); ++i) {
        sum += std::norm(r.f[i]) / (r.sigma2_w[i] + r.q_w[i]);
    }
    return sum;
}

SchemeOutcome make_outcome(Scheme scheme, double sinr) {
    SchemeOutcome out;
    out.scheme = scheme;
    out.ue1_sinr = sinr;
    out.ue1_rate_bpshz = log2_1p(sinr);
    return out;
}

}  // namespace

void LinkRealization::validate() const {
    if (f.empty() || sigma2_w.size() != f.size() || q_w.size() != f.size()) {
        throw std::invalid_argument("LinkRealization: f, sigma2_w, q_w must share size J+1 >= 1");
    }
    if (!(p1_w >= 0.0) || !(pu_w >= 0.0)) {
        throw std::invalid_argument("LinkRealization: transmit powers must be >= 0");
    }
    for (double s : sigma2_w) {
        if (!(s > 0.0)) {
            throw std::invalid_argument("LinkRealization: sigma2_w entries must be > 0");
        }
    }
    if (q_w[0] != 0.0) {
        throw std::invalid_argument("LinkRealization: q_w[0] must be 0");
    }
    for (double q : q_w) {
        if (!(q >= 0.0)) {  // +inf passes
            throw std::invalid_argument("LinkRealization: q_w entries must be >= 0");
        }
    }
}

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Baseline: return "Baseline";
        case Scheme::DF: return "DF";
        case Scheme::QF1: return "QF1";
        case Scheme::QF2: return "QF2";
    }
    return "?";
}

double noise_power_w(double psd_dbm_per_hz, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("noise_power_w: bandwidth_hz must be > 0");
    }
    const double dbm = psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double quantization_noise_w(double pu_gain_w, double sigma2_w, int bits) {
    if (pu_gain_w < 0.0 || !(sigma2_w > 0.0)) {
        throw std::invalid_argument("quantization_noise_w: pu_gain_w >= 0 and sigma2_w > 0 required");
    }
    if (bits < 0) {
        throw std::invalid_argument("quantization_noise_w: bits must be >= 0");
    }
    if (bits == 0) {
        return kInf;
    }
    return 3.0 * (pu_gain_w + sigma2_w) * std::exp2(-2.0 * bits);
}

double sinr_baseline(const LinkRealization& r) {
    return r.p1_w * std::norm(r.h1) / (r.pu_w * std::norm(r.f[0]) + r.sigma2_w[0]);
}

double interference_free_sinr(const LinkRealization& r) {
    return r.p1_w * std::norm(r.h1) / r.sigma2_w[0];
}

double rate_uav_at_bs1(const LinkRealization& r) {
    return log2_1p(r.pu_w * std::norm(r.f[0]) / (r.p1_w * std::norm(r.h1) + r.sigma2_w[0]));
}

double rate_uav_at_helper(const LinkRealization& r, int helper_index) {
    if (helper_index < 1 || helper_index > r.helper_count()) {
        throw std::out_of_range("rate_uav_at_helper: helper_index must be in [1, J]");
    }
    return log2_1p(r.pu_w * std::norm(r.f[helper_index]) / r.sigma2_w[helper_index]);
}

SchemeOutcome evaluate_baseline(const LinkRealization& r) {
    return make_outcome(Scheme::Baseline, sinr_baseline(r));
}

SchemeOutcome evaluate_df(const LinkRealization& r, double ru_bps_hz) {
    double bound = rate_uav_at_bs1(r);
    for (int i = 1; i <= r.helper_count(); ++i) {
        bound = std::max(bound, rate_uav_at_helper(r, i));
    }
    const bool decoded = bound >= ru_bps_hz;
    SchemeOutcome out =
        make_outcome(Scheme::DF, decoded ? interference_free_sinr(r) : sinr_baseline(r));
    out.uav_rate_bound_bpshz = bound;
    out.uav_decoded = decoded;
    return out;
}

Weights mmse_weights(const std::vector<ComplexGain>& target, double p_int_w,
                     const std::vector<ComplexGain>& int_vec,
                     const std::vector<double>& gamma_diag_w) {
    const int n = static_cast<int>(target.size());
    if (static_cast<int>(int_vec.size()) != n || static_cast<int>(gamma_diag_w.size()) != n) {
        throw std::invalid_argument("mmse_weights: vector sizes must match");
    }
    std::vector<int> finite;
    for (int i = 0; i < n; ++i) {
        if (std::isinf(gamma_diag_w[i])) {
            continue;
        }
        if (!(gamma_diag_w[i] > 0.0)) {
            throw std::invalid_argument("mmse_weights: gamma entries must be > 0 or +inf");
        }
        finite.push_back(i);
    }
    if (finite.empty()) {
        throw std::invalid_argument("mmse_weights: all-infinite diagonal");
    }

    const int m = static_cast<int>(finite.size());
    std::vector<ComplexGain> a(static_cast<std::size_t>(m) * m);
    std::vector<ComplexGain> b(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            a[static_cast<std::size_t>(i) * m + j] =
                p_int_w * int_vec[finite[i]] * std::conj(int_vec[finite[j]]);
        }
        a[static_cast<std::size_t>(i) * m + i] += gamma_diag_w[finite[i]];
        b[i] = target[finite[i]];
    }
    const std::vector<ComplexGain> x = linalg::solve_dense(std::move(a), std::move(b), m);

    Weights weights;
    weights.w.assign(n, ComplexGain{0.0, 0.0});
    for (int i = 0; i < m; ++i) {
        weights.w[finite[i]] = x[i];
    }
    return weights;
}

double sinr_quadratic(const Weights& weights, double p_sig_w,
                      const std::vector<ComplexGain>& sig_vec, double p_int_w,
                      const std::vector<ComplexGain>& int_vec,
                      const std::vector<double>& gamma_diag_w) {
    const int n = static_cast<int>(weights.w.size());
    if (static_cast<int>(sig_vec.size()) != n || static_cast<int>(int_vec.size()) != n ||
        static_cast<int>(gamma_diag_w.size()) != n) {
        throw std::invalid_argument("sinr_quadratic: vector sizes must match");
    }
    bool all_zero = true;
    for (const auto& wi : weights.w) {
        if (wi != ComplexGain{0.0, 0.0}) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        throw std::invalid_argument("sinr_quadratic: zero weights");
    }

    ComplexGain ws{0.0, 0.0};
    ComplexGain wv{0.0, 0.0};
    double noise = 0.0;
    for (int i = 0; i < n; ++i) {
        const ComplexGain wc = std::conj(weights.w[i]);
        ws += wc * sig_vec[i];
        wv += wc * int_vec[i];
        if (std::isinf(gamma_diag_w[i])) {
            if (weights.w[i] != ComplexGain{0.0, 0.0}) {
                return 0.0;  // infinite-noise branch actually used
            }
        } else {
            noise += gamma_diag_w[i] * std::norm(weights.w[i]);
        }
    }
    return p_sig_w * std::norm(ws) / (p_int_w * std::norm(wv) + noise);
}

double sinr_uav_qf1(const LinkRealization& r) {
    double sinr = r.pu_w * std::norm(r.f[0]) / (r.p1_w * std::norm(r.h1) + r.sigma2_w[0]);
    for (int i = 1; i <= r.helper_count(); ++i) {
        sinr += r.pu_w * std::norm(r.f[i]) / (r.sigma2_w[i] + r.q_w[i]);
    }
    return sinr;
}

SchemeOutcome evaluate_qf1(const LinkRealization& r, double ru_bps_hz) {
    const double bound = log2_1p(sinr_uav_qf1(r));
    const bool decoded = bound >= ru_bps_hz;
    SchemeOutcome out =
        make_outcome(Scheme::QF1, decoded ? interference_free_sinr(r) : sinr_baseline(r));
    out.uav_rate_bound_bpshz = bound;
    out.uav_decoded = decoded;
    return out;
}

double sinr_ue1_qf2_direct(const LinkRealization& r) {
    std::vector<int> finite;
    for (int i = 0; i < static_cast<int>(r.f.size()); ++i) {
        if (!std::isinf(r.q_w[i])) {
            finite.push_back(i);
        }
    }
    const int m = static_cast<int>(finite.size());  // never empty: q_w[0] == 0

    using linalg::qcd;
    std::vector<qcd> a(static_cast<std::size_t>(m) * m);
    std::vector<qcd> b(m);
    const qcd pu{r.pu_w, 0.0};
    for (int i = 0; i < m; ++i) {
        const qcd fi{r.f[finite[i]]};
        for (int j = 0; j < m; ++j) {
            a[static_cast<std::size_t>(i) * m + j] = pu * fi * conj(qcd{r.f[finite[j]]});
        }
        const std::size_t diag = static_cast<std::size_t>(i) * m + i;
        a[diag] = a[diag] + qcd{r.sigma2_w[finite[i]] + r.q_w[finite[i]], 0.0};
        b[i] = finite[i] == 0 ? qcd{r.h1} : qcd{};
    }
    const std::vector<qcd> x = linalg::solve_dense(std::move(a), std::move(b), m);

    // p1 * h^H x, real by construction since h = [h1, 0, ...].
    const qcd quad = conj(qcd{r.h1}) * x[0];
    return r.p1_w * static_cast<double>(quad.re);
}

double sinr_ue1_qf2_closed(const LinkRealization& r) {
    const double sum = helper_gain_noise_sum(r);
    const double p_sig = r.p1_w * std::norm(r.h1);
    const double denom = r.pu_w * std::norm(r.f[0]) + r.sigma2_w[0] +
                         r.pu_w * r.sigma2_w[0] * sum;
    // Equals (p_sig / sigma1^2) * (1 - pu|f1|^2 / denom); this arrangement
    // degenerates bit-exactly to the no-cooperation SINR when sum == 0.
    return p_sig * (1.0 + r.pu_w * sum) / denom;
}

SchemeOutcome evaluate_qf2(const LinkRealization& r) {
    return make_outcome(Scheme::QF2, sinr_ue1_qf2_closed(r));
}

linalg::CMat rank_one_update_inverse(const std::vector<double>& gamma_diag_w,
                                     const std::vector<ComplexGain>& f, double p_w) {
    const int n = static_cast<int>(gamma_diag_w.size());
    if (static_cast<int>(f.size()) != n) {
        throw std::invalid_argument("rank_one_update_inverse: size mismatch");
    }
    for (double g : gamma_diag_w) {
        if (!(g > 0.0) || std::isinf(g)) {
            throw std::invalid_argument(
                "rank_one_update_inverse: gamma entries must be finite and > 0");
        }
    }
    std::vector<ComplexGain> u(n);
    double quad = 0.0;  // f^H Gamma^-1 f
    for (int i = 0; i < n; ++i) {
        u[i] = f[i] / gamma_diag_w[i];
        quad += std::norm(f[i]) / gamma_diag_w[i];
    }
    const double scale = p_w / (1.0 + p_w * quad);

    linalg::CMat inv(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            inv(i, j) = -scale * u[i] * std::conj(u[j]);
        }
        inv(i, i) += 1.0 / gamma_diag_w[i];
    }
    return inv;
}

CompareReport compare_schemes(const LinkRealization& r, double ru_bps_hz) {
    if (!(ru_bps_hz > 0.0)) {
        throw std::invalid_argument("compare_schemes: ru_bps_hz must be > 0");
    }
    CompareReport rep;
    rep.rate_df_bpshz = evaluate_df(r, ru_bps_hz).uav_rate_bound_bpshz.value();
    rep.rate_qf1_bpshz = log2_1p(sinr_uav_qf1(r));

    const bool df_decodes = rep.rate_df_bpshz >= ru_bps_hz;
    const bool qf1_decodes = rep.rate_qf1_bpshz >= ru_bps_hz;

    if (qf1_decodes && !df_decodes) {
        rep.qf1_vs_df = Dominance::First;
    } else if (df_decodes && !qf1_decodes) {
        rep.qf1_vs_df = Dominance::Second;
    } else {
        rep.qf1_vs_df = Dominance::Tie;
    }
    rep.qf2_vs_df = df_decodes ? Dominance::Second : Dominance::First;
    rep.qf2_vs_qf1 = qf1_decodes ? Dominance::Second : Dominance::First;
    return rep;
}

std::vector<bool> backhaul_feasible(const QuantizerConfig& quant,
                                    const std::vector<double>& capacities_bits_per_sample) {
    if (quant.bits.size() != capacities_bits_per_sample.size()) {
        throw std::invalid_argument("backhaul_feasible: size mismatch");
    }
    std::vector<bool> feasible(quant.bits.size());
    for (std::size_t i = 0; i < quant.bits.size(); ++i) {
        if (quant.bits[i] < 0) {
            throw std::invalid_argument("backhaul_feasible: bits must be >= 0");
        }
        if (!(capacities_bits_per_sample[i] >= 0.0)) {
            throw std::invalid_argument("backhaul_feasible: capacities must be >= 0");
        }
        feasible[i] = 2.0 * quant.bits[i] <= capacities_bits_per_sample[i];
    }
    return feasible;
}

}  // namespace uavcic
