#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "uavcic/linalg.hpp"

namespace uavcic {

using ComplexGain = std::complex<double>;

// One channel realization of the uplink scene: the served terrestrial user's
// channel to its base station, the UAV's channels to that base station and to
// the J helper base stations, per-receiver noise powers, and the quantization
// noise each helper's forwarded signal carries.
//
// Index 0 is the serving base station; 1..J are helpers. q_w[0] is always 0
// (the serving BS processes its own unquantized signal); helper entries may be
// +infinity, meaning that helper forwards nothing.
struct LinkRealization {
    double p1_w = 0.0;  // terrestrial user's transmit power
    double pu_w = 0.0;  // UAV's transmit power
    ComplexGain h1;     // user -> serving BS
    std::vector<ComplexGain> f;   // UAV -> BS i, size J+1
    std::vector<double> sigma2_w; // noise power at BS i, size J+1
    std::vector<double> q_w;      // quantization noise power, size J+1

    int helper_count() const { return static_cast<int>(f.size()) - 1; }
    void validate() const;  // throws std::invalid_argument on broken invariants
};

enum class Scheme { Baseline = 0, DF = 1, QF1 = 2, QF2 = 3 };
const char* to_string(Scheme scheme);

struct SchemeOutcome {
    Scheme scheme = Scheme::Baseline;
    double ue1_sinr = 0.0;
    double ue1_rate_bpshz = 0.0;                     // log2(1 + ue1_sinr)
    std::optional<double> uav_rate_bound_bpshz;      // schemes that decode the UAV
    std::optional<bool> uav_decoded;
};

struct Weights {
    std::vector<ComplexGain> w;  // size J+1
};

struct QuantizerConfig {
    std::vector<int> bits;  // per helper, size J; 0 means no forwarding
};

// Thermal noise power over a bandwidth, from a noise PSD in dBm/Hz. Returns
// Watts.
double noise_power_w(double psd_dbm_per_hz, double bandwidth_hz);

// Quantization noise power of uniform scalar quantization with `bits` bits per
// I/Q component: 3 * (pu_gain + sigma2) * 2^(-2 bits), +infinity for 0 bits.
double quantization_noise_w(double pu_gain_w, double sigma2_w, int bits);

// p1|h1|^2 / (pu|f1|^2 + sigma1^2)
double sinr_baseline(const LinkRealization& r);

// p1|h1|^2 / sigma1^2: the user's SINR once the UAV signal is fully removed.
double interference_free_sinr(const LinkRealization& r);

// UAV rate decodable at the serving BS, treating the user's signal as noise.
double rate_uav_at_bs1(const LinkRealization& r);

// UAV rate decodable at helper i (1..J), which serves no user on this RB.
double rate_uav_at_helper(const LinkRealization& r, int helper_index);

SchemeOutcome evaluate_baseline(const LinkRealization& r);

// Decode-and-forward cooperation: the UAV signal is cancelled iff some
// cooperating BS (serving or helper) can decode it at rate ru.
SchemeOutcome evaluate_df(const LinkRealization& r, double ru_bps_hz);

// MMSE combining weights w = (p_int * v v^H + diag(gamma))^-1 t for detecting
// signature t against a rank-one-plus-diagonal interference covariance.
// Coordinates with infinite gamma get weight 0. Throws if every diagonal
// entry is infinite.
Weights mmse_weights(const std::vector<ComplexGain>& target, double p_int_w,
                     const std::vector<ComplexGain>& int_vec,
                     const std::vector<double>& gamma_diag_w);

// Output SINR of an arbitrary combiner:
//   p_sig |w^H s|^2 / (p_int |w^H v|^2 + sum_i gamma_i |w_i|^2).
// An infinite gamma_i contributes nothing when w_i = 0 and forces SINR 0
// otherwise. Throws on an all-zero weight vector.
double sinr_quadratic(const Weights& weights, double p_sig_w,
                      const std::vector<ComplexGain>& sig_vec, double p_int_w,
                      const std::vector<ComplexGain>& int_vec,
                      const std::vector<double>& gamma_diag_w);

// UAV SINR after MMSE-combining the quantized helper signals with the serving
// BS's own signal (nonlinear scheme): the per-branch UAV SINRs add up.
double sinr_uav_qf1(const LinkRealization& r);

SchemeOutcome evaluate_qf1(const LinkRealization& r, double ru_bps_hz);

// User SINR of the linear scheme via the explicit dense solve of
// p1 h^H (pu f f^H + Gamma)^-1 h over the finite-q coordinates. Internally
// solves in extended precision so the result stays accurate under extreme
// power spreads.
double sinr_ue1_qf2_direct(const LinkRealization& r);

// Same quantity in closed scalar form.
double sinr_ue1_qf2_closed(const LinkRealization& r);

SchemeOutcome evaluate_qf2(const LinkRealization& r);

// (Gamma + p f f^H)^-1 via the Sherman-Morrison rank-one update of the
// diagonal inverse. All gamma entries must be finite and positive.
linalg::CMat rank_one_update_inverse(const std::vector<double>& gamma_diag_w,
                                     const std::vector<ComplexGain>& f, double p_w);

enum class Dominance { First, Second, Tie };

// Pairwise scheme ordering for the user's rate, decided from the UAV-decoding
// rate bounds: a decoding scheme reaches the interference-free SINR, a
// non-decoding one falls back, and the linear scheme sits strictly between.
struct CompareReport {
    double rate_df_bpshz = 0.0;
    double rate_qf1_bpshz = 0.0;
    Dominance qf1_vs_df = Dominance::Tie;
    Dominance qf2_vs_df = Dominance::Tie;
    Dominance qf2_vs_qf1 = Dominance::Tie;
};

CompareReport compare_schemes(const LinkRealization& r, double ru_bps_hz);

// Helper i's forwarding is feasible iff its per-sample rate 2 * bits[i] fits
// its backhaul capacity.
std::vector<bool> backhaul_feasible(const QuantizerConfig& quant,
                                    const std::vector<double>& capacities_bits_per_sample);

}  // namespace uavcic
