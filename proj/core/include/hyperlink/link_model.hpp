#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperlink/types.hpp"

namespace hyperlink {

/// Analytic signal/interference decomposition of one subcarrier.
struct SubcarrierMetrics {
    std::size_t index = 0;       ///< 1-based
    double desired_power = 0.0;  ///< P_i, watts
    double ici_power = 0.0;      ///< I_i, watts
    double noise_power = 0.0;    ///< watts
    double sinr = 0.0;           ///< P_i / (I_i + noise); +inf when both vanish
};

struct ThroughputResult {
    std::vector<SubcarrierMetrics> per_subcarrier;
    double subcarrier_bw = 0.0;  ///< B_i = 1/(N*T), Hz
    double total_bps = 0.0;      ///< sum_i B_i * log2(1 + SINR_i)
};

/// Maximum Doppler shift F_d = v * f_c / c.
double doppler_frequency(double speed_mps, double carrier_freq_hz);

/// Mean desired-signal power on subcarrier i: beta_i * P_T.
double desired_power(const OfdmConfig& cfg, const FadingProfile& fading, std::size_t i);

/// ICI power on subcarrier i:
///   P_T * (N*T*F_d)^2 / 2 * sum_{k != i} beta_k / (k-i)^2
/// evaluated as the exact finite sum.
double ici_power(const OfdmConfig& cfg, const MobilityProfile& mob,
                 const FadingProfile& fading, std::size_t i);

/// SINR_i = P_i / (I_i + N_0). Returns nullopt when both ICI and noise are
/// zero (unbounded SINR).
std::optional<double> sinr(const OfdmConfig& cfg, const MobilityProfile& mob,
                           const FadingProfile& fading, std::size_t i);

/// Interference-limited SINR ceiling (the N_0 -> 0 limit):
///   beta_i / ((N*T*F_d)^2 / 2 * sum_{k != i} beta_k / (k-i)^2)
/// Returns nullopt when there is no ICI floor (v = 0 or N = 1).
std::optional<double> sir_floor(const OfdmConfig& cfg, const MobilityProfile& mob,
                                const FadingProfile& fading, std::size_t i);

/// Total throughput over all subcarriers with per-subcarrier metrics.
ThroughputResult throughput(const OfdmConfig& cfg, const MobilityProfile& mob,
                            const FadingProfile& fading);

/// Static-channel throughput divided by throughput at `speed_mps`, both at
/// SNR = P_T / N_0 given by `snr` (linear).
double degradation_ratio(const OfdmConfig& cfg, const FadingProfile& fading,
                         double speed_mps, double snr);

}  // namespace hyperlink
