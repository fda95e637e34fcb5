#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlink/types.hpp"

namespace hyperlink {

using cplx = std::complex<double>;

/// Two-term Taylor linearization of the fading gains within one symbol:
///   a_k(t) = gain_at_t0[k] + derivative_at_t0[k] * (t - t0)
struct TaylorCoefficients {
    std::vector<cplx> gain_at_t0;        ///< variance beta_k
    std::vector<cplx> derivative_at_t0;  ///< variance 2*pi^2*beta_k*F_d^2
    double t0 = 0.0;                     ///< seconds (symbol midpoint)
};

/// Per-subcarrier complex Gaussian fading paths with Jakes autocorrelation
/// beta_k * J0(2*pi*F_d*tau), sampled exactly at `times`.
struct JakesPath {
    std::vector<double> times;             ///< seconds, sorted, within [0, N*T]
    std::vector<std::vector<cplx>> gains;  ///< [subcarrier][time]
};

enum class Constellation { QPSK, QAM16, GAUSSIAN };

/// One OFDM symbol worth of unit-power data symbols d_k.
struct SymbolFrame {
    std::vector<cplx> symbols;
    Constellation constellation = Constellation::QPSK;
};

/// Empirical power decomposition accumulated over Monte Carlo trials.
struct TrialStats {
    std::vector<double> desired_power_hat;     ///< watts, per subcarrier
    std::vector<double> desired_power_stderr;
    std::vector<double> ici_power_hat;
    std::vector<double> ici_power_stderr;
    double noise_power = 0.0;                  ///< analytic N_0
    std::uint64_t trials = 0;
};

enum class ChannelMode { TAYLOR, JAKES };
enum class TaylorValidity { VALID, MARGINAL, INVALID };

struct SimSeed {
    std::uint64_t master_seed = 0;
};

/// Deterministic per-trial sub-seed: independent of execution order.
std::uint64_t derive_seed(SimSeed seed, std::uint64_t trial, std::uint64_t stream = 0);

/// Midpoint sample grid over [0, N*T]: t_m = (m + 1/2) * N*T / (O*N).
std::vector<double> midpoint_grid(const OfdmConfig& cfg, int oversample);

/// Draws a frame of i.i.d. unit-power symbols.
SymbolFrame draw_frame(Constellation c, std::size_t n, std::uint64_t seed);

/// Draws Taylor coefficients at t0 = N*T/2: gains with variance beta_k and
/// independent derivatives with variance 2*pi^2*beta_k*F_d^2.
TaylorCoefficients sample_taylor_channel(const FadingProfile& fading,
                                         const MobilityProfile& mob,
                                         const OfdmConfig& cfg, std::uint64_t seed);

/// Exact multivariate complex Gaussian paths via covariance factorization.
/// Paths are independent across subcarriers. At most 4096 sample times.
JakesPath sample_jakes_path(const FadingProfile& fading, const MobilityProfile& mob,
                            const std::vector<double>& times, std::uint64_t seed);

/// Builds s(t) on the oversampled midpoint grid, applies the per-subcarrier
/// time-varying gains before summation, and evaluates the correlator bank by
/// Riemann sum. Returns the N correlator outputs d_hat. When `noise_seed` is
/// set, adds i.i.d. complex Gaussian noise of variance N_0 at each output.
std::vector<cplx> synthesize_and_correlate(const SymbolFrame& frame,
                                           const TaylorCoefficients& channel,
                                           const OfdmConfig& cfg, int oversample,
                                           std::optional<std::uint64_t> noise_seed);

/// Jakes-path variant. `channel.times` must start with the synthesis grid for
/// the given oversample factor; trailing extra samples are ignored.
std::vector<cplx> synthesize_and_correlate(const SymbolFrame& frame,
                                           const JakesPath& channel,
                                           const OfdmConfig& cfg, int oversample,
                                           std::optional<std::uint64_t> noise_seed);

struct TrialOptions {
    int oversample = 16;
    unsigned threads = 0;  ///< 0 = hardware concurrency
    Constellation constellation = Constellation::QPSK;
};

/// Monte Carlo power decomposition: per trial draws channel and symbols,
/// computes d_hat noiselessly and splits it into desired = sqrt(P_T)*a_i(t0)*d_i
/// and ici = d_hat - desired. Noise power is reported analytically as N_0.
/// Bit-identical results for a fixed seed regardless of thread count.
TrialStats run_trials(const OfdmConfig& cfg, const MobilityProfile& mob,
                      const FadingProfile& fading, ChannelMode mode,
                      std::uint64_t trials, SimSeed seed, TrialOptions opts = {});

/// Two-term Taylor model validity by Doppler bandwidth: valid below 10 kHz,
/// marginal in [10, 15) kHz, invalid above.
TaylorValidity taylor_validity(const MobilityProfile& mob);

}  // namespace hyperlink
