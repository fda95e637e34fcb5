#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperlink {

/// Exact SI speed of light, m/s.
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// OFDM system parameters. Subcarrier spacing is 1/(N*T) and the OFDM
/// symbol spans [0, N*T].
struct OfdmConfig {
    std::size_t n_subcarriers = 0;   ///< N
    double symbol_interval = 0.0;    ///< T, seconds (input symbol interval)
    double carrier_freq = 0.0;       ///< f_c, Hz
    double tx_power = 1.0;           ///< P_T, watts per subcarrier symbol
    double noise_density = 0.0;      ///< N_0, watts at the correlator output

    double ofdm_symbol_duration() const { return static_cast<double>(n_subcarriers) * symbol_interval; }
    double subcarrier_bw() const { return 1.0 / ofdm_symbol_duration(); }
    /// Baseband frequency of subcarrier k (1-based): (k-1)/(N*T).
    double subcarrier_freq(std::size_t k) const {
        return static_cast<double>(k - 1) * subcarrier_bw();
    }

    void validate() const {
        if (n_subcarriers < 1) throw std::invalid_argument("OfdmConfig: n_subcarriers must be >= 1");
        if (!(symbol_interval > 0.0) || !std::isfinite(symbol_interval))
            throw std::invalid_argument("OfdmConfig: symbol_interval must be positive");
        if (!(carrier_freq > 0.0) || !std::isfinite(carrier_freq))
            throw std::invalid_argument("OfdmConfig: carrier_freq must be positive");
        if (!(tx_power > 0.0) || !std::isfinite(tx_power))
            throw std::invalid_argument("OfdmConfig: tx_power must be positive");
        if (!(noise_density >= 0.0) || !std::isfinite(noise_density))
            throw std::invalid_argument("OfdmConfig: noise_density must be >= 0");
    }
};

/// Vehicle mobility. Wavelength and Doppler bandwidth are always derived
/// from speed and carrier frequency, never stored independently.
struct MobilityProfile {
    double speed = 0.0;       ///< v, m/s
    double wavelength = 0.0;  ///< lambda = c / f_c, meters

    /// F_d = v / lambda, Hz.
    double doppler_bw() const { return speed / wavelength; }

    static MobilityProfile from_speed(double speed_mps, double carrier_freq_hz) {
        if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps))
            throw std::invalid_argument("MobilityProfile: speed must be finite and >= 0");
        if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
            throw std::invalid_argument("MobilityProfile: carrier_freq must be positive");
        return MobilityProfile{speed_mps, kSpeedOfLight / carrier_freq_hz};
    }
};

/// Per-subcarrier Rayleigh channel-gain variances beta_k.
struct FadingProfile {
    std::vector<double> beta;

    static FadingProfile flat(std::size_t n, double value = 1.0) {
        return FadingProfile{std::vector<double>(n, value)};
    }

    void validate(std::size_t n_subcarriers) const {
        if (beta.size() != n_subcarriers)
            throw std::invalid_argument("FadingProfile: beta length must equal n_subcarriers");
        for (double b : beta)
            if (!(b > 0.0) || !std::isfinite(b))
                throw std::invalid_argument("FadingProfile: every beta must be positive");
    }
};

}  // namespace hyperlink
