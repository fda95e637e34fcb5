#include "hyperlink/link_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperlink {

namespace {

void check_index(const OfdmConfig& cfg, std::size_t i) {
    if (i < 1 || i > cfg.n_subcarriers)
        throw std::invalid_argument("subcarrier index out of range");
}

/// sum_{k != i} beta_k / (k-i)^2 over k = 1..N.
double interferer_sum(const FadingProfile& fading, std::size_t i) {
    double s = 0.0;
    const std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(i);
    for (std::ptrdiff_t k = 1; k <= static_cast<std::ptrdiff_t>(fading.beta.size()); ++k) {
        if (k == ii) continue;
        const double d = static_cast<double>(k - ii);
        s += fading.beta[static_cast<std::size_t>(k - 1)] / (d * d);
    }
    return s;
}

}  // namespace

double doppler_frequency(double speed_mps, double carrier_freq_hz) {
    if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps))
        throw std::invalid_argument("doppler_frequency: speed must be finite and >= 0");
    if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
        throw std::invalid_argument("doppler_frequency: carrier_freq must be positive");
    return speed_mps * carrier_freq_hz / kSpeedOfLight;
}

double desired_power(const OfdmConfig& cfg, const FadingProfile& fading, std::size_t i) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    check_index(cfg, i);
    return fading.beta[i - 1] * cfg.tx_power;
}

double ici_power(const OfdmConfig& cfg, const MobilityProfile& mob,
                 const FadingProfile& fading, std::size_t i) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    check_index(cfg, i);
    if (cfg.n_subcarriers == 1 || mob.speed == 0.0) return 0.0;
    const double nt_fd = cfg.ofdm_symbol_duration() * mob.doppler_bw();
    return cfg.tx_power * nt_fd * nt_fd / 2.0 * interferer_sum(fading, i);
}

std::optional<double> sinr(const OfdmConfig& cfg, const MobilityProfile& mob,
                           const FadingProfile& fading, std::size_t i) {
    const double p = desired_power(cfg, fading, i);
    const double ici = ici_power(cfg, mob, fading, i);
    const double denom = ici + cfg.noise_density;
    if (denom <= 0.0) return std::nullopt;
    return p / denom;
}

std::optional<double> sir_floor(const OfdmConfig& cfg, const MobilityProfile& mob,
                                const FadingProfile& fading, std::size_t i) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    check_index(cfg, i);
    if (cfg.n_subcarriers == 1 || mob.speed == 0.0) return std::nullopt;
    const double nt_fd = cfg.ofdm_symbol_duration() * mob.doppler_bw();
    return fading.beta[i - 1] / (nt_fd * nt_fd / 2.0 * interferer_sum(fading, i));
}

ThroughputResult throughput(const OfdmConfig& cfg, const MobilityProfile& mob,
                            const FadingProfile& fading) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    ThroughputResult res;
    res.subcarrier_bw = cfg.subcarrier_bw();
    res.per_subcarrier.reserve(cfg.n_subcarriers);
    for (std::size_t i = 1; i <= cfg.n_subcarriers; ++i) {
        SubcarrierMetrics m;
        m.index = i;
        m.desired_power = fading.beta[i - 1] * cfg.tx_power;
        m.ici_power = ici_power(cfg, mob, fading, i);
        m.noise_power = cfg.noise_density;
        const double denom = m.ici_power + m.noise_power;
        m.sinr = denom > 0.0 ? m.desired_power / denom
                             : std::numeric_limits<double>::infinity();
        res.total_bps += res.subcarrier_bw * std::log2(1.0 + m.sinr);
        res.per_subcarrier.push_back(m);
    }
    return res;
}

double degradation_ratio(const OfdmConfig& cfg, const FadingProfile& fading,
                         double speed_mps, double snr) {
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw std::invalid_argument("degradation_ratio: snr must be positive");
    OfdmConfig at_snr = cfg;
    at_snr.noise_density = cfg.tx_power / snr;
    const MobilityProfile still = MobilityProfile::from_speed(0.0, cfg.carrier_freq);
    const MobilityProfile moving = MobilityProfile::from_speed(speed_mps, cfg.carrier_freq);
    return throughput(at_snr, still, fading).total_bps /
           throughput(at_snr, moving, fading).total_bps;
}

}  // namespace hyperlink
