#include "hyperlink/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlink {

namespace {

constexpr double kHyperloopSpeed = 1000.0 / 3.0;  // 1200 km/h exactly
constexpr double kDefaultSnr = 1e5;               // 50 dB

Preset make_preset(PresetId id, std::string name, std::size_t n, double symbol_interval,
                   double carrier_freq) {
    Preset p;
    p.id = id;
    p.name = std::move(name);
    p.cfg = OfdmConfig{n, symbol_interval, carrier_freq, 1.0, 1.0 / kDefaultSnr};
    p.mob = MobilityProfile::from_speed(kHyperloopSpeed, carrier_freq);
    p.fading = FadingProfile::flat(n);
    return p;
}

}  // namespace

Preset preset(PresetId id) {
    switch (id) {
        case PresetId::FIG2_N16:   return make_preset(id, "fig2-n16", 16, 1e-6, 5e9);
        case PresetId::FIG2_N64:   return make_preset(id, "fig2-n64", 64, 1e-6, 5e9);
        case PresetId::FIG2_N256:  return make_preset(id, "fig2-n256", 256, 1e-6, 5e9);
        case PresetId::FIG2_N1024: return make_preset(id, "fig2-n1024", 1024, 1e-6, 5e9);
        // DVB-CS2: N = 2000, N*T = 500 us; 802.11a: N = 64, N*T = 4 us.
        case PresetId::DVB_CS2:    return make_preset(id, "dvb-cs2", 2000, 500e-6 / 2000.0, 4.8e9);
        case PresetId::IEEE80211A: return make_preset(id, "ieee80211a", 64, 4e-6 / 64.0, 5e9);
    }
    throw std::invalid_argument("unknown preset id");
}

Preset preset(std::string_view name) {
    for (auto& p : all_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown preset name: " + std::string(name));
}

std::vector<Preset> all_presets() {
    return {preset(PresetId::FIG2_N16),  preset(PresetId::FIG2_N64),
            preset(PresetId::FIG2_N256), preset(PresetId::FIG2_N1024),
            preset(PresetId::DVB_CS2),   preset(PresetId::IEEE80211A)};
}

OfdmConfig with_snr(const OfdmConfig& cfg, double snr) {
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw std::invalid_argument("with_snr: snr must be positive");
    OfdmConfig out = cfg;
    out.noise_density = cfg.tx_power / snr;
    return out;
}

std::vector<SweepPoint> sweep(const SweepSpec& spec) {
    if (spec.grid.empty()) throw std::invalid_argument("sweep: grid must be non-empty");
    for (std::size_t i = 1; i < spec.grid.size(); ++i)
        if (!(spec.grid[i] > spec.grid[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");

    std::vector<SweepPoint> out;
    out.reserve(spec.grid.size());
    for (double x : spec.grid) {
        OfdmConfig cfg = spec.base.cfg;
        MobilityProfile mob = spec.base.mob;
        FadingProfile fading = spec.base.fading;
        switch (spec.variable) {
            case SweepVariable::SNR_DB:
                cfg = with_snr(cfg, std::pow(10.0, x / 10.0));
                break;
            case SweepVariable::SPEED:
                mob = MobilityProfile::from_speed(x, cfg.carrier_freq);
                break;
            case SweepVariable::N_SUBCARRIERS: {
                const auto n = static_cast<std::size_t>(x);
                if (static_cast<double>(n) != x || n < 1)
                    throw std::invalid_argument("sweep: N grid values must be positive integers");
                cfg.n_subcarriers = n;
                fading = FadingProfile::flat(n, spec.base.fading.beta.front());
                break;
            }
        }
        out.push_back({x, throughput(cfg, mob, fading).total_bps});
    }
    return out;
}

void LinkRequirement::validate() const {
    if (!(min_rate_bps > 0.0) || !std::isfinite(min_rate_bps))
        throw std::invalid_argument("LinkRequirement: min_rate must be positive");
    if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps))
        throw std::invalid_argument("LinkRequirement: speed must be >= 0");
}

LinkRequirement control_link_requirement() {
    return {"central-control", 48e3, "very high reliability", kHyperloopSpeed};
}

LinkRequirement dispatch_link_requirement() {
    return {"real-time-dispatching", 100e6, "real-time video/telemetry", kHyperloopSpeed};
}

RequirementResult requirement_check(const LinkRequirement& req, const Preset& p, double snr) {
    req.validate();
    const OfdmConfig cfg = with_snr(p.cfg, snr);
    const MobilityProfile mob = MobilityProfile::from_speed(req.speed_mps, cfg.carrier_freq);
    const double bps = throughput(cfg, mob, p.fading).total_bps;
    return {bps >= req.min_rate_bps, bps / req.min_rate_bps, bps};
}

Table1Report table1_report(double snr_db, double speed_mps) {
    const double snr = std::pow(10.0, snr_db / 10.0);
    Table1Report report;
    report.snr_db = snr_db;
    report.speed_mps = speed_mps;

    struct Printed {
        PresetId id;
        const char* system;
        double fd_khz, thr_doppler_mbps, thr_static_mbps, ratio;
    };
    // Printed reference values; the two throughput columns appear swapped for
    // 802.11a and neither ratio follows from the listed parameters.
    const Printed printed[] = {
        {PresetId::DVB_CS2, "DVB-CS2", 5.78, 26.53, 12.27, 14.26},
        {PresetId::IEEE80211A, "IEEE 802.11a", 5.9, 212.2, 189.7, 22.5},
    };

    for (const auto& ref : printed) {
        const Preset p = preset(ref.id);
        const OfdmConfig cfg = with_snr(p.cfg, snr);
        const MobilityProfile still = MobilityProfile::from_speed(0.0, cfg.carrier_freq);

        Table1Row row;
        row.system = ref.system;
        row.fd_computed_hz = doppler_frequency(speed_mps, cfg.carrier_freq);
        row.fd_printed_hz = ref.fd_khz * 1e3;
        const MobilityProfile moving = MobilityProfile::from_speed(speed_mps, cfg.carrier_freq);
        row.throughput_doppler_bps = throughput(cfg, moving, p.fading).total_bps;
        row.throughput_static_bps = throughput(cfg, still, p.fading).total_bps;
        row.ratio_computed = row.throughput_static_bps / row.throughput_doppler_bps;
        row.ratio_printed = ref.ratio;
        row.discrepancy = true;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace hyperlink
