#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperlink/link_model.hpp"
#include "hyperlink/types.hpp"

namespace hyperlink {

enum class PresetId { FIG2_N16, FIG2_N64, FIG2_N256, FIG2_N1024, DVB_CS2, IEEE80211A };

/// Frozen named parameter set. All presets default to 1200 km/h and 50 dB SNR.
struct Preset {
    PresetId id;
    std::string name;  ///< stable public identifier, e.g. "fig2-n64"
    OfdmConfig cfg;
    MobilityProfile mob;
    FadingProfile fading;
};

Preset preset(PresetId id);
Preset preset(std::string_view name);
std::vector<Preset> all_presets();

/// Copy of `cfg` with noise_density set so that P_T / N_0 equals `snr` (linear).
OfdmConfig with_snr(const OfdmConfig& cfg, double snr);

enum class SweepVariable { SNR_DB, SPEED, N_SUBCARRIERS };

struct SweepSpec {
    SweepVariable variable = SweepVariable::SNR_DB;
    std::vector<double> grid;  ///< non-empty, strictly increasing
    Preset base;
};

struct SweepPoint {
    double value;
    double total_bps;
};

/// One analytic throughput evaluation per grid point, in grid order.
/// SNR_DB sets N_0 = P_T / 10^(x/10); SPEED replaces the mobility profile;
/// N_SUBCARRIERS resizes N at fixed T (total bandwidth 1/T held constant)
/// with the flat fading level of the base preset.
std::vector<SweepPoint> sweep(const SweepSpec& spec);

struct LinkRequirement {
    std::string name;
    double min_rate_bps = 0.0;
    std::string reliability_note;
    double speed_mps = 0.0;

    void validate() const;
};

/// The two Hyperloop link classes.
LinkRequirement control_link_requirement();    ///< 48 kbps, high reliability
LinkRequirement dispatch_link_requirement();   ///< 100 Mbps real-time dispatching

struct RequirementResult {
    bool pass = false;
    double margin = 0.0;  ///< total_bps / min_rate
    double total_bps = 0.0;
};

/// Evaluates the analytic throughput of `p` at the requirement's speed and
/// the given linear SNR; PASS iff total_bps >= min_rate.
RequirementResult requirement_check(const LinkRequirement& req, const Preset& p, double snr);

/// Side-by-side computed vs printed comparison for one practical system.
struct Table1Row {
    std::string system;
    double fd_computed_hz = 0.0;
    double fd_printed_hz = 0.0;
    double throughput_doppler_bps = 0.0;
    double throughput_static_bps = 0.0;
    double ratio_computed = 0.0;
    double ratio_printed = 0.0;
    bool discrepancy = false;  ///< printed values not reproduced by the model
};

struct Table1Report {
    double snr_db = 0.0;
    double speed_mps = 0.0;
    std::vector<Table1Row> rows;  ///< DVB-CS2 then IEEE 802.11a
};

/// Degradation comparison of the DVB-CS2 and IEEE 802.11a presets at
/// 1200 km/h. Printed reference values are emitted verbatim and flagged;
/// they are not reproduced by the model.
Table1Report table1_report(double snr_db = 50.0, double speed_mps = 1000.0 / 3.0);

}  // namespace hyperlink
