#include "hyperlink/techmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace hyperlink {

namespace {

constexpr double kUnlimited = std::numeric_limits<double>::infinity();

double kmh(double v) { return v / 3.6; }

TechnologyRecord rec(std::string name, double min_bps, double max_bps, double mobility_mps,
                     bool open_site, bool tube, std::string bw, std::string mod,
                     std::vector<std::string> adv, std::vector<std::string> draw,
                     CatalogSource source = CatalogSource::TABLE3) {
    TechnologyRecord r;
    r.name = std::move(name);
    r.throughput = {min_bps, max_bps};
    r.mobility_limit_mps = mobility_mps;
    r.scenario = {open_site, tube};
    r.channel_bw = std::move(bw);
    r.modulation = std::move(mod);
    r.advantages = std::move(adv);
    r.drawbacks = std::move(draw);
    r.source = source;
    return r;
}

}  // namespace

void RateRange::validate() const {
    if (!(min_bps > 0.0)) throw std::invalid_argument("RateRange: min must be positive");
    if (!(min_bps <= max_bps)) throw std::invalid_argument("RateRange: min must not exceed max");
}

void TechnologyRecord::validate() const {
    if (name.empty()) throw std::invalid_argument("TechnologyRecord: name required");
    throughput.validate();
    if (!(mobility_limit_mps > 0.0))
        throw std::invalid_argument("TechnologyRecord: mobility limit must be positive");
    if (!scenario.open_site && !scenario.tube)
        throw std::invalid_argument("TechnologyRecord: scenario set must be non-empty");
}

void FeasibilityQuery::validate() const {
    if (!(min_rate_bps > 0.0) || !std::isfinite(min_rate_bps))
        throw std::invalid_argument("FeasibilityQuery: min_rate must be positive");
    if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps))
        throw std::invalid_argument("FeasibilityQuery: speed must be >= 0");
}

const char* to_string(ExclusionReason r) {
    switch (r) {
        case ExclusionReason::SCENARIO: return "scenario";
        case ExclusionReason::MOBILITY: return "mobility";
        case ExclusionReason::THROUGHPUT: return "throughput";
    }
    return "?";
}

std::vector<TechnologyRecord> builtin_catalog() {
    std::vector<TechnologyRecord> cat;
    cat.push_back(rec("Satellite", 10e6, RateRange::kUnbounded, kUnlimited, true, false,
                      ">20 MHz", "FSK-PSK", {"Available infrastructure"}, {"Limited throughput"}));
    cat.push_back(rec("GSM-R", 172e3, 172e3, kmh(500), true, false, "200 kHz", "GMSK TDMA (SISO)",
                      {"No infrastructure"}, {"Limited coverage", "Limited throughput"}));
    cat.push_back(rec("LTE", 10e6, 50e6, kmh(350), true, false, "1.4 - 20 MHz",
                      "QPSK, 16-QAM, 64-QAM (SC-FDMA, OFDM) (2x2 MIMO)", {"No infrastructure"},
                      {"Limited coverage", "Limited throughput"}));
    cat.push_back(rec("LTE-R", 10e6, 50e6, kmh(500), true, false, "1.4 - 20 MHz",
                      "QPSK, 16-QAM, 64-QAM (SC-FDMA, OFDM) (2x2 MIMO)", {"No infrastructure"},
                      {"Limited coverage", "Limited throughput"}));
    cat.push_back(rec("Radio terminals (IEEE 802.11 / WiMAX)", 100e6, RateRange::kUnbounded,
                      kmh(350), true, false, "Variable", "Variable", {"Seamless communication"},
                      {"High cost"}));
    cat.push_back(rec("RoF", 1e9, 10e9, kmh(500), true, false, "10 - 100 MHz",
                      "16-QAM, QPSK (OFDM)", {"Seamless communication", "Low cost"},
                      {"High cost"}));
    cat.push_back(rec("FSO", 10e9, RateRange::kUnbounded, kUnlimited, true, true, "-",
                      "OOK, M-PPM and DPSK", {"Seamless communication", "High throughput"},
                      {"Very high cost", "Heavy infrastructure",
                       "Impact of atmospheric conditions"}));
    cat.push_back(rec("LCX", 1e6, 10e6, kUnlimited, true, true, "30 - 1000 MHz",
                      "Std. and OFDM", {"Seamless and reliable communication"},
                      {"High cost", "Limited throughput due to limit of leakage propagation"}));

    // Measured satellite deployments on high-speed rail.
    cat.push_back(rec("Satellite: East Coast (England)", 40e6, 40e6, kmh(225), true, false, "-",
                      "-", {}, {"Claimed figure"}, CatalogSource::TABLE2));
    cat.push_back(rec("Satellite: Indian Railways (India)", 9e6, 9e6, kmh(320), true, false, "-",
                      "-", {}, {}, CatalogSource::TABLE2));
    cat.push_back(rec("Satellite: NTV (Italy)", 8e6, 8e6, kmh(302), true, false, "-", "-", {}, {},
                      CatalogSource::TABLE2));
    cat.push_back(rec("Satellite: Thalys (Europe)", 4e6, 4e6, kmh(320), true, false, "-", "-", {},
                      {}, CatalogSource::TABLE2));
    cat.push_back(rec("Satellite: Temir Zholy (Kazakhstan)", 2e6, 2e6, kmh(250), true, false, "-",
                      "-", {}, {}, CatalogSource::TABLE2));
    return cat;
}

FeasibilityReport evaluate(const FeasibilityQuery& query,
                           const std::vector<TechnologyRecord>& catalog) {
    query.validate();
    FeasibilityReport report;
    bool lcx_qualifies = false;
    bool lcx_rate_limited = false;

    for (const auto& r : catalog) {
        r.validate();
        if (query.in_tube && !r.scenario.tube) {
            report.excluded.push_back({r, ExclusionReason::SCENARIO});
        } else if (query.speed_mps > r.mobility_limit_mps) {
            report.excluded.push_back({r, ExclusionReason::MOBILITY});
        } else if (r.throughput.max_bps < query.min_rate_bps) {
            report.excluded.push_back({r, ExclusionReason::THROUGHPUT});
            if (r.name == "LCX") lcx_rate_limited = true;
        } else {
            report.qualifying.push_back({r, r.throughput.max_bps / query.min_rate_bps});
            if (r.name == "LCX") lcx_qualifies = true;
        }
    }

    std::sort(report.qualifying.begin(), report.qualifying.end(),
              [](const QualifiedEntry& a, const QualifiedEntry& b) {
                  if (a.margin != b.margin) return a.margin > b.margin;
                  return a.record.name < b.record.name;
              });

    if (lcx_qualifies)
        report.notes.push_back(
            "LCX is the recommended solution for the reliable central-control link.");
    if (lcx_rate_limited)
        report.notes.push_back(
            "Leaky-cable links cannot guarantee rates above 10 Mbps; mmWave systems are the "
            "proposed direction for the high-rate dispatching link.");
    return report;
}

namespace {

using nlohmann::json;

json range_to_json(const RateRange& r) {
    json j;
    j["min_bps"] = r.min_bps;
    j["max_bps"] = r.unbounded() ? json("unbounded") : json(r.max_bps);
    return j;
}

RateRange range_from_json(const json& j) {
    RateRange r;
    r.min_bps = j.at("min_bps").get<double>();
    const auto& m = j.at("max_bps");
    r.max_bps = m.is_string() ? RateRange::kUnbounded : m.get<double>();
    return r;
}

json record_to_json(const TechnologyRecord& r) {
    json j;
    j["name"] = r.name;
    j["throughput"] = range_to_json(r.throughput);
    j["mobility_limit_mps"] = std::isinf(r.mobility_limit_mps) ? json("unlimited")
                                                               : json(r.mobility_limit_mps);
    json sc = json::array();
    if (r.scenario.open_site) sc.push_back("open-site");
    if (r.scenario.tube) sc.push_back("tube");
    j["scenario"] = sc;
    j["channel_bw"] = r.channel_bw;
    j["modulation"] = r.modulation;
    j["advantages"] = r.advantages;
    j["drawbacks"] = r.drawbacks;
    j["source"] = r.source == CatalogSource::TABLE2 ? "table2" : "table3";
    return j;
}

TechnologyRecord record_from_json(const json& j) {
    TechnologyRecord r;
    r.name = j.at("name").get<std::string>();
    r.throughput = range_from_json(j.at("throughput"));
    const auto& mob = j.at("mobility_limit_mps");
    r.mobility_limit_mps = mob.is_string() ? kUnlimited : mob.get<double>();
    for (const auto& s : j.at("scenario")) {
        if (s == "open-site") r.scenario.open_site = true;
        else if (s == "tube") r.scenario.tube = true;
        else throw std::invalid_argument("catalog: unknown scenario tag");
    }
    r.channel_bw = j.at("channel_bw").get<std::string>();
    r.modulation = j.at("modulation").get<std::string>();
    r.advantages = j.at("advantages").get<std::vector<std::string>>();
    r.drawbacks = j.at("drawbacks").get<std::vector<std::string>>();
    const std::string src = j.at("source").get<std::string>();
    if (src == "table2") r.source = CatalogSource::TABLE2;
    else if (src == "table3") r.source = CatalogSource::TABLE3;
    else throw std::invalid_argument("catalog: unknown source tag");
    r.validate();
    return r;
}

}  // namespace

void save_catalog(const std::vector<TechnologyRecord>& catalog, std::ostream& out) {
    json j = json::array();
    for (const auto& r : catalog) j.push_back(record_to_json(r));
    out << j.dump(2) << '\n';
}

std::vector<TechnologyRecord> load_catalog(std::istream& in) {
    json j = json::parse(in);
    std::vector<TechnologyRecord> cat;
    for (const auto& item : j) cat.push_back(record_from_json(item));
    return cat;
}

void save_catalog_file(const std::vector<TechnologyRecord>& catalog, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open catalog file for writing: " + path);
    save_catalog(catalog, out);
}

std::vector<TechnologyRecord> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    return load_catalog(in);
}

}  // namespace hyperlink
