#include "cli/emit.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace hyperlink::cli {

using nlohmann::json;

std::string fmt9(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

/// JSON numbers keep the same 9-significant-digit rendering as CSV so the
/// two formats mirror each other byte-for-value.
json jnum(double v) {
    if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
    return json::parse(fmt9(v));
}

double sinr_db(double sinr) { return 10.0 * std::log10(sinr); }

}  // namespace

void emit_analyze(const ThroughputResult& res, OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::CSV) {
        out << "subcarrier,desired_w,ici_w,noise_w,sinr_db,bps\n";
        for (const auto& m : res.per_subcarrier) {
            out << m.index << ',' << fmt9(m.desired_power) << ',' << fmt9(m.ici_power) << ','
                << fmt9(m.noise_power) << ',' << fmt9(sinr_db(m.sinr)) << ','
                << fmt9(res.subcarrier_bw * std::log2(1.0 + m.sinr)) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& m : res.per_subcarrier) {
        rows.push_back({{"subcarrier", m.index},
                        {"desired_w", jnum(m.desired_power)},
                        {"ici_w", jnum(m.ici_power)},
                        {"noise_w", jnum(m.noise_power)},
                        {"sinr_db", jnum(sinr_db(m.sinr))},
                        {"bps", jnum(res.subcarrier_bw * std::log2(1.0 + m.sinr))}});
    }
    json j{{"command", "analyze"},
           {"subcarrier_bw_hz", jnum(res.subcarrier_bw)},
           {"total_bps", jnum(res.total_bps)},
           {"rows", rows}};
    out << j.dump(2) << '\n';
}

void emit_simulate(const TrialStats& stats, OutputFormat f, std::ostream& out) {
    const std::size_t n = stats.desired_power_hat.size();
    if (f == OutputFormat::CSV) {
        out << "subcarrier,desired_w_hat,desired_w_stderr,ici_w_hat,ici_w_stderr,noise_w\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << (i + 1) << ',' << fmt9(stats.desired_power_hat[i]) << ','
                << fmt9(stats.desired_power_stderr[i]) << ',' << fmt9(stats.ici_power_hat[i])
                << ',' << fmt9(stats.ici_power_stderr[i]) << ',' << fmt9(stats.noise_power)
                << '\n';
        }
        return;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({{"subcarrier", i + 1},
                        {"desired_w_hat", jnum(stats.desired_power_hat[i])},
                        {"desired_w_stderr", jnum(stats.desired_power_stderr[i])},
                        {"ici_w_hat", jnum(stats.ici_power_hat[i])},
                        {"ici_w_stderr", jnum(stats.ici_power_stderr[i])},
                        {"noise_w", jnum(stats.noise_power)}});
    }
    json j{{"command", "simulate"}, {"trials", stats.trials}, {"rows", rows}};
    out << j.dump(2) << '\n';
}

void emit_sweep(const std::vector<SweepPoint>& points, const std::string& variable,
                OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::CSV) {
        out << variable << ",total_bps\n";
        for (const auto& p : points)
            out << fmt9(p.value) << ',' << fmt9(p.total_bps) << '\n';
        return;
    }
    json rows = json::array();
    for (const auto& p : points)
        rows.push_back({{variable, jnum(p.value)}, {"total_bps", jnum(p.total_bps)}});
    json j{{"command", "sweep"}, {"variable", variable}, {"rows", rows}};
    out << j.dump(2) << '\n';
}

void emit_table1(const Table1Report& report, OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::CSV) {
        out << "system,fd_computed_hz,fd_printed_hz,throughput_doppler_bps,"
               "throughput_static_bps,ratio_computed,ratio_printed,discrepancy\n";
        for (const auto& r : report.rows) {
            out << r.system << ',' << fmt9(r.fd_computed_hz) << ',' << fmt9(r.fd_printed_hz)
                << ',' << fmt9(r.throughput_doppler_bps) << ',' << fmt9(r.throughput_static_bps)
                << ',' << fmt9(r.ratio_computed) << ',' << fmt9(r.ratio_printed) << ','
                << (r.discrepancy ? "true" : "false") << '\n';
        }
        out << "# printed throughput and ratio values are quoted from the source "
               "table and are not reproduced by the model\n";
        return;
    }
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"system", r.system},
                        {"fd_computed_hz", jnum(r.fd_computed_hz)},
                        {"fd_printed_hz", jnum(r.fd_printed_hz)},
                        {"throughput_doppler_bps", jnum(r.throughput_doppler_bps)},
                        {"throughput_static_bps", jnum(r.throughput_static_bps)},
                        {"ratio_computed", jnum(r.ratio_computed)},
                        {"ratio_printed", jnum(r.ratio_printed)},
                        {"discrepancy", r.discrepancy}});
    }
    json j{{"command", "table1"},
           {"snr_db", jnum(report.snr_db)},
           {"speed_mps", jnum(report.speed_mps)},
           {"rows", rows}};
    out << j.dump(2) << '\n';
}

void emit_feasibility(const FeasibilityReport& report, OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::CSV) {
        out << "technology,qualifies,margin,reason\n";
        for (const auto& q : report.qualifying)
            out << '"' << q.record.name << "\",true," << fmt9(q.margin) << ",\n";
        for (const auto& e : report.excluded)
            out << '"' << e.record.name << "\",false,," << to_string(e.reason) << '\n';
        for (const auto& note : report.notes) out << "# " << note << '\n';
        return;
    }
    json rows = json::array();
    for (const auto& q : report.qualifying)
        rows.push_back({{"technology", q.record.name},
                        {"qualifies", true},
                        {"margin", jnum(q.margin)},
                        {"reason", nullptr}});
    for (const auto& e : report.excluded)
        rows.push_back({{"technology", e.record.name},
                        {"qualifies", false},
                        {"margin", nullptr},
                        {"reason", to_string(e.reason)}});
    json j{{"command", "feasibility"}, {"rows", rows}, {"notes", report.notes}};
    out << j.dump(2) << '\n';
}

void emit_presets(const std::vector<Preset>& presets, OutputFormat f, std::ostream& out) {
    if (f == OutputFormat::CSV) {
        out << "preset,n,symbol_interval_s,carrier_freq_hz,speed_mps,tx_power_w,noise_w\n";
        for (const auto& p : presets) {
            out << p.name << ',' << p.cfg.n_subcarriers << ',' << fmt9(p.cfg.symbol_interval)
                << ',' << fmt9(p.cfg.carrier_freq) << ',' << fmt9(p.mob.speed) << ','
                << fmt9(p.cfg.tx_power) << ',' << fmt9(p.cfg.noise_density) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& p : presets) {
        rows.push_back({{"preset", p.name},
                        {"n", p.cfg.n_subcarriers},
                        {"symbol_interval_s", jnum(p.cfg.symbol_interval)},
                        {"carrier_freq_hz", jnum(p.cfg.carrier_freq)},
                        {"speed_mps", jnum(p.mob.speed)},
                        {"tx_power_w", jnum(p.cfg.tx_power)},
                        {"noise_w", jnum(p.cfg.noise_density)}});
    }
    json j{{"command", "presets"}, {"rows", rows}};
    out << j.dump(2) << '\n';
}

}  // namespace hyperlink::cli
