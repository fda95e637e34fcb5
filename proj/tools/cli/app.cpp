#include "cli/app.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/emit.hpp"
#include "cli/units.hpp"
#include "hyperlink/channel_sim.hpp"
#include "hyperlink/link_model.hpp"
#include "hyperlink/scenarios.hpp"
#include "hyperlink/techmatrix.hpp"

namespace hyperlink::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario flags shared by analyze/simulate/sweep: a preset, optionally
/// overridden by --snr/--speed, or a fully explicit parameter set.
struct ScenarioArgs {
    std::string preset_name;
    std::uint64_t n = 0;
    std::string t, fc, noise, snr, speed;
    double power = 1.0;
    bool power_set = false;

    void add_options(CLI::App* cmd, bool require_scenario = true) {
        cmd->add_option("--preset", preset_name, "Named preset (see `presets`)");
        cmd->add_option("--n", n, "Number of subcarriers");
        cmd->add_option("--t", t, "Input symbol interval, e.g. 1us");
        cmd->add_option("--fc", fc, "Carrier frequency, e.g. 5GHz");
        cmd->add_option("--power", power, "Per-subcarrier symbol power, watts")
            ->each([this](const std::string&) { power_set = true; });
        cmd->add_option("--noise", noise, "Correlator-output noise power, watts");
        cmd->add_option("--snr", snr, "SNR, e.g. 50dB (sets noise = power/snr)");
        cmd->add_option("--speed", speed, "Vehicle speed, e.g. 1200km/h");
        (void)require_scenario;
    }

    Preset resolve() const {
        Preset p;
        if (!preset_name.empty()) {
            if (n != 0 || !t.empty() || !fc.empty() || power_set || !noise.empty())
                throw UsageError("--preset conflicts with explicit parameters "
                                 "(--n/--t/--fc/--power/--noise)");
            p = preset(preset_name);
        } else {
            if (n == 0 || t.empty() || fc.empty())
                throw UsageError("either --preset or all of --n, --t, --fc are required");
            p.id = PresetId::FIG2_N64;  // unused for explicit configs
            p.name = "custom";
            p.cfg = OfdmConfig{n, parse_duration(t), parse_frequency(fc), power, 0.0};
            p.cfg.noise_density = p.cfg.tx_power / 1e5;  // 50 dB default
            p.mob = MobilityProfile::from_speed(0.0, p.cfg.carrier_freq);
            p.fading = FadingProfile::flat(n);
        }
        if (!noise.empty() && !snr.empty())
            throw UsageError("--noise and --snr are mutually exclusive");
        if (!noise.empty()) {
            p.cfg.noise_density = parse_power(noise);
        } else if (!snr.empty()) {
            p.cfg = with_snr(p.cfg, parse_snr(snr));
        }
        if (!speed.empty())
            p.mob = MobilityProfile::from_speed(parse_speed(speed), p.cfg.carrier_freq);
        p.cfg.validate();
        return p;
    }
};

struct OutputArgs {
    std::string format = "csv";
    std::string path;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", path, "Output file (default: stdout)");
    }

    OutputFormat fmt() const { return format == "json" ? OutputFormat::JSON : OutputFormat::CSV; }
};

std::vector<double> parse_grid(const std::string& grid) {
    std::vector<double> out;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad grid value: '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("--grid must list at least one value");
    return out;
}

void write_result(const OutputArgs& output, const std::function<void(std::ostream&)>& emit,
                  std::ostream& out) {
    if (output.path.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(output.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + output.path);
    emit(file);
    if (!file.good()) throw std::runtime_error("failed writing output file: " + output.path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"OFDM Doppler/ICI link analysis and railway-technology feasibility"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI/TOML config file");
    app.fallthrough(false);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Closed-form per-subcarrier SINR/throughput");
    ScenarioArgs analyze_sc;
    OutputArgs analyze_out;
    analyze_sc.add_options(analyze);
    analyze_out.add_options(analyze);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo power decomposition");
    ScenarioArgs sim_sc;
    OutputArgs sim_out;
    sim_sc.add_options(simulate);
    sim_out.add_options(simulate);
    std::uint64_t trials = 1000, master_seed = 0;
    std::string mode = "taylor", constellation = "qpsk";
    int oversample = 16;
    unsigned threads = 0;
    simulate->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", master_seed, "Master seed");
    simulate->add_option("--mode", mode, "Channel model: taylor or jakes")
        ->check(CLI::IsMember({"taylor", "jakes"}));
    simulate->add_option("--oversample", oversample, "Time-domain oversampling factor (>= 4)");
    simulate->add_option("--threads", threads, "Worker threads (0 = hardware)");
    simulate->add_option("--constellation", constellation, "qpsk, qam16 or gaussian")
        ->check(CLI::IsMember({"qpsk", "qam16", "gaussian"}));

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Analytic throughput over a parameter grid");
    ScenarioArgs sweep_sc;
    OutputArgs sweep_out;
    sweep_sc.add_options(sweep_cmd);
    sweep_out.add_options(sweep_cmd);
    std::string variable = "snr_db", grid_text;
    sweep_cmd->add_option("--variable", variable, "snr_db, speed or n")
        ->check(CLI::IsMember({"snr_db", "speed", "n"}));
    sweep_cmd->add_option("--grid", grid_text, "Comma-separated grid values")->required();

    // table1
    auto* table1 = app.add_subcommand("table1", "DVB-CS2 vs 802.11a degradation comparison");
    OutputArgs table1_out;
    table1_out.add_options(table1);
    std::string table1_snr = "50dB";
    table1->add_option("--snr", table1_snr, "SNR, e.g. 50dB");

    // feasibility
    auto* feas = app.add_subcommand("feasibility", "Railway-technology feasibility query");
    OutputArgs feas_out;
    feas_out.add_options(feas);
    std::string rate_text, feas_speed = "0", catalog_path;
    bool in_tube = false, open_site = false;
    feas->add_option("--rate", rate_text, "Required data rate, e.g. 48kbps")->required();
    feas->add_option("--speed", feas_speed, "Vehicle speed, e.g. 1200km/h");
    feas->add_flag("--tube", in_tube, "Vehicle runs inside a vacuum tube");
    feas->add_flag("--open-site", open_site, "Open-site deployment (default)");
    feas->add_option("--catalog", catalog_path, "JSON catalog overriding the builtin");

    // presets
    auto* presets_cmd = app.add_subcommand("presets", "List built-in presets");
    OutputArgs presets_out;
    presets_out.add_options(presets_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) {
            const Preset p = analyze_sc.resolve();
            const auto res = throughput(p.cfg, p.mob, p.fading);
            write_result(analyze_out, [&](std::ostream& o) { emit_analyze(res, analyze_out.fmt(), o); },
                         out);
        } else if (app.got_subcommand(simulate)) {
            const Preset p = sim_sc.resolve();
            TrialOptions opts;
            opts.oversample = oversample;
            opts.threads = threads;
            opts.constellation = constellation == "qam16"      ? Constellation::QAM16
                                 : constellation == "gaussian" ? Constellation::GAUSSIAN
                                                               : Constellation::QPSK;
            const auto stats = run_trials(p.cfg, p.mob, p.fading,
                                          mode == "jakes" ? ChannelMode::JAKES : ChannelMode::TAYLOR,
                                          trials, SimSeed{master_seed}, opts);
            write_result(sim_out, [&](std::ostream& o) { emit_simulate(stats, sim_out.fmt(), o); },
                         out);
        } else if (app.got_subcommand(sweep_cmd)) {
            SweepSpec spec;
            spec.base = sweep_sc.resolve();
            spec.grid = parse_grid(grid_text);
            spec.variable = variable == "speed" ? SweepVariable::SPEED
                            : variable == "n"   ? SweepVariable::N_SUBCARRIERS
                                                : SweepVariable::SNR_DB;
            const auto points = sweep(spec);
            write_result(sweep_out,
                         [&](std::ostream& o) { emit_sweep(points, variable, sweep_out.fmt(), o); },
                         out);
        } else if (app.got_subcommand(table1)) {
            const double snr = parse_snr(table1_snr);
            const auto report = table1_report(10.0 * std::log10(snr));
            write_result(table1_out,
                         [&](std::ostream& o) { emit_table1(report, table1_out.fmt(), o); }, out);
        } else if (app.got_subcommand(feas)) {
            if (in_tube && open_site)
                throw UsageError("--tube and --open-site are mutually exclusive");
            FeasibilityQuery q;
            q.min_rate_bps = parse_rate(rate_text);
            q.speed_mps = parse_speed(feas_speed);
            q.in_tube = in_tube;
            const auto catalog =
                catalog_path.empty() ? builtin_catalog() : load_catalog_file(catalog_path);
            const auto report = evaluate(q, catalog);
            write_result(feas_out,
                         [&](std::ostream& o) { emit_feasibility(report, feas_out.fmt(), o); },
                         out);
        } else if (app.got_subcommand(presets_cmd)) {
            const auto list = all_presets();
            write_result(presets_out,
                         [&](std::ostream& o) { emit_presets(list, presets_out.fmt(), o); }, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hyperlink::cli
