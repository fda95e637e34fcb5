// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "hyperlink/channel_sim.hpp"
#include "hyperlink/link_model.hpp"
#include "hyperlink/scenarios.hpp"
#include "hyperlink/techmatrix.hpp"

using namespace hyperlink;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, double elapsed_s, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, name,
                elapsed_s, detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++g_failures;
}

void criterion(int id, const char* name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0.0 && elapsed >= budget_s) {
        pass = false;
        detail += " [over runtime budget]";
    }
    report(id, name, pass, elapsed, detail);
}

struct Setup {
    OfdmConfig cfg;
    MobilityProfile mob;
    FadingProfile fading;
};

Setup fig2_style(std::size_t n, double speed = 1000.0 / 3.0) {
    Setup s;
    s.cfg = OfdmConfig{n, 1e-6, 5e9, 1.0, 1e-5};
    s.mob = MobilityProfile::from_speed(speed, 5e9);
    s.fading = FadingProfile::flat(n);
    return s;
}

// Config with N*T*F_d = nt_fd: N subcarriers at T = 1 us, speed chosen to hit
// the target normalized Doppler exactly.
Setup normalized_doppler(std::size_t n, double nt_fd) {
    Setup s;
    s.cfg = OfdmConfig{n, 1e-6, 5e9, 1.0, 1e-5};
    const double fd = nt_fd / s.cfg.ofdm_symbol_duration();
    s.mob = MobilityProfile::from_speed(fd * kSpeedOfLight / 5e9, 5e9);
    s.fading = FadingProfile::flat(n);
    return s;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

}  // namespace

int main() {
    criterion(1, "static-channel orthogonality (v=0 ICI < 1e-16)", 5.0, [](std::string& detail) {
        bool ok = true;
        double worst = 0.0;
        for (std::size_t n : {4u, 64u}) {
            auto s = fig2_style(n, 0.0);
            const auto stats = run_trials(s.cfg, s.mob, s.fading, ChannelMode::TAYLOR, 200,
                                          SimSeed{1});
            for (double p : stats.ici_power_hat) {
                worst = std::max(worst, p);
                ok = ok && p < 1e-16;
            }
        }
        detail = "max residual ICI " + fmt(worst);
        return ok;
    });

    criterion(2, "Monte Carlo ICI matches the closed form (TAYLOR, 1e4 trials)", 60.0,
              [](std::string& detail) {
                  bool ok = true;
                  double worst_mid = 0.0;
                  for (std::size_t n : {4u, 16u, 64u}) {
                      auto s = fig2_style(n);
                      const auto stats = run_trials(s.cfg, s.mob, s.fading, ChannelMode::TAYLOR,
                                                    10000, SimSeed{2});
                      for (std::size_t i = 1; i <= n; ++i) {
                          const double analytic = ici_power(s.cfg, s.mob, s.fading, i);
                          const double gap = std::abs(stats.ici_power_hat[i - 1] - analytic);
                          if (gap > 3.0 * stats.ici_power_stderr[i - 1]) ok = false;
                      }
                      const std::size_t mid = n / 2;
                      const double analytic_mid = ici_power(s.cfg, s.mob, s.fading, mid);
                      const double rel =
                          std::abs(stats.ici_power_hat[mid - 1] - analytic_mid) / analytic_mid;
                      worst_mid = std::max(worst_mid, rel);
                      if (rel > 0.02) ok = false;
                  }
                  detail = "worst mid-subcarrier relative gap " + fmt(worst_mid);
                  return ok;
              });

    criterion(3, "Taylor validity vs exact Jakes channel", 120.0, [](std::string& detail) {
        const std::size_t n = 8;
        const std::uint64_t trials = 4000;
        std::vector<double> gaps;
        for (double nt_fd : {0.05, 0.2, 0.36}) {
            auto s = normalized_doppler(n, nt_fd);
            const auto stats =
                run_trials(s.cfg, s.mob, s.fading, ChannelMode::JAKES, trials, SimSeed{3});
            const std::size_t mid = n / 2;
            const double analytic = ici_power(s.cfg, s.mob, s.fading, mid);
            gaps.push_back(std::abs(stats.ici_power_hat[mid - 1] - analytic) / analytic);
        }
        detail = "relative gaps " + fmt(gaps[0]) + " / " + fmt(gaps[1]) + " / " + fmt(gaps[2]);
        return gaps[0] < 0.10 && gaps[0] < gaps[1] && gaps[1] < gaps[2];
    });

    criterion(4, "Jakes derivative variance = 2*pi^2*beta*F_d^2 (5%)", 0.0,
              [](std::string& detail) {
                  auto s = normalized_doppler(8, 0.05);
                  const double nt = s.cfg.ofdm_symbol_duration();
                  const double h = nt / 256.0;
                  const std::vector<double> times{nt / 2.0, nt / 2.0 + h};
                  const double beta = 1.0;
                  double var = 0.0;
                  const std::uint64_t trials = 10000;
                  for (std::uint64_t t = 0; t < trials; ++t) {
                      const auto p = sample_jakes_path(s.fading, s.mob, times,
                                                       derive_seed(SimSeed{4}, t));
                      var += std::norm((p.gains[0][1] - p.gains[0][0]) / h);
                  }
                  var /= static_cast<double>(trials);
                  const double fd = s.mob.doppler_bw();
                  const double expected =
                      2.0 * std::numbers::pi * std::numbers::pi * beta * fd * fd;
                  detail = "relative error " + fmt(std::abs(var - expected) / expected);
                  return std::abs(var - expected) / expected < 0.05;
              });

    criterion(5, "throughput-vs-SNR curve shape (N ordering, monotone, ICI floor)", 1.0,
              [](std::string& detail) {
                  bool ok = true;
                  double prev = std::numeric_limits<double>::infinity();
                  double worst_floor_gap = 0.0;
                  for (std::size_t n : {16u, 64u, 256u, 1024u}) {
                      auto s = fig2_style(n);
                      const double at50 = throughput(s.cfg, s.mob, s.fading).total_bps;
                      if (!(at50 < prev)) ok = false;
                      prev = at50;

                      double last = 0.0;
                      for (double db = 0.0; db <= 50.0; db += 5.0) {
                          auto cfg = with_snr(s.cfg, std::pow(10.0, db / 10.0));
                          const double t = throughput(cfg, s.mob, s.fading).total_bps;
                          if (t < last) ok = false;
                          last = t;
                      }

                      // high-SNR limit vs the SIR-floor ceiling
                      auto high = with_snr(s.cfg, 1e12);
                      const double limit = throughput(high, s.mob, s.fading).total_bps;
                      double ceiling = 0.0;
                      for (std::size_t i = 1; i <= n; ++i)
                          ceiling += s.cfg.subcarrier_bw() *
                                     std::log2(1.0 + sir_floor(s.cfg, s.mob, s.fading, i).value());
                      const double gap = std::abs(limit - ceiling) / ceiling;
                      worst_floor_gap = std::max(worst_floor_gap, gap);
                      if (gap > 1e-3) ok = false;
                  }
                  detail = "worst floor gap " + fmt(worst_floor_gap);
                  return ok;
              });

    criterion(6, "degradation ratios: DVB-CS2 > 802.11a > 1, printed values flagged", 1.0,
              [](std::string& detail) {
                  const auto rep = table1_report(50.0);
                  const auto& dvb = rep.rows[0];
                  const auto& wifi = rep.rows[1];
                  detail = "computed " + fmt(dvb.ratio_computed) + "x vs printed 14.26x; " +
                           fmt(wifi.ratio_computed) + "x vs printed 22.5x";
                  return dvb.ratio_computed > wifi.ratio_computed && wifi.ratio_computed > 1.0 &&
                         dvb.ratio_printed == 14.26 && wifi.ratio_printed == 22.5 &&
                         dvb.discrepancy && wifi.discrepancy;
              });

    criterion(7, "link requirements (48 kbps passes every preset, 100 Mbps fails all)", 0.0,
              [](std::string& detail) {
                  bool control_all = true;
                  bool dispatch_none = true;
                  std::string shortfall;
                  for (PresetId id : {PresetId::FIG2_N16, PresetId::FIG2_N64, PresetId::FIG2_N256,
                                      PresetId::FIG2_N1024}) {
                      const Preset p = preset(id);
                      const auto c = requirement_check(control_link_requirement(), p, 1e5);
                      if (!c.pass) {
                          control_all = false;
                          shortfall += " " + p.name + "=" + fmt(c.total_bps) + "bps";
                      }
                      if (requirement_check(dispatch_link_requirement(), p, 1e5).pass)
                          dispatch_none = false;
                  }
                  if (!control_all)
                      detail = "control link unmet at 1200 km/h:" + shortfall +
                               " (interference floor caps throughput below 48 kbps)";
                  else
                      detail = "control link met everywhere";
                  detail += dispatch_none ? "; 100 Mbps fails all (1 MHz ceiling)"
                                          : "; 100 Mbps unexpectedly passed";
                  return control_all && dispatch_none;
              });

    criterion(8, "feasibility engine (tube queries + 1000-query monotonicity)", 0.0,
              [](std::string& detail) {
                  auto names = [](const FeasibilityReport& r) {
                      std::set<std::string> s;
                      for (const auto& q : r.qualifying) s.insert(q.record.name);
                      return s;
                  };
                  const auto low = evaluate({48e3, 1000.0 / 3.0, true});
                  bool ok = names(low) == std::set<std::string>{"FSO", "LCX"};
                  bool lcx_note = false;
                  for (const auto& n : low.notes)
                      if (n.find("LCX") != std::string::npos) lcx_note = true;
                  ok = ok && lcx_note;

                  const auto high = evaluate({100e6, 1000.0 / 3.0, true});
                  bool lcx_excluded_on_rate = false;
                  for (const auto& e : high.excluded)
                      if (e.record.name == "LCX" && e.reason == ExclusionReason::THROUGHPUT)
                          lcx_excluded_on_rate = true;
                  ok = ok && lcx_excluded_on_rate && names(high).count("FSO") == 1;

                  std::mt19937_64 rng(8);
                  std::uniform_real_distribution<double> log_rate(3.0, 10.5);
                  std::uniform_real_distribution<double> speed(0.0, 500.0);
                  for (int rep = 0; rep < 1000 && ok; ++rep) {
                      FeasibilityQuery base{std::pow(10.0, log_rate(rng)), speed(rng), false};
                      FeasibilityQuery tight = base;
                      switch (rng() % 3) {
                          case 0: tight.min_rate_bps *= 2.0; break;
                          case 1: tight.speed_mps += speed(rng); break;
                          default: tight.in_tube = true; break;
                      }
                      const auto a = names(evaluate(base));
                      const auto b = names(evaluate(tight));
                      if (!std::includes(a.begin(), a.end(), b.begin(), b.end())) ok = false;
                  }
                  detail = "48 kbps tube set {FSO, LCX}: " + std::string(ok ? "yes" : "no");
                  return ok;
              });

    criterion(9, "determinism (same seed, any thread count, byte-identical CLI)", 0.0,
              [](std::string& detail) {
                  auto s = fig2_style(16);
                  TrialOptions one;
                  one.threads = 1;
                  TrialOptions many;
                  many.threads = 8;
                  const auto a =
                      run_trials(s.cfg, s.mob, s.fading, ChannelMode::TAYLOR, 500, SimSeed{9}, one);
                  const auto b = run_trials(s.cfg, s.mob, s.fading, ChannelMode::TAYLOR, 500,
                                            SimSeed{9}, many);
                  bool ok = a.ici_power_hat == b.ici_power_hat &&
                            a.desired_power_hat == b.desired_power_hat &&
                            a.ici_power_stderr == b.ici_power_stderr;

                  const char* argv[] = {"hyperlink", "simulate", "--preset", "fig2-n16",
                                        "--trials", "300",      "--seed",   "42",
                                        "--mode",   "jakes",    "--threads", "3"};
                  std::ostringstream out1, out2, err;
                  cli::run_cli(12, argv, out1, err);
                  cli::run_cli(12, argv, out2, err);
                  ok = ok && out1.str() == out2.str() && !out1.str().empty();
                  detail = ok ? "bit-identical" : "mismatch";
                  return ok;
              });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criterion(s) failed\n", g_failures);
    return 1;
}
