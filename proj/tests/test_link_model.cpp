#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperlink/link_model.hpp"
#include "hyperlink/scenarios.hpp"

using namespace hyperlink;

namespace {

// N subcarriers with N*T = nt seconds and Doppler bandwidth fd: picks a
// speed that yields fd exactly at a 1 GHz carrier.
struct Setup {
    OfdmConfig cfg;
    MobilityProfile mob;
    FadingProfile fading;
};

Setup make_setup(std::size_t n, double nt, double fd, double tx_power = 1.0,
                 double noise = 0.0) {
    Setup s;
    s.cfg = OfdmConfig{n, nt / static_cast<double>(n), 1e9, tx_power, noise};
    s.mob = MobilityProfile::from_speed(fd * kSpeedOfLight / 1e9, 1e9);
    s.fading = FadingProfile::flat(n);
    return s;
}

}  // namespace

TEST_CASE("doppler_frequency") {
    CHECK(doppler_frequency(0.0, 5e9) == 0.0);
    // 1200 km/h and 500 km/h at 5 GHz, frozen from an independent
    // high-precision evaluation of v*f_c/c
    CHECK(doppler_frequency(1000.0 / 3.0, 5e9) ==
          doctest::Approx(5559.401586635867).epsilon(1e-12));
    CHECK(doppler_frequency(500.0 / 3.6, 5e9) ==
          doctest::Approx(2316.417327764945).epsilon(1e-12));
    // c ~ 3e8 reproduces the rounded 5.5 kHz figure, exact c does not
    CHECK(doppler_frequency(1000.0 / 3.0, 5e9) < 5.6e3);
    CHECK_THROWS_AS(doppler_frequency(-1.0, 5e9), std::invalid_argument);
    CHECK_THROWS_AS(doppler_frequency(std::nan(""), 5e9), std::invalid_argument);
    CHECK_THROWS_AS(doppler_frequency(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("desired_power") {
    auto s = make_setup(4, 4e-6, 0.0);
    CHECK(desired_power(s.cfg, s.fading, 1) == 1.0);
    s.cfg.tx_power = 2.0;
    s.fading.beta = {0.5, 1.0, 2.0, 4.0};
    CHECK(desired_power(s.cfg, s.fading, 1) == 1.0);
    CHECK(desired_power(s.cfg, s.fading, 4) == 8.0);
    s.cfg.tx_power = 3.0;
    for (std::size_t i = 1; i <= 4; ++i)
        CHECK(desired_power(s.cfg, s.fading, i) == 3.0 * s.fading.beta[i - 1]);
    CHECK_THROWS_AS(desired_power(s.cfg, s.fading, 0), std::invalid_argument);
    CHECK_THROWS_AS(desired_power(s.cfg, s.fading, 5), std::invalid_argument);
}

TEST_CASE("ici_power basics") {
    auto single = make_setup(1, 1e-6, 5e3);
    CHECK(ici_power(single.cfg, single.mob, single.fading, 1) == 0.0);

    auto still = make_setup(8, 8e-6, 0.0);
    for (std::size_t i = 1; i <= 8; ++i)
        CHECK(ici_power(still.cfg, still.mob, still.fading, i) == 0.0);

    // N = 3, N*T*F_d = 0.1, flat beta: (0.1)^2/2 * (1 + 1) = 0.01
    auto s = make_setup(3, 1.0, 0.1);
    CHECK(ici_power(s.cfg, s.mob, s.fading, 2) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("ici_power closed-form identity") {
    // (N*T*F_d)^2/2 route equals the (N*T*v)^2/(2*lambda^2) route
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + rng() % 30;
        OfdmConfig cfg{n, u(rng) * 1e-6, u(rng) * 1e9, u(rng), 0.0};
        MobilityProfile mob = MobilityProfile::from_speed(u(rng) * 100.0, cfg.carrier_freq);
        FadingProfile fading;
        for (std::size_t k = 0; k < n; ++k) fading.beta.push_back(u(rng));
        for (std::size_t i = 1; i <= n; ++i) {
            double sum = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                if (k == i) continue;
                const double d = static_cast<double>(k) - static_cast<double>(i);
                sum += fading.beta[k - 1] / (d * d);
            }
            const double ntv = cfg.ofdm_symbol_duration() * mob.speed;
            const double alt = cfg.tx_power * ntv * ntv / (2.0 * mob.wavelength * mob.wavelength) * sum;
            CHECK(ici_power(cfg, mob, fading, i) == doctest::Approx(alt).epsilon(1e-12));
        }
    }
}

TEST_CASE("ici_power below pi^2/3 bound") {
    auto s = make_setup(64, 64e-6, 5559.4);
    const double nt_fd = s.cfg.ofdm_symbol_duration() * s.mob.doppler_bw();
    const double bound = nt_fd * nt_fd / 2.0 * (M_PI * M_PI / 3.0) * 2.0;  // two-sided
    for (std::size_t i = 1; i <= 64; ++i)
        CHECK(ici_power(s.cfg, s.mob, s.fading, i) < bound);
}

TEST_CASE("sinr") {
    auto awgn = make_setup(4, 4e-6, 0.0, 2.0, 0.5);
    CHECK(sinr(awgn.cfg, awgn.mob, awgn.fading, 1).value() == doctest::Approx(4.0));

    auto s = make_setup(3, 1.0, 0.1, 1.0, 0.01);  // P_T/N_0 = 100
    CHECK(sinr(s.cfg, s.mob, s.fading, 2).value() == doctest::Approx(50.0).epsilon(1e-12));

    auto unbounded = make_setup(4, 4e-6, 0.0, 1.0, 0.0);
    CHECK_FALSE(sinr(unbounded.cfg, unbounded.mob, unbounded.fading, 1).has_value());
}

TEST_CASE("sinr strictly decreasing in speed") {
    for (double v1 = 10.0, v2 = 20.0; v2 <= 640.0; v1 *= 2, v2 *= 2) {
        auto a = make_setup(16, 16e-6, 0.0, 1.0, 1e-5);
        a.mob = MobilityProfile::from_speed(v1, a.cfg.carrier_freq);
        auto b = a;
        b.mob = MobilityProfile::from_speed(v2, a.cfg.carrier_freq);
        CHECK(sinr(b.cfg, b.mob, b.fading, 8).value() < sinr(a.cfg, a.mob, a.fading, 8).value());
    }
}

TEST_CASE("sir_floor") {
    // Fig. 2 config, mid subcarrier; frozen from an independent
    // arbitrary-precision evaluation of the exact finite sum
    Preset p = preset(PresetId::FIG2_N64);
    const double floor32 = sir_floor(p.cfg, p.mob, p.fading, 32).value();
    CHECK(floor32 == doctest::Approx(4.895159153893404).epsilon(1e-12));
    CHECK(10.0 * std::log10(floor32) == doctest::Approx(6.8976682).epsilon(1e-6));

    // doubling v divides the floor by 4
    auto fast = p;
    fast.mob = MobilityProfile::from_speed(2.0 * p.mob.speed, p.cfg.carrier_freq);
    CHECK(sir_floor(fast.cfg, fast.mob, fast.fading, 32).value() ==
          doctest::Approx(floor32 / 4.0).epsilon(1e-12));

    // edge subcarrier sees fewer interferers
    CHECK(sir_floor(p.cfg, p.mob, p.fading, 1).value() > floor32);

    auto still = p;
    still.mob = MobilityProfile::from_speed(0.0, p.cfg.carrier_freq);
    CHECK_FALSE(sir_floor(still.cfg, still.mob, still.fading, 1).has_value());
    auto single = make_setup(1, 1e-6, 5e3);
    CHECK_FALSE(sir_floor(single.cfg, single.mob, single.fading, 1).has_value());
}

TEST_CASE("sinr approaches sir_floor as noise vanishes") {
    Preset p = preset(PresetId::FIG2_N64);
    const double floor32 = sir_floor(p.cfg, p.mob, p.fading, 32).value();
    auto low_noise = p;
    low_noise.cfg.noise_density = p.cfg.tx_power * 1e-4 / floor32;
    const double s = sinr(low_noise.cfg, low_noise.mob, low_noise.fading, 32).value();
    CHECK(std::abs(s - floor32) / floor32 < 1e-3);
}

TEST_CASE("throughput") {
    // v = 0, 1 MHz total bandwidth, 50 dB: Shannon per subcarrier; frozen
    // independent value 1e6*log2(1+1e5)
    auto s = make_setup(64, 64e-6, 0.0, 1.0, 1e-5);
    CHECK(throughput(s.cfg, s.mob, s.fading).total_bps ==
          doctest::Approx(16609654.901315086).epsilon(1e-12));

    // N = 1: single carrier, no ICI
    auto one = make_setup(1, 1e-6, 5e3, 2.0, 0.5);
    const auto res1 = throughput(one.cfg, one.mob, one.fading);
    CHECK(res1.per_subcarrier.size() == 1);
    CHECK(res1.total_bps == doctest::Approx(1e6 * std::log2(1.0 + 4.0)).epsilon(1e-12));

    // Fig. 2 config at 50 dB: strictly below the static value, and matching
    // an independent long-double re-evaluation of the analytic chain
    Preset p = preset(PresetId::FIG2_N64);
    const auto res = throughput(p.cfg, p.mob, p.fading);
    CHECK(res.total_bps < 16609654.9013);
    CHECK(res.total_bps == doctest::Approx(2612580.732000089).epsilon(1e-9));

    long double brute = 0.0L;
    const long double nt_fd =
        static_cast<long double>(p.cfg.ofdm_symbol_duration()) * p.mob.doppler_bw();
    for (int i = 1; i <= 64; ++i) {
        long double sum = 0.0L;
        for (int k = 1; k <= 64; ++k)
            if (k != i) sum += 1.0L / ((long double)(k - i) * (k - i));
        const long double ici = nt_fd * nt_fd / 2.0L * sum;
        brute += 1e6L / 64.0L * std::log2(1.0L + 1.0L / (ici + 1e-5L));
    }
    CHECK(res.total_bps == doctest::Approx(static_cast<double>(brute)).epsilon(1e-9));

    // per-subcarrier invariants
    for (const auto& m : res.per_subcarrier) {
        CHECK(m.sinr ==
              doctest::Approx(m.desired_power / (m.ici_power + m.noise_power)).epsilon(1e-12));
        CHECK(m.ici_power >= 0.0);
    }
}

TEST_CASE("throughput invariant under joint power/noise scaling") {
    Preset p = preset(PresetId::FIG2_N64);
    const auto base = throughput(p.cfg, p.mob, p.fading);
    for (double c : {1e-3, 7.0, 1e4}) {
        auto scaled = p;
        scaled.cfg.tx_power *= c;
        scaled.cfg.noise_density *= c;
        const auto res = throughput(scaled.cfg, scaled.mob, scaled.fading);
        CHECK(res.total_bps == doctest::Approx(base.total_bps).epsilon(1e-12));
        for (std::size_t i = 0; i < res.per_subcarrier.size(); ++i)
            CHECK(res.per_subcarrier[i].sinr ==
                  doctest::Approx(base.per_subcarrier[i].sinr).epsilon(1e-12));
    }
}

TEST_CASE("throughput ordering in N and SNR") {
    // fixed 1/T = 1 MHz, 50 dB, 1200 km/h: non-increasing in N
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t n : {16u, 64u, 256u, 1024u}) {
        OfdmConfig cfg{n, 1e-6, 5e9, 1.0, 1e-5};
        MobilityProfile mob = MobilityProfile::from_speed(1000.0 / 3.0, 5e9);
        const double t = throughput(cfg, mob, FadingProfile::flat(n)).total_bps;
        CHECK(t < prev);
        prev = t;
    }
    // non-decreasing in SNR
    Preset p = preset(PresetId::FIG2_N256);
    double last = 0.0;
    for (double db = 0.0; db <= 50.0; db += 5.0) {
        auto cfg = with_snr(p.cfg, std::pow(10.0, db / 10.0));
        const double t = throughput(cfg, p.mob, p.fading).total_bps;
        CHECK(t >= last);
        last = t;
    }
}

TEST_CASE("degradation_ratio") {
    Preset p = preset(PresetId::FIG2_N64);
    CHECK(degradation_ratio(p.cfg, p.fading, 0.0, 1e5) == 1.0);
    double prev = 1.0;
    for (double v : {50.0, 150.0, 333.33, 500.0}) {
        const double r = degradation_ratio(p.cfg, p.fading, v, 1e5);
        CHECK(r >= prev);
        prev = r;
    }
    // DVB-CS2 at 50 dB: finite, > 1, frozen computed value (the printed
    // table figures are not reproducible from the model)
    Preset dvb = preset(PresetId::DVB_CS2);
    const double r = degradation_ratio(dvb.cfg, dvb.fading, 1000.0 / 3.0, 1e5);
    CHECK(r > 1.0);
    CHECK(std::isfinite(r));
    CHECK(r == doctest::Approx(140.0849405).epsilon(1e-6));
}
