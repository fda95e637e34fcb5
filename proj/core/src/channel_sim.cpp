#include "hyperlink/channel_sim.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace hyperlink {

namespace {

constexpr std::size_t kMaxJakesSamples = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Proper complex Gaussian with E|z|^2 = variance.
cplx complex_gaussian(std::mt19937_64& rng, double variance) {
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

/// Table of exp(j*pi*q/M) for q in [0, 2M); subcarrier phases on the
/// midpoint grid are pi*(k-1)*(2m+1)/M, all multiples of pi/M.
std::vector<cplx> phase_table(std::size_t m_samples) {
    std::vector<cplx> tab(2 * m_samples);
    for (std::size_t q = 0; q < tab.size(); ++q) {
        const double ph = std::numbers::pi * static_cast<double>(q) / static_cast<double>(m_samples);
        tab[q] = {std::cos(ph), std::sin(ph)};
    }
    return tab;
}

/// Shared correlator core: `gain_at(k, m)` yields a_{k+1}(t_m).
template <typename GainFn>
std::vector<cplx> correlate_core(const SymbolFrame& frame, const OfdmConfig& cfg,
                                 int oversample, std::optional<std::uint64_t> noise_seed,
                                 GainFn&& gain_at) {
    cfg.validate();
    if (oversample < 4) throw std::invalid_argument("oversample must be >= 4");
    const std::size_t n = cfg.n_subcarriers;
    if (frame.symbols.size() != n)
        throw std::invalid_argument("frame size must equal n_subcarriers");
    const std::size_t m_samples = static_cast<std::size_t>(oversample) * n;
    const auto tab = phase_table(m_samples);
    const double amp = std::sqrt(cfg.tx_power);

    // u_m = sum_k a_k(t_m) * s_k * exp(j*2*pi*f_k*t_m); the 1/sqrt(NT)
    // factors of signal and correlator combine with dt into 1/M.
    std::vector<cplx> u(m_samples, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
        const cplx sk = amp * frame.symbols[k];
        const std::size_t step = (2 * k) % (2 * m_samples);
        std::size_t q = k % (2 * m_samples);  // (k)*(2*0+1)
        for (std::size_t m = 0; m < m_samples; ++m) {
            u[m] += gain_at(k, m) * sk * tab[q];
            q += step;
            if (q >= 2 * m_samples) q -= 2 * m_samples;
        }
    }

    std::vector<cplx> out(n);
    const double inv_m = 1.0 / static_cast<double>(m_samples);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc{0.0, 0.0};
        const std::size_t step = (2 * i) % (2 * m_samples);
        std::size_t q = i % (2 * m_samples);
        for (std::size_t m = 0; m < m_samples; ++m) {
            acc += u[m] * std::conj(tab[q]);
            q += step;
            if (q >= 2 * m_samples) q -= 2 * m_samples;
        }
        out[i] = acc * inv_m;
    }

    if (noise_seed) {
        std::mt19937_64 rng(*noise_seed);
        for (auto& d : out) d += complex_gaussian(rng, cfg.noise_density);
    }
    return out;
}

/// Factorizes the unit-variance Jakes covariance J0(2*pi*F_d*(t_a - t_b))
/// once; samples are L*z scaled by sqrt(beta_k).
class JakesSampler {
  public:
    JakesSampler(const std::vector<double>& times, double doppler_bw)
        : n_times_(times.size()), constant_(doppler_bw == 0.0) {
        if (constant_) return;
        Eigen::MatrixXd cov(n_times_, n_times_);
        for (std::size_t a = 0; a < n_times_; ++a)
            for (std::size_t b = 0; b < n_times_; ++b)
                cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    std::cyl_bessel_j(0.0, 2.0 * std::numbers::pi * doppler_bw *
                                               std::abs(times[a] - times[b]));
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        if (llt.info() != Eigen::Success) {
            cov.diagonal().array() += 1e-12;  // jitter against numerical non-PSD
            llt.compute(cov);
            if (llt.info() != Eigen::Success)
                throw std::runtime_error("Jakes covariance factorization failed");
        }
        chol_ = llt.matrixL();
    }

    std::vector<cplx> sample(double beta, std::mt19937_64& rng) const {
        if (constant_) {
            const cplx g = complex_gaussian(rng, beta);
            return std::vector<cplx>(n_times_, g);
        }
        std::normal_distribution<double> n01(0.0, 1.0);
        Eigen::VectorXd re(n_times_), im(n_times_);
        for (std::size_t t = 0; t < n_times_; ++t) {
            re(static_cast<Eigen::Index>(t)) = n01(rng);
            im(static_cast<Eigen::Index>(t)) = n01(rng);
        }
        const Eigen::VectorXd gr = chol_ * re;
        const Eigen::VectorXd gi = chol_ * im;
        const double scale = std::sqrt(beta / 2.0);
        std::vector<cplx> g(n_times_);
        for (std::size_t t = 0; t < n_times_; ++t)
            g[t] = scale * cplx{gr(static_cast<Eigen::Index>(t)),
                                gi(static_cast<Eigen::Index>(t))};
        return g;
    }

  private:
    std::size_t n_times_;
    bool constant_;
    Eigen::MatrixXd chol_;
};

struct ChunkAccumulator {
    std::vector<double> sum_desired, sumsq_desired, sum_ici, sumsq_ici;
    explicit ChunkAccumulator(std::size_t n)
        : sum_desired(n, 0.0), sumsq_desired(n, 0.0), sum_ici(n, 0.0), sumsq_ici(n, 0.0) {}
};

}  // namespace

std::uint64_t derive_seed(SimSeed seed, std::uint64_t trial, std::uint64_t stream) {
    return splitmix64(splitmix64(seed.master_seed + trial * 0x9E3779B97F4A7C15ULL) + stream);
}

std::vector<double> midpoint_grid(const OfdmConfig& cfg, int oversample) {
    cfg.validate();
    if (oversample < 4) throw std::invalid_argument("oversample must be >= 4");
    const std::size_t m_samples = static_cast<std::size_t>(oversample) * cfg.n_subcarriers;
    const double dt = cfg.ofdm_symbol_duration() / static_cast<double>(m_samples);
    std::vector<double> t(m_samples);
    for (std::size_t m = 0; m < m_samples; ++m)
        t[m] = (static_cast<double>(m) + 0.5) * dt;
    return t;
}

SymbolFrame draw_frame(Constellation c, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SymbolFrame frame;
    frame.constellation = c;
    frame.symbols.resize(n);
    switch (c) {
        case Constellation::QPSK: {
            std::uniform_int_distribution<int> bit(0, 1);
            const double a = std::numbers::sqrt2 / 2.0;
            for (auto& s : frame.symbols)
                s = {bit(rng) ? a : -a, bit(rng) ? a : -a};
            break;
        }
        case Constellation::QAM16: {
            std::uniform_int_distribution<int> lvl(0, 3);
            const double a = 1.0 / std::sqrt(10.0);  // E|d|^2 = 1 over the 16 points
            for (auto& s : frame.symbols)
                s = {a * (2 * lvl(rng) - 3), a * (2 * lvl(rng) - 3)};
            break;
        }
        case Constellation::GAUSSIAN:
            for (auto& s : frame.symbols) s = complex_gaussian(rng, 1.0);
            break;
    }
    return frame;
}

TaylorCoefficients sample_taylor_channel(const FadingProfile& fading,
                                         const MobilityProfile& mob,
                                         const OfdmConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    std::mt19937_64 rng(seed);
    TaylorCoefficients ch;
    ch.t0 = cfg.ofdm_symbol_duration() / 2.0;
    const double fd = mob.doppler_bw();
    const double deriv_var_unit = 2.0 * std::numbers::pi * std::numbers::pi * fd * fd;
    ch.gain_at_t0.resize(cfg.n_subcarriers);
    ch.derivative_at_t0.resize(cfg.n_subcarriers);
    for (std::size_t k = 0; k < cfg.n_subcarriers; ++k) {
        ch.gain_at_t0[k] = complex_gaussian(rng, fading.beta[k]);
        ch.derivative_at_t0[k] =
            fd == 0.0 ? cplx{0.0, 0.0} : complex_gaussian(rng, deriv_var_unit * fading.beta[k]);
    }
    return ch;
}

JakesPath sample_jakes_path(const FadingProfile& fading, const MobilityProfile& mob,
                            const std::vector<double>& times, std::uint64_t seed) {
    if (times.empty() || times.size() > kMaxJakesSamples)
        throw std::invalid_argument("sample_jakes_path: need 1..4096 sample times");
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("sample_jakes_path: times must be sorted");
    const JakesSampler sampler(times, mob.doppler_bw());
    std::mt19937_64 rng(seed);
    JakesPath path;
    path.times = times;
    path.gains.reserve(fading.beta.size());
    for (double beta : fading.beta) path.gains.push_back(sampler.sample(beta, rng));
    return path;
}

std::vector<cplx> synthesize_and_correlate(const SymbolFrame& frame,
                                           const TaylorCoefficients& channel,
                                           const OfdmConfig& cfg, int oversample,
                                           std::optional<std::uint64_t> noise_seed) {
    if (channel.gain_at_t0.size() != cfg.n_subcarriers ||
        channel.derivative_at_t0.size() != cfg.n_subcarriers)
        throw std::invalid_argument("Taylor channel size must equal n_subcarriers");
    const auto grid = midpoint_grid(cfg, oversample);
    std::vector<double> dt0(grid.size());
    for (std::size_t m = 0; m < grid.size(); ++m) dt0[m] = grid[m] - channel.t0;
    return correlate_core(frame, cfg, oversample, noise_seed,
                          [&](std::size_t k, std::size_t m) {
                              return channel.gain_at_t0[k] + channel.derivative_at_t0[k] * dt0[m];
                          });
}

std::vector<cplx> synthesize_and_correlate(const SymbolFrame& frame,
                                           const JakesPath& channel,
                                           const OfdmConfig& cfg, int oversample,
                                           std::optional<std::uint64_t> noise_seed) {
    if (channel.gains.size() != cfg.n_subcarriers)
        throw std::invalid_argument("Jakes path subcarrier count must equal n_subcarriers");
    const auto grid = midpoint_grid(cfg, oversample);
    if (channel.times.size() < grid.size())
        throw std::invalid_argument("Jakes path has fewer samples than the synthesis grid");
    const double tol = 1e-9 * cfg.ofdm_symbol_duration();
    for (std::size_t m = 0; m < grid.size(); ++m)
        if (std::abs(channel.times[m] - grid[m]) > tol)
            throw std::invalid_argument("Jakes path samples are not aligned to the synthesis grid");
    for (const auto& g : channel.gains)
        if (g.size() != channel.times.size())
            throw std::invalid_argument("Jakes path gain/time length mismatch");
    return correlate_core(frame, cfg, oversample, noise_seed,
                          [&](std::size_t k, std::size_t m) { return channel.gains[k][m]; });
}

TrialStats run_trials(const OfdmConfig& cfg, const MobilityProfile& mob,
                      const FadingProfile& fading, ChannelMode mode,
                      std::uint64_t trials, SimSeed seed, TrialOptions opts) {
    cfg.validate();
    fading.validate(cfg.n_subcarriers);
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    const std::size_t n = cfg.n_subcarriers;
    const double t0 = cfg.ofdm_symbol_duration() / 2.0;
    const double amp = std::sqrt(cfg.tx_power);

    auto grid = midpoint_grid(cfg, opts.oversample);
    std::vector<double> jakes_times;
    std::unique_ptr<JakesSampler> sampler;
    if (mode == ChannelMode::JAKES) {
        jakes_times = grid;
        jakes_times.push_back(t0);  // extra sample for the a_i(t0) decomposition
        if (jakes_times.size() > kMaxJakesSamples)
            throw std::invalid_argument("run_trials: Jakes grid exceeds 4096 samples");
        sampler = std::make_unique<JakesSampler>(jakes_times, mob.doppler_bw());
    }

    // Fixed-size chunks merged in index order keep the reduction identical
    // for any thread count.
    constexpr std::uint64_t kChunk = 64;
    const std::uint64_t n_chunks = (trials + kChunk - 1) / kChunk;
    std::vector<ChunkAccumulator> chunks(n_chunks, ChunkAccumulator(n));

    auto run_one = [&](std::uint64_t trial, ChunkAccumulator& acc) {
        const SymbolFrame frame =
            draw_frame(opts.constellation, n, derive_seed(seed, trial, 1));
        std::vector<cplx> d_hat;
        std::vector<cplx> gain_t0(n);
        if (mode == ChannelMode::TAYLOR) {
            const auto ch = sample_taylor_channel(fading, mob, cfg, derive_seed(seed, trial, 2));
            d_hat = synthesize_and_correlate(frame, ch, cfg, opts.oversample, std::nullopt);
            gain_t0 = ch.gain_at_t0;
        } else {
            std::mt19937_64 rng(derive_seed(seed, trial, 2));
            JakesPath path;
            path.times = jakes_times;
            path.gains.reserve(n);
            for (std::size_t k = 0; k < n; ++k)
                path.gains.push_back(sampler->sample(fading.beta[k], rng));
            d_hat = synthesize_and_correlate(frame, path, cfg, opts.oversample, std::nullopt);
            for (std::size_t k = 0; k < n; ++k) gain_t0[k] = path.gains[k].back();
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx desired = amp * gain_t0[i] * frame.symbols[i];
            const cplx ici = d_hat[i] - desired;
            const double pd = std::norm(desired);
            const double pi_ = std::norm(ici);
            acc.sum_desired[i] += pd;
            acc.sumsq_desired[i] += pd * pd;
            acc.sum_ici[i] += pi_;
            acc.sumsq_ici[i] += pi_ * pi_;
        }
    };

    unsigned n_threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(n_chunks)));
    if (n_threads == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            for (std::uint64_t t = c * kChunk; t < std::min(trials, (c + 1) * kChunk); ++t)
                run_one(t, chunks[c]);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned w = 0; w < n_threads; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t c; (c = next.fetch_add(1)) < n_chunks;)
                    for (std::uint64_t t = c * kChunk; t < std::min(trials, (c + 1) * kChunk); ++t)
                        run_one(t, chunks[c]);
            });
        for (auto& th : pool) th.join();
    }

    TrialStats stats;
    stats.trials = trials;
    stats.noise_power = cfg.noise_density;
    stats.desired_power_hat.assign(n, 0.0);
    stats.desired_power_stderr.assign(n, 0.0);
    stats.ici_power_hat.assign(n, 0.0);
    stats.ici_power_stderr.assign(n, 0.0);
    ChunkAccumulator total(n);
    for (const auto& c : chunks) {
        for (std::size_t i = 0; i < n; ++i) {
            total.sum_desired[i] += c.sum_desired[i];
            total.sumsq_desired[i] += c.sumsq_desired[i];
            total.sum_ici[i] += c.sum_ici[i];
            total.sumsq_ici[i] += c.sumsq_ici[i];
        }
    }
    const double nt = static_cast<double>(trials);
    for (std::size_t i = 0; i < n; ++i) {
        const double md = total.sum_desired[i] / nt;
        const double mi = total.sum_ici[i] / nt;
        stats.desired_power_hat[i] = md;
        stats.ici_power_hat[i] = mi;
        if (trials > 1) {
            const double vd = std::max(0.0, (total.sumsq_desired[i] - nt * md * md) / (nt - 1.0));
            const double vi = std::max(0.0, (total.sumsq_ici[i] - nt * mi * mi) / (nt - 1.0));
            stats.desired_power_stderr[i] = std::sqrt(vd / nt);
            stats.ici_power_stderr[i] = std::sqrt(vi / nt);
        }
    }
    return stats;
}

TaylorValidity taylor_validity(const MobilityProfile& mob) {
    const double fd = mob.doppler_bw();
    if (fd < 10e3) return TaylorValidity::VALID;
    if (fd < 15e3) return TaylorValidity::MARGINAL;
    return TaylorValidity::INVALID;
}

}  // namespace hyperlink
