#include "bridgemin/online_argmin.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "bridgemin/format.hpp"

namespace bridgemin {

namespace {

void check_run_args(int d, int N) {
    if (d < 3) throw std::invalid_argument("d must be >= 3");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
}

bool window_ok(std::size_t k, std::size_t n) {
    // Allowed argmin window {2^{d-1} - 2^{d-3}, ..., 2^{d-1} + 2^{d-3}}.
    return k >= n / 2 - n / 8 && k <= n / 2 + n / 8;
}

std::vector<double> even_subset(const std::vector<double>& values) {
    std::vector<double> half((values.size() - 1) / 2 + 1);
    for (std::size_t k = 0; k < half.size(); ++k) half[k] = values[2 * k];
    return half;
}

void finish(RunResult& result) {
    result.estimate =
        accumulate_estimate(result.t_stars, static_cast<int>(result.t_stars.size()) - 1);
}

RunResult run_coupled(int d, int N, LazyBridgePath& path, const RunOptions& opt) {
    if (d + N > path.config().max_level) {
        throw std::out_of_range("run_online_argmin: d + N exceeds the path's maximum level");
    }
    const std::size_t n = std::size_t{1} << d;
    const std::size_t stored_before = path.stored_count();

    RunResult result;
    result.depth = d;
    result.levels = N;
    if (opt.interval_certificate) result.cert2 = Verdict::kGreen;

    ZoomState state;
    state.depth = d;
    state.values.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        state.values[k] = path.value_at(DyadicTime::make(k, d));
    }
    state.argmin_index = grid_argmin(state.values);
    state.t_star = std::ldexp(static_cast<double>(state.argmin_index), -d);
    result.t_stars.push_back(state.t_star);
    result.frames.push_back(
        {0, state.origin, state.scale, state.anchor_value, state.argmin_index, state.t_star});

    DyadicTime anchor_time = DyadicTime::make(state.argmin_index, d);

    for (int lev = 1; lev <= N; ++lev) {
        if (lev == 1) {
            state.origin = sub_mod1(anchor_time, DyadicTime::make(1, 2));
        } else {
            state.origin = add_mod1(
                state.origin, DyadicTime::make(state.argmin_index - n / 4, d + lev - 1));
        }
        state.n = lev;
        state.scale = zoom_scale(lev);
        state.anchor_value = path.value_at(anchor_time);
        for (std::size_t k = 0; k <= n; ++k) {
            const DyadicTime t = add_mod1(state.origin, DyadicTime::make(k, d + lev));
            state.values[k] = state.scale * (path.value_at(t) - state.anchor_value);
        }
        if (opt.record_level_arrays) result.level_arrays.push_back(even_subset(state.values));

        state.argmin_index = grid_argmin(state.values);
        if (!window_ok(state.argmin_index, n)) {
            result.cert1 = Verdict::kRedX;
            result.abort_level = lev;
            break;
        }
        state.t_star = std::ldexp(static_cast<double>(state.argmin_index), -d);
        result.t_stars.push_back(state.t_star);
        result.frames.push_back(
            {lev, state.origin, state.scale, state.anchor_value, state.argmin_index, state.t_star});
        anchor_time = add_mod1(state.origin, DyadicTime::make(state.argmin_index, d + lev));

        if (opt.interval_certificate) {
            const KeyedNoise& noise = path.noise();
            auto certificate = run_certificate2(
                state.values, state.argmin_index, d, [&](std::uint64_t k) {
                    return noise.uniform(noise_tag::kIntervalUniform,
                                         static_cast<std::uint64_t>(lev), k);
                });
            result.interval_samples.push_back(std::move(certificate.samples));
            if (certificate.verdict == Verdict::kRedX) {
                result.cert2 = Verdict::kRedX;
                result.cert2_abort_level = lev;
                break;
            }
        }
    }

    result.gaussians_consumed = path.stored_count() - stored_before;
    finish(result);
    return result;
}

}  // namespace

RunResult run_online_argmin_standalone(
    int d, int N, const GaussianSource& noise,
    const std::function<double(int, std::uint64_t)>& interval_uniforms,
    const RunOptions& opt) {
    check_run_args(d, N);
    const std::size_t n = std::size_t{1} << d;
    const double sqrt2 = std::sqrt(2.0);

    RunResult result;
    result.depth = d;
    result.levels = N;
    if (opt.interval_certificate) result.cert2 = Verdict::kGreen;

    std::uint64_t drawn = 0;
    GaussianSource counted = [&] {
        ++drawn;
        return noise();
    };

    BridgeGrid grid = init_bridge_grid(d, counted, opt.convention);
    std::size_t K = grid_argmin(grid.values);
    double t_star = grid.times[K];
    result.t_stars.push_back(t_star);

    DyadicTime origin;  // time 0
    double anchor_value = grid.values[K];
    result.frames.push_back({0, origin, 1.0, 0.0, K, t_star});

    // Recentre so the current estimate sits at time 1/2, restrict to the
    // middle half, stretch by sqrt(2).
    std::vector<double> window(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        const std::size_t src = (k + K + n - n / 4) % n;
        window[k] = sqrt2 * (grid.values[src] - grid.values[K]);
    }
    origin = sub_mod1(DyadicTime::make(K, d), DyadicTime::make(1, 2));

    std::vector<double> values;
    for (int lev = 1; lev <= N; ++lev) {
        if (opt.record_level_arrays) result.level_arrays.push_back(window);
        values = bbfi(n / 2, window, counted, opt.convention);
        K = grid_argmin(values);
        if (!window_ok(K, n)) {
            result.cert1 = Verdict::kRedX;
            result.abort_level = lev;
            break;
        }
        t_star = std::ldexp(static_cast<double>(K), -d);
        result.t_stars.push_back(t_star);
        anchor_value += values[K] / zoom_scale(lev);
        result.frames.push_back({lev, origin, zoom_scale(lev), anchor_value, K, t_star});

        if (opt.interval_certificate) {
            auto certificate = run_certificate2(values, K, d, [&](std::uint64_t k) {
                return interval_uniforms(lev, k);
            });
            result.interval_samples.push_back(std::move(certificate.samples));
            if (certificate.verdict == Verdict::kRedX) {
                result.cert2 = Verdict::kRedX;
                result.cert2_abort_level = lev;
                break;
            }
        }

        if (lev < N) {
            for (std::size_t k = 0; k <= n / 2; ++k) {
                window[k] = sqrt2 * (values[k + K - n / 4] - values[K]);
            }
            origin = add_mod1(origin, DyadicTime::make(K - n / 4, d + lev));
        }
    }

    result.gaussians_consumed = drawn;
    finish(result);
    return result;
}

RunResult run_online_argmin(int d, int N, LazyBridgePath& path, const RunOptions& opt) {
    check_run_args(d, N);
    if (opt.coupled) return run_coupled(d, N, path, opt);
    GaussianStream stream(path.noise().derive(noise_tag::kSequential, 1));
    const KeyedNoise& keyed = path.noise();
    return run_online_argmin_standalone(
        d, N, gaussian_source(stream),
        [&keyed](int lev, std::uint64_t k) {
            return keyed.uniform(noise_tag::kIntervalUniform, static_cast<std::uint64_t>(lev), k);
        },
        opt);
}

double accumulate_estimate(std::span<const double> t_stars, int upto) {
    if (upto < 0 || t_stars.size() < static_cast<std::size_t>(upto) + 1) {
        throw std::invalid_argument("accumulate_estimate: not enough starred times");
    }
    double u = t_stars[0];
    for (int i = 1; i <= upto; ++i) {
        u += (t_stars[i] - 0.5) * std::ldexp(1.0, -i);
    }
    u -= std::floor(u);
    return u;
}

DyadicTime zoom_to_global(const ZoomFrame& frame, int depth, std::size_t k) {
    if (k > (std::size_t{1} << depth)) {
        throw std::out_of_range("zoom_to_global: grid index out of range");
    }
    return add_mod1(frame.origin, DyadicTime::make(k, depth + frame.n));
}

DyadicTime zoom_to_global(const ZoomState& state, std::size_t k) {
    if (k > (std::size_t{1} << state.depth)) {
        throw std::out_of_range("zoom_to_global: grid index out of range");
    }
    return add_mod1(state.origin, DyadicTime::make(k, state.depth + state.n));
}

std::size_t emit_figure_data(const RunResult& result, std::ostream& out) {
    out << "level,k,value\n";
    std::size_t rows = 0;
    for (std::size_t i = 0; i < result.level_arrays.size(); ++i) {
        const auto& window = result.level_arrays[i];
        for (std::size_t k = 0; k < window.size(); ++k) {
            out << (i + 1) << ',' << k << ',' << format_double(window[k]) << '\n';
            ++rows;
        }
    }
    bool any_samples = false;
    for (const auto& level : result.interval_samples) {
        if (!level.empty()) any_samples = true;
    }
    if (any_samples) {
        out << "\nlevel,interval_k,m\n";
        for (std::size_t i = 0; i < result.interval_samples.size(); ++i) {
            for (const auto& sample : result.interval_samples[i]) {
                out << (i + 1) << ',' << sample.interval << ','
                    << format_double(sample.min_value) << '\n';
                ++rows;
            }
        }
    }
    return rows;
}

}  // namespace bridgemin
