#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bridgemin/bridge_path.hpp"
#include "bridgemin/certificate2.hpp"
#include "bridgemin/dyadic.hpp"

namespace bridgemin {

// Spatial scale of zoom level n relative to the underlying bridge: each
// level halves the window and stretches space by sqrt(2).
inline double zoom_scale(int n) { return std::exp2(0.5 * n); }

// Affine frame of one zoom level: grid index k sits at global circle time
// origin + k * 2^{-(depth+n)}, and (in coupled mode) grid values equal
// scale * (bridge value - anchor_value).
struct ZoomFrame {
    int n = 0;
    DyadicTime origin;
    double scale = 1.0;
    double anchor_value = 0.0;
    std::size_t argmin_index = 0;
    double t_star = 0.0;
};

// Full working state of the zoom loop at one level.
struct ZoomState {
    int n = 0;
    int depth = 0;                // d
    std::vector<double> values;   // 2^d + 1 grid values in zoom coordinates
    std::size_t argmin_index = 0; // K(n), smallest-index tie-break
    double t_star = 0.0;          // K(n) / 2^d
    double scale = 1.0;           // 2^{n/2}
    DyadicTime origin;            // global time of zoom coordinate 0
    double anchor_value = 0.0;    // subtracted baseline (bridge value at the anchor)
};

// Global circle time of zoom grid point k. At level 0 this is k/2^d.
DyadicTime zoom_to_global(const ZoomFrame& frame, int depth, std::size_t k);
DyadicTime zoom_to_global(const ZoomState& state, std::size_t k);

// Transcript of one run of the online search.
struct RunResult {
    int depth = 0;   // d
    int levels = 0;  // requested N
    std::vector<double> t_stars;  // t*_0 .. t*_N, truncated at an abort
    double estimate = 0.0;        // U_N mod 1 over the recorded t*'s
    Verdict cert1 = Verdict::kGreen;
    std::optional<int> abort_level;          // present iff cert1 == kRedX
    std::optional<Verdict> cert2;            // nullopt when the add-on is disabled
    std::optional<int> cert2_abort_level;
    std::vector<std::vector<double>> level_arrays;  // pre-fill window per level, 2^{d-1}+1 points
    std::vector<std::vector<IntervalMinSample>> interval_samples;  // per level, certificate-2
    std::vector<ZoomFrame> frames;  // one per completed level, starting at level 0
    std::uint64_t gaussians_consumed = 0;
};

struct RunOptions {
    NoiseConvention convention = NoiseConvention::kVarianceConsistent;
    // Coupled mode reads every value from the keyed store, so a full-grid
    // oracle can evaluate the identical sample path. Standalone mode runs
    // the array algorithm with fresh sequential gaussians.
    bool coupled = true;
    bool interval_certificate = false;  // certificate-2 add-on per level
    bool record_level_arrays = true;
};

// The zoom/bisection search: depth-d grid, N halvings, certificate-1 window
// check at each level (abort red-X when the new argmin leaves the middle
// quarter), optional certificate-2 sweep. Requires d >= 3 so the window
// bounds 2^{d-3} are whole.
RunResult run_online_argmin(int d, int N, LazyBridgePath& path, const RunOptions& options = {});

// Standalone engine with injectable sources (tests drive this directly).
RunResult run_online_argmin_standalone(
    int d, int N, const GaussianSource& noise,
    const std::function<double(int, std::uint64_t)>& interval_uniforms,
    const RunOptions& options = {});

// U_N: U_0 = t*_0, U_n = U_{n-1} + (t*_n - 1/2) 2^{-n}, reduced mod 1.
double accumulate_estimate(std::span<const double> t_stars, int upto);

// CSV emission for replotting: header "level,k,value", one row per window
// grid point per level; when certificate-2 samples are present a second
// block "level,interval_k,m" follows. Returns the number of data rows.
std::size_t emit_figure_data(const RunResult& result, std::ostream& out);

}  // namespace bridgemin
