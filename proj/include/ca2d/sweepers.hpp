#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ca2d/grid.hpp"
#include "ca2d/rule.hpp"

namespace ca2d {

// Gathering sweep towards a destination cell. One iteration runs four phases,
// each splitting the grid along an axis through the destination:
//
//   1. horizontal axis (row)         rows above move down, rows below move up
//   2. main diagonal    (i - j)      the two sides move diagonally onto it
//   3. vertical axis   (column)      left side moves right, right side left
//   4. anti-diagonal    (i + j)      the two sides move diagonally onto it
//
// xor mode applies each phase as one synchronous hybrid XOR step with a rule
// per half-plane (cells on an axis belong to the upper/left half-plane).
// guarded mode moves each 1 one cell toward the axis when the target is empty
// and not claimed by another 1; ones never cross or leave an axis, so the
// population is conserved.
enum class SweepMode { xor_rules, guarded };

// Rule pairing for the main-diagonal phase in xor mode. `toward_axis` moves
// both half-planes onto the diagonal; `literal` uses rule 16 above it and 256
// below it, which moves them away.
enum class DiagonalPairing { toward_axis, literal };

struct SweepConfig {
    int dest_row = 0;
    int dest_col = 0;
    int angle = 45;
    std::uint64_t iterations = 0;
    SweepMode mode = SweepMode::guarded;
    DiagonalPairing pairing = DiagonalPairing::toward_axis;
    // Border cells holding 1 skip every phase.
    bool freeze_border = false;

    // Rotations per iteration: 360 / (2 * angle).
    int rotations() const noexcept { return 360 / (2 * angle); }
};

// Throws Errc::invalid_argument for an unsupported angle or a destination
// outside the grid.
void validate(const SweepConfig& cfg, int m, int n);

struct SweepSample {
    std::uint64_t population = 0;
    std::uint64_t distance = 0;  // sum of Chebyshev distances to the destination
    std::uint64_t radius = 0;    // largest Chebyshev distance, 0 when empty

    friend bool operator==(const SweepSample&, const SweepSample&) = default;
};

struct SweepMetrics {
    std::vector<SweepSample> samples;  // samples[0] is the input, then one per iteration
};

SweepSample metrics(const Grid& g, const SweepConfig& cfg);

// Rules applied to the (upper/left, lower/right) half-planes of each phase in
// xor mode.
std::array<std::array<RuleCode, 2>, 4> phase_rules(DiagonalPairing pairing) noexcept;

// Hybrid assignment used by xor mode for phase 0..3.
HybridSpec phase_spec(int phase, const SweepConfig& cfg, int m, int n);

Grid sweep_phase(const Grid& g, int phase, const SweepConfig& cfg);
Grid sweep_iteration(const Grid& g, const SweepConfig& cfg);

struct SweepResult {
    Grid grid;
    SweepMetrics metrics;
};

using SweepObserver = std::function<void(std::uint64_t iteration, const Grid& grid, const SweepSample& sample)>;

// cfg.iterations rounds of sweep_iteration. The observer, when given, sees the
// input as iteration 0 and every later state.
SweepResult sweep(const Grid& g, const SweepConfig& cfg, const SweepObserver& observer = {});

struct FixedPointResult {
    Grid grid;
    std::uint64_t iterations = 0;  // iterations that changed the grid
    bool reached = false;
};

// Iterates until an iteration leaves the grid unchanged or max_iterations run.
FixedPointResult sweep_to_fixed_point(const Grid& g, const SweepConfig& cfg, std::uint64_t max_iterations);

}  // namespace ca2d
