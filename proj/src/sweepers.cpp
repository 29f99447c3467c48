#include "ca2d/sweepers.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

// Signed position of (r, c) relative to the phase axis. Cells with a value
// <= 0 form the upper/left half-plane.
int axis_coordinate(int phase, int r, int c, const SweepConfig& cfg) {
    const int a = r - cfg.dest_row;
    const int b = c - cfg.dest_col;
    switch (phase) {
        case 0: return a;
        case 1: return a - b;
        case 2: return b;
        default: return a + b;
    }
}

// Guarded-mode step toward the axis for a 1 at axis coordinate `side`; a zero
// offset means the cell stays. Diagonal steps change the coordinate by 2 and
// are only taken when they do not cross the axis.
NeighborOffset toward_axis(int phase, int side) {
    switch (phase) {
        case 0:
            if (side < 0) return {1, 0};
            if (side > 0) return {-1, 0};
            return {0, 0};
        case 1:
            if (side <= -2) return {1, -1};
            if (side >= 2) return {-1, 1};
            return {0, 0};
        case 2:
            if (side < 0) return {0, 1};
            if (side > 0) return {0, -1};
            return {0, 0};
        default:
            if (side <= -2) return {1, 1};
            if (side >= 2) return {-1, -1};
            return {0, 0};
    }
}

bool on_border(const Grid& g, int r, int c) {
    return r == 0 || c == 0 || r == g.rows() - 1 || c == g.cols() - 1;
}

Grid guarded_phase(const Grid& g, int phase, const SweepConfig& cfg) {
    const int m = g.rows();
    const int n = g.cols();
    struct Move {
        int from_r, from_c, to_r, to_c;
    };
    std::vector<Move> moves;
    std::vector<std::uint8_t> claims(g.cells(), 0);

    // Propose: every movable 1 with an empty in-range target.
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            if (!g.get(r, c)) continue;
            if (cfg.freeze_border && on_border(g, r, c)) continue;
            const NeighborOffset step = toward_axis(phase, axis_coordinate(phase, r, c, cfg));
            if (step.dr == 0 && step.dc == 0) continue;
            const int tr = r + step.dr;
            const int tc = c + step.dc;
            if (!g.in_range(tr, tc) || g.get(tr, tc)) continue;
            moves.push_back({r, c, tr, tc});
            auto& k = claims[std::size_t(tr) * n + tc];
            if (k < 2) ++k;
        }
    }

    // Commit: only uncontested claims move.
    Grid next = g;
    for (const auto& mv : moves) {
        if (claims[std::size_t(mv.to_r) * n + mv.to_c] != 1) continue;
        next.set(mv.from_r, mv.from_c, false);
        next.set(mv.to_r, mv.to_c, true);
    }
    return next;
}

}  // namespace

void validate(const SweepConfig& cfg, int m, int n) {
    if (cfg.angle != 45) {
        throw Error(Errc::invalid_argument, "only a 45 degree rotation is supported, got " + std::to_string(cfg.angle));
    }
    if (cfg.dest_row < 0 || cfg.dest_row >= m || cfg.dest_col < 0 || cfg.dest_col >= n) {
        throw Error(Errc::invalid_argument, "destination (" + std::to_string(cfg.dest_row) + "," +
                                                std::to_string(cfg.dest_col) + ") is outside the " +
                                                std::to_string(m) + "x" + std::to_string(n) + " grid");
    }
}

SweepSample metrics(const Grid& g, const SweepConfig& cfg) {
    SweepSample s;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (!g.get(r, c)) continue;
            const auto d = static_cast<std::uint64_t>(std::max(std::abs(r - cfg.dest_row), std::abs(c - cfg.dest_col)));
            ++s.population;
            s.distance += d;
            s.radius = std::max(s.radius, d);
        }
    }
    return s;
}

std::array<std::array<RuleCode, 2>, 4> phase_rules(DiagonalPairing pairing) noexcept {
    const bool literal = pairing == DiagonalPairing::literal;
    return {{
        {RuleCode(128), RuleCode(8)},
        {RuleCode(literal ? 16 : 256), RuleCode(literal ? 256 : 16)},
        {RuleCode(32), RuleCode(2)},
        {RuleCode(64), RuleCode(4)},
    }};
}

HybridSpec phase_spec(int phase, const SweepConfig& cfg, int m, int n) {
    if (phase < 0 || phase > 3) throw Error(Errc::invalid_argument, "phase must be 0..3");
    const auto pair = phase_rules(cfg.pairing)[phase];
    HybridSpec spec(m, n);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) spec.set(r, c, axis_coordinate(phase, r, c, cfg) <= 0 ? pair[0] : pair[1]);
    }
    return spec;
}

Grid sweep_phase(const Grid& g, int phase, const SweepConfig& cfg) {
    validate(cfg, g.rows(), g.cols());
    if (cfg.mode == SweepMode::guarded) return guarded_phase(g, phase, cfg);

    Grid next = step_hybrid(g, phase_spec(phase, cfg, g.rows(), g.cols()));
    if (cfg.freeze_border) {
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < g.cols(); ++c) {
                if (on_border(g, r, c) && g.get(r, c)) next.set(r, c, true);
            }
        }
    }
    return next;
}

Grid sweep_iteration(const Grid& g, const SweepConfig& cfg) {
    Grid cur = g;
    for (int phase = 0; phase < cfg.rotations(); ++phase) cur = sweep_phase(cur, phase, cfg);
    return cur;
}

SweepResult sweep(const Grid& g, const SweepConfig& cfg, const SweepObserver& observer) {
    validate(cfg, g.rows(), g.cols());
    SweepResult result{g, {}};
    result.metrics.samples.push_back(metrics(g, cfg));
    if (observer) observer(0, result.grid, result.metrics.samples.back());
    for (std::uint64_t it = 1; it <= cfg.iterations; ++it) {
        result.grid = sweep_iteration(result.grid, cfg);
        result.metrics.samples.push_back(metrics(result.grid, cfg));
        if (observer) observer(it, result.grid, result.metrics.samples.back());
    }
    return result;
}

FixedPointResult sweep_to_fixed_point(const Grid& g, const SweepConfig& cfg, std::uint64_t max_iterations) {
    validate(cfg, g.rows(), g.cols());
    FixedPointResult out{g, 0, false};
    for (std::uint64_t it = 0; it < max_iterations; ++it) {
        Grid next = sweep_iteration(out.grid, cfg);
        if (next == out.grid) {
            out.reached = true;
            return out;
        }
        out.grid = std::move(next);
        ++out.iterations;
    }
    out.reached = sweep_iteration(out.grid, cfg) == out.grid;
    return out;
}

}  // namespace ca2d
