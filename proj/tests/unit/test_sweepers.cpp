#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/oracle.hpp"
#include "ca2d/error.hpp"
#include "ca2d/sweepers.hpp"

namespace {

using ca2d::Grid;
using ca2d::SweepConfig;
using ca2d::SweepMode;

SweepConfig config(int r, int c, SweepMode mode, std::uint64_t iterations = 1) {
    SweepConfig cfg;
    cfg.dest_row = r;
    cfg.dest_col = c;
    cfg.mode = mode;
    cfg.iterations = iterations;
    return cfg;
}

Grid scatter(int m, int n, int count, std::uint32_t seed) {
    std::mt19937 gen(seed);
    Grid g(m, n);
    while (static_cast<int>(g.popcount()) < count) g.set(gen() % m, gen() % n, true);
    return g;
}

// The xor iteration written out as four region-constant hybrid steps.
oracle::Cells xor_iteration_oracle(oracle::Cells g, int x, int y) {
    const unsigned upper[4] = {128, 256, 32, 64};
    const unsigned lower[4] = {8, 16, 2, 4};
    const int m = static_cast<int>(g.size());
    const int n = static_cast<int>(g[0].size());
    for (int phase = 0; phase < 4; ++phase) {
        std::vector<std::vector<unsigned>> rules(m, std::vector<unsigned>(n));
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < n; ++c) {
                const int a = r - x;
                const int b = c - y;
                const int side = phase == 0 ? a : phase == 1 ? a - b : phase == 2 ? b : a + b;
                rules[r][c] = side <= 0 ? upper[phase] : lower[phase];
            }
        }
        g = oracle::step_hybrid(g, rules);
    }
    return g;
}

TEST(Sweep, Validation) {
    SweepConfig cfg = config(2, 2, SweepMode::guarded);
    EXPECT_NO_THROW(ca2d::validate(cfg, 5, 5));
    EXPECT_THROW(ca2d::validate(cfg, 2, 5), ca2d::Error);
    cfg.angle = 30;
    EXPECT_THROW(ca2d::validate(cfg, 5, 5), ca2d::Error);
    EXPECT_EQ(config(0, 0, SweepMode::guarded).rotations(), 4);
}

TEST(Sweep, EmptyGridStaysEmpty) {
    for (auto mode : {SweepMode::guarded, SweepMode::xor_rules}) {
        EXPECT_EQ(ca2d::sweep_iteration(Grid(9, 7), config(4, 3, mode)).popcount(), 0u);
    }
}

TEST(Sweep, GuardedSingleCell) {
    const SweepConfig cfg = config(10, 10, SweepMode::guarded);
    Grid at_dest(21, 21);
    at_dest.set(10, 10, true);
    EXPECT_EQ(ca2d::sweep_iteration(at_dest, cfg), at_dest);

    Grid above(21, 21);
    above.set(5, 10, true);
    const Grid next = ca2d::sweep_iteration(above, cfg);
    EXPECT_EQ(next.popcount(), 1u);
    EXPECT_LT(ca2d::metrics(next, cfg).distance, 5u);

    // every start position reaches the destination
    for (int r = 0; r < 21; ++r) {
        for (int c = 0; c < 21; ++c) {
            Grid g(21, 21);
            g.set(r, c, true);
            const auto fixed = ca2d::sweep_to_fixed_point(g, cfg, 84);
            ASSERT_TRUE(fixed.reached);
            EXPECT_TRUE(fixed.grid.get(10, 10)) << r << "," << c;
        }
    }
}

TEST(Sweep, XorModeMatchesChainedHybridSteps) {
    for (auto [m, n, x, y] : {std::tuple{3, 4, 1, 2}, std::tuple{9, 9, 4, 4}, std::tuple{12, 70, 3, 50}}) {
        const auto cells = oracle::random_cells(m, n, 0.5, m * n);
        const Grid got = ca2d::sweep_iteration(oracle::to_grid(cells), config(x, y, SweepMode::xor_rules));
        EXPECT_EQ(oracle::to_cells(got), xor_iteration_oracle(cells, x, y));
    }
}

TEST(Sweep, XorModeIsLinear) {
    const SweepConfig cfg = config(20, 13, SweepMode::xor_rules);
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Grid a = oracle::to_grid(oracle::random_cells(40, 30, 0.3, seed));
        const Grid b = oracle::to_grid(oracle::random_cells(40, 30, 0.3, seed + 1000));
        EXPECT_EQ(ca2d::sweep_iteration(a ^ b, cfg), ca2d::sweep_iteration(a, cfg) ^ ca2d::sweep_iteration(b, cfg));
    }
}

TEST(Sweep, LiteralPairingChangesOnlyTheDiagonalPhase) {
    SweepConfig cfg = config(6, 6, SweepMode::xor_rules);
    cfg.pairing = ca2d::DiagonalPairing::literal;
    const auto rules = ca2d::phase_rules(cfg.pairing);
    EXPECT_EQ(rules[1][0], ca2d::RuleCode(16));
    EXPECT_EQ(rules[1][1], ca2d::RuleCode(256));
    const Grid g = oracle::to_grid(oracle::random_cells(13, 13, 0.4, 8));
    EXPECT_EQ(ca2d::sweep_phase(g, 0, cfg), ca2d::sweep_phase(g, 0, config(6, 6, SweepMode::xor_rules)));
}

TEST(Sweep, FreezeBorderKeepsBorderOnes) {
    SweepConfig cfg = config(5, 5, SweepMode::guarded);
    cfg.freeze_border = true;
    Grid g(11, 11);
    g.set(0, 3, true);
    g.set(4, 10, true);
    g.set(2, 2, true);
    const Grid next = ca2d::sweep_iteration(g, cfg);
    EXPECT_TRUE(next.get(0, 3));
    EXPECT_TRUE(next.get(4, 10));
    EXPECT_FALSE(next.get(2, 2));
    EXPECT_EQ(next.popcount(), 3u);
}

TEST(Sweep, GuardedInvariants) {
    std::mt19937 gen(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 5 + gen() % 40;
        const int n = 5 + gen() % 40;
        const int count = 1 + gen() % std::min(60, m * n / 2);
        const Grid g = scatter(m, n, count, gen());
        const SweepConfig cfg = config(gen() % m, gen() % n, SweepMode::guarded, 4 * std::max(m, n));
        const auto result = ca2d::sweep(g, cfg);
        const auto& s = result.metrics.samples;
        ASSERT_EQ(s.size(), cfg.iterations + 1);
        for (std::size_t i = 1; i < s.size(); ++i) {
            EXPECT_EQ(s[i].population, s[0].population);
            EXPECT_LE(s[i].distance, s[i - 1].distance);
            EXPECT_LE(s[i].radius, s[i - 1].radius);
        }
    }
}

TEST(Sweep, GathersScatteredOnes) {
    const Grid g = scatter(100, 80, 200, 7);
    const SweepConfig cfg = config(40, 40, SweepMode::guarded, 200);
    const auto result = ca2d::sweep(g, cfg);
    const auto last = result.metrics.samples.back();
    EXPECT_EQ(last.population, 200u);
    EXPECT_LE(last.radius, static_cast<std::uint64_t>(std::ceil(std::sqrt(200.0))) + 2);
    EXPECT_LT(last.distance, result.metrics.samples.front().distance / 4);
}

TEST(Sweep, ObserverAndZeroIterations) {
    const Grid g = scatter(20, 20, 15, 3);
    std::vector<std::uint64_t> seen;
    const auto none = ca2d::sweep(g, config(10, 10, SweepMode::guarded, 0),
                                  [&](std::uint64_t it, const Grid&, const ca2d::SweepSample&) { seen.push_back(it); });
    EXPECT_EQ(none.grid, g);
    EXPECT_EQ(none.metrics.samples.size(), 1u);
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0}));

    seen.clear();
    ca2d::sweep(g, config(10, 10, SweepMode::guarded, 3),
                [&](std::uint64_t it, const Grid&, const ca2d::SweepSample&) { seen.push_back(it); });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 1, 2, 3}));
}

TEST(Sweep, Metrics) {
    const SweepConfig cfg = config(5, 5, SweepMode::guarded);
    EXPECT_EQ(ca2d::metrics(Grid(11, 11), cfg), (ca2d::SweepSample{0, 0, 0}));
    Grid one(11, 11);
    one.set(5, 5, true);
    EXPECT_EQ(ca2d::metrics(one, cfg), (ca2d::SweepSample{1, 0, 0}));
    Grid two(11, 11);
    two.set(2, 4, true);   // distance 3
    two.set(10, 7, true);  // distance 5
    EXPECT_EQ(ca2d::metrics(two, cfg), (ca2d::SweepSample{2, 8, 5}));
}

TEST(Sweep, Deterministic) {
    const Grid g = scatter(30, 30, 50, 12);
    const SweepConfig cfg = config(3, 25, SweepMode::guarded, 20);
    EXPECT_EQ(ca2d::sweep(g, cfg).grid, ca2d::sweep(g, cfg).grid);
}

}  // namespace
