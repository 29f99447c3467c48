#include <gtest/gtest.h>

#include "../support/oracle.hpp"
#include "ca2d/error.hpp"
#include "ca2d/grid.hpp"

namespace {

using ca2d::Grid;
using ca2d::RuleCode;

const oracle::Cells kSampleInput = {{0, 0, 1, 0}, {1, 1, 1, 0}, {1, 0, 1, 1}};

TEST(Grid, RejectsEmptyShapes) {
    EXPECT_THROW(Grid(0, 3), ca2d::Error);
    EXPECT_THROW(Grid(3, -1), ca2d::Error);
}

TEST(Grid, NullBoundaryReads) {
    const Grid g = Grid::from_rows(kSampleInput);
    EXPECT_FALSE(g.get(-1, 0));
    EXPECT_FALSE(g.get(0, 4));
    EXPECT_TRUE(g.get(0, 2));
    Grid h(2, 2);
    EXPECT_THROW(h.set(2, 0, true), ca2d::Error);
}

TEST(Grid, PaddingBitsStayClear) {
    for (int cols : {1, 63, 64, 65, 130}) {
        const Grid g = oracle::to_grid(oracle::random_cells(5, cols, 0.7, cols));
        for (unsigned rule : {511u, 2u, 32u, 4u, 64u}) {
            const Grid out = ca2d::step_uniform(g, RuleCode(rule));
            for (int r = 0; r < out.rows(); ++r) {
                EXPECT_EQ(out.row(r).back() & ~out.tail_mask(), 0u) << "cols " << cols << " rule " << rule;
            }
        }
    }
}

TEST(StepUniform, WorkedExampleRule170) {
    const Grid out = ca2d::step_uniform(Grid::from_rows(kSampleInput), RuleCode(170));
    EXPECT_EQ(oracle::to_cells(out), (oracle::Cells{{1, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}}));
}

TEST(StepUniform, TrivialRules) {
    const Grid g = oracle::to_grid(oracle::random_cells(7, 9, 0.5, 3));
    EXPECT_EQ(ca2d::step_uniform(g, RuleCode(0)).popcount(), 0u);
    EXPECT_EQ(ca2d::step_uniform(g, RuleCode(1)), g);
}

TEST(StepUniform, Rule8ShiftsUp) {
    const auto cells = oracle::random_cells(6, 70, 0.5, 11);
    const Grid out = ca2d::step_uniform(oracle::to_grid(cells), RuleCode(8));
    EXPECT_EQ(oracle::to_cells(out), oracle::shift_set(cells, -1, 0));
}

// Property: the packed stepper agrees with the per-cell oracle on every rule,
// including grids that span several words per row.
TEST(StepUniform, MatchesPerCellOracle) {
    const std::pair<int, int> sizes[] = {{1, 1}, {3, 4}, {5, 63}, {4, 64}, {6, 65}, {3, 129}};
    std::uint64_t seed = 1;
    for (const auto& [m, n] : sizes) {
        const auto cells = oracle::random_cells(m, n, 0.5, seed++);
        const Grid g = oracle::to_grid(cells);
        for (unsigned rule = 0; rule < RuleCode::kCount; ++rule) {
            ASSERT_EQ(oracle::to_cells(ca2d::step_uniform(g, RuleCode(rule))), oracle::step(cells, rule))
                << m << "x" << n << " rule " << rule;
        }
    }
}

TEST(StepHybrid, RowsWithRules2And3And4) {
    const auto spec = ca2d::HybridSpec::from_rows({{2, 2, 2, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}});
    const Grid out = ca2d::step_hybrid(Grid::from_rows(kSampleInput), spec);
    EXPECT_EQ(oracle::to_cells(out), (oracle::Cells{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}));
}

TEST(StepHybrid, ConstantAssignmentIsUniform) {
    const Grid g = oracle::to_grid(oracle::random_cells(9, 70, 0.5, 5));
    EXPECT_EQ(ca2d::step_hybrid(g, ca2d::HybridSpec(9, 70)), g);
    for (unsigned rule : {0u, 7u, 170u, 341u, 511u}) {
        EXPECT_EQ(ca2d::step_hybrid(g, ca2d::HybridSpec(9, 70, RuleCode(rule))), ca2d::step_uniform(g, RuleCode(rule)));
    }
}

TEST(StepHybrid, MatchesPerCellOracle) {
    std::mt19937 gen(99);
    std::uniform_int_distribution<unsigned> any_rule(0, 511);
    for (auto [m, n] : {std::pair{4, 5}, std::pair{3, 66}, std::pair{7, 7}}) {
        std::vector<std::vector<unsigned>> rules(m, std::vector<unsigned>(n));
        for (auto& row : rules) {
            for (auto& r : row) r = any_rule(gen);
        }
        const auto cells = oracle::random_cells(m, n, 0.5, m * 100 + n);
        const Grid out = ca2d::step_hybrid(oracle::to_grid(cells), ca2d::HybridSpec::from_rows(rules));
        EXPECT_EQ(oracle::to_cells(out), oracle::step_hybrid(cells, rules));
    }
}

TEST(StepHybrid, DimensionMismatch) {
    EXPECT_THROW(ca2d::step_hybrid(Grid(3, 4), ca2d::HybridSpec(4, 3)), ca2d::Error);
}

TEST(Evolve, ZeroStepsAndRule8ExhaustsRows) {
    const Grid g = oracle::to_grid(oracle::random_cells(6, 5, 0.6, 8));
    EXPECT_EQ(ca2d::evolve(g, RuleCode(170), 0), g);
    EXPECT_EQ(ca2d::evolve(g, RuleCode(8), 6).popcount(), 0u);
    EXPECT_NE(ca2d::evolve(g, RuleCode(8), 5).popcount(), 0u);
}

// Brute force over all 16 2x2 images: the least p bringing every image back.
TEST(Evolve, Rule3OnTwoByTwoReturnsAfterItsOrder) {
    std::uint64_t p = 0;
    for (std::uint64_t t = 1; t < 64 && p == 0; ++t) {
        bool all_back = true;
        for (int s = 0; s < 16 && all_back; ++s) {
            oracle::Cells g = {{s & 1, (s >> 1) & 1}, {(s >> 2) & 1, (s >> 3) & 1}};
            oracle::Cells cur = g;
            for (std::uint64_t i = 0; i < t; ++i) cur = oracle::step(cur, 3);
            all_back = cur == g;
        }
        if (all_back) p = t;
    }
    ASSERT_GT(p, 0u);
    for (int s = 0; s < 16; ++s) {
        const Grid g = Grid::from_rows({{s & 1, (s >> 1) & 1}, {(s >> 2) & 1, (s >> 3) & 1}});
        EXPECT_EQ(ca2d::evolve(g, RuleCode(3), p), g);
    }
}

TEST(Grid, FlattenRoundTrip) {
    const Grid g = oracle::to_grid(oracle::random_cells(4, 70, 0.5, 4));
    const auto flat = g.flatten();
    ASSERT_EQ(flat.size(), g.cells());
    EXPECT_EQ(flat[1 * 70 + 3], g.get(1, 3));
    EXPECT_EQ(Grid::unflatten(4, 70, flat), g);
    EXPECT_THROW(Grid::unflatten(4, 69, flat), ca2d::Error);
}

}  // namespace
