#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ca2d/rule.hpp"

namespace ca2d {

struct GridSize {
    int rows = 0;
    int cols = 0;

    friend bool operator==(GridSize, GridSize) = default;
};

// Every (m, n) with m in [m_lo, m_hi] and n in [n_lo, n_hi], rows-major order.
std::vector<GridSize> size_range(int m_lo, int m_hi, int n_lo, int n_hi);

struct RuleReversibility {
    RuleCode rule;
    std::vector<int> ranks;  // parallel to ReversibilityReport::sizes
    bool always_invertible = false;
};

struct ReversibilityReport {
    std::vector<GridSize> sizes;
    std::vector<RuleReversibility> rules;  // all 512, ascending

    std::vector<RuleCode> always_invertible() const;
};

ReversibilityReport reversibility_report(const std::vector<GridSize>& sizes);

// Rules whose matrix has full rank at every size in the ranges.
std::vector<RuleCode> always_invertible_set(int m_lo, int m_hi, int n_lo, int n_hi);

// The 31 rules of the form 1 XOR s, s a subset of {2, 4, 8, 16} or of
// {32, 64, 128, 256}. Their matrices are identity plus a strictly triangular
// part under row-major flattening, so they are invertible at every size.
std::vector<RuleCode> unipotent_rules();
bool is_unipotent(RuleCode rule) noexcept;

// Fixed-width table: rule, group, one rank column per size, verdict. Lines are
// sorted by rule; the trailer compares the invertible set with unipotent_rules().
std::string format_report(const ReversibilityReport& report);

// Exhaustive state transition graph for grids of at most 16 cells. State s
// encodes cell i (row-major) as bit i.
struct StateGraph {
    static constexpr int kMaxCells = 16;

    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> successor;
    std::vector<std::vector<std::uint32_t>> cycles;  // each starts at its smallest state
    std::vector<int> depth;                          // 0 on cycles, steps to reach a cycle otherwise

    std::size_t state_count() const noexcept { return successor.size(); }
    bool is_permutation() const noexcept;
    std::size_t transient_count() const noexcept;
    std::vector<std::size_t> cycle_lengths() const;  // sorted ascending
};

StateGraph state_graph(RuleCode rule, int m, int n);

// Least p >= 1 with M^p = I, nullopt when the matrix is singular. Throws
// Errc::limit_exceeded when no p <= max_iterations is found.
inline constexpr std::uint64_t kOrderIterationCap = std::uint64_t{1} << 20;
std::optional<std::uint64_t> order_of(RuleCode rule, int m, int n,
                                      std::uint64_t max_iterations = kOrderIterationCap);

std::uint64_t lcm_of(const std::vector<std::size_t>& values);

}  // namespace ca2d
