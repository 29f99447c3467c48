#pragma once

#include <cstdint>
#include <vector>

#include "ca2d/bit_matrix.hpp"
#include "ca2d/grid.hpp"
#include "ca2d/rule.hpp"

namespace ca2d {

// Rule matrices act on the row-major flattening of an m x n grid: cell (r, c)
// is index r * n + c, and row i of the matrix lists the cells whose XOR gives
// cell i's next state.

// For each cell (0-based flat index) the sorted, duplicate-free list of cells
// it reads. Cells outside the grid simply do not appear.
class DependencyMap {
public:
    DependencyMap(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int cells() const noexcept { return rows_ * cols_; }

    const std::vector<int>& at(int cell) const { return deps_.at(cell); }
    // Validates range and rejects duplicates; stores the list sorted.
    void assign(int cell, std::vector<int> sources);

    friend bool operator==(const DependencyMap&, const DependencyMap&) = default;

private:
    int rows_;
    int cols_;
    std::vector<std::vector<int>> deps_;
};

enum class BoundaryKind { s1, s2 };

// Masking sequences along the first and (n - 1)th superdiagonals, of length
// `length`, for rows of n columns. S1 drops every n-th entry (no right
// neighbour at the end of a row); S2 drops the first entry of every row.
std::vector<std::uint8_t> boundary_sequence(BoundaryKind kind, int n, int length);

// Single-dependency matrix; throws unless `weight` is fundamental.
BitMatrix basic_matrix(unsigned weight, int m, int n);

// XOR of the basic matrices of the rule's components.
BitMatrix rule_matrix(RuleCode rule, int m, int n);

// Block tri-diagonal construction from the n x n blocks I, T1 (superdiagonal)
// and T2 = T1^T: diagonal blocks read the own row, upper blocks the row below
// and lower blocks the row above.
BitMatrix block_rule_matrix(RuleCode rule, int m, int n);

BitMatrix hybrid_matrix(const DependencyMap& deps);
BitMatrix hybrid_matrix_from_rules(const HybridSpec& spec);
DependencyMap dependency_map_from_rules(const HybridSpec& spec);
DependencyMap to_dependency_map(const BitMatrix& mat, int m, int n);

// Flatten, multiply, unflatten.
Grid apply(const BitMatrix& mat, const Grid& g);

}  // namespace ca2d
