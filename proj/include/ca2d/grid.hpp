#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ca2d/rule.hpp"

namespace ca2d {

// m x n binary image. Rows are packed into 64-bit words, column c of a row
// living in word c / 64 at bit c % 64. Bits past the last column are always
// zero. Reads outside the grid return 0 (null boundary).
class Grid {
public:
    Grid(int rows, int cols);

    // Row-major 0/1 values; any non-zero entry is treated as 1.
    static Grid from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t cells() const noexcept { return static_cast<std::size_t>(rows_) * cols_; }
    int words_per_row() const noexcept { return words_; }

    bool in_range(int r, int c) const noexcept { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

    bool get(int r, int c) const noexcept {
        if (!in_range(r, c)) return false;
        return (bits_[index(r, c)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool value);
    void flip(int r, int c);

    std::span<std::uint64_t> row(int r) noexcept { return {bits_.data() + std::size_t(r) * words_, std::size_t(words_)}; }
    std::span<const std::uint64_t> row(int r) const noexcept {
        return {bits_.data() + std::size_t(r) * words_, std::size_t(words_)};
    }

    std::size_t popcount() const noexcept;
    bool empty() const noexcept { return popcount() == 0; }

    Grid& operator^=(const Grid& other);
    friend Grid operator^(Grid a, const Grid& b) { return a ^= b; }
    friend bool operator==(const Grid&, const Grid&) = default;

    // Row-major flattening, one byte per cell.
    std::vector<std::uint8_t> flatten() const;
    static Grid unflatten(int rows, int cols, std::span<const std::uint8_t> values);

    // Mask of valid bits in the last word of each row.
    std::uint64_t tail_mask() const noexcept { return tail_mask_; }

private:
    std::size_t index(int r, int c) const noexcept { return std::size_t(r) * words_ + std::size_t(c >> 6); }

    int rows_;
    int cols_;
    int words_;
    std::uint64_t tail_mask_;
    std::vector<std::uint64_t> bits_;
};

// Per-cell rule assignment for hybrid stepping.
class HybridSpec {
public:
    HybridSpec(int rows, int cols, RuleCode fill = RuleCode(1));

    static HybridSpec from_rows(const std::vector<std::vector<unsigned>>& rules);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    RuleCode at(int r, int c) const { return rules_[std::size_t(r) * cols_ + c]; }
    void set(int r, int c, RuleCode rule) { rules_[std::size_t(r) * cols_ + c] = rule; }
    void fill_row(int r, RuleCode rule);

    std::span<const RuleCode> flat() const noexcept { return rules_; }

private:
    int rows_;
    int cols_;
    std::vector<RuleCode> rules_;
};

// Copy of g shifted so that result(r, c) = g(r + dr, c + dc); cells read from
// outside the grid are zero.
Grid shifted(const Grid& g, NeighborOffset by);

// One synchronous step. The input is never modified.
Grid step_uniform(const Grid& g, RuleCode rule);
Grid step_hybrid(const Grid& g, const HybridSpec& spec);

// t-fold step_uniform.
Grid evolve(const Grid& g, RuleCode rule, std::uint64_t steps);

}  // namespace ca2d
