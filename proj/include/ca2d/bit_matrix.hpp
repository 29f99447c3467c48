#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ca2d {

// Dense matrix over GF(2) with bit-packed rows.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    bool get(int r, int c) const noexcept { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool value);
    void flip(int r, int c);

    std::span<std::uint64_t> row(int r) noexcept { return {bits_.data() + std::size_t(r) * words_, std::size_t(words_)}; }
    std::span<const std::uint64_t> row(int r) const noexcept {
        return {bits_.data() + std::size_t(r) * words_, std::size_t(words_)};
    }

    // Column indices of the ones in row r, ascending.
    std::vector<int> row_ones(int r) const;

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_;
    int cols_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

BitMatrix add(const BitMatrix& a, const BitMatrix& b);
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);

// Matrix-vector product; x and the result hold one 0/1 byte per entry.
std::vector<std::uint8_t> multiply(const BitMatrix& a, std::span<const std::uint8_t> x);

int rank(const BitMatrix& a);

// Gauss-Jordan inverse; nullopt when a is singular. Throws for non-square input.
std::optional<BitMatrix> inverse(const BitMatrix& a);

// Entries (i, i + k) for i = 0 .. rows - k - 1.
std::vector<std::uint8_t> superdiagonal(const BitMatrix& a, int k);

}  // namespace ca2d
