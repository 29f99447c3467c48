#include "ca2d/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

void require_same_shape(const BitMatrix& a, const BitMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(Errc::dimension_mismatch, std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
    }
}

void xor_row(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
    if (rows <= 0 || cols <= 0) {
        throw Error(Errc::invalid_argument,
                    "matrix dimensions must be positive, got " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    bits_.assign(std::size_t(rows) * words_, 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::set(int r, int c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw Error(Errc::invalid_argument, "matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                ") out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    auto& word = bits_[std::size_t(r) * words_ + (c >> 6)];
    word = value ? (word | bit) : (word & ~bit);
}

void BitMatrix::flip(int r, int c) { set(r, c, !get(r, c)); }

std::vector<int> BitMatrix::row_ones(int r) const {
    std::vector<int> out;
    auto words = row(r);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t v = words[w];
        while (v) {
            out.push_back(w * 64 + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return out;
}

bool BitMatrix::is_zero() const noexcept {
    for (auto w : bits_) {
        if (w) return false;
    }
    return true;
}

std::size_t BitMatrix::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    require_same_shape(a, b, "add");
    BitMatrix out = a;
    for (int r = 0; r < a.rows(); ++r) xor_row(out.row(r), b.row(r));
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(Errc::dimension_mismatch, "multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                                                  std::to_string(b.rows()) + " differ");
    }
    BitMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        auto dst = out.row(i);
        for (int k : a.row_ones(i)) xor_row(dst, b.row(k));
    }
    return out;
}

BitMatrix transpose(const BitMatrix& a) {
    BitMatrix out(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c : a.row_ones(r)) out.set(c, r, true);
    }
    return out;
}

std::vector<std::uint8_t> multiply(const BitMatrix& a, std::span<const std::uint8_t> x) {
    if (static_cast<int>(x.size()) != a.cols()) {
        throw Error(Errc::dimension_mismatch, "matrix has " + std::to_string(a.cols()) + " columns but vector has " +
                                                  std::to_string(x.size()) + " entries");
    }
    std::vector<std::uint64_t> packed((x.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) packed[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    std::vector<std::uint8_t> y(a.rows(), 0);
    for (int r = 0; r < a.rows(); ++r) {
        auto words = a.row(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < packed.size(); ++w) acc ^= words[w] & packed[w];
        y[r] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
    }
    return y;
}

int rank(const BitMatrix& a) {
    BitMatrix m = a;
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.get(i, col)) xor_row(m.row(i), m.row(r));
        }
        ++r;
    }
    return r;
}

std::optional<BitMatrix> inverse(const BitMatrix& a) {
    if (!a.square()) {
        throw Error(Errc::dimension_mismatch, "inverse of a non-square " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " matrix");
    }
    const int n = a.rows();
    BitMatrix m = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (m.get(i, col)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(col).begin());
            std::swap_ranges(inv.row(pivot).begin(), inv.row(pivot).end(), inv.row(col).begin());
        }
        for (int i = 0; i < n; ++i) {
            if (i != col && m.get(i, col)) {
                xor_row(m.row(i), m.row(col));
                xor_row(inv.row(i), inv.row(col));
            }
        }
    }
    return inv;
}

std::vector<std::uint8_t> superdiagonal(const BitMatrix& a, int k) {
    std::vector<std::uint8_t> out;
    for (int i = 0; i + k < a.cols() && i < a.rows(); ++i) out.push_back(a.get(i, i + k) ? 1 : 0);
    return out;
}

}  // namespace ca2d
