#include "ca2d/grid.hpp"

#include <array>
#include <bit>
#include <string>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

// dst(c) = src(c + by) for every column c, zero where c + by is out of range.
void shift_row(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int by, std::uint64_t tail) {
    const int words = static_cast<int>(src.size());
    auto word = [&](int w) -> std::uint64_t { return (w >= 0 && w < words) ? src[w] : 0; };
    if (by >= 0) {
        const int q = by >> 6;
        const int b = by & 63;
        for (int w = 0; w < words; ++w) {
            std::uint64_t v = word(w + q) >> b;
            if (b != 0) v |= word(w + q + 1) << (64 - b);
            dst[w] = v;
        }
    } else {
        const int t = -by;
        const int q = t >> 6;
        const int b = t & 63;
        for (int w = 0; w < words; ++w) {
            std::uint64_t v = word(w - q) << b;
            if (b != 0) v |= word(w - q - 1) >> (64 - b);
            dst[w] = v;
        }
    }
    dst[words - 1] &= tail;
}

void xor_shifted_into(const Grid& g, NeighborOffset by, Grid& acc, const Grid* mask) {
    std::vector<std::uint64_t> tmp(g.words_per_row());
    for (int r = 0; r < g.rows(); ++r) {
        const int src = r + by.dr;
        if (src < 0 || src >= g.rows()) continue;
        shift_row(g.row(src), tmp, by.dc, g.tail_mask());
        auto out = acc.row(r);
        if (mask) {
            auto m = mask->row(r);
            for (std::size_t w = 0; w < tmp.size(); ++w) out[w] ^= tmp[w] & m[w];
        } else {
            for (std::size_t w = 0; w < tmp.size(); ++w) out[w] ^= tmp[w];
        }
    }
}

}  // namespace

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols), words_(0), tail_mask_(0) {
    if (rows <= 0 || cols <= 0) {
        throw Error(Errc::invalid_argument,
                    "grid dimensions must be positive, got " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    words_ = (cols + 63) / 64;
    const int rem = cols & 63;
    tail_mask_ = rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
    bits_.assign(std::size_t(rows) * words_, 0);
}

Grid Grid::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(Errc::invalid_argument, "empty grid literal");
    Grid g(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < g.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != g.cols()) {
            throw Error(Errc::dimension_mismatch, "ragged grid literal at row " + std::to_string(r));
        }
        for (int c = 0; c < g.cols(); ++c) g.set(r, c, rows[r][c] != 0);
    }
    return g;
}

void Grid::set(int r, int c, bool value) {
    if (!in_range(r, c)) {
        throw Error(Errc::invalid_argument, "cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside grid");
    }
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (value) {
        bits_[index(r, c)] |= bit;
    } else {
        bits_[index(r, c)] &= ~bit;
    }
}

void Grid::flip(int r, int c) {
    if (!in_range(r, c)) {
        throw Error(Errc::invalid_argument, "cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside grid");
    }
    bits_[index(r, c)] ^= std::uint64_t{1} << (c & 63);
}

std::size_t Grid::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Grid& Grid::operator^=(const Grid& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(Errc::dimension_mismatch, "XOR of grids with different dimensions");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
}

std::vector<std::uint8_t> Grid::flatten() const {
    std::vector<std::uint8_t> out;
    out.reserve(cells());
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? 1 : 0);
    }
    return out;
}

Grid Grid::unflatten(int rows, int cols, std::span<const std::uint8_t> values) {
    Grid g(rows, cols);
    if (values.size() != g.cells()) {
        throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(values.size()) +
                                                  " does not fill a " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " grid");
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (values[std::size_t(r) * cols + c]) g.set(r, c, true);
        }
    }
    return g;
}

HybridSpec::HybridSpec(int rows, int cols, RuleCode fill) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw Error(Errc::invalid_argument, "hybrid spec dimensions must be positive");
    rules_.assign(std::size_t(rows) * cols, fill);
}

HybridSpec HybridSpec::from_rows(const std::vector<std::vector<unsigned>>& rules) {
    if (rules.empty() || rules.front().empty()) throw Error(Errc::invalid_argument, "empty hybrid spec");
    HybridSpec spec(static_cast<int>(rules.size()), static_cast<int>(rules.front().size()));
    for (int r = 0; r < spec.rows(); ++r) {
        if (static_cast<int>(rules[r].size()) != spec.cols()) {
            throw Error(Errc::dimension_mismatch, "ragged hybrid spec at row " + std::to_string(r));
        }
        for (int c = 0; c < spec.cols(); ++c) spec.set(r, c, RuleCode(rules[r][c]));
    }
    return spec;
}

void HybridSpec::fill_row(int r, RuleCode rule) {
    for (int c = 0; c < cols_; ++c) set(r, c, rule);
}

Grid shifted(const Grid& g, NeighborOffset by) {
    Grid out(g.rows(), g.cols());
    xor_shifted_into(g, by, out, nullptr);
    return out;
}

Grid step_uniform(const Grid& g, RuleCode rule) {
    Grid next(g.rows(), g.cols());
    for (const auto& off : offsets(rule)) xor_shifted_into(g, off, next, nullptr);
    return next;
}

Grid step_hybrid(const Grid& g, const HybridSpec& spec) {
    if (spec.rows() != g.rows() || spec.cols() != g.cols()) {
        throw Error(Errc::dimension_mismatch, "hybrid spec is " + std::to_string(spec.rows()) + "x" +
                                                  std::to_string(spec.cols()) + " but grid is " +
                                                  std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    }
    // One mask per weight: the cells whose rule reads that neighbour.
    std::array<Grid*, 9> masks{};
    std::vector<Grid> storage;
    storage.reserve(9);
    for (std::size_t bit = 0; bit < 9; ++bit) {
        const unsigned weight = 1u << bit;
        bool any = false;
        for (int r = 0; r < g.rows() && !any; ++r) {
            for (int c = 0; c < g.cols(); ++c) {
                if (spec.at(r, c).has(weight)) {
                    any = true;
                    break;
                }
            }
        }
        if (!any) continue;
        Grid& m = storage.emplace_back(g.rows(), g.cols());
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < g.cols(); ++c) {
                if (spec.at(r, c).has(weight)) m.set(r, c, true);
            }
        }
        masks[bit] = &m;
    }
    Grid next(g.rows(), g.cols());
    for (std::size_t bit = 0; bit < 9; ++bit) {
        if (masks[bit]) xor_shifted_into(g, offset_of(1u << bit), next, masks[bit]);
    }
    return next;
}

Grid evolve(const Grid& g, RuleCode rule, std::uint64_t steps) {
    Grid cur = g;
    for (std::uint64_t t = 0; t < steps; ++t) cur = step_uniform(cur, rule);
    return cur;
}

}  // namespace ca2d
