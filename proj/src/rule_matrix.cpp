#include "ca2d/rule_matrix.hpp"

#include <algorithm>
#include <string>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

void require_positive(int m, int n) {
    if (m <= 0 || n <= 0) {
        throw Error(Errc::invalid_argument,
                    "grid dimensions must be positive, got " + std::to_string(m) + "x" + std::to_string(n));
    }
}

// n x n blocks of the tri-diagonal construction.
enum class Block { identity, t1, t2 };

void add_block(BitMatrix& target, int block_row, int block_col, int n, Block kind) {
    for (int i = 0; i < n; ++i) {
        int j = i;
        if (kind == Block::t1) j = i + 1;
        if (kind == Block::t2) j = i - 1;
        if (j < 0 || j >= n) continue;
        target.flip(block_row * n + i, block_col * n + j);
    }
}

struct BlockTerm {
    unsigned weight;
    int block_offset;  // 0 = D, +1 = U, -1 = L
    Block kind;
};

constexpr BlockTerm kBlockTerms[] = {
    {1, 0, Block::identity},   {2, 0, Block::t1},   {32, 0, Block::t2},
    {8, 1, Block::identity},   {4, 1, Block::t1},   {16, 1, Block::t2},
    {128, -1, Block::identity}, {256, -1, Block::t1}, {64, -1, Block::t2},
};

}  // namespace

DependencyMap::DependencyMap(int rows, int cols) : rows_(rows), cols_(cols) {
    require_positive(rows, cols);
    deps_.resize(std::size_t(rows) * cols);
}

void DependencyMap::assign(int cell, std::vector<int> sources) {
    if (cell < 0 || cell >= cells()) {
        throw Error(Errc::invalid_argument, "cell index " + std::to_string(cell) + " outside 0.." +
                                                std::to_string(cells() - 1));
    }
    std::sort(sources.begin(), sources.end());
    for (std::size_t k = 0; k < sources.size(); ++k) {
        if (sources[k] < 0 || sources[k] >= cells()) {
            throw Error(Errc::invalid_argument, "dependency " + std::to_string(sources[k]) + " of cell " +
                                                    std::to_string(cell) + " is out of range");
        }
        if (k > 0 && sources[k] == sources[k - 1]) {
            throw Error(Errc::invalid_argument, "duplicate dependency " + std::to_string(sources[k]) +
                                                    " for cell " + std::to_string(cell));
        }
    }
    deps_[cell] = std::move(sources);
}

std::vector<std::uint8_t> boundary_sequence(BoundaryKind kind, int n, int length) {
    if (n <= 0 || length < 0) throw Error(Errc::invalid_argument, "boundary sequence needs n > 0");
    std::vector<std::uint8_t> seq(length, 1);
    for (int i = 0; i < length; ++i) {
        if (kind == BoundaryKind::s1 && (i + 1) % n == 0) seq[i] = 0;
        if (kind == BoundaryKind::s2 && i % n == 0) seq[i] = 0;
    }
    return seq;
}

BitMatrix basic_matrix(unsigned weight, int m, int n) {
    require_positive(m, n);
    const NeighborOffset off = offset_of(weight);
    BitMatrix mat(m * n, m * n);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            const int sr = r + off.dr;
            const int sc = c + off.dc;
            if (sr < 0 || sr >= m || sc < 0 || sc >= n) continue;
            mat.set(r * n + c, sr * n + sc, true);
        }
    }
    return mat;
}

BitMatrix rule_matrix(RuleCode rule, int m, int n) {
    require_positive(m, n);
    BitMatrix mat(m * n, m * n);
    for (RuleCode part : decompose(rule)) mat = add(mat, basic_matrix(part.value(), m, n));
    return mat;
}

BitMatrix block_rule_matrix(RuleCode rule, int m, int n) {
    require_positive(m, n);
    BitMatrix mat(m * n, m * n);
    for (int b = 0; b < m; ++b) {
        for (const auto& term : kBlockTerms) {
            if (!rule.has(term.weight)) continue;
            const int target = b + term.block_offset;
            if (target < 0 || target >= m) continue;
            add_block(mat, b, target, n, term.kind);
        }
    }
    return mat;
}

BitMatrix hybrid_matrix(const DependencyMap& deps) {
    BitMatrix mat(deps.cells(), deps.cells());
    for (int i = 0; i < deps.cells(); ++i) {
        for (int j : deps.at(i)) mat.set(i, j, true);
    }
    return mat;
}

DependencyMap dependency_map_from_rules(const HybridSpec& spec) {
    const int m = spec.rows();
    const int n = spec.cols();
    DependencyMap deps(m, n);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            std::vector<int> sources;
            for (const auto& off : offsets(spec.at(r, c))) {
                const int sr = r + off.dr;
                const int sc = c + off.dc;
                if (sr < 0 || sr >= m || sc < 0 || sc >= n) continue;
                sources.push_back(sr * n + sc);
            }
            deps.assign(r * n + c, std::move(sources));
        }
    }
    return deps;
}

BitMatrix hybrid_matrix_from_rules(const HybridSpec& spec) { return hybrid_matrix(dependency_map_from_rules(spec)); }

DependencyMap to_dependency_map(const BitMatrix& mat, int m, int n) {
    require_positive(m, n);
    if (mat.rows() != m * n || mat.cols() != m * n) {
        throw Error(Errc::dimension_mismatch, "matrix is " + std::to_string(mat.rows()) + "x" +
                                                  std::to_string(mat.cols()) + ", expected side " +
                                                  std::to_string(m * n));
    }
    DependencyMap deps(m, n);
    for (int i = 0; i < m * n; ++i) deps.assign(i, mat.row_ones(i));
    return deps;
}

Grid apply(const BitMatrix& mat, const Grid& g) {
    if (mat.rows() != static_cast<int>(g.cells()) || mat.cols() != static_cast<int>(g.cells())) {
        throw Error(Errc::dimension_mismatch, "matrix side " + std::to_string(mat.rows()) + " does not match a " +
                                                  std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                                  " grid");
    }
    const auto x = g.flatten();
    const auto y = multiply(mat, x);
    return Grid::unflatten(g.rows(), g.cols(), y);
}

}  // namespace ca2d
