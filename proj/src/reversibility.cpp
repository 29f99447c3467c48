#include "ca2d/reversibility.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "ca2d/error.hpp"
#include "ca2d/grid.hpp"
#include "ca2d/rule_matrix.hpp"

namespace ca2d {

std::vector<GridSize> size_range(int m_lo, int m_hi, int n_lo, int n_hi) {
    if (m_lo <= 0 || n_lo <= 0 || m_hi < m_lo || n_hi < n_lo) {
        throw Error(Errc::invalid_argument, "size ranges must be non-empty and positive");
    }
    std::vector<GridSize> sizes;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) sizes.push_back({m, n});
    }
    return sizes;
}

std::vector<RuleCode> ReversibilityReport::always_invertible() const {
    std::vector<RuleCode> out;
    for (const auto& r : rules) {
        if (r.always_invertible) out.push_back(r.rule);
    }
    return out;
}

ReversibilityReport reversibility_report(const std::vector<GridSize>& sizes) {
    if (sizes.empty()) throw Error(Errc::invalid_argument, "no sizes to test");
    ReversibilityReport report;
    report.sizes = sizes;
    report.rules.reserve(RuleCode::kCount);
    for (unsigned v = 0; v < RuleCode::kCount; ++v) {
        RuleReversibility entry;
        entry.rule = RuleCode(v);
        entry.always_invertible = true;
        for (const auto& s : sizes) {
            const int rk = rank(rule_matrix(entry.rule, s.rows, s.cols));
            entry.ranks.push_back(rk);
            if (rk != s.rows * s.cols) entry.always_invertible = false;
        }
        report.rules.push_back(std::move(entry));
    }
    return report;
}

std::vector<RuleCode> always_invertible_set(int m_lo, int m_hi, int n_lo, int n_hi) {
    return reversibility_report(size_range(m_lo, m_hi, n_lo, n_hi)).always_invertible();
}

bool is_unipotent(RuleCode rule) noexcept {
    if (!rule.has(1)) return false;
    const unsigned rest = rule.value() & ~1u;
    constexpr unsigned kForward = 2 | 4 | 8 | 16;
    constexpr unsigned kBackward = 32 | 64 | 128 | 256;
    return (rest & ~kForward) == 0 || (rest & ~kBackward) == 0;
}

std::vector<RuleCode> unipotent_rules() {
    std::vector<RuleCode> out;
    for (unsigned v = 0; v < RuleCode::kCount; ++v) {
        if (is_unipotent(RuleCode(v))) out.emplace_back(v);
    }
    return out;
}

std::string format_report(const ReversibilityReport& report) {
    std::ostringstream os;
    os << "rule group";
    for (const auto& s : report.sizes) {
        std::ostringstream label;
        label << s.rows << "x" << s.cols;
        os << ' ' << std::setw(5) << label.str();
    }
    os << " verdict\n";
    for (const auto& r : report.rules) {
        os << std::setw(4) << r.rule.value() << ' ' << std::setw(5) << group_of(r.rule);
        for (std::size_t k = 0; k < r.ranks.size(); ++k) {
            const auto& s = report.sizes[k];
            std::string cell = std::to_string(r.ranks[k]);
            if (r.ranks[k] == s.rows * s.cols) cell += '*';
            os << ' ' << std::setw(5) << cell;
        }
        os << ' ' << (r.always_invertible ? "invertible" : "singular") << '\n';
    }
    const auto found = report.always_invertible();
    const auto expected = unipotent_rules();
    os << "# always invertible (" << found.size() << "):";
    for (auto r : found) os << ' ' << r.value();
    os << '\n';
    os << "# matches unipotent list of " << expected.size() << ": " << (found == expected ? "yes" : "no") << '\n';
    return os.str();
}

bool StateGraph::is_permutation() const noexcept { return transient_count() == 0; }

std::size_t StateGraph::transient_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(depth.begin(), depth.end(), [](int d) { return d > 0; }));
}

std::vector<std::size_t> StateGraph::cycle_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& c : cycles) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

StateGraph state_graph(RuleCode rule, int m, int n) {
    if (m <= 0 || n <= 0) throw Error(Errc::invalid_argument, "state graph needs positive dimensions");
    if (m * n > StateGraph::kMaxCells) {
        throw Error(Errc::limit_exceeded, "state graph limited to " + std::to_string(StateGraph::kMaxCells) +
                                              " cells, got " + std::to_string(m * n));
    }
    const int cells = m * n;
    const std::uint32_t count = std::uint32_t{1} << cells;
    StateGraph graph;
    graph.rows = m;
    graph.cols = n;
    graph.successor.resize(count);

    for (std::uint32_t s = 0; s < count; ++s) {
        Grid g(m, n);
        for (int i = 0; i < cells; ++i) {
            if ((s >> i) & 1u) g.set(i / n, i % n, true);
        }
        const Grid next = step_uniform(g, rule);
        std::uint32_t t = 0;
        for (int i = 0; i < cells; ++i) {
            if (next.get(i / n, i % n)) t |= std::uint32_t{1} << i;
        }
        graph.successor[s] = t;
    }

    // 0 = unvisited, 1 = on the current walk, 2 = finished.
    std::vector<std::uint8_t> state(count, 0);
    std::vector<std::uint8_t> on_cycle(count, 0);
    std::vector<std::uint32_t> walk;
    for (std::uint32_t start = 0; start < count; ++start) {
        if (state[start]) continue;
        walk.clear();
        std::uint32_t s = start;
        while (state[s] == 0) {
            state[s] = 1;
            walk.push_back(s);
            s = graph.successor[s];
        }
        if (state[s] == 1) {
            auto it = std::find(walk.begin(), walk.end(), s);
            std::vector<std::uint32_t> cycle(it, walk.end());
            for (auto c : cycle) on_cycle[c] = 1;
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            graph.cycles.push_back(std::move(cycle));
        }
        for (auto w : walk) state[w] = 2;
    }
    std::sort(graph.cycles.begin(), graph.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    // Depths by breadth-first search backwards from the cycles.
    std::vector<std::vector<std::uint32_t>> preds(count);
    for (std::uint32_t s = 0; s < count; ++s) preds[graph.successor[s]].push_back(s);
    graph.depth.assign(count, -1);
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t s = 0; s < count; ++s) {
        if (on_cycle[s]) {
            graph.depth[s] = 0;
            frontier.push_back(s);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto s : frontier) {
            for (auto p : preds[s]) {
                if (graph.depth[p] < 0) {
                    graph.depth[p] = graph.depth[s] + 1;
                    next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return graph;
}

std::optional<std::uint64_t> order_of(RuleCode rule, int m, int n, std::uint64_t max_iterations) {
    const BitMatrix mat = rule_matrix(rule, m, n);
    if (rank(mat) != mat.rows()) return std::nullopt;
    const BitMatrix id = BitMatrix::identity(mat.rows());
    BitMatrix power = mat;
    for (std::uint64_t p = 1; p <= max_iterations; ++p) {
        if (power == id) return p;
        power = multiply(power, mat);
    }
    throw Error(Errc::limit_exceeded, "order of rule " + std::to_string(rule.value()) + " exceeds " +
                                          std::to_string(max_iterations));
}

std::uint64_t lcm_of(const std::vector<std::size_t>& values) {
    std::uint64_t acc = 1;
    for (auto v : values) acc = std::lcm(acc, static_cast<std::uint64_t>(v));
    return acc;
}

}  // namespace ca2d
