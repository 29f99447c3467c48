#include "ca2d/transforms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

struct DirectionEntry {
    Direction dir;
    const char* name;
    unsigned rule;
};

constexpr std::array<DirectionEntry, 8> kDirections = {{
    {Direction::top, "top", 8},
    {Direction::bottom, "bottom", 128},
    {Direction::left, "left", 2},
    {Direction::right, "right", 32},
    {Direction::top_left, "top-left", 4},
    {Direction::top_right, "top-right", 16},
    {Direction::bottom_left, "bottom-left", 256},
    {Direction::bottom_right, "bottom-right", 64},
}};

const DirectionEntry& entry(Direction dir) {
    return *std::find_if(kDirections.begin(), kDirections.end(), [dir](const auto& e) { return e.dir == dir; });
}

}  // namespace

RuleCode translation_rule(Direction dir) noexcept { return RuleCode(entry(dir).rule); }

Direction opposite(Direction dir) noexcept {
    switch (dir) {
        case Direction::top: return Direction::bottom;
        case Direction::bottom: return Direction::top;
        case Direction::left: return Direction::right;
        case Direction::right: return Direction::left;
        case Direction::top_left: return Direction::bottom_right;
        case Direction::top_right: return Direction::bottom_left;
        case Direction::bottom_left: return Direction::top_right;
        case Direction::bottom_right: return Direction::top_left;
    }
    return dir;
}

Direction parse_direction(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return ch == '_' ? '-' : std::tolower(ch); });
    for (const auto& e : kDirections) {
        if (key == e.name) return e.dir;
    }
    throw Error(Errc::invalid_argument, "unknown direction '" + name + "'");
}

std::string to_string(Direction dir) { return entry(dir).name; }

Grid translate(const Grid& g, Direction dir, std::uint64_t steps) { return evolve(g, translation_rule(dir), steps); }

Grid replicate_prediction(const Grid& g, RuleCode rule, int k) {
    if (k < 1 || k > 30) throw Error(Errc::invalid_argument, "replication exponent must be in 1..30");
    const int scale = 1 << k;
    Grid out(g.rows(), g.cols());
    for (const auto& off : offsets(rule)) out ^= shifted(g, {off.dr * scale, off.dc * scale});
    return out;
}

Grid hybrid4(const Grid& g, RuleCode a, RuleCode b, RuleCode c, RuleCode d, RegionPartition part) {
    HybridSpec columns(g.rows(), g.cols());
    HybridSpec rows(g.rows(), g.cols());
    for (int r = 0; r < g.rows(); ++r) {
        for (int col = 0; col < g.cols(); ++col) {
            columns.set(r, col, col < part.split_col ? a : b);
            rows.set(r, col, r < part.split_row ? c : d);
        }
    }
    return step_hybrid(step_hybrid(g, columns), rows);
}

Grid hybrid4(const Grid& g, RuleCode a, RuleCode b, RuleCode c, RuleCode d) {
    return hybrid4(g, a, b, c, d, RegionPartition::centered(g.rows(), g.cols()));
}

std::array<RuleCode, 4> hybrid_rules(HybridTransform t) noexcept {
    auto rules = [](unsigned a, unsigned b, unsigned c, unsigned d) {
        return std::array<RuleCode, 4>{RuleCode(a), RuleCode(b), RuleCode(c), RuleCode(d)};
    };
    switch (t) {
        case HybridTransform::zoom_in: return rules(2, 32, 8, 128);
        case HybridTransform::zoom_out: return rules(32, 2, 128, 8);
        case HybridTransform::thicken_horizontal: return rules(2, 32, 1, 1);
        case HybridTransform::thin_horizontal: return rules(32, 2, 1, 1);
        case HybridTransform::thicken_vertical: return rules(1, 1, 8, 128);
        case HybridTransform::thin_vertical: return rules(1, 1, 128, 8);
    }
    return rules(1, 1, 1, 1);
}

HybridTransform parse_hybrid_transform(const std::string& name) {
    if (name == "zoom-in") return HybridTransform::zoom_in;
    if (name == "zoom-out") return HybridTransform::zoom_out;
    if (name == "thicken" || name == "thicken-h") return HybridTransform::thicken_horizontal;
    if (name == "thin" || name == "thin-h") return HybridTransform::thin_horizontal;
    if (name == "thicken-v") return HybridTransform::thicken_vertical;
    if (name == "thin-v") return HybridTransform::thin_vertical;
    throw Error(Errc::invalid_argument, "unknown hybrid transform '" + name + "'");
}

SeedKind parse_seed_kind(const std::string& name) {
    if (name == "circle") return SeedKind::circle;
    if (name == "square") return SeedKind::square;
    if (name == "plus") return SeedKind::plus;
    if (name == "rectangle" || name == "rect") return SeedKind::rectangle;
    if (name == "custom") return SeedKind::custom;
    throw Error(Errc::invalid_argument, "unknown seed shape '" + name + "'");
}

Grid seed(const SeedShape& shape, int m, int n) {
    Grid g(m, n);
    auto fail = [&](const std::string& why) -> Grid {
        throw Error(Errc::invalid_argument, "seed shape does not fit a " + std::to_string(m) + "x" +
                                                std::to_string(n) + " grid: " + why);
    };
    auto fill_block = [&](int top, int left, int height, int width) {
        if (height <= 0 || width <= 0) fail("non-positive extent");
        if (top < 0 || left < 0 || top + height > m || left + width > n) fail("block leaves the grid");
        for (int r = top; r < top + height; ++r) {
            for (int c = left; c < left + width; ++c) g.set(r, c, true);
        }
    };

    switch (shape.kind) {
        case SeedKind::square:
        case SeedKind::rectangle: {
            const int height = shape.a;
            const int width = shape.kind == SeedKind::square ? shape.a : shape.b;
            const auto [top, left] = shape.anchor.value_or(std::pair{(m - height) / 2, (n - width) / 2});
            fill_block(top, left, height, width);
            break;
        }
        case SeedKind::plus: {
            const int length = shape.a;
            const int breadth = shape.b;
            const auto [cr, cc] = shape.anchor.value_or(std::pair{m / 2, n / 2});
            fill_block(cr - breadth / 2, cc - length / 2, breadth, length);
            fill_block(cr - length / 2, cc - breadth / 2, length, breadth);
            break;
        }
        case SeedKind::circle: {
            const int radius = shape.a;
            const auto [cr, cc] = shape.anchor.value_or(std::pair{m / 2, n / 2});
            if (radius < 0) fail("negative radius");
            if (cr - radius < 0 || cc - radius < 0 || cr + radius >= m || cc + radius >= n) fail("circle leaves the grid");
            for (int r = cr - radius; r <= cr + radius; ++r) {
                for (int c = cc - radius; c <= cc + radius; ++c) {
                    const long dr = r - cr;
                    const long dc = c - cc;
                    if (dr * dr + dc * dc <= long(radius) * radius) g.set(r, c, true);
                }
            }
            break;
        }
        case SeedKind::custom: {
            if (shape.cells.empty()) fail("custom pattern has no cells");
            int h = 0;
            int w = 0;
            for (auto [r, c] : shape.cells) {
                if (r < 0 || c < 0) fail("custom cell with negative coordinate");
                h = std::max(h, r + 1);
                w = std::max(w, c + 1);
            }
            const auto [top, left] = shape.anchor.value_or(std::pair{(m - h) / 2, (n - w) / 2});
            if (top < 0 || left < 0 || top + h > m || left + w > n) fail("custom pattern leaves the grid");
            for (auto [r, c] : shape.cells) g.set(top + r, left + c, true);
            break;
        }
    }
    return g;
}

std::optional<BoundingBox> bounding_box(const Grid& g) {
    std::optional<BoundingBox> box;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (!g.get(r, c)) continue;
            if (!box) {
                box = BoundingBox{r, c, r, c};
            } else {
                box->top = std::min(box->top, r);
                box->left = std::min(box->left, c);
                box->bottom = std::max(box->bottom, r);
                box->right = std::max(box->right, c);
            }
        }
    }
    return box;
}

int count_components(const Grid& g) {
    std::vector<std::uint8_t> seen(g.cells(), 0);
    std::vector<std::pair<int, int>> stack;
    int components = 0;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (!g.get(r, c) || seen[std::size_t(r) * g.cols() + c]) continue;
            ++components;
            seen[std::size_t(r) * g.cols() + c] = 1;
            stack.push_back({r, c});
            while (!stack.empty()) {
                auto [cr, cc] = stack.back();
                stack.pop_back();
                for (int dr = -1; dr <= 1; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        const int nr = cr + dr;
                        const int nc = cc + dc;
                        if (!g.get(nr, nc)) continue;
                        auto& s = seen[std::size_t(nr) * g.cols() + nc];
                        if (s) continue;
                        s = 1;
                        stack.push_back({nr, nc});
                    }
                }
            }
        }
    }
    return components;
}

}  // namespace ca2d
