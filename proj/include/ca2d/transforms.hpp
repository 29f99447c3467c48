#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ca2d/grid.hpp"
#include "ca2d/rule.hpp"

namespace ca2d {

enum class Direction { top, bottom, left, right, top_left, top_right, bottom_left, bottom_right };

// The group-1 rule that moves an image one cell in `dir` per step.
RuleCode translation_rule(Direction dir) noexcept;
Direction opposite(Direction dir) noexcept;
Direction parse_direction(const std::string& name);
std::string to_string(Direction dir);

Grid translate(const Grid& g, Direction dir, std::uint64_t steps);

// XOR over the rule's offsets d of g shifted by 2^k * d. This is what
// evolve(g, rule, 2^k) produces as long as no copy reaches the border.
Grid replicate_prediction(const Grid& g, RuleCode rule, int k);

// Split lines for the four-region procedure. Region A is the columns left of
// split_col, B the rest; C is the rows above split_row, D the rest.
struct RegionPartition {
    int split_row = 0;
    int split_col = 0;

    static RegionPartition centered(int m, int n) { return {m / 2, n / 2}; }
};

// Two synchronous hybrid steps: (a on A, b on B), then (c on C, d on D).
Grid hybrid4(const Grid& g, RuleCode a, RuleCode b, RuleCode c, RuleCode d, RegionPartition part);
Grid hybrid4(const Grid& g, RuleCode a, RuleCode b, RuleCode c, RuleCode d);

// Named four-region procedures.
enum class HybridTransform { zoom_in, zoom_out, thicken_horizontal, thin_horizontal, thicken_vertical, thin_vertical };
std::array<RuleCode, 4> hybrid_rules(HybridTransform t) noexcept;
HybridTransform parse_hybrid_transform(const std::string& name);

enum class SeedKind { circle, square, plus, rectangle, custom };

struct SeedShape {
    SeedKind kind = SeedKind::square;
    // circle: radius; square: side; rectangle: height, width;
    // plus: bar length, bar breadth.
    int a = 0;
    int b = 0;
    // custom: cells relative to the pattern's own top-left corner.
    std::vector<std::pair<int, int>> cells;
    // Top-left corner (or centre for circle and plus); centred when unset.
    std::optional<std::pair<int, int>> anchor;
};

SeedKind parse_seed_kind(const std::string& name);

// Throws Errc::invalid_argument when the shape does not fit.
Grid seed(const SeedShape& shape, int m, int n);

struct BoundingBox {
    int top = 0;
    int left = 0;
    int bottom = 0;  // inclusive
    int right = 0;   // inclusive

    int height() const noexcept { return bottom - top + 1; }
    int width() const noexcept { return right - left + 1; }
    friend bool operator==(BoundingBox, BoundingBox) = default;
};

std::optional<BoundingBox> bounding_box(const Grid& g);

// 8-connected components of the ones.
int count_components(const Grid& g);

}  // namespace ca2d
