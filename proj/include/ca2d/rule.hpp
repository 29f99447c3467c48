#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ca2d {

// Neighbour weights around the centre cell (rows grow downward):
//
//     64 128 256
//     32   1   2
//     16   8   4
//
// A rule's value is the sum of the weights it depends on; its next state is
// the XOR of those cells.
class RuleCode {
public:
    static constexpr unsigned kCount = 512;

    constexpr RuleCode() = default;
    explicit RuleCode(unsigned value);

    constexpr std::uint16_t value() const noexcept { return value_; }
    constexpr bool has(unsigned weight) const noexcept { return (value_ & weight) != 0; }

    friend constexpr bool operator==(RuleCode, RuleCode) = default;
    friend constexpr auto operator<=>(RuleCode, RuleCode) = default;

private:
    std::uint16_t value_ = 0;
};

struct NeighborOffset {
    int dr = 0;
    int dc = 0;

    friend constexpr bool operator==(NeighborOffset, NeighborOffset) = default;
};

// The nine single-dependency rules in ascending weight order.
inline constexpr std::array<unsigned, 9> kFundamentalWeights = {1, 2, 4, 8, 16, 32, 64, 128, 256};

bool is_fundamental(unsigned weight) noexcept;

// Offset read by a fundamental rule. Throws for non-fundamental weights.
NeighborOffset offset_of(unsigned weight);

// Fundamental rules whose XOR is `rule`, ascending.
std::vector<RuleCode> decompose(RuleCode rule);

// Number of dependencies (popcount of the mask).
int group_of(RuleCode rule) noexcept;

RuleCode xor_rules(RuleCode a, RuleCode b) noexcept;

// Offsets of all set weights, ascending weight order.
std::vector<NeighborOffset> offsets(RuleCode rule);

// Parses a decimal rule number, rejecting anything outside 0..511.
RuleCode parse_rule(const std::string& text);

}  // namespace ca2d
