#include "ca2d/rule.hpp"

#include <bit>
#include <charconv>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

constexpr std::array<NeighborOffset, 9> kOffsets = {{
    {0, 0},    // 1
    {0, 1},    // 2
    {1, 1},    // 4
    {1, 0},    // 8
    {1, -1},   // 16
    {0, -1},   // 32
    {-1, -1},  // 64
    {-1, 0},   // 128
    {-1, 1},   // 256
}};

}  // namespace

RuleCode::RuleCode(unsigned value) : value_(static_cast<std::uint16_t>(value)) {
    if (value >= kCount) {
        throw Error(Errc::invalid_argument, "rule " + std::to_string(value) + " is outside 0..511");
    }
}

bool is_fundamental(unsigned weight) noexcept {
    return weight != 0 && weight < RuleCode::kCount && std::has_single_bit(weight);
}

NeighborOffset offset_of(unsigned weight) {
    if (!is_fundamental(weight)) {
        throw Error(Errc::invalid_argument, "rule " + std::to_string(weight) + " is not a fundamental rule");
    }
    return kOffsets[std::countr_zero(weight)];
}

std::vector<RuleCode> decompose(RuleCode rule) {
    std::vector<RuleCode> parts;
    for (unsigned w : kFundamentalWeights) {
        if (rule.has(w)) parts.emplace_back(w);
    }
    return parts;
}

int group_of(RuleCode rule) noexcept { return std::popcount(static_cast<unsigned>(rule.value())); }

RuleCode xor_rules(RuleCode a, RuleCode b) noexcept {
    return RuleCode(static_cast<unsigned>(a.value() ^ b.value()));
}

std::vector<NeighborOffset> offsets(RuleCode rule) {
    std::vector<NeighborOffset> out;
    for (std::size_t bit = 0; bit < kOffsets.size(); ++bit) {
        if (rule.value() & (1u << bit)) out.push_back(kOffsets[bit]);
    }
    return out;
}

RuleCode parse_rule(const std::string& text) {
    unsigned value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error(Errc::invalid_argument, "not a rule number: '" + text + "'");
    }
    return RuleCode(value);
}

}  // namespace ca2d
