// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ca2d/io.hpp"
#include "ca2d/reversibility.hpp"
#include "ca2d/rule_matrix.hpp"
#include "ca2d/sweepers.hpp"
#include "ca2d/transforms.hpp"

namespace {

using ca2d::BitMatrix;
using ca2d::Grid;
using ca2d::RuleCode;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

const std::vector<std::vector<int>> kInput = {{0, 0, 1, 0}, {1, 1, 1, 0}, {1, 0, 1, 1}};

Outcome worked_example_rule170() {
    const Grid in = Grid::from_rows(kInput);
    const Grid expected = Grid::from_rows({{1, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}});
    (void)ca2d::step_uniform(in, RuleCode(170));
    const auto t0 = Clock::now();
    const Grid out = ca2d::step_uniform(in, RuleCode(170));
    const double us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    Outcome o;
    o.pass = out == expected && us < 1000.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "bit-exact %s, %.1f us", out == expected ? "yes" : "no", us);
    o.detail = buf;
    return o;
}

Outcome worked_example_hybrid_rows() {
    const auto spec = ca2d::HybridSpec::from_rows({{2, 2, 2, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}});
    const Grid out = ca2d::step_hybrid(Grid::from_rows(kInput), spec);
    const bool ok = out == Grid::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
    return {ok, ok ? "bit-exact" : "output differs"};
}

Outcome path_equivalence() {
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    std::size_t checks = 0;
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            std::vector<Grid> grids;
            for (std::uint64_t s = 0; s < 5; ++s) grids.push_back(ca2d::random_grid(m, n, 0.5, 1000 * m + 10 * n + s));
            for (unsigned v = 0; v < RuleCode::kCount; ++v) {
                const RuleCode rule(v);
                const BitMatrix direct = ca2d::rule_matrix(rule, m, n);
                const BitMatrix block = ca2d::block_rule_matrix(rule, m, n);
                for (const Grid& g : grids) {
                    const Grid stepped = ca2d::step_uniform(g, rule);
                    if (ca2d::apply(direct, g) != stepped || ca2d::apply(block, g) != stepped) ++mismatches;
                    ++checks;
                }
            }
        }
    }
    const double s = seconds_since(t0);
    return {mismatches == 0 && s < 60.0,
            std::to_string(mismatches) + " mismatches in " + std::to_string(checks) + " checks, " + fmt_seconds(s)};
}

Outcome transpose_identities() {
    int failures = 0;
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            if (ca2d::basic_matrix(1, m, n) != BitMatrix::identity(m * n)) ++failures;
            for (auto [low, high] : {std::pair{2u, 32u}, {4u, 64u}, {8u, 128u}, {16u, 256u}}) {
                if (ca2d::transpose(ca2d::basic_matrix(low, m, n)) != ca2d::basic_matrix(high, m, n)) ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(failures) + " failing identities over 25 sizes"};
}

// Matrix holding `diag` on its k-th superdiagonal and nothing else.
BitMatrix from_superdiagonal(int side, int k, const std::vector<std::uint8_t>& diag) {
    BitMatrix out(side, side);
    for (int i = 0; i < static_cast<int>(diag.size()); ++i) out.set(i, i + k, diag[i]);
    return out;
}

Outcome diagonal_structure() {
    int failures = 0;
    for (int m = 2; m <= 6; ++m) {
        for (int n = 3; n <= 6; ++n) {
            const int side = m * n;
            const std::vector<std::uint8_t> ones(side - n, 1);
            if (ca2d::basic_matrix(8, m, n) != from_superdiagonal(side, n, ones)) ++failures;
            const auto s1 = ca2d::boundary_sequence(ca2d::BoundaryKind::s1, n, side - 1);
            if (ca2d::basic_matrix(2, m, n) != from_superdiagonal(side, 1, s1)) ++failures;
            const auto s2 = ca2d::boundary_sequence(ca2d::BoundaryKind::s2, n, side - n + 1);
            if (ca2d::basic_matrix(16, m, n) != from_superdiagonal(side, n - 1, s2)) ++failures;
        }
    }
    return {failures == 0, std::to_string(failures) + " failing matrices over 20 sizes"};
}

Outcome reversibility_list() {
    const std::set<unsigned> listed = {1,   3,   5,   9,   17,  33,  65,  129, 257, 7,   11,  13,  19,  21,  25,  97,
                                       161, 193, 289, 321, 385, 15,  23,  27,  29,  225, 353, 417, 449, 31,  481};
    const auto report = ca2d::reversibility_report(ca2d::size_range(2, 6, 2, 6));
    std::set<unsigned> found;
    for (auto r : report.always_invertible()) found.insert(r.value());

    bool listed_unipotent = true;
    for (unsigned v : listed) listed_unipotent = listed_unipotent && ca2d::is_unipotent(RuleCode(v));
    bool excluded_singular = true;
    for (const auto& rr : report.rules) {
        if (found.count(rr.rule.value())) continue;
        const bool singular_somewhere = std::any_of(rr.ranks.begin(), rr.ranks.end(), [&, i = 0](int rank) mutable {
            const auto s = report.sizes[i++];
            return rank < s.rows * s.cols;
        });
        excluded_singular = excluded_singular && singular_somewhere;
    }

    std::vector<unsigned> extra;
    std::set_difference(found.begin(), found.end(), listed.begin(), listed.end(), std::back_inserter(extra));
    std::vector<unsigned> missing;
    std::set_difference(listed.begin(), listed.end(), found.begin(), found.end(), std::back_inserter(missing));

    std::ostringstream d;
    d << found.size() << " always invertible, " << missing.size() << " listed rules missing, " << extra.size()
      << " unlisted";
    if (!extra.empty()) {
        d << " (";
        for (std::size_t i = 0; i < extra.size() && i < 6; ++i) d << (i ? " " : "") << extra[i];
        if (extra.size() > 6) d << " ...";
        d << ")";
    }
    d << "; listed rules one-sided: " << (listed_unipotent ? "yes" : "no");
    d << "; excluded singular somewhere: " << (excluded_singular ? "yes" : "no");
    return {found == listed && listed_unipotent && excluded_singular, d.str()};
}

Outcome state_graph_criterion() {
    int failures = 0;
    for (auto [m, n] : {std::pair{2, 2}, {3, 3}}) {
        for (unsigned v = 0; v < RuleCode::kCount; ++v) {
            const RuleCode rule(v);
            const bool invertible = ca2d::rank(ca2d::rule_matrix(rule, m, n)) == m * n;
            const auto graph = ca2d::state_graph(rule, m, n);
            if (invertible != graph.is_permutation()) {
                ++failures;
                continue;
            }
            if (invertible && ca2d::order_of(rule, m, n) != ca2d::lcm_of(graph.cycle_lengths())) ++failures;
        }
    }
    return {failures == 0, std::to_string(failures) + " disagreements over 1024 rule/size pairs"};
}

Outcome replication_law() {
    ca2d::SeedShape blob;
    blob.kind = ca2d::SeedKind::square;
    blob.a = 5;
    const Grid g = ca2d::seed(blob, 64, 64);
    std::ostringstream d;
    bool ok = true;
    for (unsigned v : {7u, 170u, 31u, 511u}) {
        const RuleCode rule(v);
        const Grid evolved = ca2d::evolve(g, rule, 8);
        const bool exact = evolved == ca2d::replicate_prediction(g, rule, 3);
        const int copies = ca2d::count_components(evolved);
        const bool disjoint = evolved.popcount() == g.popcount() * static_cast<std::size_t>(ca2d::group_of(rule));
        ok = ok && exact && disjoint && copies == ca2d::group_of(rule);
        d << (v == 7 ? "" : ", ") << "rule " << v << ": " << copies << " copies" << (exact ? "" : " MISMATCH");
    }
    return {ok, d.str()};
}

Outcome hybrid_transforms() {
    ca2d::SeedShape rect;
    rect.kind = ca2d::SeedKind::rectangle;
    rect.a = 50;
    rect.b = 70;
    const Grid r = ca2d::seed(rect, 100, 100);
    const auto box = ca2d::bounding_box(r).value();
    const Grid thick = ca2d::hybrid4(r, RuleCode(2), RuleCode(32), RuleCode(1), RuleCode(1));
    const int widened = ca2d::bounding_box(thick)->width() - box.width();
    const bool restored = ca2d::hybrid4(thick, RuleCode(32), RuleCode(2), RuleCode(1), RuleCode(1)) == r;

    ca2d::SeedShape square;
    square.kind = ca2d::SeedKind::square;
    square.a = 40;
    const Grid s = ca2d::seed(square, 100, 100);
    const auto sbox = ca2d::bounding_box(s).value();
    const auto in = ca2d::bounding_box(ca2d::hybrid4(s, RuleCode(2), RuleCode(32), RuleCode(8), RuleCode(128))).value();
    const auto out = ca2d::bounding_box(ca2d::hybrid4(s, RuleCode(32), RuleCode(2), RuleCode(128), RuleCode(8))).value();

    const bool ok = widened == 2 && restored && in.width() == sbox.width() + 2 && in.height() == sbox.height() + 2 &&
                    out.width() == sbox.width() - 2 && out.height() == sbox.height() - 2;
    std::ostringstream d;
    d << "thicken +" << widened << " cols, thin restores " << (restored ? "yes" : "no") << ", zoom in "
      << sbox.width() << "->" << in.width() << "x" << in.height() << ", zoom out " << sbox.width() << "->"
      << out.width() << "x" << out.height();
    return {ok, d.str()};
}

Outcome sweep_properties() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(2024);
    int failures = 0;
    std::uint64_t worst_iterations = 0;
    std::string first_failure;
    for (int instance = 0; instance < 100; ++instance) {
        // Instances are drawn so the target block around the destination lies
        // inside the grid.
        int m = 0;
        int n = 0;
        int count = 0;
        int reach = 0;
        do {
            m = 10 + static_cast<int>(gen() % 91);
            n = 10 + static_cast<int>(gen() % 71);
            count = 1 + static_cast<int>(gen() % std::min<std::uint64_t>(200, m * n / 2));
            reach = static_cast<int>(std::ceil(std::sqrt(double(count)))) + 2;
        } while (2 * reach + 1 > std::min(m, n));
        Grid g(m, n);
        while (static_cast<int>(g.popcount()) < count) g.set(gen() % m, gen() % n, true);
        ca2d::SweepConfig cfg;
        cfg.mode = ca2d::SweepMode::guarded;
        cfg.dest_row = reach + static_cast<int>(gen() % (m - 2 * reach));
        cfg.dest_col = reach + static_cast<int>(gen() % (n - 2 * reach));

        const std::uint64_t budget = 4 * static_cast<std::uint64_t>(std::max(m, n));
        auto prev = ca2d::metrics(g, cfg);
        bool ok = true;
        bool fixed = false;
        std::uint64_t it = 0;
        while (it < budget && !fixed) {
            Grid next = ca2d::sweep_iteration(g, cfg);
            ++it;
            const auto cur = ca2d::metrics(next, cfg);
            ok = ok && cur.population == prev.population && cur.distance <= prev.distance;
            fixed = next == g;
            g = std::move(next);
            prev = cur;
        }
        const auto bound = static_cast<std::uint64_t>(reach);
        if (!(ok && fixed && prev.radius <= bound)) {
            ++failures;
            if (first_failure.empty()) {
                std::ostringstream d;
                d << "; first failure " << m << "x" << n << " pop " << count << ": "
                  << (!ok ? "invariant broken" : !fixed ? "no fixed point" : "radius " + std::to_string(prev.radius) +
                                                                             " > " + std::to_string(bound));
                first_failure = d.str();
            }
        }
        worst_iterations = std::max(worst_iterations, it);
    }
    const double s = seconds_since(t0);
    return {failures == 0 && s < 120.0, std::to_string(failures) + " failing instances of 100, longest run " +
                                            std::to_string(worst_iterations) + " iterations, " + fmt_seconds(s) + first_failure};
}

Outcome sweep_linearity() {
    std::mt19937_64 gen(77);
    int failures = 0;
    for (int pair = 0; pair < 50; ++pair) {
        const int m = 5 + static_cast<int>(gen() % 60);
        const int n = 5 + static_cast<int>(gen() % 60);
        ca2d::SweepConfig cfg;
        cfg.mode = ca2d::SweepMode::xor_rules;
        cfg.dest_row = static_cast<int>(gen() % m);
        cfg.dest_col = static_cast<int>(gen() % n);
        const Grid a = ca2d::random_grid(m, n, 0.3, gen());
        const Grid b = ca2d::random_grid(m, n, 0.3, gen());
        if (ca2d::sweep_iteration(a ^ b, cfg) != (ca2d::sweep_iteration(a, cfg) ^ ca2d::sweep_iteration(b, cfg))) {
            ++failures;
        }
    }
    return {failures == 0, std::to_string(failures) + " failing pairs of 50"};
}

Outcome frame_dumps(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    Grid g(100, 80);
    std::mt19937_64 gen(40);
    while (g.popcount() < 200) g.set(gen() % 100, gen() % 80, true);
    ca2d::SweepConfig cfg;
    cfg.mode = ca2d::SweepMode::guarded;
    cfg.dest_row = 40;
    cfg.dest_col = 40;
    cfg.iterations = 60;
    std::size_t written = 0;
    bool readable = true;
    ca2d::sweep(g, cfg, [&](std::uint64_t it, const Grid& frame, const ca2d::SweepSample&) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%06llu.pbm", static_cast<unsigned long long>(it));
        const auto path = (dir / name).string();
        ca2d::write_image(frame, path, ca2d::ImageFormat::p4);
        readable = readable && ca2d::read_image(path) == frame;
        ++written;
    });
    return {written == cfg.iterations + 1 && readable,
            "informational: " + std::to_string(written) + " sweep frames in " + dir.string()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path frames = argc > 1 ? argv[1] : "acceptance_frames";
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"worked example, rule 170", worked_example_rule170},
        {"worked example, hybrid rows 2/3/4", worked_example_hybrid_rows},
        {"step == rule matrix == block matrix", path_equivalence},
        {"identity and transpose pairs", transpose_identities},
        {"basic matrix diagonals", diagonal_structure},
        {"always-invertible list", reversibility_list},
        {"invertible iff state graph is a permutation", state_graph_criterion},
        {"replication after 2^k steps", replication_law},
        {"four-region hybrid transforms", hybrid_transforms},
        {"guarded sweep gathers", sweep_properties},
        {"xor sweep superposition", sweep_linearity},
        {"frame dumps", [&] { return frame_dumps(frames); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu  %-44s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
