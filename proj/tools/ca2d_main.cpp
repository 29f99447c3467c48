// ca2d command-line tool. Talks to the engine only through the C API.

#include <array>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ca2d/ca2d.h"

namespace {

struct GridDeleter {
    void operator()(ca2d_grid* g) const { ca2d_grid_destroy(g); }
};
struct HybridDeleter {
    void operator()(ca2d_hybrid* h) const { ca2d_hybrid_destroy(h); }
};
struct MatrixDeleter {
    void operator()(ca2d_matrix* m) const { ca2d_matrix_destroy(m); }
};
struct GraphDeleter {
    void operator()(ca2d_state_graph* s) const { ca2d_state_graph_destroy(s); }
};
struct FreeDeleter {
    void operator()(char* p) const { ca2d_free(p); }
};

using GridPtr = std::unique_ptr<ca2d_grid, GridDeleter>;
using HybridPtr = std::unique_ptr<ca2d_hybrid, HybridDeleter>;
using MatrixPtr = std::unique_ptr<ca2d_matrix, MatrixDeleter>;
using GraphPtr = std::unique_ptr<ca2d_state_graph, GraphDeleter>;

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(ca2d_status status) {
    if (status != CA2D_OK) throw CliError(std::string(ca2d_status_name(status)) + ": " + ca2d_last_error());
}

std::string take_string(char* raw, size_t len) {
    std::unique_ptr<char, FreeDeleter> owned(raw);
    return std::string(raw, len);
}

struct Size {
    int rows = 0;
    int cols = 0;
};

Size parse_size(const std::string& text) {
    const auto x = text.find_first_of("xX,");
    if (x == std::string::npos) throw CliError("size must look like ROWSxCOLS, got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    } catch (const std::exception&) {
        throw CliError("size must look like ROWSxCOLS, got '" + text + "'");
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CliError("range must look like LO..HI, got '" + text + "'");
    }
}

std::vector<unsigned> parse_rule_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<unsigned>(std::stoul(item)));
        } catch (const std::exception&) {
            throw CliError("bad rule number '" + item + "'");
        }
    }
    return out;
}

ca2d_image_format parse_format(const std::string& name) {
    if (name == "p1") return CA2D_PBM_P1;
    if (name == "p4") return CA2D_PBM_P4;
    throw CliError("unknown image format '" + name + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot open '" + path + "' for writing");
    out << data;
    if (!out) throw CliError("error writing '" + path + "'");
}

void write_grid(const ca2d_grid* g, const std::string& path, const std::string& format) {
    char* raw = nullptr;
    size_t len = 0;
    check(ca2d_grid_format(g, parse_format(format), &raw, &len));
    write_text(path, take_string(raw, len));
}

// Grid source shared by the image-producing subcommands.
struct InputOptions {
    std::string path;
    std::string random_size;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string shape;
    int a = 0;
    int b = 0;
    std::string shape_size = "100x100";

    void attach(CLI::App* app, bool with_shapes) {
        app->add_option("-i,--input", path, "Input PBM image (P1 or P4)");
        app->add_option("--random", random_size, "Random ROWSxCOLS grid instead of an input file");
        app->add_option("--density", density, "Fill density for --random")->check(CLI::Range(0.0, 1.0));
        app->add_option("--seed", seed, "Seed for --random");
        if (with_shapes) {
            app->add_option("--shape", shape, "Seed shape: circle, square, plus, rectangle");
            app->add_option("--a", a, "circle radius, square side, rectangle height or plus length");
            app->add_option("--b", b, "rectangle width or plus breadth");
            app->add_option("--size", shape_size, "Grid ROWSxCOLS for --shape");
        }
    }

    GridPtr load() const {
        const int sources = !path.empty() + !random_size.empty() + !shape.empty();
        if (sources != 1) throw CliError("give exactly one of --input, --random or --shape");
        ca2d_grid* raw = nullptr;
        if (!path.empty()) {
            check(ca2d_grid_read(path.c_str(), &raw));
        } else if (!random_size.empty()) {
            const Size s = parse_size(random_size);
            check(ca2d_grid_random(s.rows, s.cols, density, seed, &raw));
        } else {
            const Size s = parse_size(shape_size);
            ca2d_seed_shape spec{};
            if (shape == "circle") {
                spec.kind = CA2D_SEED_CIRCLE;
            } else if (shape == "square") {
                spec.kind = CA2D_SEED_SQUARE;
            } else if (shape == "plus") {
                spec.kind = CA2D_SEED_PLUS;
            } else if (shape == "rectangle" || shape == "rect") {
                spec.kind = CA2D_SEED_RECTANGLE;
            } else {
                throw CliError("unknown shape '" + shape + "'");
            }
            spec.a = a;
            spec.b = b;
            check(ca2d_seed(&spec, s.rows, s.cols, &raw));
        }
        return GridPtr(raw);
    }
};

void add_version_flag(CLI::App* app) {
    app->add_flag_callback(
        "--version",
        [] {
            std::cout << "ca2d " << ca2d_version() << "\n";
            throw CLI::Success();
        },
        "Print the version and exit");
}

// ---- step

struct StepOptions {
    InputOptions input;
    std::optional<unsigned> rule;
    std::string rules_file;
    std::uint64_t steps = 1;
    bool via_matrix = false;
    std::string output;
    std::string format = "p1";
};

void run_step(const StepOptions& opt) {
    if (opt.rule.has_value() == !opt.rules_file.empty()) throw CliError("give exactly one of --rule or --rules-file");
    GridPtr grid = opt.input.load();
    ca2d_grid* raw = nullptr;
    if (opt.via_matrix) {
        int rows = 0;
        int cols = 0;
        check(ca2d_grid_size(grid.get(), &rows, &cols));
        ca2d_matrix* m = nullptr;
        if (opt.rule) {
            check(ca2d_matrix_rule(*opt.rule, rows, cols, &m));
        } else {
            ca2d_hybrid* h = nullptr;
            check(ca2d_hybrid_read(opt.rules_file.c_str(), &h));
            HybridPtr spec(h);
            check(ca2d_matrix_hybrid(spec.get(), &m));
        }
        MatrixPtr mat(m);
        GridPtr cur(nullptr);
        check(ca2d_grid_clone(grid.get(), &raw));
        cur.reset(raw);
        for (std::uint64_t t = 0; t < opt.steps; ++t) {
            check(ca2d_matrix_apply(mat.get(), cur.get(), &raw));
            cur.reset(raw);
        }
        write_grid(cur.get(), opt.output, opt.format);
        return;
    }
    if (opt.rule) {
        check(ca2d_step_uniform(grid.get(), *opt.rule, opt.steps, &raw));
    } else {
        ca2d_hybrid* h = nullptr;
        check(ca2d_hybrid_read(opt.rules_file.c_str(), &h));
        HybridPtr spec(h);
        check(ca2d_step_hybrid(grid.get(), spec.get(), opt.steps, &raw));
    }
    GridPtr out(raw);
    write_grid(out.get(), opt.output, opt.format);
}

// ---- matrix

struct MatrixOptions {
    std::optional<unsigned> rule;
    std::string rules_file;
    std::string dependencies;
    std::string size;
    bool block = false;
    bool as_dependencies = false;
    bool rank_only = false;
    std::string output;
};

void run_matrix(const MatrixOptions& opt) {
    const int sources = opt.rule.has_value() + !opt.rules_file.empty() + !opt.dependencies.empty();
    if (sources != 1) throw CliError("give exactly one of --rule, --rules-file or --dependencies");
    if (opt.block && !opt.rule) throw CliError("--block needs --rule");
    ca2d_matrix* raw = nullptr;
    Size s;
    if (opt.rule) {
        if (opt.size.empty()) throw CliError("--rule needs --size ROWSxCOLS");
        s = parse_size(opt.size);
        if (opt.block) {
            check(ca2d_matrix_block(*opt.rule, s.rows, s.cols, &raw));
        } else {
            check(ca2d_matrix_rule(*opt.rule, s.rows, s.cols, &raw));
        }
    } else if (!opt.rules_file.empty()) {
        ca2d_hybrid* h = nullptr;
        check(ca2d_hybrid_read(opt.rules_file.c_str(), &h));
        HybridPtr spec(h);
        check(ca2d_hybrid_size(spec.get(), &s.rows, &s.cols));
        check(ca2d_matrix_hybrid(spec.get(), &raw));
    } else {
        if (opt.size.empty()) throw CliError("--dependencies needs --size ROWSxCOLS");
        s = parse_size(opt.size);
        const std::string text = read_text(opt.dependencies);
        check(ca2d_matrix_from_dependencies(text.data(), text.size(), s.rows, s.cols, &raw));
    }
    MatrixPtr mat(raw);

    if (opt.rank_only) {
        int r = 0;
        check(ca2d_matrix_rank(mat.get(), &r));
        const int side = s.rows * s.cols;
        write_text(opt.output, "rank " + std::to_string(r) + " of " + std::to_string(side) + " (" +
                                   (r == side ? "invertible" : "singular") + ")\n");
        return;
    }
    char* text = nullptr;
    size_t len = 0;
    if (opt.as_dependencies) {
        check(ca2d_matrix_dependencies(mat.get(), s.rows, s.cols, &text, &len));
    } else {
        check(ca2d_matrix_format(mat.get(), &text, &len));
    }
    write_text(opt.output, take_string(text, len));
}

// ---- verify

struct VerifyOptions {
    std::string sizes = "2..6";
    std::string rows;
    std::string cols;
    std::string report;
    std::vector<std::string> graphs;
};

int run_verify(const VerifyOptions& opt) {
    const auto rows = parse_range(opt.rows.empty() ? opt.sizes : opt.rows);
    const auto cols = parse_range(opt.cols.empty() ? opt.sizes : opt.cols);
    std::vector<unsigned> found(512);
    size_t count = 0;
    int matches = 0;
    char* text = nullptr;
    size_t len = 0;
    check(ca2d_reversibility_report(rows.first, rows.second, cols.first, cols.second, found.data(), &count, &matches,
                                    opt.report.empty() ? nullptr : &text, &len));
    if (!opt.report.empty()) write_text(opt.report, take_string(text, len));

    std::cout << "sizes " << rows.first << ".." << rows.second << " x " << cols.first << ".." << cols.second
              << ": " << count << " always-invertible rules:";
    for (size_t i = 0; i < count; ++i) std::cout << ' ' << found[i];
    std::cout << "\nmatches the 31 unipotent rules: " << (matches ? "yes" : "no") << "\n";
    bool ok = matches != 0;

    // Exhaustive state-graph cross-check on small sizes.
    for (const auto& g : opt.graphs) {
        const Size s = parse_size(g);
        int mismatches = 0;
        for (unsigned rule = 0; rule < 512; ++rule) {
            ca2d_state_graph* raw = nullptr;
            check(ca2d_state_graph_create(rule, s.rows, s.cols, &raw));
            GraphPtr graph(raw);
            uint64_t transients = 0;
            check(ca2d_state_graph_info(graph.get(), nullptr, nullptr, &transients));
            ca2d_matrix* m = nullptr;
            check(ca2d_matrix_rule(rule, s.rows, s.cols, &m));
            MatrixPtr mat(m);
            int r = 0;
            check(ca2d_matrix_rank(mat.get(), &r));
            const bool invertible = r == s.rows * s.cols;
            if (invertible != (transients == 0)) ++mismatches;
        }
        std::cout << "state graphs " << s.rows << "x" << s.cols << ": " << mismatches
                  << " rules where invertibility and permutation disagree\n";
        ok = ok && mismatches == 0;
    }
    return ok ? 0 : 1;
}

// ---- transform

struct TransformOptions {
    InputOptions input;
    std::string op;
    std::string direction = "top";
    std::uint64_t steps = 1;
    unsigned rule = 7;
    int k = 5;
    std::string rules;
    std::string split;
    std::string output;
    std::string format = "p1";
};

ca2d_direction parse_direction(const std::string& name) {
    static const std::pair<const char*, ca2d_direction> table[] = {
        {"top", CA2D_TOP},
        {"bottom", CA2D_BOTTOM},
        {"left", CA2D_LEFT},
        {"right", CA2D_RIGHT},
        {"top-left", CA2D_TOP_LEFT},
        {"top-right", CA2D_TOP_RIGHT},
        {"bottom-left", CA2D_BOTTOM_LEFT},
        {"bottom-right", CA2D_BOTTOM_RIGHT},
    };
    for (const auto& [key, dir] : table) {
        if (name == key) return dir;
    }
    throw CliError("unknown direction '" + name + "'");
}

void run_transform(const TransformOptions& opt) {
    GridPtr grid = opt.input.load();
    ca2d_grid* raw = nullptr;
    int split_row = -1;
    int split_col = -1;
    if (!opt.split.empty()) {
        const Size s = parse_size(opt.split);
        split_row = s.rows;
        split_col = s.cols;
    }
    auto hybrid = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
        GridPtr cur(nullptr);
        check(ca2d_grid_clone(grid.get(), &raw));
        cur.reset(raw);
        for (std::uint64_t t = 0; t < opt.steps; ++t) {
            check(ca2d_hybrid4(cur.get(), a, b, c, d, split_row, split_col, &raw));
            cur.reset(raw);
        }
        return cur;
    };

    GridPtr out(nullptr);
    if (opt.op == "translate") {
        check(ca2d_translate(grid.get(), parse_direction(opt.direction), opt.steps, &raw));
        out.reset(raw);
    } else if (opt.op == "replicate") {
        check(ca2d_step_uniform(grid.get(), opt.rule, std::uint64_t{1} << opt.k, &raw));
        out.reset(raw);
        check(ca2d_replicate_prediction(grid.get(), opt.rule, opt.k, &raw));
        GridPtr predicted(raw);
        int equal = 0;
        int copies = 0;
        int group = 0;
        check(ca2d_grid_equal(out.get(), predicted.get(), &equal));
        check(ca2d_count_components(out.get(), &copies));
        check(ca2d_rule_group(opt.rule, &group));
        std::cerr << "rule " << opt.rule << " (group " << group << "), " << (std::uint64_t{1} << opt.k)
                  << " steps: matches shifted-copy prediction: " << (equal ? "yes" : "no") << ", components "
                  << copies << "\n";
    } else if (opt.op == "hybrid") {
        const auto r = parse_rule_list(opt.rules);
        if (r.size() != 4) throw CliError("--rules needs four comma-separated rules a,b,c,d");
        out = hybrid(r[0], r[1], r[2], r[3]);
    } else {
        static const std::pair<const char*, std::array<unsigned, 4>> named[] = {
            {"zoom-in", {2, 32, 8, 128}},   {"zoom-out", {32, 2, 128, 8}}, {"thicken", {2, 32, 1, 1}},
            {"thin", {32, 2, 1, 1}},        {"thicken-v", {1, 1, 8, 128}}, {"thin-v", {1, 1, 128, 8}},
        };
        bool matched = false;
        for (const auto& [name, r] : named) {
            if (opt.op == name) {
                out = hybrid(r[0], r[1], r[2], r[3]);
                matched = true;
            }
        }
        if (!matched) throw CliError("unknown transform '" + opt.op + "'");
    }
    write_grid(out.get(), opt.output, opt.format);
}

// ---- sweep

struct SweepOptions {
    InputOptions input;
    std::string mode = "guarded";
    std::string dest;
    std::uint64_t iterations = 100;
    std::string frames;
    std::string metrics;
    bool literal = false;
    bool freeze_border = false;
    bool until_fixed = false;
    std::string output;
    std::string format = "p1";
};

struct FrameSink {
    std::string dir;
    std::ostringstream table;
    std::string error;
};

int frame_callback(uint64_t iteration, const ca2d_grid* grid, const ca2d_sweep_sample* s, void* user) {
    auto* sink = static_cast<FrameSink*>(user);
    sink->table << iteration << '\t' << s->population << '\t' << s->distance << '\t' << s->radius << '\n';
    if (sink->dir.empty()) return 0;
    char name[32];
    std::snprintf(name, sizeof name, "frame_%06llu.pbm", static_cast<unsigned long long>(iteration));
    const std::string path = (std::filesystem::path(sink->dir) / name).string();
    if (ca2d_grid_write(grid, path.c_str(), CA2D_PBM_P4) != CA2D_OK) {
        sink->error = ca2d_last_error();
        return 1;
    }
    return 0;
}

void run_sweep(const SweepOptions& opt) {
    GridPtr grid = opt.input.load();
    ca2d_sweep_config cfg = ca2d_sweep_config_default();
    if (opt.mode == "xor") {
        cfg.mode = CA2D_SWEEP_XOR;
    } else if (opt.mode == "guarded") {
        cfg.mode = CA2D_SWEEP_GUARDED;
    } else {
        throw CliError("unknown sweep mode '" + opt.mode + "'");
    }
    if (opt.dest.empty()) {
        int rows = 0;
        int cols = 0;
        check(ca2d_grid_size(grid.get(), &rows, &cols));
        cfg.dest_row = rows / 2;
        cfg.dest_col = cols / 2;
    } else {
        const Size d = parse_size(opt.dest);
        cfg.dest_row = d.rows;
        cfg.dest_col = d.cols;
    }
    cfg.iterations = opt.iterations;
    cfg.literal_pairing = opt.literal ? 1 : 0;
    cfg.freeze_border = opt.freeze_border ? 1 : 0;

    ca2d_grid* raw = nullptr;
    if (opt.until_fixed) {
        uint64_t used = 0;
        int reached = 0;
        check(ca2d_sweep_to_fixed_point(grid.get(), &cfg, opt.iterations, &raw, &used, &reached));
        GridPtr out(raw);
        std::cerr << (reached ? "fixed point after " : "no fixed point within ") << (reached ? used : opt.iterations)
                  << " iterations\n";
        write_grid(out.get(), opt.output, opt.format);
        return;
    }

    FrameSink sink;
    sink.dir = opt.frames;
    sink.table << "iteration\tpopulation\tdistance\tradius\n";
    if (!sink.dir.empty()) std::filesystem::create_directories(sink.dir);
    const ca2d_status status = ca2d_sweep(grid.get(), &cfg, frame_callback, &sink, &raw);
    if (status == CA2D_ERR_ABORTED) throw CliError("frame dump failed: " + sink.error);
    check(status);
    GridPtr out(raw);
    if (!sink.dir.empty()) write_text((std::filesystem::path(sink.dir) / "metrics.tsv").string(), sink.table.str());
    if (!opt.metrics.empty()) write_text(opt.metrics, sink.table.str());
    write_grid(out.get(), opt.output, opt.format);
}

// ---- render

struct RenderOptions {
    InputOptions input;
    int max_cols = 0;
};

void run_render(const RenderOptions& opt) {
    GridPtr grid = opt.input.load();
    char* text = nullptr;
    size_t len = 0;
    check(ca2d_grid_render(grid.get(), opt.max_cols, &text, &len));
    std::cout << take_string(text, len);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-dimensional nine-neighbourhood linear cellular automata"};
    app.require_subcommand(1);
    add_version_flag(&app);

    StepOptions step;
    auto* step_cmd = app.add_subcommand("step", "Apply a uniform or hybrid rule");
    step.input.attach(step_cmd, true);
    step_cmd->add_option("-r,--rule", step.rule, "Uniform rule 0..511")->check(CLI::Range(0u, 511u));
    step_cmd->add_option("--rules-file", step.rules_file, "Per-cell rules, one grid row per line");
    step_cmd->add_option("-t,--steps", step.steps, "Number of steps");
    step_cmd->add_flag("--via-matrix", step.via_matrix, "Multiply by the rule matrix instead of stepping");
    step_cmd->add_option("-o,--output", step.output, "Output image (default stdout)");
    step_cmd->add_option("--format", step.format, "p1 or p4");
    add_version_flag(step_cmd);

    MatrixOptions matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "Emit a rule or hybrid matrix");
    matrix_cmd->add_option("-r,--rule", matrix.rule, "Uniform rule 0..511")->check(CLI::Range(0u, 511u));
    matrix_cmd->add_option("--rules-file", matrix.rules_file, "Per-cell rules, one grid row per line");
    matrix_cmd->add_option("--dependencies", matrix.dependencies, "Dependency map, 1-based indices per line");
    matrix_cmd->add_option("--size", matrix.size, "Grid ROWSxCOLS");
    matrix_cmd->add_flag("--block", matrix.block, "Use the block tri-diagonal construction");
    matrix_cmd->add_flag("--as-dependencies", matrix.as_dependencies, "Print the dependency map instead");
    matrix_cmd->add_flag("--rank", matrix.rank_only, "Print only the rank");
    matrix_cmd->add_option("-o,--output", matrix.output, "Output file (default stdout)");
    add_version_flag(matrix_cmd);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Classify invertible rules over a range of grid sizes");
    verify_cmd->add_option("--sizes", verify.sizes, "Range LO..HI for both rows and columns");
    verify_cmd->add_option("--rows", verify.rows, "Row range, overrides --sizes");
    verify_cmd->add_option("--cols", verify.cols, "Column range, overrides --sizes");
    verify_cmd->add_option("--report", verify.report, "Write the per-rule rank table here");
    verify_cmd->add_option("--graphs", verify.graphs, "Also compare with exhaustive state graphs at ROWSxCOLS");
    add_version_flag(verify_cmd);

    TransformOptions transform;
    auto* transform_cmd = app.add_subcommand("transform", "Image transforms");
    transform_cmd->add_option("op", transform.op,
                              "translate, replicate, zoom-in, zoom-out, thicken, thin, thicken-v, thin-v, hybrid")
        ->required();
    transform.input.attach(transform_cmd, true);
    transform_cmd->add_option("--direction", transform.direction, "translate: top, bottom-left, ...");
    transform_cmd->add_option("-t,--steps", transform.steps, "translate and hybrid repetitions");
    transform_cmd->add_option("-r,--rule", transform.rule, "replicate: rule")->check(CLI::Range(0u, 511u));
    transform_cmd->add_option("-k", transform.k, "replicate: run 2^k steps")->check(CLI::Range(1, 20));
    transform_cmd->add_option("--rules", transform.rules, "hybrid: a,b,c,d");
    transform_cmd->add_option("--split", transform.split, "hybrid: split ROW,COL (default centre)");
    transform_cmd->add_option("-o,--output", transform.output, "Output image (default stdout)");
    transform_cmd->add_option("--format", transform.format, "p1 or p4");
    add_version_flag(transform_cmd);

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Gather ones towards a destination");
    sweep.input.attach(sweep_cmd, true);
    sweep_cmd->add_option("--mode", sweep.mode, "xor or guarded");
    sweep_cmd->add_option("--dest", sweep.dest, "Destination ROW,COL (default centre)");
    sweep_cmd->add_option("-n,--iters", sweep.iterations, "Iterations");
    sweep_cmd->add_option("--frames", sweep.frames, "Directory for per-iteration frames and metrics.tsv");
    sweep_cmd->add_option("--metrics", sweep.metrics, "Write the metrics table here");
    sweep_cmd->add_flag("--literal", sweep.literal, "xor mode: literal main-diagonal rule pairing");
    sweep_cmd->add_flag("--freeze-border", sweep.freeze_border, "Border cells holding 1 never change");
    sweep_cmd->add_flag("--until-fixed", sweep.until_fixed, "Stop at a fixed point (at most --iters)");
    sweep_cmd->add_option("-o,--output", sweep.output, "Output image (default stdout)");
    sweep_cmd->add_option("--format", sweep.format, "p1 or p4");
    add_version_flag(sweep_cmd);

    RenderOptions render;
    auto* render_cmd = app.add_subcommand("render", "ASCII preview of an image");
    render.input.attach(render_cmd, true);
    render_cmd->add_option("--max-cols", render.max_cols, "Downsample to at most this many columns");
    add_version_flag(render_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*step_cmd) run_step(step);
        if (*matrix_cmd) run_matrix(matrix);
        if (*verify_cmd) return run_verify(verify);
        if (*transform_cmd) run_transform(transform);
        if (*sweep_cmd) run_sweep(sweep);
        if (*render_cmd) run_render(render);
    } catch (const std::exception& e) {
        std::cerr << "ca2d: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
