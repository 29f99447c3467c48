#define CA2D_BUILDING_LIBRARY 1

#include "ca2d/ca2d.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ca2d/error.hpp"
#include "ca2d/grid.hpp"
#include "ca2d/io.hpp"
#include "ca2d/reversibility.hpp"
#include "ca2d/rule_matrix.hpp"
#include "ca2d/sweepers.hpp"
#include "ca2d/transforms.hpp"
#include "ca2d/version.hpp"

struct ca2d_grid {
    ca2d::Grid value;
};

struct ca2d_hybrid {
    ca2d::HybridSpec value;
};

struct ca2d_matrix {
    ca2d::BitMatrix value;
};

struct ca2d_state_graph {
    ca2d::StateGraph value;
};

namespace {

thread_local std::string g_last_error;

ca2d_status fail(ca2d_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

ca2d_status to_status(ca2d::Errc code) {
    switch (code) {
        case ca2d::Errc::invalid_argument: return CA2D_ERR_INVALID_ARGUMENT;
        case ca2d::Errc::dimension_mismatch: return CA2D_ERR_DIMENSION_MISMATCH;
        case ca2d::Errc::parse_error: return CA2D_ERR_PARSE;
        case ca2d::Errc::io_error: return CA2D_ERR_IO;
        case ca2d::Errc::limit_exceeded: return CA2D_ERR_LIMIT;
    }
    return CA2D_ERR_INTERNAL;
}

class Aborted {};

// Runs body, translating exceptions into status codes.
template <typename Body>
ca2d_status guarded(Body&& body) {
    try {
        body();
        g_last_error.clear();
        return CA2D_OK;
    } catch (const ca2d::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const Aborted&) {
        return fail(CA2D_ERR_ABORTED, "aborted by callback");
    } catch (const std::bad_alloc&) {
        return fail(CA2D_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CA2D_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CA2D_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* ptr, const char* name) {
    if (!ptr) throw ca2d::Error(ca2d::Errc::invalid_argument, std::string(name) + " must not be NULL");
}

ca2d::RuleCode rule_arg(unsigned rule) { return ca2d::RuleCode(rule); }

ca2d_grid* wrap(ca2d::Grid g) { return new ca2d_grid{std::move(g)}; }
ca2d_matrix* wrap(ca2d::BitMatrix m) { return new ca2d_matrix{std::move(m)}; }

void export_string(const std::string& s, char** out, size_t* len) {
    require(out, "out");
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    *out = buf;
    if (len) *len = s.size();
}

ca2d::ImageFormat format_arg(ca2d_image_format f) {
    if (f == CA2D_PBM_P1) return ca2d::ImageFormat::p1;
    if (f == CA2D_PBM_P4) return ca2d::ImageFormat::p4;
    throw ca2d::Error(ca2d::Errc::invalid_argument, "unknown image format " + std::to_string(static_cast<int>(f)));
}

ca2d::Direction direction_arg(ca2d_direction d) {
    switch (d) {
        case CA2D_TOP: return ca2d::Direction::top;
        case CA2D_BOTTOM: return ca2d::Direction::bottom;
        case CA2D_LEFT: return ca2d::Direction::left;
        case CA2D_RIGHT: return ca2d::Direction::right;
        case CA2D_TOP_LEFT: return ca2d::Direction::top_left;
        case CA2D_TOP_RIGHT: return ca2d::Direction::top_right;
        case CA2D_BOTTOM_LEFT: return ca2d::Direction::bottom_left;
        case CA2D_BOTTOM_RIGHT: return ca2d::Direction::bottom_right;
    }
    throw ca2d::Error(ca2d::Errc::invalid_argument, "unknown direction " + std::to_string(static_cast<int>(d)));
}

ca2d::SweepConfig sweep_arg(const ca2d_sweep_config* cfg) {
    require(cfg, "cfg");
    ca2d::SweepConfig out;
    out.dest_row = cfg->dest_row;
    out.dest_col = cfg->dest_col;
    out.angle = cfg->angle;
    out.iterations = cfg->iterations;
    if (cfg->mode == CA2D_SWEEP_XOR) {
        out.mode = ca2d::SweepMode::xor_rules;
    } else if (cfg->mode == CA2D_SWEEP_GUARDED) {
        out.mode = ca2d::SweepMode::guarded;
    } else {
        throw ca2d::Error(ca2d::Errc::invalid_argument, "unknown sweep mode");
    }
    out.pairing = cfg->literal_pairing ? ca2d::DiagonalPairing::literal : ca2d::DiagonalPairing::toward_axis;
    out.freeze_border = cfg->freeze_border != 0;
    return out;
}

ca2d_sweep_sample sample_out(const ca2d::SweepSample& s) { return {s.population, s.distance, s.radius}; }

}  // namespace

extern "C" {

const char* ca2d_version(void) { return CA2D_VERSION_STRING; }

const char* ca2d_last_error(void) { return g_last_error.c_str(); }

const char* ca2d_status_name(ca2d_status status) {
    switch (status) {
        case CA2D_OK: return "ok";
        case CA2D_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CA2D_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case CA2D_ERR_PARSE: return "parse error";
        case CA2D_ERR_IO: return "I/O error";
        case CA2D_ERR_LIMIT: return "limit exceeded";
        case CA2D_ERR_ABORTED: return "aborted";
        case CA2D_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ca2d_free(void* ptr) { std::free(ptr); }

// ---- rules

ca2d_status ca2d_rule_group(unsigned rule, int* group) {
    return guarded([&] {
        require(group, "group");
        *group = ca2d::group_of(rule_arg(rule));
    });
}

ca2d_status ca2d_rule_xor(unsigned a, unsigned b, unsigned* out) {
    return guarded([&] {
        require(out, "out");
        *out = ca2d::xor_rules(rule_arg(a), rule_arg(b)).value();
    });
}

ca2d_status ca2d_rule_decompose(unsigned rule, unsigned* parts, size_t* count) {
    return guarded([&] {
        require(parts, "parts");
        require(count, "count");
        const auto d = ca2d::decompose(rule_arg(rule));
        for (std::size_t i = 0; i < d.size(); ++i) parts[i] = d[i].value();
        *count = d.size();
    });
}

ca2d_status ca2d_rule_offsets(unsigned rule, int* dr, int* dc, size_t* count) {
    return guarded([&] {
        require(dr, "dr");
        require(dc, "dc");
        require(count, "count");
        const auto offs = ca2d::offsets(rule_arg(rule));
        for (std::size_t i = 0; i < offs.size(); ++i) {
            dr[i] = offs[i].dr;
            dc[i] = offs[i].dc;
        }
        *count = offs.size();
    });
}

ca2d_status ca2d_rule_is_unipotent(unsigned rule, int* unipotent) {
    return guarded([&] {
        require(unipotent, "unipotent");
        *unipotent = ca2d::is_unipotent(rule_arg(rule)) ? 1 : 0;
    });
}

// ---- grids

ca2d_status ca2d_grid_create(int rows, int cols, ca2d_grid** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::Grid(rows, cols));
    });
}

void ca2d_grid_destroy(ca2d_grid* grid) { delete grid; }

ca2d_status ca2d_grid_clone(const ca2d_grid* grid, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        *out = wrap(grid->value);
    });
}

ca2d_status ca2d_grid_size(const ca2d_grid* grid, int* rows, int* cols) {
    return guarded([&] {
        require(grid, "grid");
        if (rows) *rows = grid->value.rows();
        if (cols) *cols = grid->value.cols();
    });
}

ca2d_status ca2d_grid_get(const ca2d_grid* grid, int row, int col, int* value) {
    return guarded([&] {
        require(grid, "grid");
        require(value, "value");
        if (!grid->value.in_range(row, col)) {
            throw ca2d::Error(ca2d::Errc::invalid_argument, "cell outside grid");
        }
        *value = grid->value.get(row, col) ? 1 : 0;
    });
}

ca2d_status ca2d_grid_set(ca2d_grid* grid, int row, int col, int value) {
    return guarded([&] {
        require(grid, "grid");
        grid->value.set(row, col, value != 0);
    });
}

ca2d_status ca2d_grid_popcount(const ca2d_grid* grid, uint64_t* count) {
    return guarded([&] {
        require(grid, "grid");
        require(count, "count");
        *count = grid->value.popcount();
    });
}

ca2d_status ca2d_grid_equal(const ca2d_grid* a, const ca2d_grid* b, int* equal) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(equal, "equal");
        *equal = a->value == b->value ? 1 : 0;
    });
}

ca2d_status ca2d_grid_xor(const ca2d_grid* a, const ca2d_grid* b, ca2d_grid** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = wrap(a->value ^ b->value);
    });
}

ca2d_status ca2d_grid_random(int rows, int cols, double density, uint64_t seed, ca2d_grid** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::random_grid(rows, cols, density, seed));
    });
}

ca2d_status ca2d_grid_read(const char* path, ca2d_grid** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = wrap(ca2d::read_image(path));
    });
}

ca2d_status ca2d_grid_write(const ca2d_grid* grid, const char* path, ca2d_image_format format) {
    return guarded([&] {
        require(grid, "grid");
        require(path, "path");
        ca2d::write_image(grid->value, path, format_arg(format));
    });
}

ca2d_status ca2d_grid_parse(const char* data, size_t len, ca2d_grid** out) {
    return guarded([&] {
        require(data, "data");
        require(out, "out");
        *out = wrap(ca2d::parse_pbm(std::string_view(data, len)));
    });
}

ca2d_status ca2d_grid_format(const ca2d_grid* grid, ca2d_image_format format, char** out, size_t* len) {
    return guarded([&] {
        require(grid, "grid");
        export_string(ca2d::format_pbm(grid->value, format_arg(format)), out, len);
    });
}

ca2d_status ca2d_grid_render(const ca2d_grid* grid, int max_cols, char** out, size_t* len) {
    return guarded([&] {
        require(grid, "grid");
        export_string(ca2d::render_ascii(grid->value, max_cols), out, len);
    });
}

// ---- stepping

ca2d_status ca2d_step_uniform(const ca2d_grid* grid, unsigned rule, uint64_t steps, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        *out = wrap(ca2d::evolve(grid->value, rule_arg(rule), steps));
    });
}

ca2d_status ca2d_hybrid_create(int rows, int cols, unsigned fill, ca2d_hybrid** out) {
    return guarded([&] {
        require(out, "out");
        *out = new ca2d_hybrid{ca2d::HybridSpec(rows, cols, rule_arg(fill))};
    });
}

void ca2d_hybrid_destroy(ca2d_hybrid* spec) { delete spec; }

ca2d_status ca2d_hybrid_size(const ca2d_hybrid* spec, int* rows, int* cols) {
    return guarded([&] {
        require(spec, "spec");
        if (rows) *rows = spec->value.rows();
        if (cols) *cols = spec->value.cols();
    });
}

ca2d_status ca2d_hybrid_set(ca2d_hybrid* spec, int row, int col, unsigned rule) {
    return guarded([&] {
        require(spec, "spec");
        if (row < 0 || row >= spec->value.rows() || col < 0 || col >= spec->value.cols()) {
            throw ca2d::Error(ca2d::Errc::invalid_argument, "cell outside hybrid spec");
        }
        spec->value.set(row, col, rule_arg(rule));
    });
}

ca2d_status ca2d_hybrid_get(const ca2d_hybrid* spec, int row, int col, unsigned* rule) {
    return guarded([&] {
        require(spec, "spec");
        require(rule, "rule");
        if (row < 0 || row >= spec->value.rows() || col < 0 || col >= spec->value.cols()) {
            throw ca2d::Error(ca2d::Errc::invalid_argument, "cell outside hybrid spec");
        }
        *rule = spec->value.at(row, col).value();
    });
}

ca2d_status ca2d_hybrid_parse(const char* text, size_t len, ca2d_hybrid** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new ca2d_hybrid{ca2d::parse_hybrid_rules(std::string_view(text, len))};
    });
}

ca2d_status ca2d_hybrid_read(const char* path, ca2d_hybrid** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new ca2d_hybrid{ca2d::parse_hybrid_rules(ca2d::read_file(path))};
    });
}

ca2d_status ca2d_step_hybrid(const ca2d_grid* grid, const ca2d_hybrid* spec, uint64_t steps, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(spec, "spec");
        require(out, "out");
        ca2d::Grid cur = grid->value;
        if (steps == 0 && (spec->value.rows() != cur.rows() || spec->value.cols() != cur.cols())) {
            throw ca2d::Error(ca2d::Errc::dimension_mismatch, "hybrid spec does not match grid");
        }
        for (uint64_t t = 0; t < steps; ++t) cur = ca2d::step_hybrid(cur, spec->value);
        *out = wrap(std::move(cur));
    });
}

// ---- matrices

ca2d_status ca2d_matrix_create(int rows, int cols, ca2d_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::BitMatrix(rows, cols));
    });
}

ca2d_status ca2d_matrix_identity(int n, ca2d_matrix** out) {
    return guarded([&] {
        require(out, "out");
        if (n <= 0) throw ca2d::Error(ca2d::Errc::invalid_argument, "identity side must be positive");
        *out = wrap(ca2d::BitMatrix::identity(n));
    });
}

void ca2d_matrix_destroy(ca2d_matrix* mat) { delete mat; }

ca2d_status ca2d_matrix_size(const ca2d_matrix* mat, int* rows, int* cols) {
    return guarded([&] {
        require(mat, "mat");
        if (rows) *rows = mat->value.rows();
        if (cols) *cols = mat->value.cols();
    });
}

ca2d_status ca2d_matrix_get(const ca2d_matrix* mat, int row, int col, int* value) {
    return guarded([&] {
        require(mat, "mat");
        require(value, "value");
        if (row < 0 || row >= mat->value.rows() || col < 0 || col >= mat->value.cols()) {
            throw ca2d::Error(ca2d::Errc::invalid_argument, "matrix entry out of range");
        }
        *value = mat->value.get(row, col) ? 1 : 0;
    });
}

ca2d_status ca2d_matrix_set(ca2d_matrix* mat, int row, int col, int value) {
    return guarded([&] {
        require(mat, "mat");
        mat->value.set(row, col, value != 0);
    });
}

ca2d_status ca2d_matrix_equal(const ca2d_matrix* a, const ca2d_matrix* b, int* equal) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(equal, "equal");
        *equal = a->value == b->value ? 1 : 0;
    });
}

ca2d_status ca2d_matrix_basic(unsigned weight, int m, int n, ca2d_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::basic_matrix(weight, m, n));
    });
}

ca2d_status ca2d_matrix_rule(unsigned rule, int m, int n, ca2d_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::rule_matrix(rule_arg(rule), m, n));
    });
}

ca2d_status ca2d_matrix_block(unsigned rule, int m, int n, ca2d_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(ca2d::block_rule_matrix(rule_arg(rule), m, n));
    });
}

ca2d_status ca2d_matrix_hybrid(const ca2d_hybrid* spec, ca2d_matrix** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = wrap(ca2d::hybrid_matrix_from_rules(spec->value));
    });
}

ca2d_status ca2d_matrix_from_dependencies(const char* text, size_t len, int m, int n, ca2d_matrix** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(ca2d::hybrid_matrix(ca2d::parse_dependency_map(std::string_view(text, len), m, n)));
    });
}

ca2d_status ca2d_matrix_dependencies(const ca2d_matrix* mat, int m, int n, char** out, size_t* len) {
    return guarded([&] {
        require(mat, "mat");
        export_string(ca2d::format_dependency_map(ca2d::to_dependency_map(mat->value, m, n)), out, len);
    });
}

ca2d_status ca2d_matrix_add(const ca2d_matrix* a, const ca2d_matrix* b, ca2d_matrix** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = wrap(ca2d::add(a->value, b->value));
    });
}

ca2d_status ca2d_matrix_multiply(const ca2d_matrix* a, const ca2d_matrix* b, ca2d_matrix** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = wrap(ca2d::multiply(a->value, b->value));
    });
}

ca2d_status ca2d_matrix_transpose(const ca2d_matrix* a, ca2d_matrix** out) {
    return guarded([&] {
        require(a, "a");
        require(out, "out");
        *out = wrap(ca2d::transpose(a->value));
    });
}

ca2d_status ca2d_matrix_rank(const ca2d_matrix* a, int* rank) {
    return guarded([&] {
        require(a, "a");
        require(rank, "rank");
        *rank = ca2d::rank(a->value);
    });
}

ca2d_status ca2d_matrix_inverse(const ca2d_matrix* a, int* invertible, ca2d_matrix** out) {
    return guarded([&] {
        require(a, "a");
        require(invertible, "invertible");
        require(out, "out");
        auto inv = ca2d::inverse(a->value);
        *invertible = inv ? 1 : 0;
        if (inv) *out = wrap(std::move(*inv));
    });
}

ca2d_status ca2d_matrix_apply(const ca2d_matrix* mat, const ca2d_grid* grid, ca2d_grid** out) {
    return guarded([&] {
        require(mat, "mat");
        require(grid, "grid");
        require(out, "out");
        *out = wrap(ca2d::apply(mat->value, grid->value));
    });
}

ca2d_status ca2d_matrix_format(const ca2d_matrix* mat, char** out, size_t* len) {
    return guarded([&] {
        require(mat, "mat");
        export_string(ca2d::format_matrix(mat->value), out, len);
    });
}

ca2d_status ca2d_matrix_parse(const char* text, size_t len, ca2d_matrix** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = wrap(ca2d::parse_matrix(std::string_view(text, len)));
    });
}

// ---- reversibility

ca2d_status ca2d_reversibility_report(int m_lo, int m_hi, int n_lo, int n_hi, unsigned* invertible_rules,
                                      size_t* invertible_count, int* matches_unipotent, char** report,
                                      size_t* report_len) {
    return guarded([&] {
        const auto rep = ca2d::reversibility_report(ca2d::size_range(m_lo, m_hi, n_lo, n_hi));
        const auto found = rep.always_invertible();
        if (invertible_rules) {
            for (std::size_t i = 0; i < found.size(); ++i) invertible_rules[i] = found[i].value();
        }
        if (invertible_count) *invertible_count = found.size();
        if (matches_unipotent) *matches_unipotent = found == ca2d::unipotent_rules() ? 1 : 0;
        if (report) export_string(ca2d::format_report(rep), report, report_len);
    });
}

ca2d_status ca2d_order_of(unsigned rule, int m, int n, uint64_t* order, int* finite) {
    return guarded([&] {
        require(order, "order");
        require(finite, "finite");
        const auto p = ca2d::order_of(rule_arg(rule), m, n);
        *finite = p ? 1 : 0;
        *order = p.value_or(0);
    });
}

ca2d_status ca2d_state_graph_create(unsigned rule, int m, int n, ca2d_state_graph** out) {
    return guarded([&] {
        require(out, "out");
        *out = new ca2d_state_graph{ca2d::state_graph(rule_arg(rule), m, n)};
    });
}

void ca2d_state_graph_destroy(ca2d_state_graph* graph) { delete graph; }

ca2d_status ca2d_state_graph_info(const ca2d_state_graph* graph, uint64_t* states, uint64_t* cycles,
                                  uint64_t* transients) {
    return guarded([&] {
        require(graph, "graph");
        if (states) *states = graph->value.state_count();
        if (cycles) *cycles = graph->value.cycles.size();
        if (transients) *transients = graph->value.transient_count();
    });
}

ca2d_status ca2d_state_graph_successor(const ca2d_state_graph* graph, uint32_t state, uint32_t* next) {
    return guarded([&] {
        require(graph, "graph");
        require(next, "next");
        if (state >= graph->value.state_count()) throw ca2d::Error(ca2d::Errc::invalid_argument, "state out of range");
        *next = graph->value.successor[state];
    });
}

ca2d_status ca2d_state_graph_cycle_lengths(const ca2d_state_graph* graph, uint64_t* lengths, size_t capacity,
                                           size_t* count) {
    return guarded([&] {
        require(graph, "graph");
        require(count, "count");
        const auto lens = graph->value.cycle_lengths();
        *count = lens.size();
        if (lengths) {
            for (std::size_t i = 0; i < lens.size() && i < capacity; ++i) lengths[i] = lens[i];
        }
    });
}

// ---- transforms

ca2d_status ca2d_translate(const ca2d_grid* grid, ca2d_direction dir, uint64_t steps, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        *out = wrap(ca2d::translate(grid->value, direction_arg(dir), steps));
    });
}

ca2d_status ca2d_translation_rule(ca2d_direction dir, unsigned* rule) {
    return guarded([&] {
        require(rule, "rule");
        *rule = ca2d::translation_rule(direction_arg(dir)).value();
    });
}

ca2d_status ca2d_replicate_prediction(const ca2d_grid* grid, unsigned rule, int k, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        *out = wrap(ca2d::replicate_prediction(grid->value, rule_arg(rule), k));
    });
}

ca2d_status ca2d_hybrid4(const ca2d_grid* grid, unsigned a, unsigned b, unsigned c, unsigned d, int split_row,
                         int split_col, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        auto part = ca2d::RegionPartition::centered(grid->value.rows(), grid->value.cols());
        if (split_row >= 0) part.split_row = split_row;
        if (split_col >= 0) part.split_col = split_col;
        *out = wrap(ca2d::hybrid4(grid->value, rule_arg(a), rule_arg(b), rule_arg(c), rule_arg(d), part));
    });
}

ca2d_status ca2d_seed(const ca2d_seed_shape* shape, int m, int n, ca2d_grid** out) {
    return guarded([&] {
        require(shape, "shape");
        require(out, "out");
        ca2d::SeedShape s;
        switch (shape->kind) {
            case CA2D_SEED_CIRCLE: s.kind = ca2d::SeedKind::circle; break;
            case CA2D_SEED_SQUARE: s.kind = ca2d::SeedKind::square; break;
            case CA2D_SEED_PLUS: s.kind = ca2d::SeedKind::plus; break;
            case CA2D_SEED_RECTANGLE: s.kind = ca2d::SeedKind::rectangle; break;
            case CA2D_SEED_CUSTOM: s.kind = ca2d::SeedKind::custom; break;
            default: throw ca2d::Error(ca2d::Errc::invalid_argument, "unknown seed kind");
        }
        s.a = shape->a;
        s.b = shape->b;
        if (shape->has_anchor) s.anchor = std::pair{shape->anchor_row, shape->anchor_col};
        if (shape->cell_count) {
            require(shape->cells, "shape->cells");
            for (std::size_t i = 0; i < shape->cell_count; ++i) {
                s.cells.emplace_back(shape->cells[2 * i], shape->cells[2 * i + 1]);
            }
        }
        *out = wrap(ca2d::seed(s, m, n));
    });
}

ca2d_status ca2d_bounding_box(const ca2d_grid* grid, int* found, int* top, int* left, int* bottom, int* right) {
    return guarded([&] {
        require(grid, "grid");
        require(found, "found");
        const auto box = ca2d::bounding_box(grid->value);
        *found = box ? 1 : 0;
        if (!box) return;
        if (top) *top = box->top;
        if (left) *left = box->left;
        if (bottom) *bottom = box->bottom;
        if (right) *right = box->right;
    });
}

ca2d_status ca2d_count_components(const ca2d_grid* grid, int* components) {
    return guarded([&] {
        require(grid, "grid");
        require(components, "components");
        *components = ca2d::count_components(grid->value);
    });
}

// ---- sweeps

ca2d_sweep_config ca2d_sweep_config_default(void) {
    ca2d_sweep_config cfg{};
    cfg.angle = 45;
    cfg.mode = CA2D_SWEEP_GUARDED;
    return cfg;
}

ca2d_status ca2d_sweep_metrics(const ca2d_grid* grid, const ca2d_sweep_config* cfg, ca2d_sweep_sample* sample) {
    return guarded([&] {
        require(grid, "grid");
        require(sample, "sample");
        *sample = sample_out(ca2d::metrics(grid->value, sweep_arg(cfg)));
    });
}

ca2d_status ca2d_sweep_iteration(const ca2d_grid* grid, const ca2d_sweep_config* cfg, ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        *out = wrap(ca2d::sweep_iteration(grid->value, sweep_arg(cfg)));
    });
}

ca2d_status ca2d_sweep(const ca2d_grid* grid, const ca2d_sweep_config* cfg, ca2d_sweep_callback callback, void* user,
                       ca2d_grid** out) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        ca2d::SweepObserver observer;
        if (callback) {
            observer = [&](std::uint64_t it, const ca2d::Grid& g, const ca2d::SweepSample& s) {
                // Borrowed view; the handle is only valid during the callback.
                const ca2d_grid view{g};
                const ca2d_sweep_sample sample = sample_out(s);
                if (callback(it, &view, &sample, user) != 0) throw Aborted{};
            };
        }
        auto result = ca2d::sweep(grid->value, sweep_arg(cfg), observer);
        *out = wrap(std::move(result.grid));
    });
}

ca2d_status ca2d_sweep_to_fixed_point(const ca2d_grid* grid, const ca2d_sweep_config* cfg, uint64_t max_iterations,
                                      ca2d_grid** out, uint64_t* iterations, int* reached) {
    return guarded([&] {
        require(grid, "grid");
        require(out, "out");
        auto result = ca2d::sweep_to_fixed_point(grid->value, sweep_arg(cfg), max_iterations);
        if (iterations) *iterations = result.iterations;
        if (reached) *reached = result.reached ? 1 : 0;
        *out = wrap(std::move(result.grid));
    });
}

}  // extern "C"
