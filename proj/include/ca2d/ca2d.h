/*
 * C interface to the ca2d linear cellular automaton engine.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_destroy call. Every call returns a ca2d_status; on failure the
 * message for the calling thread is available from ca2d_last_error(). Output
 * handles are only written on success.
 *
 * Strings returned through `char** out` are allocated by the library and must
 * be released with ca2d_free().
 *
 * Rules are plain integers in 0..511 using the weights
 *
 *     64 128 256
 *     32   1   2
 *     16   8   4
 *
 * with rows increasing downward.
 */
#ifndef CA2D_CA2D_H
#define CA2D_CA2D_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CA2D_BUILDING_LIBRARY)
#    define CA2D_API __declspec(dllexport)
#  else
#    define CA2D_API __declspec(dllimport)
#  endif
#else
#  define CA2D_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ca2d_status {
    CA2D_OK = 0,
    CA2D_ERR_INVALID_ARGUMENT = 1,
    CA2D_ERR_DIMENSION_MISMATCH = 2,
    CA2D_ERR_PARSE = 3,
    CA2D_ERR_IO = 4,
    CA2D_ERR_LIMIT = 5,
    CA2D_ERR_ABORTED = 6,
    CA2D_ERR_INTERNAL = 99
} ca2d_status;

typedef enum ca2d_image_format { CA2D_PBM_P1 = 1, CA2D_PBM_P4 = 4 } ca2d_image_format;

typedef enum ca2d_direction {
    CA2D_TOP = 0,
    CA2D_BOTTOM,
    CA2D_LEFT,
    CA2D_RIGHT,
    CA2D_TOP_LEFT,
    CA2D_TOP_RIGHT,
    CA2D_BOTTOM_LEFT,
    CA2D_BOTTOM_RIGHT
} ca2d_direction;

typedef enum ca2d_seed_kind {
    CA2D_SEED_CIRCLE = 0,
    CA2D_SEED_SQUARE,
    CA2D_SEED_PLUS,
    CA2D_SEED_RECTANGLE,
    CA2D_SEED_CUSTOM
} ca2d_seed_kind;

typedef enum ca2d_sweep_mode { CA2D_SWEEP_XOR = 0, CA2D_SWEEP_GUARDED = 1 } ca2d_sweep_mode;

typedef struct ca2d_grid ca2d_grid;
typedef struct ca2d_hybrid ca2d_hybrid;
typedef struct ca2d_matrix ca2d_matrix;
typedef struct ca2d_state_graph ca2d_state_graph;

/* ---- library ---------------------------------------------------------- */

CA2D_API const char* ca2d_version(void);
CA2D_API const char* ca2d_last_error(void);
CA2D_API const char* ca2d_status_name(ca2d_status status);
CA2D_API void ca2d_free(void* ptr);

/* ---- rules ------------------------------------------------------------ */

CA2D_API ca2d_status ca2d_rule_group(unsigned rule, int* group);
CA2D_API ca2d_status ca2d_rule_xor(unsigned a, unsigned b, unsigned* out);
/* parts must hold 9 entries; *count receives the number written. */
CA2D_API ca2d_status ca2d_rule_decompose(unsigned rule, unsigned* parts, size_t* count);
CA2D_API ca2d_status ca2d_rule_offsets(unsigned rule, int* dr, int* dc, size_t* count);
CA2D_API ca2d_status ca2d_rule_is_unipotent(unsigned rule, int* unipotent);

/* ---- grids ------------------------------------------------------------ */

CA2D_API ca2d_status ca2d_grid_create(int rows, int cols, ca2d_grid** out);
CA2D_API void ca2d_grid_destroy(ca2d_grid* grid);
CA2D_API ca2d_status ca2d_grid_clone(const ca2d_grid* grid, ca2d_grid** out);
CA2D_API ca2d_status ca2d_grid_size(const ca2d_grid* grid, int* rows, int* cols);
CA2D_API ca2d_status ca2d_grid_get(const ca2d_grid* grid, int row, int col, int* value);
CA2D_API ca2d_status ca2d_grid_set(ca2d_grid* grid, int row, int col, int value);
CA2D_API ca2d_status ca2d_grid_popcount(const ca2d_grid* grid, uint64_t* count);
CA2D_API ca2d_status ca2d_grid_equal(const ca2d_grid* a, const ca2d_grid* b, int* equal);
CA2D_API ca2d_status ca2d_grid_xor(const ca2d_grid* a, const ca2d_grid* b, ca2d_grid** out);
CA2D_API ca2d_status ca2d_grid_random(int rows, int cols, double density, uint64_t seed, ca2d_grid** out);

CA2D_API ca2d_status ca2d_grid_read(const char* path, ca2d_grid** out);
CA2D_API ca2d_status ca2d_grid_write(const ca2d_grid* grid, const char* path, ca2d_image_format format);
CA2D_API ca2d_status ca2d_grid_parse(const char* data, size_t len, ca2d_grid** out);
CA2D_API ca2d_status ca2d_grid_format(const ca2d_grid* grid, ca2d_image_format format, char** out, size_t* len);
/* max_cols <= 0 renders every cell. */
CA2D_API ca2d_status ca2d_grid_render(const ca2d_grid* grid, int max_cols, char** out, size_t* len);

/* ---- stepping --------------------------------------------------------- */

CA2D_API ca2d_status ca2d_step_uniform(const ca2d_grid* grid, unsigned rule, uint64_t steps, ca2d_grid** out);

CA2D_API ca2d_status ca2d_hybrid_create(int rows, int cols, unsigned fill, ca2d_hybrid** out);
CA2D_API void ca2d_hybrid_destroy(ca2d_hybrid* spec);
CA2D_API ca2d_status ca2d_hybrid_size(const ca2d_hybrid* spec, int* rows, int* cols);
CA2D_API ca2d_status ca2d_hybrid_set(ca2d_hybrid* spec, int row, int col, unsigned rule);
CA2D_API ca2d_status ca2d_hybrid_get(const ca2d_hybrid* spec, int row, int col, unsigned* rule);
/* One line per grid row of whitespace-separated rule numbers. */
CA2D_API ca2d_status ca2d_hybrid_parse(const char* text, size_t len, ca2d_hybrid** out);
CA2D_API ca2d_status ca2d_hybrid_read(const char* path, ca2d_hybrid** out);
CA2D_API ca2d_status ca2d_step_hybrid(const ca2d_grid* grid, const ca2d_hybrid* spec, uint64_t steps,
                                      ca2d_grid** out);

/* ---- rule matrices ---------------------------------------------------- */

CA2D_API ca2d_status ca2d_matrix_create(int rows, int cols, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_identity(int n, ca2d_matrix** out);
CA2D_API void ca2d_matrix_destroy(ca2d_matrix* mat);
CA2D_API ca2d_status ca2d_matrix_size(const ca2d_matrix* mat, int* rows, int* cols);
CA2D_API ca2d_status ca2d_matrix_get(const ca2d_matrix* mat, int row, int col, int* value);
CA2D_API ca2d_status ca2d_matrix_set(ca2d_matrix* mat, int row, int col, int value);
CA2D_API ca2d_status ca2d_matrix_equal(const ca2d_matrix* a, const ca2d_matrix* b, int* equal);

CA2D_API ca2d_status ca2d_matrix_basic(unsigned weight, int m, int n, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_rule(unsigned rule, int m, int n, ca2d_matrix** out);
/* Block tri-diagonal construction; equal to ca2d_matrix_rule. */
CA2D_API ca2d_status ca2d_matrix_block(unsigned rule, int m, int n, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_hybrid(const ca2d_hybrid* spec, ca2d_matrix** out);
/* Dependency map text: line i holds cell i's 1-based sources. */
CA2D_API ca2d_status ca2d_matrix_from_dependencies(const char* text, size_t len, int m, int n, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_dependencies(const ca2d_matrix* mat, int m, int n, char** out, size_t* len);

CA2D_API ca2d_status ca2d_matrix_add(const ca2d_matrix* a, const ca2d_matrix* b, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_multiply(const ca2d_matrix* a, const ca2d_matrix* b, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_transpose(const ca2d_matrix* a, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_rank(const ca2d_matrix* a, int* rank);
/* *invertible is 0 and *out untouched when the matrix is singular. */
CA2D_API ca2d_status ca2d_matrix_inverse(const ca2d_matrix* a, int* invertible, ca2d_matrix** out);
CA2D_API ca2d_status ca2d_matrix_apply(const ca2d_matrix* mat, const ca2d_grid* grid, ca2d_grid** out);

/* "rows cols" header then one 0/1 line per row. */
CA2D_API ca2d_status ca2d_matrix_format(const ca2d_matrix* mat, char** out, size_t* len);
CA2D_API ca2d_status ca2d_matrix_parse(const char* text, size_t len, ca2d_matrix** out);

/* ---- reversibility ---------------------------------------------------- */

/*
 * Ranks every rule matrix at each (m, n) in the ranges. invertible_rules, when
 * not NULL, must hold 512 entries and receives the always-invertible rules in
 * ascending order. *matches_unipotent is 1 when that set equals the 31
 * unipotent rules. report, when not NULL, receives the text table.
 */
CA2D_API ca2d_status ca2d_reversibility_report(int m_lo, int m_hi, int n_lo, int n_hi, unsigned* invertible_rules,
                                               size_t* invertible_count, int* matches_unipotent, char** report,
                                               size_t* report_len);

/* *finite is 0 for singular matrices. */
CA2D_API ca2d_status ca2d_order_of(unsigned rule, int m, int n, uint64_t* order, int* finite);

/* m * n <= 16. */
CA2D_API ca2d_status ca2d_state_graph_create(unsigned rule, int m, int n, ca2d_state_graph** out);
CA2D_API void ca2d_state_graph_destroy(ca2d_state_graph* graph);
CA2D_API ca2d_status ca2d_state_graph_info(const ca2d_state_graph* graph, uint64_t* states, uint64_t* cycles,
                                           uint64_t* transients);
CA2D_API ca2d_status ca2d_state_graph_successor(const ca2d_state_graph* graph, uint32_t state, uint32_t* next);
/* Sorted cycle lengths; *count is always set to the total number of cycles. */
CA2D_API ca2d_status ca2d_state_graph_cycle_lengths(const ca2d_state_graph* graph, uint64_t* lengths,
                                                    size_t capacity, size_t* count);

/* ---- image transforms ------------------------------------------------- */

CA2D_API ca2d_status ca2d_translate(const ca2d_grid* grid, ca2d_direction dir, uint64_t steps, ca2d_grid** out);
CA2D_API ca2d_status ca2d_translation_rule(ca2d_direction dir, unsigned* rule);
CA2D_API ca2d_status ca2d_replicate_prediction(const ca2d_grid* grid, unsigned rule, int k, ca2d_grid** out);
/* Negative split coordinates select the grid centre. */
CA2D_API ca2d_status ca2d_hybrid4(const ca2d_grid* grid, unsigned a, unsigned b, unsigned c, unsigned d,
                                  int split_row, int split_col, ca2d_grid** out);

typedef struct ca2d_seed_shape {
    ca2d_seed_kind kind;
    int a; /* radius, side, height or bar length */
    int b; /* width or bar breadth */
    int has_anchor;
    int anchor_row;
    int anchor_col;
    const int* cells; /* CA2D_SEED_CUSTOM: row, col pairs */
    size_t cell_count;
} ca2d_seed_shape;

CA2D_API ca2d_status ca2d_seed(const ca2d_seed_shape* shape, int m, int n, ca2d_grid** out);

/* *found is 0 for an empty grid. */
CA2D_API ca2d_status ca2d_bounding_box(const ca2d_grid* grid, int* found, int* top, int* left, int* bottom,
                                       int* right);
CA2D_API ca2d_status ca2d_count_components(const ca2d_grid* grid, int* components);

/* ---- sweeps ----------------------------------------------------------- */

typedef struct ca2d_sweep_config {
    int dest_row;
    int dest_col;
    int angle; /* only 45 */
    uint64_t iterations;
    ca2d_sweep_mode mode;
    int literal_pairing; /* xor mode: rule 16 above the main diagonal, 256 below */
    int freeze_border;   /* border cells holding 1 never change */
} ca2d_sweep_config;

typedef struct ca2d_sweep_sample {
    uint64_t population;
    uint64_t distance;
    uint64_t radius;
} ca2d_sweep_sample;

/* Return non-zero to stop the sweep with CA2D_ERR_ABORTED. */
typedef int (*ca2d_sweep_callback)(uint64_t iteration, const ca2d_grid* grid, const ca2d_sweep_sample* sample,
                                   void* user);

CA2D_API ca2d_sweep_config ca2d_sweep_config_default(void);
CA2D_API ca2d_status ca2d_sweep_metrics(const ca2d_grid* grid, const ca2d_sweep_config* cfg,
                                        ca2d_sweep_sample* sample);
CA2D_API ca2d_status ca2d_sweep_iteration(const ca2d_grid* grid, const ca2d_sweep_config* cfg, ca2d_grid** out);
CA2D_API ca2d_status ca2d_sweep(const ca2d_grid* grid, const ca2d_sweep_config* cfg, ca2d_sweep_callback callback,
                                void* user, ca2d_grid** out);
CA2D_API ca2d_status ca2d_sweep_to_fixed_point(const ca2d_grid* grid, const ca2d_sweep_config* cfg,
                                               uint64_t max_iterations, ca2d_grid** out, uint64_t* iterations,
                                               int* reached);

#ifdef __cplusplus
}
#endif

#endif /* CA2D_CA2D_H */
