/*
 * latintrade: Latin squares, Latin trades and defining sets.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed by the library. Functions return LT_OK (0) on success or a
 * negative-free status code; lt_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef LATINTRADE_H
#define LATINTRADE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lt_square lt_square;
typedef struct lt_partial lt_partial;
typedef struct lt_trade lt_trade;

enum {
  LT_OK = 0,
  LT_ERR_INVALID_ARGUMENT = 1,
  LT_ERR_PARSE = 2,
  LT_ERR_SYMBOL_OUT_OF_RANGE = 3,
  LT_ERR_DUPLICATE_IN_ROW = 4,
  LT_ERR_DUPLICATE_IN_COLUMN = 5,
  LT_ERR_ORDER_MISMATCH = 6,
  LT_ERR_IDENTICAL_SQUARES = 7,
  LT_ERR_TRADE_NOT_CONTAINED = 8,
  LT_ERR_SAME_ROW = 9,
  LT_ERR_ORDER_TOO_SMALL = 10,
  LT_ERR_ORDER_TOO_LARGE = 11,
  LT_ERR_NOT_CONTAINED = 12,
  LT_ERR_NOT_A_CYCLE = 13,
  LT_ERR_BAD_SYMBOLS = 14,
  LT_ERR_PATH_TOO_SHORT = 15,
  LT_ERR_MALFORMED_SQUARE = 16,
  LT_ERR_VERIFICATION = 17,
  LT_ERR_NO_CYCLE = 18,
  LT_ERR_NOMEM = 19,
  LT_ERR_INTERNAL = 20
};

const char* lt_version(void);
const char* lt_status_name(int status);
const char* lt_last_error(void);

/* Frees strings returned through char** out-parameters. */
void lt_string_free(char* s);

/* ---- Latin squares ---- */

/* Text format: optional "n=<order>" line, then n rows of n integers.
 * '#' lines are comments. */
int lt_square_parse(const char* text, lt_square** out);
int lt_square_from_cells(int order, const int* cells /* order*order, row-major */,
                         lt_square** out);
int lt_square_format(const lt_square* sq, char** out_text);
int lt_square_order(const lt_square* sq);
int lt_square_cell(const lt_square* sq, int row, int col); /* -1 on bad args */
int lt_square_equal(const lt_square* a, const lt_square* b); /* 1, 0, or -1 on bad args */
void lt_square_free(lt_square* sq);

/* Generators. */
int lt_back_circulant(int order, lt_square** out);
/* burn_in < 0 selects the default order^3 chain steps. Deterministic per seed. */
int lt_random_square(int order, uint64_t seed, int64_t burn_in, lt_square** out);

/* ---- distances and trades ---- */

int lt_distance(const lt_square* a, const lt_square* b, int* out);
int lt_as_trade(const lt_square* a, const lt_square* b, lt_trade** out);
int lt_apply_trade(const lt_square* sq, const lt_trade* t, lt_square** out);
int lt_intercalate_count(const lt_square* sq, int* out);

int lt_trade_size(const lt_trade* t);
int lt_trade_order(const lt_trade* t);
int lt_trade_cell(const lt_trade* t, int index, int* row, int* col, int* from, int* to);
int lt_trade_to_json(const lt_trade* t, char** out_text);
int lt_trade_parse_json(const char* text, lt_trade** out);
void lt_trade_free(lt_trade* t);

/* LT_OK when t is a Latin trade contained in sq, LT_ERR_VERIFICATION
 * otherwise; report_out (optional) receives one verdict line per check. */
int lt_verify_trade(const lt_square* sq, const lt_trade* t, char** report_out);

/* ---- small-trade finder ---- */

#define LT_STRATEGY_GREEDY 0
#define LT_STRATEGY_PROOF 1
#define LT_STRATEGY_EXHAUSTIVE_PAIRS 2

typedef struct lt_finder_options {
  int strategy;    /* LT_STRATEGY_* */
  double b_const;  /* default 4 */
  double k_const;  /* default 4/3 */
  double d_const;  /* default 19/6 */
  int f;           /* 0: use ceil(d_const*sqrt(n)) + 1 */
  int pair_a;      /* both >= 0: extract from the single digraph of (a, b); */
  int pair_b;      /*            LT_ERR_NO_CYCLE when it has no directed cycle */
} lt_finder_options;

void lt_finder_options_init(lt_finder_options* opts);

/* Finds a trade of size at most min(2n, ceil(8*sqrt(n))). */
int lt_find_trade(const lt_square* sq, const lt_finder_options* opts /* NULL = defaults */,
                  lt_trade** out);

/* ---- partial squares ---- */

/* Same text format as squares with '.' (or '-') for an empty cell. */
int lt_partial_parse(const char* text, lt_partial** out);
int lt_partial_format(const lt_partial* p, char** out_text);
int lt_partial_order(const lt_partial* p);
int lt_partial_size(const lt_partial* p);
int lt_partial_triple(const lt_partial* p, int index, int* row, int* col, int* sym);
int lt_partial_empty(int order, lt_partial** out);
/* The cells of sq outside the trade's cells (defining-set experiments). */
int lt_square_minus_trade(const lt_square* sq, const lt_trade* t, lt_partial** out);
void lt_partial_free(lt_partial* p);

/* ---- exhaustive oracles ---- */

/* Exact minimum distance to any other square of the same order; order <= 5. */
int lt_min_trade_exhaustive(const lt_square* sq, int* size, lt_trade** witness /* nullable */);
/* Branch-and-bound minimum trade of size <= size_cap; order <= 8. *size is
 * -1 when no trade within the cap exists. */
int lt_min_trade_bnb(const lt_square* sq, int size_cap, int* size,
                     lt_trade** witness /* nullable */);
/* Number of Latin squares containing p, counted up to cap. */
int lt_count_completions(const lt_partial* p, long long cap, long long* out);
/* *is_defining = 1 when d completes uniquely to sq. Otherwise a second
 * completion is returned through witness (if non-NULL). Requires d within sq. */
int lt_is_defining_set(const lt_square* sq, const lt_partial* d, int* is_defining,
                       lt_square** witness /* nullable */);
/* Smallest defining set inside sq; order <= 5. */
int lt_smallest_defining_set(const lt_square* sq, int* size, lt_partial** out /* nullable */);

#ifdef __cplusplus
}
#endif

#endif /* LATINTRADE_H */
