#ifndef RHG_H
#define RHG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The input, capacity and insufficient-data values match the
 * `rhg` command's exit codes.
 */
typedef enum RhgStatus {
  RHG_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  RHG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Invalid constants, move set, game definition or window.
   */
  RHG_STATUS_INPUT_ERROR = 2,
  /**
   * The table would exceed the memory cap.
   */
  RHG_STATUS_CAPACITY = 3,
  RHG_STATUS_INSUFFICIENT_DATA = 4,
  /**
   * The fast solver was asked to handle finite moves.
   */
  RHG_STATUS_UNSUPPORTED = 5,
  /**
   * The queried position lies outside the table's region or window.
   */
  RHG_STATUS_OUT_OF_REGION = 6,
  /**
   * The output buffer is too small; the required length was written.
   */
  RHG_STATUS_BUFFER_TOO_SMALL = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  RHG_STATUS_INTERNAL = 8,
} RhgStatus;

/**
 * A game definition.
 */
typedef struct RhgGame RhgGame;

/**
 * A solved outcome table with its P-positions in lexicographic order.
 */
typedef struct RhgTable RhgTable;

/**
 * Parses a JSON game definition.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum RhgStatus rhg_game_from_json(const char *json, struct RhgGame **out);

/**
 * Builds a named game: `nim`, `wythoff`, `gdwn`, `ext-a`, `ext-b`,
 * `ext-c`, `rn:P1,Q1,P2,Q2` or `rw:P1,Q1,P2,Q2`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum RhgStatus rhg_game_from_builtin(const char *name, struct RhgGame **out);

/**
 * Releases a game. Null is ignored.
 *
 * # Safety
 * `game` must come from this library and not be used afterwards.
 */
void rhg_game_free(struct RhgGame *game);

/**
 * Solves `game` on the window `[0, max_x] x [0, max_y]`. `fast` selects
 * the line-accelerated solver, which only accepts ray moves. The memory
 * cap is read from `RHG_MEM_CAP_MB` (default 2 GiB).
 *
 * # Safety
 * `game` must be a live handle and `out` a valid pointer.
 */
enum RhgStatus rhg_solve(const struct RhgGame *game,
                         uint64_t max_x,
                         uint64_t max_y,
                         bool fast,
                         struct RhgTable **out);

/**
 * Releases a table. Null is ignored.
 *
 * # Safety
 * `table` must come from this library and not be used afterwards.
 */
void rhg_table_free(struct RhgTable *table);

/**
 * Writes 1 to `is_p` for a P-position and 0 for an N-position.
 *
 * # Safety
 * `table` must be a live handle and `is_p` a valid pointer.
 */
enum RhgStatus rhg_table_outcome(const struct RhgTable *table,
                                 uint64_t x,
                                 uint64_t y,
                                 int32_t *is_p);

/**
 * Number of P-positions in the table.
 *
 * # Safety
 * `table` must be a live handle and `count` a valid pointer.
 */
enum RhgStatus rhg_table_p_count(const struct RhgTable *table, uint64_t *count);

/**
 * Copies the P-positions as interleaved `x, y` pairs into `xy`, which
 * holds `capacity` pairs. `written` receives the number of pairs copied,
 * or the number needed when the result is [`RhgStatus::BufferTooSmall`].
 *
 * # Safety
 * `xy` must point to `2 * capacity` writable values (it may be null when
 * `capacity` is 0); `table` and `written` must be valid.
 */
enum RhgStatus rhg_table_p_positions(const struct RhgTable *table,
                                     uint64_t *xy,
                                     size_t capacity,
                                     size_t *written);

/**
 * Maps `(x, y)` in the region of `Q = (p1 q1; p2 q2)` to its canonical
 * coordinates `(a, b)`.
 *
 * # Safety
 * `a` and `b` must be valid pointers.
 */
enum RhgStatus rhg_phi_q(uint64_t p1,
                         uint64_t q1,
                         uint64_t p2,
                         uint64_t q2,
                         uint64_t x,
                         uint64_t y,
                         uint64_t *a,
                         uint64_t *b);

/**
 * Number of terminal positions of the games on `Q = (p1 q1; p2 q2)`.
 *
 * # Safety
 * `count` must be a valid pointer.
 */
enum RhgStatus rhg_terminal_count(uint64_t p1,
                                  uint64_t q1,
                                  uint64_t p2,
                                  uint64_t q2,
                                  uint64_t *count);

/**
 * The `n`-th Wythoff pair `(floor(n phi), floor(n phi^2))`.
 *
 * # Safety
 * `lo` and `hi` must be valid pointers.
 */
enum RhgStatus rhg_beatty(uint64_t n, uint64_t *lo, uint64_t *hi);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *rhg_last_error(void);

#endif  /* RHG_H */
