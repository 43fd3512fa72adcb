#ifndef REE_H
#define REE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The binary field operations.
 */
typedef enum ReeFieldOp {
  REE_FIELD_OP_ADD = 0,
  REE_FIELD_OP_SUB = 1,
  REE_FIELD_OP_MUL = 2,
  REE_FIELD_OP_DIV = 3,
} ReeFieldOp;

/**
 * How to compute `omega`.
 */
typedef enum ReeOmegaVia {
  REE_OMEGA_VIA_FORMULA = 0,
  REE_OMEGA_VIA_HEXAGON = 1,
} ReeOmegaVia;

/**
 * Side on which `U` acts in the closure computation.
 */
typedef enum ReeSide {
  REE_SIDE_RIGHT = 0,
  REE_SIDE_LEFT = 1,
} ReeSide;

typedef enum ReeStatus {
  REE_STATUS_OK = 0,
  REE_STATUS_NULL_POINTER = 1,
  REE_STATUS_INVALID_ARGUMENT = 2,
  REE_STATUS_UNSUPPORTED_FIELD = 3,
  REE_STATUS_OUT_OF_RANGE = 4,
  REE_STATUS_DIVISION_BY_ZERO = 5,
  /**
   * A computed value contradicts a structural fact, e.g. a vanishing norm.
   */
  REE_STATUS_INVARIANT_VIOLATION = 6,
  REE_STATUS_PANIC = 7,
} ReeStatus;

/**
 * Opaque finite field `GF(3^m)`.
 */
typedef struct ReeField ReeField;

/**
 * Opaque group `U` with its action on `X`.
 */
typedef struct ReeGroup ReeGroup;

/**
 * Opaque verification report.
 */
typedef struct ReeReport ReeReport;

/**
 * An element `(a, b, c)` of `U`, coordinates as field element indices.
 */
typedef struct ReeTriple {
  uint32_t a;
  uint32_t b;
  uint32_t c;
} ReeTriple;

/**
 * A point of `X`. When `is_infinity` is nonzero, `g` is ignored.
 */
typedef struct ReePoint {
  uint8_t is_infinity;
  struct ReeTriple g;
} ReePoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *ree_last_error(void);

/**
 * Create `GF(3^m)` for `m` in 1, 3, 5, 7.
 *
 * # Safety
 * `out_field` must be a valid pointer to writable storage.
 */
enum ReeStatus ree_field_new(uint32_t m, struct ReeField **out_field);

/**
 * # Safety
 * `field` must come from [`ree_field_new`] and not be freed twice. Null is ignored.
 */
void ree_field_free(struct ReeField *field);

/**
 * `q`, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t ree_field_order(const struct ReeField *field);

/**
 * `out = x op y`.
 *
 * # Safety
 * `field` must be a live handle and `out_value` writable.
 */
enum ReeStatus ree_field_binary(const struct ReeField *field,
                                enum ReeFieldOp op,
                                uint32_t x,
                                uint32_t y,
                                uint32_t *out_value);

/**
 * `out = x^θ`.
 *
 * # Safety
 * `field` must be a live handle and `out_value` writable.
 */
enum ReeStatus ree_field_theta(const struct ReeField *field, uint32_t x, uint32_t *out_value);

/**
 * The group `U` over `field`. The field handle may be freed afterwards.
 *
 * # Safety
 * `field` must be a live handle and `out_group` writable.
 */
enum ReeStatus ree_group_new(const struct ReeField *field, struct ReeGroup **out_group);

/**
 * # Safety
 * `group` must come from [`ree_group_new`] and not be freed twice. Null is ignored.
 */
void ree_group_free(struct ReeGroup *group);

/**
 * `out = g h`.
 *
 * # Safety
 * Pointers must be valid; `out_product` writable.
 */
enum ReeStatus ree_group_mul(const struct ReeGroup *group,
                             const struct ReeTriple *g,
                             const struct ReeTriple *h,
                             struct ReeTriple *out_product);

/**
 * `out = g⁻¹`.
 *
 * # Safety
 * Pointers must be valid; `out_inverse` writable.
 */
enum ReeStatus ree_group_inv(const struct ReeGroup *group,
                             const struct ReeTriple *g,
                             struct ReeTriple *out_inverse);

/**
 * The norm `N(g)` and the auxiliary `v(g)`, `u(g)`. Any output pointer may
 * be null.
 *
 * # Safety
 * `group` and `g` must be valid.
 */
enum ReeStatus ree_group_norm(const struct ReeGroup *group,
                              const struct ReeTriple *g,
                              uint32_t *out_norm,
                              uint32_t *out_v,
                              uint32_t *out_u);

/**
 * `out = ω(p)`, by the closed formula or through the hexagon.
 *
 * # Safety
 * Pointers must be valid; `out_point` writable.
 */
enum ReeStatus ree_group_omega(const struct ReeGroup *group,
                               const struct ReePoint *p,
                               enum ReeOmegaVia via,
                               struct ReePoint *out_point);

/**
 * Run the verification suite over the field orders `fields[0..n_fields]`.
 * A report is produced even when checks fail; see [`ree_report_passed`].
 *
 * # Safety
 * `fields` must point to `n_fields` values; `out_report` writable.
 */
enum ReeStatus ree_verify(const uint32_t *fields,
                          size_t n_fields,
                          uint64_t seed,
                          uint64_t samples,
                          uint8_t slow,
                          struct ReeReport **out_report);

/**
 * # Safety
 * `report` must come from [`ree_verify`] and not be freed twice. Null is ignored.
 */
void ree_report_free(struct ReeReport *report);

/**
 * 1 if every check passed, 0 otherwise (including a null handle).
 *
 * # Safety
 * `report` must be null or a live handle.
 */
uint8_t ree_report_passed(const struct ReeReport *report);

/**
 * Number of checks in the report, or 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t ree_report_check_count(const struct ReeReport *report);

/**
 * Number of failed checks, or 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t ree_report_failure_count(const struct ReeReport *report);

/**
 * The report as JSON, owned by the report handle.
 *
 * # Safety
 * `report` must be null or a live handle. Returns null for null.
 */
const char *ree_report_json(const struct ReeReport *report);

/**
 * Closure of `⟨U, ω, h⟩` at `q = 3`. Writes 0 to `out_order` when the
 * closure passes four times the expected order.
 *
 * # Safety
 * Output pointers must be writable.
 */
enum ReeStatus ree_closure_q3(enum ReeSide side, uint64_t *out_order, uint64_t *out_derived);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* REE_H */
