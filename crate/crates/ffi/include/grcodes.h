#ifndef GRCODES_H
#define GRCODES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GrStatus {
  GR_STATUS_OK = 0,
  GR_STATUS_NULL_POINTER = 1,
  GR_STATUS_INVALID_UTF8 = 2,
  GR_STATUS_PARSE = 3,
  GR_STATUS_DOMAIN = 4,
  GR_STATUS_LIMIT = 5,
  GR_STATUS_OUT_OF_BOUNDS = 6,
  GR_STATUS_INTERNAL = 7,
} GrStatus;

// Which inner product a dual or self-duality test uses.
typedef enum GrDualKind {
  GR_DUAL_KIND_EUCLIDEAN = 0,
  GR_DUAL_KIND_HERMITIAN = 1,
} GrDualKind;

// What [`gr_enumerate`] lists.
typedef enum GrCodeFamily {
  GR_CODE_FAMILY_ALL_CYCLIC = 0,
  GR_CODE_FAMILY_EUCLIDEAN_SELF_DUAL = 1,
  GR_CODE_FAMILY_HERMITIAN_SELF_DUAL = 2,
} GrCodeFamily;

// A canonical code together with its ring.
typedef struct GrCode GrCode;

typedef struct GrCodeList GrCodeList;

// `GR(p^2, s)[u]/(u^(p^a) - 1)`.
typedef struct GrCyclicRing GrCyclicRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null if none.
// Release with `gr_string_free`.
char *gr_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library.
void gr_string_free(char *s);

// # Safety
// `out` must be writable.
enum GrStatus gr_cyclic_ring_new(uint64_t p, size_t s, uint32_t a, struct GrCyclicRing **out);

// # Safety
// `ring` must be null or a handle from `gr_cyclic_ring_new`.
void gr_cyclic_ring_free(struct GrCyclicRing *ring);

// Length `p^a` of the ring's codes.
//
// # Safety
// `ring` must be a live handle and `out` writable.
enum GrStatus gr_cyclic_ring_length(const struct GrCyclicRing *ring, size_t *out);

// Parse a code literal such as `full(2,2,1;1,1;[T(1)])` over `ring`.
//
// # Safety
// `ring` must be a live handle, `text` a nul-terminated string, `out` writable.
enum GrStatus gr_code_parse(const struct GrCyclicRing *ring, const char *text, struct GrCode **out);

// # Safety
// `code` must be null or a handle produced by this library.
void gr_code_free(struct GrCode *code);

// Literal form of `code`. Release with `gr_string_free`.
//
// # Safety
// `code` must be a live handle and `out` writable.
enum GrStatus gr_code_to_string(const struct GrCode *code, char **out);

// `log_p |C|`.
//
// # Safety
// `code` must be a live handle and `out` writable.
enum GrStatus gr_code_log_cardinality(const struct GrCode *code, size_t *out);

// # Safety
// `code` must be a live handle and `out` writable.
enum GrStatus gr_code_dual(const struct GrCode *code, enum GrDualKind kind, struct GrCode **out);

// # Safety
// `code` must be a live handle and `out` writable.
enum GrStatus gr_code_is_self_dual(const struct GrCode *code, enum GrDualKind kind, bool *out);

// Whether two codes over the same ring are equal.
//
// # Safety
// Both handles must be live and `out` writable.
enum GrStatus gr_code_equal(const struct GrCode *a, const struct GrCode *b, bool *out);

// # Safety
// `ring` must be a live handle and `out` writable.
enum GrStatus gr_enumerate(const struct GrCyclicRing *ring,
                           enum GrCodeFamily family,
                           struct GrCodeList **out);

// # Safety
// `list` must be a live handle and `out` writable.
enum GrStatus gr_code_list_len(const struct GrCodeList *list, size_t *out);

// Copy of the `index`-th code; release with `gr_code_free`.
//
// # Safety
// `list` must be a live handle and `out` writable.
enum GrStatus gr_code_list_get(const struct GrCodeList *list, size_t index, struct GrCode **out);

// # Safety
// `list` must be null or a handle from `gr_enumerate`.
void gr_code_list_free(struct GrCodeList *list);

// Number of Euclidean self-dual cyclic codes of length `n` over
// `GR(p^2, s)`, as a decimal string. Release with `gr_string_free`.
//
// # Safety
// `out` must be writable.
enum GrStatus gr_count_self_dual(uint64_t p, size_t s, uint64_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRCODES_H */
