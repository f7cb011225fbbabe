#ifndef LIEXT_H
#define LIEXT_H

/* Generated by cbindgen from the Rust sources; edit those, not this file. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call. Zero is success; everything else is a failure whose
// message is available from `liext_last_error`.
typedef enum {
  // The call succeeded and every out parameter was written.
  LIEXT_OK = 0,
  // A required pointer argument was null.
  LIEXT_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  LIEXT_INVALID_UTF8 = 2,
  // A document failed to parse or violated its schema.
  LIEXT_PARSE_ERROR = 3,
  // The inputs parsed but do not satisfy the laws the operation needs.
  LIEXT_INVALID_INPUT = 4,
  // The operation is not defined for these inputs (for example, blind
  // splitness search over a nonabelian kernel).
  LIEXT_UNSUPPORTED = 5,
  // An internal invariant failed; please report the message.
  LIEXT_INTERNAL = 6,
} liext_status;

// A Lie algebra with a fixed ordered basis, as parsed from an algebra
// document. Free with `liext_algebra_free`.
typedef struct liext_algebra liext_algebra;

// Extension data: the pair of algebras together with the action family and
// the correction cochain. Free with `liext_data_free`.
typedef struct liext_data liext_data;

// A built extension: the total algebra with its inclusion, projection, and
// section. Free with `liext_extension_free`.
typedef struct liext_extension liext_extension;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent failure on the calling thread, or null if
// nothing has failed yet. The pointer stays valid until the next failing
// call on the same thread; do not free it.
const char *liext_last_error(void);

// Free a string returned through an out parameter. Null is a no-op.
void liext_string_free(char *text);

// Parse an algebra document (the `.alg` format: `name`, `basis`, `brackets`).
// The antisymmetry and Jacobi checks run during parsing, so a handle always
// holds a genuine Lie algebra.
liext_status liext_algebra_parse(const char *json,
                                 liext_algebra **out);

// Write the algebra back out in canonical form (sorted keys, fixed layout),
// byte-identical to what the command line prints.
liext_status liext_algebra_to_json(const liext_algebra *algebra,
                                   char **out);

// The dimension of the algebra.
liext_status liext_algebra_dim(const liext_algebra *algebra,
                               size_t *out);

// The dimension of the center.
liext_status liext_algebra_center_dim(const liext_algebra *algebra,
                                      size_t *out);

// Free an algebra handle. Null is a no-op.
void liext_algebra_free(liext_algebra *algebra);

// Parse a data document (`g`, `h`, `alpha`, `rho`) with both algebras
// inline. Shapes are checked here; whether the datum satisfies the laws of
// valid extension data is the business of `liext_data_check`.
liext_status liext_data_parse(const char *json,
                              liext_data **out);

// Write the data document in canonical form with both algebras inline.
liext_status liext_data_to_json(const liext_data *data,
                                char **out);

// Decide whether the datum is valid extension data: every action matrix is
// a derivation, the action bracket closes up to the inner correction, and
// the correction cochain is closed. `LIEXT_OK` means valid;
// `LIEXT_INVALID_INPUT` means the message lists the violations.
liext_status liext_data_check(const liext_data *data);

// The dimensions of the base algebra and of the kernel, in that order.
liext_status liext_data_dims(const liext_data *data,
                             size_t *out_g_dim,
                             size_t *out_h_dim);

// Free a data handle. Null is a no-op.
void liext_data_free(liext_data *data);

// Build the extension the datum describes: the total algebra on kernel
// coordinates followed by base coordinates, with the standard inclusion,
// projection, and section. Fails with `LIEXT_INVALID_INPUT` when the datum
// is not valid.
liext_status liext_build(const liext_data *data,
                         liext_extension **out);

// Parse an extension document (`g`, `h`, `e`, `inclusion`, `projection`,
// `section`). The exactness and homomorphism laws are re-checked, so a
// handle always holds a genuine extension.
liext_status liext_extension_parse(const char *json,
                                   liext_extension **out);

// Write the extension document in canonical form.
liext_status liext_extension_to_json(const liext_extension *extension,
                                     char **out);

// The dimension of the total algebra.
liext_status liext_extension_dim(const liext_extension *extension,
                                 size_t *out);

// Read extension data off the extension relative to its stored section.
// Fails with `LIEXT_UNSUPPORTED` when the document carries no section.
liext_status liext_extension_extract(const liext_extension *extension,
                                     liext_data **out);

// Free an extension handle. Null is a no-op.
void liext_extension_free(liext_extension *extension);

// Decide whether two data over the same pair of algebras describe
// equivalent extensions. On success `*out_equivalent` holds the answer;
// when it is true and `out_witness_json` is non-null, that slot receives
// the witnessing section change as a matrix document (the map `b` with
// `transform(first, b) == second`). When it is false the slot is set to
// null. Pass null for `out_witness_json` to skip the witness.
liext_status liext_equivalent(const liext_data *first,
                              const liext_data *second,
                              bool *out_equivalent,
                              char **out_witness_json);

// Decide whether a datum with an abelian kernel splits, where the question
// is linear. On success `*out_splits` holds the answer; when it is true and
// `out_witness_json` is non-null, that slot receives the splitting section
// change as a matrix document, and when it is false the slot is set to
// null. A nonabelian kernel fails with `LIEXT_UNSUPPORTED` — splitness
// there is decided only against a supplied certificate.
liext_status liext_split_abelian(const liext_data *data,
                                 bool *out_splits,
                                 char **out_witness_json);

// The dimension of the degree-`degree` cohomology of the algebra with
// coefficients in the trivial module of the given dimension.
liext_status liext_cohomology_trivial_dim(const liext_algebra *algebra,
                                          size_t coefficients,
                                          size_t degree,
                                          size_t *out);

// The dimension of the degree-`degree` cohomology of the algebra acting on
// itself by the adjoint representation.
liext_status liext_cohomology_adjoint_dim(const liext_algebra *algebra,
                                          size_t degree,
                                          size_t *out);

// Decide whether the degree-3 obstruction class of an outer action
// vanishes — equivalently, whether any extension induces the action.
// `images_json` is an outer-images document giving the class of the action
// of each base basis element in outer-derivation coordinates of the kernel;
// pass null for the zero action. The images must form a homomorphism into
// the outer algebra, or the call fails with `LIEXT_INVALID_INPUT`.
liext_status liext_obstruction_vanishes(const liext_algebra *g,
                                        const liext_algebra *h,
                                        const char *images_json,
                                        bool *out_vanishes);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEXT_H */
