/* C interface to the order-type library: opaque handles, status codes,
 * caller-freed strings. All geometry is exact; coordinates cross this
 * boundary as "p/q" rational text. */
#ifndef ORDERTYPE_H
#define ORDERTYPE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  OT_OK = 0,
  OT_ERR_INVALID = 1,
  OT_ERR_DEGENERATE = 2,
  OT_ERR_BUDGET = 3,
  OT_ERR_RETRIES = 4,
  OT_ERR_INSUFFICIENT = 5,
  OT_ERR_PARSE = 6,
  OT_ERR_REPAIR = 7,
  OT_ERR_INTERNAL = 8,
  OT_ERR_NOMEM = 9
} ot_status;

typedef struct ot_seq ot_seq;
typedef struct ot_result ot_result;
typedef struct ot_bound ot_bound;

/* Message for the most recent failure on this thread. Owned by the
 * library; valid until the next failing call. */
const char* ot_last_error(void);

void ot_string_free(char* s);
void ot_seq_free(ot_seq* seq);
void ot_result_free(ot_result* res);
void ot_bound_free(ot_bound* bound);

/* --- point sequences ------------------------------------------------ */

ot_status ot_seq_parse(const char* text, ot_seq** out);
ot_status ot_seq_serialize(const ot_seq* seq, char** out);
size_t ot_seq_dim(const ot_seq* seq);
size_t ot_seq_size(const ot_seq* seq);
/* coordinate as canonical rational text */
ot_status ot_seq_coord(const ot_seq* seq, size_t point, size_t axis,
                       char** out);
ot_status ot_seq_coord_double(const ot_seq* seq, size_t point, size_t axis,
                              double* out);

/* general-position state: 0 verified, 1 unverified, 2 degenerate */
ot_status ot_seq_validate(ot_seq* seq, int* state, char** witness);

/* --- generators ------------------------------------------------------ */

ot_status ot_gen_moment(size_t dim, size_t count, const char* t_start,
                        const char* t_step, ot_seq** out);
ot_status ot_gen_es_monotone(size_t n, ot_seq** out);
ot_status ot_gen_es_capcup(size_t n, ot_seq** out);
ot_status ot_gen_random(size_t dim, size_t count, uint64_t seed,
                        const char* bound, ot_seq** out);

/* --- analysis --------------------------------------------------------- */

typedef struct {
  size_t dim;
  size_t n_points;
  uint64_t plus_tuples;
  uint64_t minus_tuples;
  int homogeneous; /* 0/1 */
  int sign;        /* +1/-1 when homogeneous */
  int gp_state;    /* as ot_seq_validate */
} ot_analysis;

/* budget = 0 selects the default tuple budget */
ot_status ot_analyze(const ot_seq* seq, uint64_t budget, unsigned threads,
                     ot_analysis* out);

/* --- extraction ------------------------------------------------------- */

typedef enum {
  OT_ALGO_AUTO = 0,
  OT_ALGO_BRUTE,
  OT_ALGO_MONOTONE,
  OT_ALGO_CUPCAP,
  OT_ALGO_SUK
} ot_algo;

ot_status ot_extract(const ot_seq* seq, ot_algo algo, size_t target,
                     ot_result** out);
size_t ot_result_size(const ot_result* res);
size_t ot_result_index(const ot_result* res, size_t i);
int ot_result_sign(const ot_result* res);
int ot_result_verified(const ot_result* res);
const char* ot_result_algorithm(const ot_result* res);

/* --- verification ------------------------------------------------------ */

ot_status ot_check_homogeneous(const ot_seq* seq, const size_t* idx,
                               size_t n, int* homogeneous, int* sign,
                               char** counterexample);
ot_status ot_check_convex_position(const ot_seq* seq, const size_t* idx,
                                   size_t n, int* out);
ot_status ot_check_cyclic_polytope(const ot_seq* seq, const size_t* idx,
                                   size_t n, int* out);

/* --- guarantee thresholds ---------------------------------------------- */

/* kind: 0 exact integer, 1 power of two, 2 symbolic tower */
ot_status ot_guarantee_threshold(unsigned long dim, unsigned long target,
                                 ot_bound** out);
int ot_bound_kind(const ot_bound* bound);
ot_status ot_bound_render(const ot_bound* bound, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORDERTYPE_H */
