#ifndef SPINREV_H
#define SPINREV_H

#include <stddef.h>

#if defined(SPINREV_BUILDING_LIBRARY)
#define SR_API __attribute__((visibility("default")))
#else
#define SR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_INVALID_ARGUMENT = 1,
  SR_RESOURCE = 2,
  SR_NOT_SIGNED_PERMUTATION = 3,
  SR_NOT_PAULI_STRING = 4,
  SR_CONVERGENCE = 5,
  SR_DEGENERATE = 6,
  SR_BUFFER_TOO_SMALL = 7,
  SR_INTERNAL = 99
} sr_status;

typedef enum sr_protocol { SR_PROTOCOL_STATIC = 1, SR_PROTOCOL_PULSED = 2, SR_PROTOCOL_FAMILY = 3 } sr_protocol;

typedef struct sr_profile sr_profile;
typedef struct sr_permutation sr_permutation;
typedef struct sr_spectrum sr_spectrum;
typedef struct sr_trace sr_trace;

/* Message for the most recent failure on the calling thread. Never NULL. */
SR_API const char* sr_last_error(void);
SR_API const char* sr_status_name(sr_status status);
SR_API const char* sr_version(void);

/*
 * Variable-length outputs follow one pattern: *needed receives the full
 * length (elements, or bytes including the terminating NUL for strings).
 * A NULL buffer or short capacity returns SR_BUFFER_TOO_SMALL without
 * writing, except that *needed is always set.
 */

/* m is ignored for protocols 1 and 2. uncorrected_field selects the doubled
   on-site field of protocol 3. */
SR_API sr_status sr_profile_create(int protocol, int n, int m, int uncorrected_field,
                                   sr_profile** out);
SR_API void sr_profile_destroy(sr_profile* profile);

typedef struct sr_profile_info {
  int n;
  int m;          /* -1 when the protocol has no family parameter */
  int protocol;
  double duration;
  double max_coupling;
  int has_two_site;
  double uniformity;
  double normalized_time;
} sr_profile_info;

SR_API sr_status sr_profile_get_info(const sr_profile* profile, sr_profile_info* out);
SR_API sr_status sr_profile_couplings(const sr_profile* profile, double* buf, size_t cap,
                                      size_t* needed);
SR_API sr_status sr_profile_fields(const sr_profile* profile, double* buf, size_t cap,
                                   size_t* needed);
SR_API sr_status sr_profile_json(const sr_profile* profile, char* buf, size_t cap,
                                 size_t* needed);

typedef struct sr_verify_result {
  int passed;
  double metric;
} sr_verify_result;

/* Free-fermion check. Protocols 1 and 3: largest entry deviation of the
   Majorana propagator from the reversal signed permutation. Protocol 2:
   number of Majorana indices where the braid sequence differs from it. */
SR_API sr_status sr_verify_majorana(const sr_profile* profile, double tol, sr_verify_result* out);
/* Dense check: phase distance between the protocol unitary and the mirror. */
SR_API sr_status sr_verify_statevec(const sr_profile* profile, double tol, sr_verify_result* out);

/* Signed permutations act on Majorana indices 0..2N+3. */
SR_API sr_status sr_permutation_from_profile(const sr_profile* profile, double tol,
                                             sr_permutation** out);
SR_API sr_status sr_permutation_braid(int n, sr_permutation** out);
SR_API sr_status sr_permutation_target(int n, sr_permutation** out);
SR_API sr_status sr_permutation_entries(const sr_permutation* p, int* perm, int* sign,
                                        size_t cap, size_t* needed);
SR_API int sr_permutation_equal(const sr_permutation* a, const sr_permutation* b);
SR_API void sr_permutation_destroy(sr_permutation* p);

/* Numeric spectrum of the Majorana coupling matrix (protocols 1 and 3), the
   closed form, and the decoded propagator when it is a signed permutation. */
SR_API sr_status sr_spectrum_create(const sr_profile* profile, double tol, sr_spectrum** out);
SR_API sr_status sr_spectrum_eigenvalues(const sr_spectrum* s, double* buf, size_t cap,
                                         size_t* needed);
SR_API sr_status sr_spectrum_closed_form(const sr_spectrum* s, double* buf, size_t cap,
                                         size_t* needed);
SR_API int sr_spectrum_decoded(const sr_spectrum* s);
SR_API sr_status sr_spectrum_json(const sr_spectrum* s, char* buf, size_t cap, size_t* needed);
SR_API void sr_spectrum_destroy(sr_spectrum* s);

SR_API sr_status sr_capacity(double* y_star, double* alpha);
SR_API sr_status sr_lower_bound_time(int n, double* out);
SR_API sr_status sr_optimality_ratio(int n, double* ratio, double* bound);

SR_API sr_status sr_trace_create(int n, int steps, sr_trace** out);
SR_API size_t sr_trace_length(const sr_trace* trace);
SR_API sr_status sr_trace_point(const sr_trace* trace, size_t index, double* t, double* entropy,
                                double* bound);
SR_API sr_status sr_trace_csv(const sr_trace* trace, char* buf, size_t cap, size_t* needed);
SR_API void sr_trace_destroy(sr_trace* trace);

#ifdef __cplusplus
}
#endif

#endif
