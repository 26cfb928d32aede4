/* C interface to the koszulkit shared library.
 *
 * All computations are exact (arbitrary-precision rationals internally).
 * Functions return KZK_OK on success; on any other status the thread-local
 * message from kzk_last_error() describes the problem.  Strings returned
 * through char** parameters are heap-allocated and must be released with
 * kzk_string_free().  JSON payloads carry a "schema": 1 version field and
 * have deterministic bytes for fixed inputs.
 */

#ifndef KOSZULKIT_H
#define KOSZULKIT_H

#ifndef KOSZULKIT_API
#if defined(_WIN32)
#define KOSZULKIT_API __declspec(dllexport)
#else
#define KOSZULKIT_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kzk_status {
  KZK_OK = 0,
  KZK_ERR_INVALID_ARGUMENT = 1, /* bad parameter or out-of-range truncation */
  KZK_ERR_PARSE = 2,            /* malformed presentation text or shape */
  KZK_ERR_INTERNAL = 3          /* unexpected failure; see kzk_last_error */
} kzk_status;

/* Graded quadratic-quotient presentation (opaque). */
typedef struct kzk_presentation kzk_presentation;

/* Message for the most recent failing call on this thread; never NULL. */
KOSZULKIT_API const char* kzk_last_error(void);

KOSZULKIT_API void kzk_string_free(char* s);

/* Worker count for the linear-algebra kernels; <= 0 selects the hardware
 * concurrency.  Results are identical at any setting. */
KOSZULKIT_API void kzk_set_threads(int threads);

/* Dump every eliminated matrix to dir in MatrixMarket format; NULL or ""
 * disables dumping. */
KOSZULKIT_API kzk_status kzk_set_debug_matrix_dir(const char* dir);

/* Parses presentation text.  warnings_json (optional) receives a JSON array
 * of parser warnings. */
KOSZULKIT_API kzk_status kzk_presentation_parse(const char* text, kzk_presentation** out,
                                                char** warnings_json);

/* Built-in families: "sv:<n>" (free symmetric algebra) and "g2n:<N>"
 * (Plucker coordinate ring of 2-planes in N-space). */
KOSZULKIT_API kzk_status kzk_presentation_fixture(const char* name, kzk_presentation** out);

KOSZULKIT_API void kzk_presentation_free(kzk_presentation* p);

/* Canonical text round-trip of the presentation. */
KOSZULKIT_API kzk_status kzk_canonical_text(const kzk_presentation* p, char** out);

/* Parse report for text input: validity, generator/relation names, warnings
 * and the canonical re-serialization. */
KOSZULKIT_API kzk_status kzk_validate_json(const char* text, char** out);

/* Graded dimensions through t^order plus the rational-function numerator
 * bookkeeping. */
KOSZULKIT_API kzk_status kzk_hilbert_json(const kzk_presentation* p, int order, char** out);

/* Deviation counts eps_1..eps_order peeled off the Hilbert series. */
KOSZULKIT_API kzk_status kzk_deviations_json(const kzk_presentation* p, int order, char** out);

/* Quadratic-dual presentation summary and its graded dimensions through
 * t^order. */
KOSZULKIT_API kzk_status kzk_dual_json(const kzk_presentation* p, int order, char** out);

/* Homology table of the generator-annihilation complex, weights <=
 * max_weight. */
KOSZULKIT_API kzk_status kzk_syzygies_json(const kzk_presentation* p, int max_weight, char** out);
KOSZULKIT_API kzk_status kzk_syzygies_csv(const kzk_presentation* p, int max_weight, char** out);

/* Homology table of the extension by one even weight-2 variable per
 * relation. */
KOSZULKIT_API kzk_status kzk_berkovits_json(const kzk_presentation* p, int max_weight, char** out);
KOSZULKIT_API kzk_status kzk_berkovits_csv(const kzk_presentation* p, int max_weight, char** out);

/* Homology of the 12-dimensional-algebra small complex together with the
 * free-generator series. */
KOSZULKIT_API kzk_status kzk_bv_small_json(int max_weight, char** out);
KOSZULKIT_API kzk_status kzk_bv_small_csv(int max_weight, char** out);

/* Schur expansion of s_shape * s_times (when times is non-NULL) or
 * s_shape^power.  Shapes accept partition "[4,1,1]" or diagonal "(1|4)"
 * syntax.  rows > 0 truncates to that many rows; entries > 0 adds
 * dimensions evaluated on that many variables. */
KOSZULKIT_API kzk_status kzk_schur_json(const char* shape, const char* times, int power, int rows,
                                        int entries, char** out);

/* Named check batteries.  all_pass (optional) receives 1 when every check
 * passed.  A failing check is a successful call; inspect all_pass. */
KOSZULKIT_API kzk_status kzk_check_g25_json(int max_weight, int* all_pass, char** out);
KOSZULKIT_API kzk_status kzk_check_all_json(int stop_on_first, int* all_pass, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KOSZULKIT_H */
