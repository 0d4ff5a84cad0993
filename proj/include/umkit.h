/* umkit — exact-rational ultrametric space toolkit, C interface.
 *
 * Every function returns a status code; results come back through out
 * parameters. Strings returned through char** are heap-allocated by the
 * library and must be released with umk_string_free; handles with their
 * matching *_free. On failure the out parameters are untouched and
 * umk_last_error() carries a message for the current thread.
 */
#ifndef UMKIT_H
#define UMKIT_H

#include <stddef.h>

#ifdef _WIN32
#define UMK_API __declspec(dllexport)
#else
#define UMK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum umk_status {
  UMK_OK = 0,
  UMK_ERR_ARGUMENT = 1,     /* null or ill-typed argument */
  UMK_ERR_PARSE = 2,        /* malformed textual input */
  UMK_ERR_STRUCTURE = 3,    /* structural invariant violated */
  UMK_ERR_PRECONDITION = 4, /* operation precondition not met */
  UMK_ERR_OVERFLOW = 5,     /* exact arithmetic out of range */
  UMK_ERR_INTERNAL = 6
} umk_status;

typedef enum umk_format { UMK_FORMAT_TEXT = 0, UMK_FORMAT_JSON = 1 } umk_format;

typedef struct umk_space umk_space;   /* finite space with rational distances */
typedef struct umk_report umk_report; /* validation verdict plus witnesses */
typedef struct umk_gamma umk_gamma;   /* poset-valued distance matrix */

UMK_API const char* umk_last_error(void);

UMK_API void umk_string_free(char* text);
UMK_API void umk_space_free(umk_space* space);
UMK_API void umk_report_free(umk_report* report);
UMK_API void umk_gamma_free(umk_gamma* gamma);

/* -- spaces ------------------------------------------------------------- */

UMK_API umk_status umk_space_from_json(const char* text, umk_space** out);
UMK_API umk_status umk_space_from_csv(const char* text, umk_space** out);
UMK_API umk_status umk_space_to_json(const umk_space* space, char** out);
UMK_API size_t umk_space_point_count(const umk_space* space);
UMK_API umk_status umk_space_label(const umk_space* space, size_t index, char** out);
UMK_API umk_status umk_space_diameter(const umk_space* space, char** out);

/* -- validators ---------------------------------------------------------- */

UMK_API umk_status umk_validate_metric(const umk_space* space, umk_report** out);
UMK_API umk_status umk_validate_ultrametric(const umk_space* space, umk_report** out);
UMK_API umk_status umk_isosceles_witnesses(const umk_space* space, umk_report** out);
UMK_API umk_status umk_four_point_check(const umk_space* space, umk_report** out);
UMK_API umk_status umk_center_invariance_check(const umk_space* space, umk_report** out);
UMK_API umk_status umk_nested_or_disjoint_check(const umk_space* space, umk_report** out);

UMK_API int umk_report_valid(const umk_report* report); /* 1 when no witnesses */
UMK_API size_t umk_report_witness_count(const umk_report* report);
UMK_API umk_status umk_report_render(const umk_report* report, umk_format format, char** out);

/* -- distance sets and order types ---------------------------------------- */

UMK_API umk_status umk_distance_set(const umk_space* space, umk_format format, char** out);
UMK_API umk_status umk_classify_order_type(const char* description_json, umk_format format,
                                           char** out);
/* result: 1 when the description fits an infinite totally bounded space. */
UMK_API umk_status umk_tb_distance_set_check(const char* description_json, umk_format format,
                                             int* result, char** out);

/* -- balls and trees ------------------------------------------------------ */

UMK_API umk_status umk_open_ball(const umk_space* space, const char* center, const char* radius,
                                 umk_format format, char** out);
/* candidates: comma-separated labels, or NULL for all points. */
UMK_API umk_status umk_ball_partition(const umk_space* space, const char* radius,
                                      const char* candidates, umk_format format, char** out);
UMK_API umk_status umk_dendrogram_json(const umk_space* space, char** out);
UMK_API umk_status umk_dendrogram_newick(const umk_space* space, char** out);

/* -- constructors ---------------------------------------------------------- */

UMK_API umk_status umk_construct_dlps(const char* values_csv, umk_space** out);
/* classes split by '|', members by ',': "a|b,c". */
UMK_API umk_status umk_construct_partition(const char* classes_spec, umk_space** out);
UMK_API umk_status umk_construct_modify(const umk_space* space, const char* radius,
                                        const char* g_values_csv, umk_space** out);
UMK_API umk_status umk_construct_compose(const umk_space* space, const char* function_name,
                                         umk_space** out);

/* -- gamma distances ------------------------------------------------------ */

UMK_API umk_status umk_gamma_from_json(const char* text, umk_gamma** out);
UMK_API umk_status umk_gamma_validate(const umk_gamma* gamma, umk_report** out);
UMK_API umk_status umk_gamma_ball(const umk_gamma* gamma, const char* center, const char* element,
                                  umk_format format, char** out);
/* holds: 1 when the ball family satisfies the base axiom. */
UMK_API umk_status umk_gamma_base_check(const umk_gamma* gamma, umk_format format, int* holds,
                                        char** out);

#ifdef __cplusplus
}
#endif

#endif /* UMKIT_H */
