/* C interface of the geosub library: opaque handles, integer status codes.
 * Every function returns GEOSUB_OK on success; on failure the handle/string
 * outputs are untouched and geosub_last_error() describes the problem for
 * the calling thread. Strings returned through char** are heap-allocated
 * and must be released with geosub_string_free(). */
#ifndef GEOSUB_GEOSUB_H
#define GEOSUB_GEOSUB_H

#ifdef __cplusplus
extern "C" {
#endif

#define GEOSUB_OK 0
#define GEOSUB_ERR_INPUT 2   /* malformed documents, bad arguments */
#define GEOSUB_ERR_NUMERIC 3 /* degenerate or unsolvable configurations */

#define GEOSUB_SCHEME_ANGLE4 0
#define GEOSUB_SCHEME_CURVATURE6 1
#define GEOSUB_SCHEME_PLANAR4 2

#define GEOSUB_BOUNDARY_FIXED 0
#define GEOSUB_BOUNDARY_MIRROR 1

#define GEOSUB_ESTIMATOR_DEFECT 0
#define GEOSUB_ESTIMATOR_CHORD 1
#define GEOSUB_ESTIMATOR_CIRCUMCIRCLE 2

#define GEOSUB_VERDICT_BOUNDED 0
#define GEOSUB_VERDICT_DIVERGENT_PLUS 1
#define GEOSUB_VERDICT_DIVERGENT_MINUS (-1)
#define GEOSUB_VERDICT_INCONCLUSIVE 2

#define GEOSUB_DECAY_GEOMETRIC 0
#define GEOSUB_DECAY_INCONCLUSIVE 1
#define GEOSUB_DECAY_EXACTLY_GEODESIC 2

typedef struct geosub_polygon geosub_polygon;
typedef struct geosub_run geosub_run;

const char* geosub_last_error(void);
void geosub_string_free(char* s);

/* Polygons (JSON documents, spherical or planar). */
int geosub_polygon_parse(const char* json_text, geosub_polygon** out);
void geosub_polygon_free(geosub_polygon* p);
int geosub_polygon_is_planar(const geosub_polygon* p, int* out);
int geosub_polygon_size(const geosub_polygon* p, int* out);
int geosub_polygon_to_json(const geosub_polygon* p, char** out);
int geosub_polygon_to_obj(const geosub_polygon* p, char** out); /* spherical only */

/* Subdivision run: one polygon per iteration, the input included. */
int geosub_subdivide(const geosub_polygon* p, int scheme, int iterations, int boundary,
                     int presmooth, double margin, geosub_run** out);
int geosub_run_size(const geosub_run* r, int* out);
int geosub_run_polygon(const geosub_run* r, int index, geosub_polygon** out);
void geosub_run_free(geosub_run* r);

/* Curvature series along one polygon. */
int geosub_curvature_csv(const geosub_polygon* p, int estimator, char** out);
/* Defect estimator in red, circumcircle estimator in black. */
int geosub_curvature_svg(const geosub_polygon* p, char** out);

/* Convergence report of a subdivision run (CSV) plus the decay verdict. */
int geosub_analyze_csv(const geosub_polygon* p, int scheme, int iterations, int boundary,
                       int presmooth, double margin, int* decay_verdict, char** out);

/* Center-curvature divergence experiment on the symmetric 5-point polygon. */
int geosub_diverge(double delta0, double delta1, double edge, int iterations, int planar,
                   int* verdict, char** csv);

/* Atomic (write-temp-then-rename) file write. */
int geosub_write_file(const char* path, const char* data);

#ifdef __cplusplus
}
#endif

#endif /* GEOSUB_GEOSUB_H */
