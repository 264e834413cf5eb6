/* C interface to the transfer-operator library. Every call returns a mayer_status;
   on failure mayer_last_error() describes the most recent error of the calling thread. */
#ifndef MAYER_H
#define MAYER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef MAYER_BUILDING_DLL
#    define MAYER_API __declspec(dllexport)
#  else
#    define MAYER_API __declspec(dllimport)
#  endif
#else
#  define MAYER_API __attribute__((visibility("default")))
#endif

typedef enum {
    MAYER_OK = 0,
    MAYER_E_DOMAIN = 1,
    MAYER_E_POLE = 2,
    MAYER_E_OVERFLOW = 3,
    MAYER_E_NONCONVERGENCE = 4,
    MAYER_E_RESOURCE = 5,
    MAYER_E_PARITY = 6,
    MAYER_E_QUADRATURE = 7,
    MAYER_E_EIGENSOLVER = 8,
    MAYER_E_INVALID_ARGUMENT = 9,
    MAYER_E_INTERNAL = 10
} mayer_status;

typedef struct {
    double re, im;
} mayer_complex;

MAYER_API const char* mayer_version(void);
MAYER_API const char* mayer_status_name(int status);
MAYER_API const char* mayer_last_error(void);
/* Frees any string returned through a char** out-parameter. */
MAYER_API void mayer_string_free(char* s);

/* 0 standard, 1 oracle (longer direct sums in the Euler-Maclaurin evaluators). Process-wide. */
enum { MAYER_PRECISION_STANDARD = 0, MAYER_PRECISION_ORACLE = 1 };
MAYER_API int mayer_set_precision(int mode);

/* special functions */
MAYER_API int mayer_gamma(mayer_complex z, mayer_complex* out);
MAYER_API int mayer_riemann_zeta(mayer_complex s, mayer_complex* out);
MAYER_API int mayer_hurwitz_zeta(mayer_complex w, mayer_complex q, mayer_complex* out);
MAYER_API int mayer_bessel_j(mayer_complex nu, mayer_complex u, mayer_complex* out);

/* operator matrices */
enum { MAYER_BASIS_MONOMIAL = 0, MAYER_BASIS_HURWITZ = 1 };
enum { MAYER_DET_MINUS = 0, MAYER_DET_PLUS = 1, MAYER_DET_MINUS_SQUARE = 2 };

typedef struct {
    double disc_radius;  /* default 1.5 */
    int sign_fault_row;  /* test hook, -1 disables */
    int sign_fault_col;
} mayer_matrix_options;

MAYER_API void mayer_matrix_options_init(mayer_matrix_options* opt);

typedef struct mayer_matrix mayer_matrix;

/* opt may be NULL */
MAYER_API int mayer_matrix_create(mayer_complex s, int order, int basis, const mayer_matrix_options* opt,
                                  mayer_matrix** out);
MAYER_API void mayer_matrix_free(mayer_matrix* A);
MAYER_API int mayer_matrix_order(const mayer_matrix* A);
MAYER_API int mayer_matrix_entry(const mayer_matrix* A, int m, int k, mayer_complex* out);
MAYER_API int mayer_matrix_trace_power(const mayer_matrix* A, int n, mayer_complex* out);
MAYER_API int mayer_matrix_det(const mayer_matrix* A, int kind, mayer_complex* out);
/* k largest-magnitude eigenvalues into out[0..k-1] */
MAYER_API int mayer_matrix_eigenvalues(const mayer_matrix* A, int k, mayer_complex* out);
MAYER_API int mayer_matrix_json(const mayer_matrix* A, char** json);

/* traces */
enum { MAYER_TRACE_CLOSED = 0, MAYER_TRACE_ORBIT = 1, MAYER_TRACE_KERNEL = 2, MAYER_TRACE_MATRIX = 3 };

typedef struct {
    int n;                /* power, default 1 */
    int n_cap;            /* closed form 1000, kernel 20 */
    int order;            /* matrix, default 64 */
    long long max_digit;  /* orbit, default 200 */
} mayer_trace_params;

typedef struct {
    mayer_complex value;
    double tail_bound;
} mayer_trace_result;

MAYER_API void mayer_trace_params_init(mayer_trace_params* p);
/* n_cap <= 0 picks the method default; json may be NULL */
MAYER_API int mayer_trace(mayer_complex s, int method, const mayer_trace_params* p, mayer_trace_result* out, char** json);

/* determinants */
MAYER_API int mayer_det_finite(mayer_complex s, int kind, int order, mayer_complex* out, char** json);
/* sign = +1: det(1 - L_s), -1: det(1 + L_s); max_digit 0 is automatic */
MAYER_API int mayer_det_series(mayer_complex s, int sign, int n_max, long long max_digit, int extrapolate,
                               mayer_complex* out, char** json);
MAYER_API int mayer_spectrum(mayer_complex s, int order, int k, mayer_complex* out);

typedef struct {
    mayer_complex root;
    double det_abs;
    mayer_complex companion_root;
    double displacement;
    int iterations;
} mayer_zero_result;

/* companion_order 0 means order/2 */
MAYER_API int mayer_find_zero(mayer_complex start, int kind, int order, int companion_order, double tol, int max_iterations,
                              mayer_zero_result* out, char** json);

/* zeta functions */
enum {
    MAYER_ZETA_XI_DET = 0,
    MAYER_ZETA_ETA_DET = 1,
    MAYER_ZETA_SELBERG_DET = 2,
    MAYER_ZETA_SELBERG_EULER = 3,
    MAYER_ZETA_REDUCED_SUM = 4,
    MAYER_ZETA_XI_ORBIT = 5,
    MAYER_ZETA_ETA_ORBIT = 6,
    MAYER_ZETA_ETA_EULER = 7
};

typedef struct {
    int order;            /* determinant routes, default 64 */
    double norm_cap;      /* Euler product, default 1e4 */
    int l_max;            /* reduced sum, default 4 */
    long long max_digit;  /* reduced sum / eta Euler: 40; orbit routes: 0 (automatic) */
    int n_max;            /* orbit routes, default 10; eta Euler period cap */
    double prune_eps;     /* default 1e-12 */
} mayer_zeta_params;

typedef struct {
    mayer_complex value;
    double tail;
    int pole;
} mayer_zeta_result;

MAYER_API void mayer_zeta_params_init(mayer_zeta_params* p);
MAYER_API int mayer_zeta(int route, mayer_complex s, const mayer_zeta_params* p, mayer_zeta_result* out, char** json);

/* hyperbolic class census */
typedef struct mayer_census mayer_census;

typedef struct {
    double norm;
    double geodesic_length;
    int length_l;
    int primitivity_k;
} mayer_class_row;

/* length_cap <= 0 derives the cap from norm_cap */
MAYER_API int mayer_census_create(double norm_cap, int length_cap, mayer_census** out);
MAYER_API void mayer_census_free(mayer_census* c);
MAYER_API size_t mayer_census_size(const mayer_census* c);
MAYER_API int mayer_census_row(const mayer_census* c, size_t i, mayer_class_row* out);
MAYER_API int mayer_census_csv(const mayer_census* c, char** csv);

/* verification suite */
enum { MAYER_VERIFY_FAST = 1, MAYER_VERIFY_SIGN_FAULT = 2, MAYER_VERIFY_ACCEPTANCE_ONLY = 4 };

typedef struct {
    const char* id;
    const char* name;
    int passed;
    double measured;
    double tolerance;
    double seconds;
    const char* detail;
    const char* line; /* formatted one-line summary */
} mayer_check;

typedef void (*mayer_check_callback)(const mayer_check* check, void* user);

/* runs the checks, calling cb after each; failed receives the number of failing checks */
MAYER_API int mayer_verify(int flags, mayer_check_callback cb, void* user, int* failed);

#ifdef __cplusplus
}
#endif

#endif
