/* osg - two-atom cavity photon exchange with quantized atomic motion.
 *
 * C API of the shared library. All state lives behind opaque handles; every
 * function returns an osg_status, and osg_last_error() describes the most
 * recent failure on the calling thread.
 */

#ifndef OSG_H
#define OSG_H

#include <stddef.h>

#if defined(_WIN32)
#define OSG_API __declspec(dllexport)
#else
#define OSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    OSG_OK = 0,
    OSG_ERR_USAGE = 1,        /* bad argument, unknown key, invalid config */
    OSG_ERR_VERIFICATION = 2, /* a verification check failed */
    OSG_ERR_NUMERIC = 3,      /* numeric contract violation or grid truncation */
    OSG_ERR_IO = 4            /* file could not be written */
} osg_status;

typedef enum { OSG_MODEL_SG = 0, OSG_MODEL_JC = 1 } osg_model;
typedef enum { OSG_STATE_GG1 = 0, OSG_STATE_EG0 = 1 } osg_initial_state;

/* Physical scenario: masses, mode, coupling, packet geometry, schedule. */
typedef struct osg_params osg_params;

/* Creates a handle preloaded with the shipped defaults. */
OSG_API osg_status osg_params_create(osg_params** out);
OSG_API void osg_params_destroy(osg_params* p);

/* Numeric keys: mass, lambda, epsilon, hbar, x1, x2, sigma_x1, sigma_x2,
 * t1, t2, t3. Unknown keys are usage errors. */
OSG_API osg_status osg_params_set(osg_params* p, const char* key, double value);
OSG_API osg_status osg_params_get(const osg_params* p, const char* key, double* out);

/* Full validation; warnings (if any) are retrievable via osg_last_error. */
OSG_API osg_status osg_params_validate(const osg_params* p);

/* 2 pi / (x1 epsilon k): the Rabi period that defines the sweep time unit. */
OSG_API osg_status osg_rabi_period(const osg_params* p, double* out);

/* Sets the schedule t1 = T, t2 = 2T, t3 = 3T from T in Rabi periods. */
OSG_API osg_status osg_params_set_time_rabi(osg_params* p, double t_rabi);

/* Reduced two-atom density matrix over {|ee>, |eg>, |ge>, |gg>}, row-major,
 * re/im interleaved (32 doubles). */
OSG_API osg_status osg_build_rho(const osg_params* p, osg_model model,
                                 osg_initial_state initial, double rho_out[32]);

typedef struct {
    double ppt_eigenvalues[4]; /* ascending */
    double nu[3];              /* descending */
    double m_value;
    int separable;
    int bell_violated;
} osg_report;

/* Separability and Bell diagnostics of a density matrix in the layout
 * produced by osg_build_rho. tolerance <= 0 selects the default (1e-10). */
OSG_API osg_status osg_analyze(const double rho[32], double tolerance, osg_report* out);

typedef struct {
    double t_seconds;
    double t_rabi;
    double nu1, nu2, nu3;
    double m_value;
    double ppt_min;
    double damping1, damping2;
    int separable;
    int bell_violated;
} osg_sweep_row;

/* Fills rows[0..steps-1] for T on a uniform grid of Rabi periods. */
OSG_API osg_status osg_sweep(const osg_params* p, osg_model model,
                             osg_initial_state initial, double t_start_rabi,
                             double t_end_rabi, int steps, osg_sweep_row* rows);

/* Same sweep written as CSV plus a .meta sidecar. When verify_rows is
 * nonzero, every translational-model row is cross-checked against the grid
 * oracle (grid_n <= 0 selects the default grid) and a failing row aborts
 * with its index in osg_last_error. */
OSG_API osg_status osg_sweep_to_csv(const osg_params* p, osg_model model,
                                    osg_initial_state initial, double t_start_rabi,
                                    double t_end_rabi, int steps, const char* csv_path,
                                    int verify_rows, int grid_n);

/* Writes figure1_jc.csv and figure1_sg.csv (columns T_rabi, nu1_plus_nu2,
 * two_nu2) plus sidecars into out_dir. */
OSG_API osg_status osg_figure1(const osg_params* p, double t_start_rabi,
                               double t_end_rabi, int steps, const char* out_dir);

/* Runs the self-check suite; the report text (one line per check) is copied
 * into `report` (truncated to cap-1 bytes, always NUL-terminated when
 * cap > 0). grid_n <= 0 selects the default grid; tolerance <= 0 keeps the
 * built-in tolerances. Returns OSG_ERR_VERIFICATION when any check fails. */
OSG_API osg_status osg_verify(const osg_params* p, int grid_n, double tolerance,
                              char* report, size_t cap);

/* Message describing the last failure (thread-local). */
OSG_API const char* osg_last_error(void);

OSG_API const char* osg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* OSG_H */
