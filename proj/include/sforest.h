/* C interface to the Steiner Forest lower-bound engine. All functions
 * return sf_status; on any non-OK status sf_last_error() carries a
 * thread-local message. Instances are opaque handles freed by the caller. */
#ifndef SFOREST_H
#define SFOREST_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sf_instance sf_instance;

typedef enum sf_status {
    SF_OK = 0,
    SF_ERR_INVALID_ARGUMENT = 1,
    SF_ERR_PARSE = 2,
    SF_ERR_IO = 3,
    SF_ERR_BUILD_REFUSED = 4,
    SF_ERR_INTERNAL = 5
} sf_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* sf_last_error(void);

/* ---- instances ---- */
sf_status sf_instance_load(const char* path, sf_instance** out);
sf_status sf_instance_parse(const char* text, sf_instance** out);
sf_status sf_instance_generate(int n, int k, double p, double alpha, uint64_t seed,
                               sf_instance** out);
sf_status sf_instance_save(const sf_instance* inst, const char* path);
/* Serialized text form; release with sf_string_free. */
sf_status sf_instance_to_string(const sf_instance* inst, char** out);
void sf_instance_free(sf_instance* inst);
void sf_string_free(char* s);

int sf_instance_nodes(const sf_instance* inst);
int sf_instance_edges(const sf_instance* inst);
int sf_instance_sets(const sf_instance* inst);

/* ---- relaxation kinds ---- */
/* Kinds are dense integers in [0, sf_kind_count()). */
int sf_kind_count(void);
const char* sf_kind_name(int kind);
sf_status sf_kind_parse(const char* name, int* out_kind);

/* ---- cutting-plane runs ---- */
typedef enum sf_run_status {
    SF_RUN_OPTIMAL = 0,
    SF_RUN_TIME_LIMIT = 1,
    SF_RUN_ITERATION_LIMIT = 2,
    SF_RUN_BUILD_REFUSED = 3
} sf_run_status;

const char* sf_run_status_name(int status);

typedef struct sf_bound_report {
    int kind;
    int status; /* sf_run_status */
    double bound;
    int rounds;
    int cuts_added;
    double wall_time_s;
    char detail[256]; /* refusal message when status is SF_RUN_BUILD_REFUSED */
} sf_bound_report;

sf_status sf_solve_relaxation(const sf_instance* inst, int kind, double time_limit_s,
                              int max_rounds, sf_bound_report* out);

/* ---- comparison with dominance audit ---- */
typedef struct sf_dominance_check {
    int weaker;
    int stronger;
    int equality;   /* 1: bounds must agree, 0: weaker <= stronger */
    int applicable; /* both endpoints reached optimal status */
    int passed;
    double lhs;
    double rhs;
} sf_dominance_check;

/* Runs every kind in `kinds` and audits the dominance lattice. `reports`
 * must hold kind_count entries; `audit` holds up to audit_capacity checks
 * (there are at most 8). all_passed covers applicable checks only. */
sf_status sf_compare(const sf_instance* inst, const int* kinds, int kind_count,
                     double time_limit_s, int max_rounds, sf_bound_report* reports,
                     sf_dominance_check* audit, int audit_capacity, int* audit_count,
                     int* all_passed);

/* ---- integer optimum ---- */
typedef struct sf_exact_result {
    double value;
    int found;   /* a feasible forest exists */
    int optimal; /* value is exact, not a limit-hit upper bound */
    long long nodes;
} sf_exact_result;

sf_status sf_integer_optimum(const sf_instance* inst, double time_limit_s,
                             sf_exact_result* out);

/* ---- LP inspection ---- */
/* Plain-text rendering of the initial LP of a formulation (before lazy
 * rows); release with sf_string_free. */
sf_status sf_export_lp(const sf_instance* inst, int kind, char** out);

#ifdef __cplusplus
}
#endif

#endif
