#ifndef ARCOX_H
#define ARCOX_H

/*
 * C interface to the embedding toolkit. A job wraps one input document;
 * commands run on it and leave a text result plus a status. All strings
 * returned by getters are owned by the job and stay valid until the next
 * command on that job or its destruction.
 *
 * Thread safety: distinct jobs may be used from distinct threads; one job
 * must not be shared without external synchronization.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arcox_status {
  ARCOX_OK = 0,
  ARCOX_E_PARSE = 1,          /* malformed input document */
  ARCOX_E_VALIDATE = 2,       /* input rejected by a validation rule */
  ARCOX_E_BAD_ARGUMENT = 3,   /* out-of-contract argument, e.g. an invalid k */
  ARCOX_E_LABEL_CONFLICT = 4, /* contradictory induced labels */
  ARCOX_E_BUDGET = 5,         /* an oracle ran out of budget */
  ARCOX_E_UNSUPPORTED = 6,    /* no decision procedure for this input class */
  ARCOX_E_CHECK_FAILED = 7,   /* a verification check failed */
  ARCOX_E_INTERNAL = 8        /* broken internal invariant */
} arcox_status;

typedef struct arcox_job arcox_job;

const char* arcox_version(void);

/* Takes a copy of the input document text (the JSON schema described in the
 * README). Returns NULL only if input_text is NULL or on allocation
 * failure; schema errors surface when a command runs. */
arcox_job* arcox_job_create(const char* input_text);
void arcox_job_destroy(arcox_job* job);

/* Status and error of the most recent command. Line/column are 1-based and
 * only set for parse errors with a known position; -1 otherwise. */
int arcox_job_status(const arcox_job* job);
const char* arcox_job_error(const arcox_job* job);
int arcox_job_error_line(const arcox_job* job);
int arcox_job_error_column(const arcox_job* job);

/* Tuning. Commands use a snapshot of the values at call time. */
void arcox_job_set_k(arcox_job* job, int k); /* 0 restores the minimal k */
void arcox_job_set_samples(arcox_job* job, int samples);
void arcox_job_set_max_syllables(arcox_job* job, int max_syllables);
void arcox_job_set_seed(arcox_job* job, unsigned long long seed);
void arcox_job_set_budget(arcox_job* job, long long max_states,
                          int max_length);
void arcox_job_set_max_cosets(arcox_job* job, int max_cosets);

/* Commands. Each returns the new status and replaces the job's output.
 *
 * validate  -- label set and the domain/image of phi.
 * build     -- k, classes, induced labels, target presentation; with
 *              record_format nonzero the output is the JSON build record.
 * embed     -- subgroup generators with their words and embedding images.
 * verify    -- full check report; ARCOX_E_CHECK_FAILED when a check fails
 *              (the report text is still produced).
 * certify   -- build + verify; on success the output is the certificate
 *              JSON document.
 * order     -- order of the group itself (coxeter kind only) by coset
 *              enumeration; sets *order to the order, or to -1 when the
 *              enumeration exceeds its coset cap ("overflow").
 */
int arcox_job_validate(arcox_job* job);
int arcox_job_build(arcox_job* job, int record_format);
int arcox_job_embed(arcox_job* job);
int arcox_job_verify(arcox_job* job);
int arcox_job_certify(arcox_job* job);
int arcox_job_order(arcox_job* job, long long* order);

const char* arcox_job_output(const arcox_job* job);

#ifdef __cplusplus
}
#endif

#endif /* ARCOX_H */
