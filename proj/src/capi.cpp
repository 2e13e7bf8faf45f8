#include "arcox/arcox.h"

#include <exception>
#include <optional>
#include <string>
#include <utility>

#include "arcox/embedding.hpp"
#include "arcox/error.hpp"
#include "arcox/io.hpp"
#include "arcox/oracles.hpp"
#include "arcox/verify.hpp"

struct arcox_job {
  std::string input;
  arcox::VerifyOptions options;
  std::optional<int> k_override;

  int status = ARCOX_OK;
  std::string error;
  int error_line = -1;
  int error_column = -1;
  std::string output;
};

namespace {

int status_of(arcox::ErrorCode code) {
  using arcox::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return ARCOX_E_PARSE;
    case ErrorCode::validate: return ARCOX_E_VALIDATE;
    case ErrorCode::invalid_argument: return ARCOX_E_BAD_ARGUMENT;
    case ErrorCode::label_conflict: return ARCOX_E_LABEL_CONFLICT;
    case ErrorCode::budget_exhausted: return ARCOX_E_BUDGET;
    case ErrorCode::unsupported: return ARCOX_E_UNSUPPORTED;
    case ErrorCode::check_failed: return ARCOX_E_CHECK_FAILED;
    case ErrorCode::internal: return ARCOX_E_INTERNAL;
  }
  return ARCOX_E_INTERNAL;
}

// Runs one command body with the job's error state reset; body returns the
// status to report and may fill job->output.
template <typename F>
int guarded(arcox_job* job, F&& body) {
  if (job == nullptr) return ARCOX_E_BAD_ARGUMENT;
  job->status = ARCOX_OK;
  job->error.clear();
  job->error_line = -1;
  job->error_column = -1;
  job->output.clear();
  try {
    job->status = body();
  } catch (const arcox::Error& e) {
    job->status = status_of(e.code());
    job->error = e.what();
    job->error_line = e.line;
    job->error_column = e.column;
  } catch (const std::exception& e) {
    job->status = ARCOX_E_INTERNAL;
    job->error = e.what();
  }
  return job->status;
}

struct ParsedInput {
  arcox::InputDocument doc;
  arcox::ArtinSystem system;
  arcox::LabelPreservingBijection phi;
};

ParsedInput parse_job_input(const arcox_job& job) {
  ParsedInput in;
  in.doc = arcox::parse_input(job.input);
  in.system = arcox::system_of(in.doc);
  in.phi = arcox::bijection_of(in.doc, in.system);
  return in;
}

arcox::Pipeline pipeline_of(const arcox_job& job, const ParsedInput& in) {
  return arcox::build_pipeline(in.system, in.phi, job.k_override);
}

}  // namespace

extern "C" {

const char* arcox_version(void) { return "0.1.0"; }

arcox_job* arcox_job_create(const char* input_text) {
  if (input_text == nullptr) return nullptr;
  try {
    auto* job = new arcox_job;
    job->input = input_text;
    return job;
  } catch (...) {
    return nullptr;
  }
}

void arcox_job_destroy(arcox_job* job) { delete job; }

int arcox_job_status(const arcox_job* job) {
  return job ? job->status : ARCOX_E_BAD_ARGUMENT;
}

const char* arcox_job_error(const arcox_job* job) {
  return job ? job->error.c_str() : "null job";
}

int arcox_job_error_line(const arcox_job* job) {
  return job ? job->error_line : -1;
}

int arcox_job_error_column(const arcox_job* job) {
  return job ? job->error_column : -1;
}

void arcox_job_set_k(arcox_job* job, int k) {
  if (!job) return;
  if (k <= 0)
    job->k_override.reset();
  else
    job->k_override = k;
}

void arcox_job_set_samples(arcox_job* job, int samples) {
  if (job) job->options.samples = samples;
}

void arcox_job_set_max_syllables(arcox_job* job, int max_syllables) {
  if (job) job->options.max_syllables = max_syllables;
}

void arcox_job_set_seed(arcox_job* job, unsigned long long seed) {
  if (job) job->options.seed = seed;
}

void arcox_job_set_budget(arcox_job* job, long long max_states,
                          int max_length) {
  if (!job) return;
  if (max_states > 0) job->options.budget.max_states = max_states;
  if (max_length > 0) job->options.budget.max_length = max_length;
}

void arcox_job_set_max_cosets(arcox_job* job, int max_cosets) {
  if (job && max_cosets > 0) job->options.max_cosets = max_cosets;
}

int arcox_job_validate(arcox_job* job) {
  return guarded(job, [job] {
    ParsedInput in = parse_job_input(*job);
    job->output = arcox::validate_text(in.system, in.phi);
    return ARCOX_OK;
  });
}

int arcox_job_build(arcox_job* job, int record_format) {
  return guarded(job, [job, record_format] {
    ParsedInput in = parse_job_input(*job);
    arcox::Pipeline p = pipeline_of(*job, in);
    job->output = record_format != 0
                      ? arcox::build_record_text(arcox::record_of(p))
                      : arcox::build_text(p);
    return ARCOX_OK;
  });
}

int arcox_job_embed(arcox_job* job) {
  return guarded(job, [job] {
    ParsedInput in = parse_job_input(*job);
    job->output = arcox::embed_text(pipeline_of(*job, in));
    return ARCOX_OK;
  });
}

int arcox_job_verify(arcox_job* job) {
  return guarded(job, [job] {
    ParsedInput in = parse_job_input(*job);
    arcox::Pipeline p = pipeline_of(*job, in);
    arcox::VerificationReport report =
        arcox::run_standard_checks(p, job->options);
    job->output = arcox::report_text(report);
    return report.ok() ? ARCOX_OK : ARCOX_E_CHECK_FAILED;
  });
}

int arcox_job_certify(arcox_job* job) {
  return guarded(job, [job] {
    ParsedInput in = parse_job_input(*job);
    arcox::EmbeddingCertificate cert =
        arcox::certificate(in.system, in.phi, job->options);
    job->output = arcox::certificate_json(in.doc, cert);
    return ARCOX_OK;
  });
}

int arcox_job_order(arcox_job* job, long long* order) {
  return guarded(job, [job, order] {
    if (order == nullptr)
      arcox::fail(arcox::ErrorCode::invalid_argument,
                  "order output pointer is null");
    ParsedInput in = parse_job_input(*job);
    if (in.system.kind() != arcox::Kind::coxeter)
      arcox::fail(arcox::ErrorCode::unsupported,
                  "group order by enumeration needs the coxeter kind");
    auto table = arcox::coset_enumerate(arcox::artin_presentation(in.system),
                                        {}, job->options.max_cosets);
    *order = table ? table->index() : -1;
    job->output = table ? std::to_string(table->index()) + "\n" : "overflow\n";
    return ARCOX_OK;
  });
}

const char* arcox_job_output(const arcox_job* job) {
  return job ? job->output.c_str() : "";
}

}  // extern "C"
