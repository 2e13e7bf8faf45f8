#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arcox/arcox.h"

namespace {

// Exit codes, stable: 0 success, 1 domain error (validation, conflicting
// labels, failed checks, unsupported input), 2 parse error, 3 usage error,
// 4 I/O error, 5 budget exhausted, 6 internal error.
int exit_code_for(int status) {
  switch (status) {
    case ARCOX_OK: return 0;
    case ARCOX_E_PARSE: return 2;
    case ARCOX_E_BAD_ARGUMENT: return 3;
    case ARCOX_E_BUDGET: return 5;
    case ARCOX_E_INTERNAL: return 6;
    default: return 1;
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

int print_error(arcox_job* job) {
  std::cerr << "error: " << arcox_job_error(job);
  if (arcox_job_error_line(job) > 0)
    std::cerr << " (line " << arcox_job_error_line(job) << ", column "
              << arcox_job_error_column(job) << ")";
  std::cerr << "\n";
  return exit_code_for(arcox_job_status(job));
}

int with_job(const std::string& path,
             const std::function<int(arcox_job*)>& body) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 4;
  }
  arcox_job* job = arcox_job_create(text->c_str());
  if (job == nullptr) {
    std::cerr << "error: job allocation failed\n";
    return 6;
  }
  int code = body(job);
  arcox_job_destroy(job);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentation-level toolkit: finite-index subgroups of "
               "Artin/Coxeter HNN-extensions with verified embeddings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(arcox_version()));

  std::string file;
  int k = 0;
  std::string format = "text";
  int samples = 50;
  int max_syllables = 4;
  unsigned long long seed = 7;
  long long budget = 0;
  std::string out_path;

  int rc = 0;

  auto* validate = app.add_subcommand(
      "validate", "Check the input; print the label set and phi");
  validate->add_option("file", file, "input document")->required();
  validate->callback([&] {
    rc = with_job(file, [](arcox_job* job) {
      if (arcox_job_validate(job) != ARCOX_OK) return print_error(job);
      std::cout << arcox_job_output(job);
      return 0;
    });
  });

  auto* build = app.add_subcommand(
      "build", "Construct k, the classes, induced labels and the target");
  build->add_option("file", file, "input document")->required();
  build->add_option("--k", k, "override the minimal k (validated)");
  build->add_option("--format", format, "text or record")
      ->check(CLI::IsMember({"text", "record"}));
  build->callback([&] {
    rc = with_job(file, [&](arcox_job* job) {
      arcox_job_set_k(job, k);
      if (arcox_job_build(job, format == "record" ? 1 : 0) != ARCOX_OK)
        return print_error(job);
      std::cout << arcox_job_output(job);
      return 0;
    });
  });

  auto* embed = app.add_subcommand(
      "embed", "Print the subgroup generators, their words and images");
  embed->add_option("file", file, "input document")->required();
  embed->callback([&] {
    rc = with_job(file, [](arcox_job* job) {
      if (arcox_job_embed(job) != ARCOX_OK) return print_error(job);
      std::cout << arcox_job_output(job);
      return 0;
    });
  });

  auto* verify =
      app.add_subcommand("verify", "Run every check and print the report");
  verify->add_option("file", file, "input document")->required();
  verify->add_option("--samples", samples, "injectivity sample count");
  verify->add_option("--max-syllables", max_syllables,
                     "stable-letter syllables per sampled word");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--budget", budget, "oracle state budget");
  verify->callback([&] {
    rc = with_job(file, [&](arcox_job* job) {
      arcox_job_set_samples(job, samples);
      arcox_job_set_max_syllables(job, max_syllables);
      arcox_job_set_seed(job, seed);
      arcox_job_set_budget(job, budget, 0);
      int status = arcox_job_verify(job);
      if (status != ARCOX_OK && status != ARCOX_E_CHECK_FAILED)
        return print_error(job);
      std::cout << arcox_job_output(job);
      return status == ARCOX_OK ? 0 : 1;
    });
  });

  auto* certify = app.add_subcommand(
      "certify", "Build, verify, and write the certificate document");
  certify->add_option("file", file, "input document")->required();
  certify->add_option("-o,--output", out_path, "certificate file")->required();
  certify->callback([&] {
    rc = with_job(file, [&](arcox_job* job) {
      if (arcox_job_certify(job) != ARCOX_OK) return print_error(job);
      std::ofstream out(out_path, std::ios::binary);
      out << arcox_job_output(job);
      if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 4;
      }
      std::cout << "certificate written to " << out_path << "\n";
      return 0;
    });
  });

  auto* order = app.add_subcommand(
      "order", "Order of the group itself by coset enumeration (coxeter)");
  order->add_option("file", file, "input document")->required();
  order->callback([&] {
    rc = with_job(file, [](arcox_job* job) {
      long long n = 0;
      if (arcox_job_order(job, &n) != ARCOX_OK) return print_error(job);
      if (n < 0)
        std::cout << "overflow\n";
      else
        std::cout << n << "\n";
      return 0;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parse_rc = app.exit(e);
    return parse_rc == 0 ? 0 : 3;
  }
  return rc;
}
