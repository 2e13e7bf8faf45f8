#ifndef ARCOX_IO_HPP
#define ARCOX_IO_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arcox/embedding.hpp"
#include "arcox/report.hpp"
#include "arcox/systems.hpp"

namespace arcox {

// One input file: everything validate_system and validate_bijection consume.
struct InputDocument {
  Kind kind = Kind::artin;
  std::vector<std::string> generators;
  std::vector<RawLabel> labels;
  std::vector<std::pair<std::string, std::string>> phi;

  bool operator==(const InputDocument&) const = default;
};

// Parses the JSON input schema:
//   { "kind": "artin" | "coxeter",
//     "generators": ["a", ...],
//     "labels": [["a", "b", 3], ["a", "c", "inf"], ...],   // optional
//     "phi": [["a", "b"], ...] }                            // optional
// Malformed text or schema raises ErrorCode::parse with line/column where
// the underlying parser provides a position.
InputDocument parse_input(const std::string& text);

ArtinSystem system_of(const InputDocument& doc);
LabelPreservingBijection bijection_of(const InputDocument& doc,
                                      const ArtinSystem& system);

// The exchange grammar for presentations, bit-exact:
//   gens g1 g2 ...
//   rel t1 t2 ...        (tokens "g" or "g^-1"; one line per relator)
std::string presentation_text(const Presentation& p);

// Relator word as tokens of that grammar.
std::vector<std::string> word_tokens(const Word& w,
                                     const std::vector<std::string>& names);

// validate output: the label set, phi's domain and image.
std::string validate_text(const ArtinSystem& system,
                          const LabelPreservingBijection& phi);

// build output: k, the classes with their members, the induced labels and
// the target presentation.
std::string build_text(const Pipeline& p);

// Machine-readable form of the same data; round-trips through JSON.
struct BuildRecord {
  std::string kind;
  int k = 0;
  std::vector<std::string> classes;
  std::vector<std::vector<std::pair<int, std::string>>> members;
  std::vector<std::tuple<std::string, std::string, int>> labels;
  std::vector<std::string> generators;
  std::vector<std::vector<std::string>> relators;
  std::vector<std::string> tags;

  bool operator==(const BuildRecord&) const = default;
};

BuildRecord record_of(const Pipeline& p);
std::string build_record_text(const BuildRecord& record);
BuildRecord parse_build_record(const std::string& text);

// embed output: each subgroup generator with its word in the extension and
// its image under the embedding.
std::string embed_text(const Pipeline& p);

// verify output: one line per check plus an options line and a tally.
std::string report_text(const VerificationReport& report);

// The full certificate as a JSON document: input echo, every construction
// layer, the embedding images and the verification report (options included,
// so the run is reproducible).
std::string certificate_json(const InputDocument& doc,
                             const EmbeddingCertificate& cert);

}  // namespace arcox

#endif  // ARCOX_IO_HPP
