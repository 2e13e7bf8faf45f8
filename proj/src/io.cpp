#include "arcox/io.hpp"

#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcox/error.hpp"

namespace arcox {

using json = nlohmann::ordered_json;

namespace {

// Finite labels far beyond this only produce astronomically long braid
// relators; the token "inf" is the way to say "no relation".
constexpr int kMaxFiniteLabel = 1000000;

std::pair<int, int> position_of(const std::string& text, std::size_t byte) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void parse_fail(const std::string& message, int line = -1,
                             int column = -1) {
  Error e(ErrorCode::parse, message);
  e.line = line;
  e.column = column;
  throw e;
}

json parse_json_or_fail(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = position_of(text, byte);
    parse_fail(std::string(what) + " is not valid JSON: " + e.what(), line,
               column);
  }
}

int label_value_of(const json& v, const char* context) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfLabel;
    parse_fail(std::string(context) + ": the only label token is \"inf\"");
  }
  if (!v.is_number_integer())
    parse_fail(std::string(context) + ": label must be an integer or \"inf\"");
  long long value = v.get<long long>();
  if (value > kMaxFiniteLabel)
    parse_fail(std::string(context) + ": finite label too large, use \"inf\"");
  if (value < -kMaxFiniteLabel)
    parse_fail(std::string(context) + ": label out of range");
  return static_cast<int>(value);
}

json presentation_to_json(const Presentation& p) {
  json out = json::object();
  out["generators"] = p.generators;
  json rels = json::array();
  for (const Word& r : p.relators) rels.push_back(word_tokens(r, p.generators));
  out["relators"] = std::move(rels);
  json tags = json::array();
  for (RelatorTag t : p.tags) tags.push_back(relator_tag_name(t));
  out["tags"] = std::move(tags);
  return out;
}

json classes_to_json(const BuildRecord& record) {
  json classes = json::array();
  for (std::size_t c = 0; c < record.classes.size(); ++c) {
    json members = json::array();
    for (const auto& [level, gen] : record.members[c])
      members.push_back(json::array({level, gen}));
    classes.push_back(
        json{{"name", record.classes[c]}, {"members", std::move(members)}});
  }
  return classes;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  json j = parse_json_or_fail(text, "input");
  if (!j.is_object()) parse_fail("the top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "kind" && key != "generators" && key != "labels" &&
        key != "phi")
      parse_fail("unknown field \"" + key + "\"");
  }

  InputDocument doc;
  if (!j.contains("kind") || !j["kind"].is_string())
    parse_fail("field \"kind\" must be \"artin\" or \"coxeter\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "artin")
    doc.kind = Kind::artin;
  else if (kind == "coxeter")
    doc.kind = Kind::coxeter;
  else
    parse_fail("field \"kind\" must be \"artin\" or \"coxeter\"");

  if (!j.contains("generators") || !j["generators"].is_array())
    parse_fail("field \"generators\" must be an array of names");
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) parse_fail("generator names must be strings");
    doc.generators.push_back(g.get<std::string>());
  }

  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      parse_fail("field \"labels\" must be an array of [name, name, label]");
    for (const auto& entry : j["labels"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
          !entry[1].is_string())
        parse_fail("each label entry must be [name, name, label]");
      RawLabel label;
      label.a = entry[0].get<std::string>();
      label.b = entry[1].get<std::string>();
      label.value = label_value_of(entry[2], "labels");
      doc.labels.push_back(std::move(label));
    }
  }

  if (j.contains("phi")) {
    if (!j["phi"].is_array())
      parse_fail("field \"phi\" must be an array of [source, target]");
    for (const auto& entry : j["phi"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !entry[1].is_string())
        parse_fail("each phi entry must be [source, target]");
      doc.phi.emplace_back(entry[0].get<std::string>(),
                           entry[1].get<std::string>());
    }
  }
  return doc;
}

ArtinSystem system_of(const InputDocument& doc) {
  return validate_system(doc.generators, doc.labels, doc.kind);
}

LabelPreservingBijection bijection_of(const InputDocument& doc,
                                      const ArtinSystem& system) {
  return validate_bijection(system, doc.phi);
}

std::vector<std::string> word_tokens(const Word& w,
                                     const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Syllable& s : w.syllables()) {
    require_internal(s.gen >= 0 && s.gen < static_cast<int>(names.size()),
                     "word refers to a generator outside its presentation");
    out.push_back(s.exp > 0 ? names[s.gen] : names[s.gen] + "^-1");
  }
  return out;
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  for (const Word& r : p.relators) {
    os << "rel";
    for (const auto& token : word_tokens(r, p.generators)) os << ' ' << token;
    os << '\n';
  }
  return os.str();
}

std::string validate_text(const ArtinSystem& system,
                          const LabelPreservingBijection& phi) {
  std::ostringstream os;
  os << "kind = " << kind_name(system.kind()) << '\n';
  os << "generators =";
  for (const auto& g : system.names()) os << ' ' << g;
  os << '\n';
  os << "label set = {";
  bool first = true;
  for (int l : system.label_set()) {
    if (!first) os << ", ";
    os << label_to_string(l);
    first = false;
  }
  os << "}\n";
  os << "phi domain =";
  for (int s : phi.domain()) os << ' ' << system.name(s);
  os << '\n';
  os << "phi image =";
  for (int s : phi.image()) os << ' ' << system.name(s);
  os << '\n';
  return os.str();
}

std::string build_text(const Pipeline& p) {
  std::ostringstream os;
  os << "k = " << p.k << '\n';
  os << "classes:\n";
  for (int c = 0; c < p.cover.num_classes(); ++c) {
    os << "  " << p.cover.class_names[c] << " = {";
    for (int v : p.cover.members[c])
      os << " (" << p.cover.level_of(v) << ','
         << p.system.name(p.cover.gen_of(v)) << ')';
    os << " }\n";
  }
  os << "labels:\n";
  for (const auto& [pair, label] : p.mbar.finite)
    os << "  m(" << p.cover.class_names[pair.first] << ", "
       << p.cover.class_names[pair.second] << ") = " << label << '\n';
  os << "target:\n";
  os << presentation_text(p.target.presentation);
  return os.str();
}

BuildRecord record_of(const Pipeline& p) {
  BuildRecord record;
  record.kind = kind_name(p.system.kind());
  record.k = p.k;
  record.classes = p.cover.class_names;
  for (int c = 0; c < p.cover.num_classes(); ++c) {
    std::vector<std::pair<int, std::string>> members;
    for (int v : p.cover.members[c])
      members.emplace_back(p.cover.level_of(v),
                           p.system.name(p.cover.gen_of(v)));
    record.members.push_back(std::move(members));
  }
  for (const auto& [pair, label] : p.mbar.finite)
    record.labels.emplace_back(p.cover.class_names[pair.first],
                               p.cover.class_names[pair.second], label);
  record.generators = p.target.presentation.generators;
  for (const Word& r : p.target.presentation.relators)
    record.relators.push_back(word_tokens(r, record.generators));
  for (RelatorTag t : p.target.presentation.tags)
    record.tags.emplace_back(relator_tag_name(t));
  return record;
}

std::string build_record_text(const BuildRecord& record) {
  json out = json::object();
  out["format"] = "build-record";
  out["version"] = 1;
  out["kind"] = record.kind;
  out["k"] = record.k;
  out["classes"] = classes_to_json(record);
  json labels = json::array();
  for (const auto& [x, y, l] : record.labels)
    labels.push_back(json::array({x, y, l}));
  out["labels"] = std::move(labels);
  out["target"] = json{{"generators", record.generators},
                       {"relators", record.relators},
                       {"tags", record.tags}};
  return out.dump(2) + '\n';
}

BuildRecord parse_build_record(const std::string& text) {
  json j = parse_json_or_fail(text, "build record");
  if (!j.is_object() || !j.contains("format") ||
      j["format"] != "build-record")
    parse_fail("not a build record document");
  BuildRecord record;
  try {
    record.kind = j.at("kind").get<std::string>();
    record.k = j.at("k").get<int>();
    for (const auto& cls : j.at("classes")) {
      record.classes.push_back(cls.at("name").get<std::string>());
      std::vector<std::pair<int, std::string>> members;
      for (const auto& m : cls.at("members"))
        members.emplace_back(m.at(0).get<int>(), m.at(1).get<std::string>());
      record.members.push_back(std::move(members));
    }
    for (const auto& l : j.at("labels"))
      record.labels.emplace_back(l.at(0).get<std::string>(),
                                 l.at(1).get<std::string>(),
                                 l.at(2).get<int>());
    const auto& target = j.at("target");
    record.generators = target.at("generators").get<std::vector<std::string>>();
    record.relators =
        target.at("relators").get<std::vector<std::vector<std::string>>>();
    record.tags = target.at("tags").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed build record: ") + e.what());
  }
  return record;
}

std::string embed_text(const Pipeline& p) {
  std::ostringstream os;
  const auto& kernel_names = p.kernel.subgroup.generators;
  const auto& ambient_names = p.kernel.ambient.generators;
  const auto& image_names = p.eta.target.generators;
  for (std::size_t g = 0; g < kernel_names.size(); ++g) {
    os << kernel_names[g] << " = "
       << word_to_string(p.kernel.generator_words[g], ambient_names) << " -> "
       << word_to_string(p.eta.images[g], image_names) << '\n';
  }
  return os.str();
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "options: samples=" << report.options.samples
     << " max-syllables=" << report.options.max_syllables
     << " seed=" << report.options.seed
     << " budget=" << report.options.budget.max_states << '/'
     << report.options.budget.max_length
     << " max-cosets=" << report.options.max_cosets << '\n';
  for (const CheckResult& c : report.checks) {
    os << '[' << check_status_name(c.status) << "] " << c.name << ": "
       << c.detail << " (" << std::fixed << std::setprecision(2)
       << c.elapsed_ms << " ms)\n";
  }
  os << "result: " << (report.ok() ? "ok" : "fail") << " ("
     << report.count(CheckStatus::pass) << " pass, "
     << report.count(CheckStatus::fail) << " fail, "
     << report.count(CheckStatus::inconclusive) << " inconclusive)\n";
  return os.str();
}

std::string certificate_json(const InputDocument& doc,
                             const EmbeddingCertificate& cert) {
  const Pipeline& p = cert.pipeline;
  json out = json::object();
  out["format"] = "embedding-certificate";
  out["version"] = 1;

  json input = json::object();
  input["kind"] = kind_name(doc.kind);
  input["generators"] = doc.generators;
  json labels = json::array();
  for (const RawLabel& l : doc.labels) {
    json value = l.value == kInfLabel ? json("inf") : json(l.value);
    labels.push_back(json::array({l.a, l.b, value}));
  }
  input["labels"] = std::move(labels);
  json phi = json::array();
  for (const auto& [s, t] : doc.phi) phi.push_back(json::array({s, t}));
  input["phi"] = std::move(phi);
  out["input"] = std::move(input);

  BuildRecord record = record_of(p);
  out["k"] = p.k;
  out["classes"] = classes_to_json(record);
  json induced = json::array();
  for (const auto& [x, y, l] : record.labels)
    induced.push_back(json::array({x, y, l}));
  out["labels"] = std::move(induced);
  out["target"] = presentation_to_json(p.target.presentation);
  if (p.wplus) {
    json doubled = presentation_to_json(p.wplus->presentation);
    json theta = json::array();
    for (const Word& w : p.wplus->theta_images)
      theta.push_back(word_tokens(w, p.wplus->presentation.generators));
    doubled["theta"] = std::move(theta);
    out["doubled_target"] = std::move(doubled);
  }

  json kernel = presentation_to_json(p.kernel.subgroup);
  json words = json::array();
  for (const Word& w : p.kernel.generator_words)
    words.push_back(word_tokens(w, p.kernel.ambient.generators));
  kernel["generator_words"] = std::move(words);
  json transversal = json::array();
  for (const Word& w : p.kernel.transversal)
    transversal.push_back(word_tokens(w, p.kernel.ambient.generators));
  kernel["transversal"] = std::move(transversal);
  kernel["ambient"] = presentation_to_json(p.kernel.ambient);
  out["kernel"] = std::move(kernel);

  json eta = json::array();
  for (const Word& w : p.eta.images)
    eta.push_back(word_tokens(w, p.eta.target.generators));
  out["eta"] = std::move(eta);

  const VerificationReport& report = cert.report;
  json options = json::object();
  options["samples"] = report.options.samples;
  options["max_syllables"] = report.options.max_syllables;
  options["seed"] = report.options.seed;
  options["budget_states"] = report.options.budget.max_states;
  options["budget_length"] = report.options.budget.max_length;
  options["max_cosets"] = report.options.max_cosets;
  json checks = json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back(json{{"name", c.name},
                          {"status", check_status_name(c.status)},
                          {"detail", c.detail},
                          {"elapsed_ms", c.elapsed_ms}});
  out["report"] = json{{"options", std::move(options)},
                       {"checks", std::move(checks)},
                       {"ok", report.ok()}};
  return out.dump(2) + '\n';
}

}  // namespace arcox
