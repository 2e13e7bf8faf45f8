#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arcox/error.hpp"
#include "arcox/io.hpp"
#include "arcox/verify.hpp"
#include "testutil.hpp"

using namespace arcox;
using testutil::sys;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) {
  return std::string(ARCOX_GOLDEN_DIR) + "/" + name;
}

Pipeline pipeline_of_doc(const std::string& text) {
  auto doc = parse_input(text);
  auto system = system_of(doc);
  return build_pipeline(system, bijection_of(doc, system));
}

const char* kE1 =
    R"({"kind":"artin","generators":["a","b"],"labels":[["a","b",3]],"phi":[["a","b"]]})";
const char* kE2 =
    R"({"kind":"artin","generators":["a","b"],"labels":[["a","b",2]],"phi":[["a","b"],["b","a"]]})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("input parsing accepts the documented schema") {
  auto doc = parse_input(kE1);
  CHECK(doc.kind == Kind::artin);
  CHECK(doc.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(doc.labels.size() == 1);
  CHECK(doc.labels[0].a == "a");
  CHECK(doc.labels[0].value == 3);
  CHECK(doc.phi == std::vector<std::pair<std::string, std::string>>{
                       {"a", "b"}});
  auto system = system_of(doc);
  CHECK(system.label(0, 1) == 3);
  CHECK(bijection_of(doc, system).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}});

  // labels and phi are optional; "inf" is a legal label token.
  auto doc2 = parse_input(
      R"({"kind":"coxeter","generators":["x","y"],"labels":[["x","y","inf"]]})");
  CHECK(doc2.kind == Kind::coxeter);
  CHECK(doc2.labels[0].value == kInfLabel);
  CHECK(doc2.phi.empty());
  auto doc3 = parse_input(R"({"kind":"artin","generators":["x"]})");
  CHECK(doc3.labels.empty());
}

TEST_CASE("input parsing rejects what it does not understand") {
  auto code_of = [](const std::string& text) {
    try {
      parse_input(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected a parse error for: " << text);
    return ErrorCode::internal;
  };
  CHECK(code_of("") == ErrorCode::parse);
  CHECK(code_of("{") == ErrorCode::parse);
  CHECK(code_of(R"([1,2,3])") == ErrorCode::parse);
  CHECK(code_of(R"({"generators":["a"]})") == ErrorCode::parse);  // no kind
  CHECK(code_of(R"({"kind":"braid","generators":["a"]})") == ErrorCode::parse);
  CHECK(code_of(R"({"kind":"artin"})") == ErrorCode::parse);
  CHECK(code_of(R"({"kind":"artin","generators":"a"})") == ErrorCode::parse);
  CHECK(code_of(R"({"kind":"artin","generators":["a"],"extra":1})") ==
        ErrorCode::parse);
  CHECK(code_of(R"({"kind":"artin","generators":["a","b"],"labels":[["a","b"]]})") ==
        ErrorCode::parse);
  CHECK(code_of(
            R"({"kind":"artin","generators":["a","b"],"labels":[["a","b",1.5]]})") ==
        ErrorCode::parse);
  CHECK(code_of(
            R"({"kind":"artin","generators":["a","b"],"labels":[["a","b",2000000]]})") ==
        ErrorCode::parse);  // above the finite-label cap
  CHECK(code_of(R"({"kind":"artin","generators":["a"],"phi":[["a"]]})") ==
        ErrorCode::parse);
}

TEST_CASE("malformed json reports a position") {
  try {
    parse_input("{\n  \"kind\": \"artin\",\n  \"generators\": [\"a\",]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(e.line >= 1);
    CHECK(e.column >= 1);
  }
}

TEST_CASE("target presentations match the golden texts bit for bit") {
  CHECK(presentation_text(pipeline_of_doc(kE1).target.presentation) ==
        slurp(golden("e1_target.txt")));
  CHECK(presentation_text(pipeline_of_doc(kE2).target.presentation) ==
        slurp(golden("e2_target.txt")));
}

TEST_CASE("word tokens use the caret convention") {
  Word w;
  w.append(0, 1);
  w.append(1, -1);
  CHECK(word_tokens(w, {"a", "b"}) ==
        std::vector<std::string>{"a", "b^-1"});
  CHECK(word_tokens(Word(), {"a"}).empty());
}

TEST_CASE("validate text names the label set and the map") {
  auto s = sys({"a", "b"}, {{"a", "b", 3}}, Kind::artin);
  auto phi = validate_bijection(s, {{"a", "b"}});
  CHECK(validate_text(s, phi) ==
        "kind = artin\n"
        "generators = a b\n"
        "label set = {3}\n"
        "phi domain = a\n"
        "phi image = b\n");
}

TEST_CASE("build text lays out classes, labels and the target") {
  auto p = pipeline_of_doc(kE1);
  std::string text = build_text(p);
  CHECK(text.find("k = 3\n") != std::string::npos);
  CHECK(text.find("  a.0 = { (0,a) (1,b) }\n") != std::string::npos);
  CHECK(text.find("  b.0 = { (0,b) (2,a) }\n") != std::string::npos);
  CHECK(text.find("  m(a.0, b.0) = 3\n") != std::string::npos);
  CHECK(text.find("gens a.0 b.0 a.1 t@0 t@1 t@2\n") != std::string::npos);
}

TEST_CASE("build records round-trip through json") {
  for (const char* input : {kE1, kE2}) {
    auto p = pipeline_of_doc(input);
    BuildRecord record = record_of(p);
    CHECK(parse_build_record(build_record_text(record)) == record);
  }
  // Degenerate pipeline round-trips too.
  auto doc = parse_input(R"({"kind":"artin","generators":["a","b"]})");
  auto system = system_of(doc);
  auto p = build_pipeline(system, bijection_of(doc, system));
  CHECK(parse_build_record(build_record_text(record_of(p))) == record_of(p));
}

TEST_CASE("build record fields for the path example") {
  auto record = record_of(pipeline_of_doc(kE1));
  CHECK(record.kind == "artin");
  CHECK(record.k == 3);
  CHECK(record.classes == std::vector<std::string>{"a.0", "b.0", "a.1"});
  REQUIRE(record.members.size() == 3);
  CHECK(record.members[0] ==
        std::vector<std::pair<int, std::string>>{{0, "a"}, {1, "b"}});
  CHECK(record.generators.size() == 6);
  CHECK(record.relators.size() == 6);
  CHECK(record.tags == std::vector<std::string>(6, "artin"));
  // Labels cover the induced class pairs; the stable letters only appear
  // in the target presentation.
  CHECK(record.labels.size() == 3);
  bool found = false;
  for (const auto& label : record.labels) {
    CHECK(std::get<2>(label) == 3);
    if (std::get<0>(label) == "a.0" && std::get<1>(label) == "b.0")
      found = true;
  }
  CHECK(found);
}

TEST_CASE("parse_build_record rejects foreign documents") {
  auto code_of = [](const std::string& text) {
    try {
      parse_build_record(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::internal;
  };
  CHECK(code_of("not json") == ErrorCode::parse);
  CHECK(code_of(R"({"format":"something-else","version":1})") ==
        ErrorCode::parse);
  CHECK(code_of(R"({"format":"build-record","version":99})") ==
        ErrorCode::parse);
}

TEST_CASE("embed text spells out the swap example exactly") {
  CHECK(embed_text(pipeline_of_doc(kE2)) ==
        "a@0 = a -> a.0\n"
        "b@0 = b -> b.0\n"
        "a@1 = t a t^-1 -> t@0 b.0 t@0^-1\n"
        "b@1 = t b t^-1 -> t@0 a.0 t@0^-1\n"
        "t@1 = t t -> t@0 t@1\n");
}

TEST_CASE("report text carries options, statuses and a tally") {
  auto p = pipeline_of_doc(kE2);
  auto report = run_standard_checks(p);
  std::string text = report_text(report);
  CHECK(text.find("options: samples=50 max-syllables=4 seed=7") !=
        std::string::npos);
  CHECK(text.find("[pass] well-definedness:") != std::string::npos);
  CHECK(text.find("[pass] injectivity-samples:") != std::string::npos);
  CHECK(text.find("result: ok (") != std::string::npos);
  CHECK(text.find("ms)") != std::string::npos);

  // A failing report says so.
  VerificationReport bad;
  bad.checks.push_back({"x", CheckStatus::fail, "boom", 1.0});
  CHECK(report_text(bad).find("result: fail") != std::string::npos);
  CHECK(report_text(bad).find("[fail] x: boom") != std::string::npos);
}

TEST_CASE("certificates serialize every layer") {
  auto doc = parse_input(kE1);
  auto system = system_of(doc);
  auto cert = certificate(system, bijection_of(doc, system));
  auto parsed = nlohmann::json::parse(certificate_json(doc, cert));
  CHECK(parsed["format"] == "embedding-certificate");
  CHECK(parsed["version"] == 1);
  CHECK(parsed["input"]["kind"] == "artin");
  CHECK(parsed["input"]["generators"].size() == 2);
  CHECK(parsed["input"]["labels"][0][2] == 3);
  CHECK(parsed["k"] == 3);
  CHECK(parsed["classes"].size() == 3);
  CHECK(parsed["classes"][0]["name"] == "a.0");
  CHECK(parsed["target"]["generators"].size() == 6);
  CHECK(parsed["kernel"]["generator_words"].size() == 7);
  CHECK(parsed["kernel"]["transversal"].size() == 3);
  CHECK(parsed["kernel"]["ambient"]["generators"].size() == 3);
  CHECK(parsed["eta"].size() == 7);
  CHECK(parsed["report"]["ok"] == true);
  CHECK(parsed["report"]["checks"].size() == 8);
  CHECK(parsed["report"]["options"]["samples"] == 50);
  CHECK_FALSE(parsed.contains("doubled_target"));

  // The coxeter flavor carries the doubling and theta.
  auto cdoc = parse_input(
      R"({"kind":"coxeter","generators":["a","b"],"labels":[["a","b",3]],"phi":[["a","b"]]})");
  auto csystem = system_of(cdoc);
  auto ccert = certificate(csystem, bijection_of(cdoc, csystem));
  auto cparsed = nlohmann::json::parse(certificate_json(cdoc, ccert));
  CHECK(cparsed.contains("doubled_target"));
  CHECK(cparsed["doubled_target"]["generators"].size() == 9);
  CHECK(cparsed["doubled_target"]["theta"].size() == 6);
  CHECK(cparsed["report"]["checks"].size() == 10);
}

}
