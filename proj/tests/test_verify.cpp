#include <doctest.h>

#include "arcox/error.hpp"
#include "arcox/verify.hpp"
#include "testutil.hpp"

using namespace arcox;
using testutil::sys;
using testutil::word;

namespace {

Pipeline e1(Kind kind = Kind::artin) {
  auto s = sys({"a", "b"}, {{"a", "b", 3}}, kind);
  return build_pipeline(s, validate_bijection(s, {{"a", "b"}}));
}

Pipeline e2() {
  auto s = sys({"a", "b"}, {{"a", "b", 2}}, Kind::artin);
  return build_pipeline(s, validate_bijection(s, {{"a", "b"}, {"b", "a"}}));
}

std::vector<std::string> names_of(const VerificationReport& report) {
  std::vector<std::string> names;
  for (const auto& c : report.checks) names.push_back(c.name);
  return names;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("the battery passes on the worked examples, in fixed order") {
  auto report = run_standard_checks(e1());
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::fail) == 0);
  CHECK(names_of(report) ==
        std::vector<std::string>{
            "well-definedness", "cover-invariants",
            "kernel-presentation-cross-check", "hub-collapse",
            "eta-relator-respect", "index", "label-set",
            "injectivity-samples"});
  for (const auto& c : report.checks) CHECK(c.elapsed_ms >= 0.0);

  auto report2 = run_standard_checks(e2());
  CHECK(report2.ok());
  CHECK(report2.count(CheckStatus::inconclusive) == 0);

  auto reportc = run_standard_checks(e1(Kind::coxeter));
  CHECK(reportc.ok());
  CHECK(reportc.count(CheckStatus::inconclusive) == 0);
  CHECK(names_of(reportc) ==
        std::vector<std::string>{
            "well-definedness", "cover-invariants",
            "kernel-presentation-cross-check", "hub-collapse",
            "eta-relator-respect", "theta-relator-respect",
            "stable-letter-order", "index", "label-set",
            "injectivity-samples"});
}

TEST_CASE("battery details name what was verified") {
  auto report = run_standard_checks(e1(Kind::coxeter));
  for (const auto& c : report.checks) {
    CHECK_FALSE(c.detail.empty());
    if (c.name == "eta-relator-respect")
      CHECK(c.detail.find("via oracle") != std::string::npos);
    if (c.name == "index")
      CHECK(c.detail.find("index 3") != std::string::npos);
    if (c.name == "injectivity-samples")
      CHECK(c.detail.find("0 undecided") != std::string::npos);
  }
}

TEST_CASE("well-definedness flags a label-breaking bijection") {
  auto s = sys({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 2}}, Kind::artin);
  auto phi = LabelPreservingBijection::unchecked(s, {{"a", "b"}, {"b", "c"}});
  auto result = check_well_definedness(s, phi, 5);
  CHECK(result.status == CheckStatus::fail);
  CHECK(result.detail.find("receives label 3 from (a, b)") !=
        std::string::npos);
  CHECK(result.detail.find("but 2 from (b, c)") != std::string::npos);
  CHECK(result.detail.find("level") != std::string::npos);

  // The same system with a valid map passes.
  auto good = validate_bijection(s, {{"a", "b"}});
  CHECK(check_well_definedness(s, good, 3).status == CheckStatus::pass);
}

TEST_CASE("homomorphism check proves failure, not absence of proof") {
  auto p = e1();
  // Swap the images of a@0 and a@1: the tree identification a@0 b@1^-1 now
  // maps to a.1 a.0^-1, visibly nontrivial.
  Homomorphism broken = p.eta;
  std::swap(broken.images[0], broken.images[2]);
  auto result =
      check_homomorphism("eta-relator-respect", broken, &p.target.system);
  CHECK(result.status == CheckStatus::fail);
  CHECK(result.detail.find("maps to a nontrivial word") != std::string::npos);

  // Without an oracle the same defect is only inconclusive if the
  // structural screen cannot see it; here it can not prove failure, so the
  // relator stays undecided.
  auto no_oracle = check_homomorphism("eta-relator-respect", broken, nullptr);
  CHECK(no_oracle.status == CheckStatus::inconclusive);
  CHECK(no_oracle.detail.find("undecided") != std::string::npos);

  // The intact map passes decisively under the right-angled oracle too.
  auto p2 = e2();
  auto ok = check_homomorphism("eta-relator-respect", p2.eta,
                               &p2.target.system);
  CHECK(ok.status == CheckStatus::pass);
}

TEST_CASE("a tiny budget downgrades the oracle to inconclusive") {
  // A length allowance of 2 rejects every oracle-bound relator image.
  auto p = e1(Kind::coxeter);
  auto result = check_homomorphism("eta-relator-respect", p.eta,
                                   &p.wplus->system, ReductionBudget{4, 2});
  CHECK(result.status == CheckStatus::inconclusive);
  CHECK(result.detail.find("budget") != std::string::npos);
}

TEST_CASE("index check pins the subgroup index") {
  VerifyOptions options;
  CHECK(check_index(e1(), options).status == CheckStatus::pass);
  CHECK(check_index(e2(), options).status == CheckStatus::pass);

  auto s = sys({"a", "b"}, {{"a", "b", 3}}, Kind::artin);
  auto degenerate = build_pipeline(s, validate_bijection(s, {}));
  auto r = check_index(degenerate, options);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.detail.find("index 1") != std::string::npos);

  // Enumeration that cannot close is inconclusive, never a failure.
  VerifyOptions tiny;
  tiny.max_cosets = 2;
  auto overflow = check_index(e1(), tiny);
  CHECK(overflow.status == CheckStatus::inconclusive);
  CHECK(overflow.detail.find("did not close") != std::string::npos);
}

TEST_CASE("corrupted pipelines fail their own invariant checks") {
  // Lie about the induced label: the hub vertex group then carries a
  // braid-3 relation the substituted level copies do not reproduce.
  auto honest = e2();
  Pipeline lied = honest;
  lied.mbar.finite[{0, 1}] = 3;
  bool hub_failed = false;
  for (const auto& c : run_standard_checks(lied).checks)
    if (c.name == "hub-collapse" && c.status == CheckStatus::fail)
      hub_failed = true;
  CHECK(hub_failed);

  // Corrupt the cover's psi table: cover-invariants catches it.
  Pipeline broken_cover = honest;
  broken_cover.cover.psi[0][0] = broken_cover.cover.psi[0][1];
  bool cover_failed = false;
  for (const auto& c : run_standard_checks(broken_cover).checks)
    if (c.name == "cover-invariants" && c.status == CheckStatus::fail)
      cover_failed = true;
  CHECK(cover_failed);

  // Corrupt the kernel presentation: the cross-check catches it.
  Pipeline broken_kernel = honest;
  broken_kernel.kernel.subgroup.relators[0] = braid_relator(0, 1, 3);
  bool kernel_failed = false;
  for (const auto& c : run_standard_checks(broken_kernel).checks)
    if (c.name == "kernel-presentation-cross-check" &&
        c.status == CheckStatus::fail)
      kernel_failed = true;
  CHECK(kernel_failed);
}

TEST_CASE("stable-letter-order rejects involuted doublings") {
  auto p = e1(Kind::coxeter);
  Pipeline broken = p;
  // Replace theta(t@0) = u@0 u'@0 by the single involution u@0.
  int t0 = broken.target.first_stable;
  broken.theta->images[t0] = Word::generator(broken.wplus->first_double);
  broken.wplus->theta_images[t0] = broken.theta->images[t0];
  bool order_failed = false;
  for (const auto& c : run_standard_checks(broken).checks) {
    if (c.name == "stable-letter-order" && c.status == CheckStatus::fail) {
      order_failed = true;
      CHECK(c.detail.find("order 2") != std::string::npos);
    }
    // The degenerate doubling is still a homomorphism (a lone involution
    // commutes with the same classes), which is exactly why relator
    // respect alone cannot catch it.
    if (c.name == "theta-relator-respect")
      CHECK(c.status == CheckStatus::pass);
  }
  CHECK(order_failed);
}

TEST_CASE("label-set rejects stray labels") {
  auto p = e2();
  Pipeline broken = p;
  std::map<std::pair<int, int>, int> labels;
  for (auto [i, j] : broken.target.system.finite_pairs())
    labels[{i, j}] = broken.target.system.label(i, j);
  labels[{2, 3}] = 5;  // t@0, t@1 suddenly claim label 5
  broken.target.system = ArtinSystem::assemble(
      broken.target.system.names(), labels, Kind::artin);
  bool label_failed = false;
  for (const auto& c : run_standard_checks(broken).checks)
    if (c.name == "label-set" && c.status == CheckStatus::fail) {
      label_failed = true;
      CHECK(c.detail.find("5") != std::string::npos);
    }
  CHECK(label_failed);
}

TEST_CASE("injectivity sampling is deterministic and honest") {
  VerifyOptions options;
  auto r1 = check_injectivity_samples(e2(), options);
  auto r2 = check_injectivity_samples(e2(), options);
  CHECK(r1.status == CheckStatus::pass);
  CHECK(r1.detail == r2.detail);

  options.samples = 100;
  auto r3 = check_injectivity_samples(e2(), options);
  CHECK(r3.status == CheckStatus::pass);
  CHECK(r3.detail != r1.detail);

  // Collapsing every image to the identity makes duplicates undeniable.
  auto p = e2();
  for (auto& img : p.eta.images) img = Word();
  auto collapsed = check_injectivity_samples(p, options);
  CHECK(collapsed.status == CheckStatus::fail);
  CHECK(collapsed.detail.find("same image") != std::string::npos);
}

TEST_CASE("general artin sampling counts undecided pairs without failing") {
  auto r = check_injectivity_samples(e1(), VerifyOptions{});
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.detail.find("undecided by the distinguisher") != std::string::npos);
  auto rc = check_injectivity_samples(e1(Kind::coxeter), VerifyOptions{});
  CHECK(rc.status == CheckStatus::pass);
  CHECK(rc.detail.find("0 undecided") != std::string::npos);
}

TEST_CASE("report bookkeeping") {
  VerificationReport report;
  CHECK(report.ok());
  report.checks.push_back({"x", CheckStatus::pass, "", 0.0});
  report.checks.push_back({"y", CheckStatus::inconclusive, "", 0.0});
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::pass) == 1);
  CHECK(report.count(CheckStatus::inconclusive) == 1);
  report.checks.push_back({"z", CheckStatus::fail, "", 0.0});
  CHECK_FALSE(report.ok());
  CHECK(std::string(check_status_name(CheckStatus::pass)) == "pass");
  CHECK(std::string(check_status_name(CheckStatus::fail)) == "fail");
  CHECK(std::string(check_status_name(CheckStatus::inconclusive)) ==
        "inconclusive");
}

TEST_CASE("certificates refuse failing pipelines") {
  auto s = sys({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 2}}, Kind::artin);
  auto phi = LabelPreservingBijection::unchecked(s, {{"a", "b"}, {"b", "c"}});
  // certificate() cannot even be reached with a broken phi: the pipeline
  // build raises the label conflict first.
  try {
    certificate(s, phi);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::label_conflict);
  }
}

}
