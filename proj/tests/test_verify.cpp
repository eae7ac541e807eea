#include <doctest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "axial/verify.hpp"

using namespace axial;

namespace {

const VerificationReport& default_report() {
  static const VerificationReport report = run_verification(RunConfig{});
  return report;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every entry is labelled, anchored and judged by residual <= tolerance") {
  const auto& r = default_report();
  REQUIRE(r.entries.size() > 40);
  std::set<std::string> labels;
  for (const auto& e : r.entries) {
    CHECK_FALSE(e.label.empty());
    CHECK_FALSE(e.anchor.empty());
    CHECK_FALSE(e.group.empty());
    CHECK(e.pass == (e.residual <= e.tolerance));
    CHECK(e.n_half >= r.config.n_half);
    CHECK(labels.insert(e.label).second);
  }
  CHECK(r.passed() + r.failed() == r.entries.size());
}

TEST_CASE("default run fails only the boost generator Hermiticity") {
  const auto& r = default_report();
  for (const auto& e : r.entries) {
    if (e.label == "boost generator Hermitian") {
      CHECK_FALSE(e.pass);
    } else {
      CHECK_MESSAGE(e.pass, e.label << ": " << e.residual << " > " << e.tolerance);
    }
  }
  CHECK(r.find("boost generator Hermitian") != nullptr);
  CHECK(r.find("no such identity") == nullptr);
}

TEST_CASE("tol_scale multiplies every tolerance") {
  RunConfig c;
  c.tol_scale = 0.0;
  const VerificationReport r = run_verification(c);
  const auto& base = default_report();
  REQUIRE(r.entries.size() == base.entries.size());
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    CHECK(r.entries[i].tolerance == 0.0);
    CHECK(r.entries[i].residual == base.entries[i].residual);
    CHECK(r.entries[i].pass == (r.entries[i].residual == 0.0));
  }
  CHECK(r.failed() > r.entries.size() / 2);
}

TEST_CASE("reports are deterministic and parse as JSON") {
  const std::string a = report_json(default_report());
  const std::string b = report_json(run_verification(RunConfig{}));
  CHECK(a == b);
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc.at("entries").size() == default_report().entries.size());
  std::ostringstream table;
  print_report(table, default_report());
  CHECK(table.str().find("boost generator Hermitian") != std::string::npos);
}

TEST_CASE("verdicts are stable across seeds") {
  const auto& base = default_report();
  for (std::uint64_t seed : {2u, 3u, 4u}) {
    RunConfig c;
    c.seed = seed;
    const VerificationReport r = run_verification(c);
    REQUIRE(r.entries.size() == base.entries.size());
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      CHECK_MESSAGE(r.entries[i].pass == base.entries[i].pass, "seed " << seed << ": "
                                                                    << r.entries[i].label);
    }
  }
}

TEST_CASE("write_report writes both files") {
  RunConfig c;
  c.out = "verify_report_test";
  VerificationReport r = default_report();
  r.config.out = c.out;
  write_report(r);
  std::ifstream json(c.out / "report.json");
  std::ifstream txt(c.out / "report.txt");
  CHECK(json.good());
  CHECK(txt.good());
}

TEST_CASE("invalid configurations are rejected") {
  auto rejects = [](auto mutate) {
    RunConfig c;
    mutate(c);
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
  };
  rejects([](RunConfig& c) { c.n_half = 16; });
  rejects([](RunConfig& c) { c.extent = 0.0; });
  rejects([](RunConfig& c) { c.probe_count = 1; });
  rejects([](RunConfig& c) { c.tol_scale = -1.0; });
  rejects([](RunConfig& c) { c.window_width = 100.0; });
  rejects([](RunConfig& c) { c.window_ramp = 6.0; });
  CHECK_NOTHROW(validate(RunConfig{}));
}

}
