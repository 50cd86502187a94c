#include "cli/commands.hpp"
#include "cli/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

using namespace homzero;
using namespace homzero::cli;

namespace {

std::string sample(const std::string& name) { return std::string(HOMZERO_SAMPLES_DIR) + "/" + name; }

const Verdict* verdict(const Report& r, const std::string& name) {
  auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(), [&](const Verdict& v) { return v.name == name; });
  return it == r.verdicts.end() ? nullptr : &*it;
}

std::string group(const Report& r, std::size_t dim) {
  for (const auto& h : r.homology)
    if (h.dim == dim) return h.group.to_string();
  return "missing";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const auto ok = cmd_validate(sample("monogenic.json"));
    CHECK(ok.exit_code == kOk);
    REQUIRE(verdict(ok.report, "nilpotency_degree"));
    CHECK(verdict(ok.report, "nilpotency_degree")->value == "3");

    const auto bad = cmd_validate(sample("broken.json"));
    CHECK(bad.exit_code == kInvalid);
    CHECK(verdict(bad.report, "valid")->value == "no");

    CHECK(cmd_validate(sample("c2.json")).exit_code == kOk);
    CHECK(cmd_validate(sample("missing.json")).exit_code == kInvalid);

    const auto path = std::filesystem::temp_directory_path() / "homzero_bad_type.json";
    std::ofstream(path) << R"({"table": [[0]], "zero": "yes"})";
    CHECK(cmd_validate(path.string()).exit_code == kInvalid);
    std::filesystem::remove(path);
  }

  TEST_CASE("cat0") {
    const auto r = cmd_cat0(sample("two_products.json"), {});
    CHECK(r.exit_code == kOk);
    CHECK(verdict(r.report, "categorical_at_zero")->value == "no");
    CHECK(cmd_cat0(sample("four_letter.pres"), {}).report.verdicts.front().value == "yes");
  }

  TEST_CASE("h0") {
    const auto r = cmd_h0(sample("two_products.json"), sample("trivial_z.json"), {});
    REQUIRE(r.exit_code == kOk);
    CHECK(group(r.report, 0) == "Z");
    CHECK(group(cmd_h0(sample("two_products.json"), sample("zero_z.json"), {}).report, 0) == "0");
    CHECK(cmd_h0(sample("c2.json"), sample("trivial_z.json"), {}).exit_code == kInvalid);
  }

  TEST_CASE("bar") {
    Options o;
    o.max_dim = 3;
    const auto r = cmd_bar(sample("c2.json"), sample("trivial_z.json"), o);
    REQUIRE(r.exit_code == kOk);
    CHECK(group(r.report, 0) == "Z");
    CHECK(group(r.report, 1) == "Z/2");
    CHECK(group(r.report, 2) == "0");
    CHECK(group(r.report, 3) == "Z/2");
  }

  TEST_CASE("pipeline") {
    const auto r = cmd_pipeline(sample("four_letter.pres"), sample("trivial_z4.json"), {});
    REQUIRE(r.exit_code == kOk);
    CHECK(group(r.report, 2) == "0");
    CHECK(verdict(r.report, "quotient_size")->value == "6");

    CHECK(cmd_pipeline(sample("adyan.pres"), sample("trivial_z.json"), {}).exit_code == kInvalid);
    Options graph;
    graph.via = "graph";
    const auto g = cmd_pipeline(sample("adyan.pres"), sample("trivial_z.json"), graph);
    REQUIRE(g.exit_code == kOk);
    CHECK(verdict(g.report, "quotient_size")->value == "14");
    CHECK(verdict(g.report, "longest_path")->value == "2");
    CHECK(group(g.report, 1) == "Z^4");

    Options tight;
    tight.rewrite_budget = 3;
    CHECK(cmd_pipeline(sample("four_letter.pres"), sample("trivial_z.json"), tight).exit_code == kUndecided);
  }

  TEST_CASE("reflector commands") {
    const auto eq = cmd_reflector_eq(sample("monogenic.json"), "a2,a", "a,a2", {});
    REQUIRE(eq.exit_code == kOk);
    CHECK(verdict(eq.report, "nu_equivalent")->value == "equal");

    const auto mul = cmd_reflector_mul(sample("monogenic.json"), "a", "a");
    REQUIRE(mul.exit_code == kOk);
    CHECK(verdict(mul.report, "product")->value == "<a2>");
    CHECK(cmd_reflector_mul(sample("monogenic.json"), "a2", "a2").exit_code == kOk);
    CHECK(cmd_reflector_mul(sample("monogenic.json"), "a,a", "a").exit_code == kInvalid);
  }

  TEST_CASE("reports round trip through json") {
    const auto r = cmd_pipeline(sample("left_cancel.pres"), sample("zero_z.json"), {});
    REQUIRE(r.exit_code == kOk);
    const std::string text = report_to_json(r.report);
    CHECK(report_from_json(text) == r.report);
    CHECK(report_to_json(cmd_pipeline(sample("left_cancel.pres"), sample("zero_z.json"), {}).report) == text);
    CHECK_THROWS_AS(report_from_json("{\"command\": 3}"), InvalidInput);
    std::string wrong = text;
    wrong.replace(wrong.find("\"text\": \"Z\""), 11, "\"text\": \"0\"");
    CHECK_THROWS_AS(report_from_json(wrong), InvalidInput);
  }

  TEST_CASE("parallel runs agree with serial runs") {
    Options par;
    par.jobs = 2;
    const auto a = cmd_bar(sample("c2.json"), sample("trivial_z.json"), {});
    const auto b = cmd_bar(sample("c2.json"), sample("trivial_z.json"), par);
    CHECK(a.report.homology == b.report.homology);
  }
}
