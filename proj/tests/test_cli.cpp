#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qaw/cli/commands.hpp"
#include "qaw/cli/report_io.hpp"
#include "qaw/errors.hpp"

using namespace qaw;
using namespace qaw::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qaw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("1.5") == Complex(1.5));
  CHECK(parse_complex("-2e-3") == Complex(-2e-3));
  CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
  CHECK(parse_complex("0.3-0.2i") == Complex(0.3, -0.2));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK_THROWS_AS(parse_complex(""), UsageError);
  CHECK_THROWS_AS(parse_complex("abc"), UsageError);
  CHECK_THROWS_AS(parse_complex("1+2"), UsageError);
  const auto list = parse_complex_list("0.1,0.2+0.1i,3");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == Complex(0.2, 0.1));
}

TEST_CASE("formatting round-trips at 17 digits") {
  for (Complex z : {Complex(0.1), Complex(1.0 / 3.0, -2.0 / 7.0), Complex(-1e-300, 5e300), Complex(0.0, 0.1)})
    CHECK(parse_complex(format_complex(z)) == z);
  CHECK(format_complex(0.375) == "0.375");
  const Json doc = {{"x", 0.1}, {"n", std::nan("")}};
  const std::string text = dump(doc);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("null") != std::string::npos);
}

TEST_CASE("json parameter forms") {
  CHECK(complex_from_json(Json(0.25)) == Complex(0.25));
  CHECK(complex_from_json(Json("0.1-0.2i")) == Complex(0.1, -0.2));
  CHECK(complex_from_json(Json{{"re", 0.1}, {"im", 0.3}}) == Complex(0.1, 0.3));
  CHECK_THROWS_AS(complex_from_json(Json::array({1, 2})), UsageError);
}

TEST_CASE("suite specification parsing") {
  const Json doc = Json::parse(R"({
    "seed": 7,
    "checks": [
      {"identity": "askey-wilson", "draws": 3, "tolerance": 1e-8,
       "params": {"a": {"range": [-0.5, 0.5]}, "q": {"choice": [0.3, 0.5]}, "b": "0.1+0.1i"}}
    ]})");
  const SuiteSpec s = parse_suite_spec(doc);
  CHECK(s.seed == 7);
  REQUIRE(s.checks.size() == 1);
  CHECK(s.checks[0].draws == 3);
  CHECK(*s.checks[0].tolerance == 1e-8);
  CHECK(s.checks[0].params.at("a").kind == ParamSource::Kind::range);
  CHECK(s.checks[0].params.at("q").choices.size() == 2);
  CHECK(s.checks[0].params.at("b").fixed == Complex(0.1, 0.1));
  CHECK_THROWS_AS(parse_suite_spec(Json::parse(R"({"checks": []})")), UsageError);
  CHECK_THROWS_AS(parse_suite_spec(Json::parse(R"({"seed": 1, "checks": [{"identity": "askey-wilson", "draws": 0}]})")),
                  UsageError);
}

TEST_CASE("report document") {
  const IdentityReport r = check_askey_wilson({0.3, 0.2, 0.1, 0.4, 0.6, 1.0, 0.5});
  const Json doc = report_document({r}, {}, 5);
  CHECK(doc["tool"] == "qaw");
  CHECK(doc["seed"] == 5);
  CHECK(doc["reports"][0]["identity"] == "askey-wilson");
  CHECK(doc["reports"][0]["status"] == "passed");
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["reports"][0].begin().key() == "identity");
  const Summary s = summarize({r, r});
  CHECK(s.total == 2);
  CHECK(s.passed == 2);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--bogus"}).code == kExitUsage);
  CHECK(invoke({"check", "no-such-identity"}).code == kExitUsage);
  CHECK(invoke({"check", "no-such-identity"}).err.find("askey-wilson") != std::string::npos);

  const Outcome poch = invoke({"eval", "poch", "--a", "0.5", "--q", "0.5", "--n", "2"});
  CHECK(poch.code == kExitOk);
  CHECK(poch.out.find("0.375") != std::string::npos);
  CHECK(invoke({"eval", "gamma", "--x", "-1", "--q", "0.5"}).code == kExitNumerical);

  const Outcome aw = invoke({"check", "askey-wilson", "--a", "0.3", "--b", "0.2", "--c", "0.1", "--d", "0.4"});
  CHECK(aw.code == kExitOk);
  const Json report = Json::parse(aw.out);
  CHECK(report["passed"] == true);
  CHECK(invoke({"check", "askey-wilson", "--a", "1.2"}).code == kExitDomain);
  CHECK(invoke({"check", "askey-wilson", "--tol", "1e-30", "--a", "0.3"}).code == kExitFailed);
}

TEST_CASE("suite command") {
  const auto empty = temp_file("qaw_test_empty.json", R"({"seed": 1, "checks": []})");
  const auto out_path = std::filesystem::temp_directory_path() / "qaw_test_empty_out.json";
  const Outcome e = invoke({"suite", "--spec", empty.string(), "--out", out_path.string()});
  CHECK(e.code == kExitOk);
  std::ifstream in(out_path);
  const Json doc = Json::parse(in);
  CHECK(doc["summary"]["total"] == 0);
  CHECK(doc["reports"].empty());

  CHECK(invoke({"suite", "--spec", "/nonexistent/spec.json"}).code == kExitIo);
  const auto broken = temp_file("qaw_test_broken.json", "{ not json");
  CHECK(invoke({"suite", "--spec", broken.string()}).code == kExitUsage);

  const auto unknown = temp_file("qaw_test_unknown.json", R"({"seed": 1, "checks": [{"identity": "nope"}]})");
  const Outcome u = invoke({"suite", "--spec", unknown.string()});
  CHECK(u.code == kExitUsage);
  CHECK(u.err.find("fractional-aw") != std::string::npos);
  std::filesystem::remove(unknown);

  const auto small = temp_file("qaw_test_small.json", R"({"seed": 3, "checks": [
      {"identity": "askey-wilson", "draws": 2, "params": {"a": {"range": [-0.5, 0.5]}}},
      {"identity": "askey-wilson", "params": {"a": 1.5}}]})");
  const Outcome s = invoke({"suite", "--spec", small.string()});
  CHECK(s.code == kExitOk);
  const Json sd = Json::parse(s.out);
  CHECK(sd["summary"]["passed"] == 2);
  CHECK(sd["summary"]["skipped"] == 1);
  std::filesystem::remove(empty);
  std::filesystem::remove(out_path);
  std::filesystem::remove(broken);
  std::filesystem::remove(small);
}
