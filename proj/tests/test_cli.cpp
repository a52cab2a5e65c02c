#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigsum/cli.hpp"

using trigsum::cli::run;

namespace {

struct CliOutput {
  int exit_code;
  std::string out;
  std::string err;
};

CliOutput call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("digamma subcommand", "[cli]") {
  const auto r = call({"digamma", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-0.5772156649") != std::string::npos);

  const auto bad = call({"digamma", "-1"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("domain error") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes", "[cli]") {
  const auto pass = call({"verify", "--id", "series2", "--nu", "0.25",
                          "--tol", "1e-9"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  CHECK(pass.out.find("0.451582705289") != std::string::npos);

  const auto excluded = call({"verify", "--id", "int-thm2", "--nu", "0.5"});
  CHECK(excluded.exit_code == 2);
  CHECK(excluded.err.find("domain exclusion") != std::string::npos);

  const auto unknown = call({"verify", "--id", "no-such-thing"});
  CHECK(unknown.exit_code == 2);

  const auto missing_nu = call({"verify", "--id", "series2"});
  CHECK(missing_nu.exit_code == 2);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(call({}).exit_code == 2);
  CHECK(call({"frobnicate"}).exit_code == 2);
  CHECK(call({"sweep", "--format", "yaml"}).exit_code == 2);
  CHECK(call({"--help"}).exit_code == 0);
}

TEST_CASE("eval prints the requested sides", "[cli]") {
  const auto rhs = call({"eval", "--id", "lerch1", "--nu", "0.5", "--side",
                         "rhs"});
  CHECK(rhs.exit_code == 0);
  CHECK(rhs.out.find("rhs") != std::string::npos);
  CHECK(rhs.out.find("-0.21001823001896") != std::string::npos);
  CHECK(rhs.out.find("lhs") == std::string::npos);

  const auto both = call({"eval", "--id", "lerch1", "--nu", "0.5"});
  CHECK(both.out.find("lhs") != std::string::npos);
  CHECK(both.out.find("rhs") != std::string::npos);
  CHECK(both.out.find("method=parts") != std::string::npos);

  // Bilateral identities default the auxiliary parameter to 0.5.
  const auto lemma = call({"eval", "--id", "lemma-lerch2", "--nu", "0.5"});
  CHECK(lemma.exit_code == 0);
  CHECK(lemma.out.find("- 1.570796") != std::string::npos);  // -i pi/2
}

TEST_CASE("digits flag controls printed precision", "[cli]") {
  const auto short_form = call({"--digits", "6", "digamma", "1"});
  CHECK(short_form.out == "-0.577216\n");
}

TEST_CASE("sweep json round-trips through the CLI", "[cli]") {
  const auto r = call({"sweep", "--ids", "series2,wallis", "--grid", "3",
                       "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto parsed = trigsum::parse_report_json(r.out);

  trigsum::SweepConfig cfg;
  cfg.grid_points = 3;
  cfg.include_special_points = false;
  cfg.identity_filter = std::vector<trigsum::IdentityId>{
      trigsum::IdentityId::series2, trigsum::IdentityId::wallis};
  const auto direct = trigsum::sweep(cfg);
  REQUIRE(parsed.size() == direct.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].id == direct[i].id);
    CHECK(parsed[i].lhs == direct[i].lhs);
    CHECK(parsed[i].rhs == direct[i].rhs);
    CHECK(parsed[i].pass == direct[i].pass);
  }
}

TEST_CASE("sweep writes report files atomically", "[cli]") {
  const auto path =
      std::filesystem::temp_directory_path() / "trigsum_cli_report.json";
  std::filesystem::remove(path);
  const auto r = call({"sweep", "--ids", "infprod", "--format", "json",
                       "--out", path.string()});
  REQUIRE(r.exit_code == 0);
  REQUIRE(std::filesystem::exists(path));
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  const auto parsed = trigsum::parse_report_json(buf.str());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].pass);
  std::filesystem::remove(path);
}

TEST_CASE("sweep text format reports ALL PASS", "[cli]") {
  const auto r = call({"sweep", "--ids", "lerch1,infseries0"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("integrate subcommand", "[cli]") {
  const auto r = call({"integrate", "--theorem", "1", "--nu", "0.5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.1447298858494") != std::string::npos);  // log pi
  CHECK(call({"integrate", "--theorem", "3", "--nu", "0.5"}).exit_code == 2);
}

TEST_CASE("product subcommand", "[cli]") {
  const auto r = call({"product", "--id", "wallis", "--terms", "100000"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.57079632679") != std::string::npos);
  CHECK(call({"product", "--id", "series2"}).exit_code == 2);
}

TEST_CASE("list covers every identity exactly once", "[cli]") {
  const auto r = call({"list"});
  CHECK(r.exit_code == 0);
  for (const auto& info : trigsum::kIdentityTable) {
    CAPTURE(info.name);
    const auto first = r.out.find(std::string(info.name) + " ");
    REQUIRE(first != std::string::npos);
  }
  // 17 identity rows plus the header.
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 18);
}
