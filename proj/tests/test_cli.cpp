#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zrepel/cli.hpp"

using namespace zrepel;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chars table for modulus 4") {
  auto r = run_cli({"chars", "--modulus", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  REQUIRE(j[0]["order"] == 1);
  REQUIRE(j[1]["values"][2] == "-1");  // chi(3)
  // table format has two data rows
  auto rt = run_cli({"chars", "--modulus", "4"});
  REQUIRE(rt.code == 0);
  int lines = 0;
  for (char c : rt.out)
    if (c == '\n') ++lines;
  REQUIRE(lines == 4);  // header + rule + 2 rows
}

TEST_CASE("chars real-only filter") {
  auto r = run_cli({"chars", "--modulus", "5", "--real-only", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 2);  // principal + Legendre
}

TEST_CASE("sieve subcommand emits weights and the lemma flag") {
  auto r = run_cli({"sieve", "--q", "5", "--chi1", "2", "--R", "10", "--format", "json"});
  // character index 2 may not be the quadratic one; find it first
  auto chars = enumerate_characters(5);
  size_t idx = 0;
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i].order() == 2) idx = i;
  auto r2 = run_cli({"sieve", "--q", "5", "--chi1", std::to_string(idx), "--R", "200",
                     "--format", "json"});
  REQUIRE(r2.code == 0);
  auto j = Json::parse(r2.out);
  REQUIRE(j["lemma41_holds"] == true);
  REQUIRE(j["V_R"].is_string());
  REQUIRE(j["weights"].is_array());
  REQUIRE(j["weights"][0]["theta"] == "1");
  REQUIRE(j["lemma41_rhs"]["lo"].is_string());
  (void)r;
}

TEST_CASE("sieve rejects a non-quadratic character") {
  auto chars = enumerate_characters(5);
  size_t complex_idx = 0;
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i].order() == 4) complex_idx = i;
  auto r = run_cli({"sieve", "--q", "5", "--chi1", std::to_string(complex_idx), "--R", "10"});
  REQUIRE(r.code == 2);
  REQUIRE(!r.err.empty());
}

TEST_CASE("bound subcommand produces the report JSON and round-trips") {
  auto r = run_cli({"bound", "--q", "1000000", "--T", "10", "--beta1", "0.99999999", "--preset",
                    "convexity,bordignon", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j["window"] == "violated_upper");
  REQUIRE(j["M"]["lo"].is_string());
  REQUIRE(j["repulsion_beta"]["hi"].is_string());
  // round trip: parse -> dump -> parse -> dump is stable
  std::string dumped = j.dump(2) + "\n";
  auto j2 = Json::parse(dumped);
  REQUIRE(j2.dump(2) + "\n" == dumped);
  REQUIRE(j2 == j);
}

TEST_CASE("bound with corollary constants and the negative control exit code") {
  auto ok = run_cli({"bound", "--q", "400001", "--T", "4", "--beta1", "0.9999999", "--preset",
                     "convexity,bordignon", "--corollary", "10,1,107,0.0625", "--format", "json"});
  REQUIRE(ok.code == 0);
  auto j = Json::parse(ok.out);
  REQUIRE(j["corollary_dominance"] == "verified");
  auto bad = run_cli({"bound", "--q", "400001", "--T", "4", "--beta1", "0.9999999", "--preset",
                      "convexity,bordignon", "--corollary", "5,0.5,53.5,0.0625", "--format",
                      "json"});
  REQUIRE(bad.code == 1);
  auto jb = Json::parse(bad.out);
  REQUIRE(jb["corollary_dominance"] == "failed");
}

TEST_CASE("verify single certificate and exit code") {
  auto r = run_cli({"verify", "--cert", "series_n2logn", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 1);
  REQUIRE(j[0]["verdict"] == "verified");
  REQUIRE(j[0]["enclosure"]["lo"].is_string());
  REQUIRE(!j[0].contains("seconds"));  // timings are opt-in
  auto rt = run_cli({"verify", "--cert", "series_n2logn", "--format", "json", "--timings"});
  auto jt = Json::parse(rt.out);
  REQUIRE(jt[0].contains("seconds"));
}

TEST_CASE("certs-list") {
  auto r = run_cli({"certs-list", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 10);
  REQUIRE(j[0]["name"] == "int_4_5");
  // csv output quotes fields containing commas
  auto rc = run_cli({"certs-list", "--format", "csv"});
  REQUIRE(rc.code == 0);
  REQUIRE(rc.out.find("\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  REQUIRE(run_cli({"bound", "--q", "400001"}).code == 2);           // missing required
  REQUIRE(run_cli({"nonsense"}).code == 2);                         // unknown subcommand
  REQUIRE(run_cli({"chars"}).code == 2);                            // missing modulus
  REQUIRE(run_cli({"verify", "--cert", "nope"}).code == 2);         // unknown certificate
  REQUIRE(run_cli({"bound", "--q", "400001", "--T", "4", "--beta1", "0.999", "--preset",
                   "bogus"})
              .code == 2);
}

TEST_CASE("empty list emits [] in JSON") {
  std::ostringstream os;
  emit(Json::array(), OutputFormat::json, os);
  REQUIRE(os.str() == "[]\n");
}

TEST_CASE("interval JSON uses decimal strings") {
  Json j = interval_json(Interval::from_ratio(1, 3), 10);
  REQUIRE(j["lo"].is_string());
  REQUIRE(j["hi"].is_string());
  REQUIRE(j["lo"].get<std::string>() != j["hi"].get<std::string>());
}

TEST_CASE("config file provides defaults, flags override, unknown keys rejected") {
  std::string path = "/tmp/zrepel_test_config.ini";
  {
    std::ofstream f(path);
    f << "precision = 128\n";
  }
  auto r = run_cli({"verify", "--cert", "series_n2logn", "--format", "json", "--config", path});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  // 128-bit precision prints more digits than the 80-bit default
  size_t len128 = j[0]["enclosure"]["lo"].get<std::string>().size();
  auto r80 = run_cli({"verify", "--cert", "series_n2logn", "--format", "json", "--config", path,
                      "--precision", "80"});
  auto j80 = Json::parse(r80.out);
  size_t len80 = j80[0]["enclosure"]["lo"].get<std::string>().size();
  REQUIRE(len128 > len80);

  {
    std::ofstream f(path);
    f << "bogus_key = 1\n";
  }
  auto rbad = run_cli({"verify", "--cert", "series_n2logn", "--config", path});
  REQUIRE(rbad.code == 2);
  std::remove(path.c_str());
}

TEST_CASE("identical invocations give byte-identical output") {
  std::vector<std::string> argv{"bound", "--q",     "500001",
                                "--T",   "16",      "--beta1",
                                "0.9999999", "--preset", "convexity,bordignon",
                                "--format", "json"};
  auto a = run_cli(argv);
  auto b = run_cli(argv);
  REQUIRE(a.code == b.code);
  REQUIRE(a.out == b.out);
}

TEST_CASE("detect subcommand") {
  auto r = run_cli({"detect", "--q", "5", "--chi", "0", "--rho", "0.75,2.0", "--N", "500",
                    "--R", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j["mollified_abs"]["hi"].is_string());
  REQUIRE(j["detector_rhs"]["lo"].is_string());
  auto rbad = run_cli({"detect", "--q", "5", "--chi", "0", "--rho", "0.75", "--N", "500"});
  REQUIRE(rbad.code == 2);
}
