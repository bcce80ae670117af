#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// Drives the installed binary end to end through a shell, checking exit
// codes and the exact bytes it prints.
namespace {

std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "/tmp/ckforms_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) +
         "_" + tag;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

// env_prefix lets a test set CKFORMS_MAX_DEGREE; by default it is unset so
// the suite is immune to whatever the outer environment carries.
Run run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string out_file = temp_path("out"), err_file = temp_path("err");
  std::string cmd = "env -u CKFORMS_MAX_DEGREE " + env_prefix + "\"" CKFORMS_CLI_PATH "\" " +
                    args + " > " + out_file + " 2> " + err_file;
  int rc = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

const char* kToySpec = R"({
  "id": "toy-sl2r-so11",
  "g_u": [{"family": "SU", "n": 2}],
  "h_u": [{"family": "SO", "n": 2}],
  "map_h_in_g": [[1]],
  "map_kh_in_h": [[]],
  "ranks": {"g": 1, "h": 1, "kg": 1, "kh": 0}
})";

}  // namespace

TEST_CASE("version and usage errors") {
  Run v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.out == "ckforms 0.1.0\n");

  CHECK(run_cli("").code == 2);           // a subcommand is required
  CHECK(run_cli("frobnicate").code == 2);  // unknown subcommand
}

TEST_CASE("check produces the pinned report in both formats") {
  Run j = run_cli("check --pair gl4r-gl2c --max-degree 8 --format json");
  REQUIRE(j.code == 0);
  auto rep = nlohmann::ordered_json::parse(j.out);
  CHECK(rep["pair"]["id"] == "gl2nr-glnc(2)");
  CHECK(rep["verdict"] == "obstruction_found");
  CHECK(rep["witness"]["name"] == "c2@1 - c2@2");
  CHECK(rep["witness"]["poly_degree"] == 2);
  CHECK_FALSE(rep.contains("timing_ms"));
  // reports re-render byte for byte, so downstream tooling can diff them
  CHECK(rep.dump(2) + "\n" == j.out);

  Run t = run_cli("check --pair sl4r-so13");
  REQUIRE(t.code == 0);
  CHECK(t.out.find("verdict: obstruction found - the quotient admits no compact "
                   "Clifford-Klein form") != std::string::npos);
  CHECK(t.out.find("witness: e\n") != std::string::npos);

  Run inap = run_cli("check --pair u21-u11xu1");
  REQUIRE(inap.code == 0);
  CHECK(inap.out.find("verdict: criterion inapplicable") != std::string::npos);
  CHECK(inap.out.find("rank of H_U equals rank of K_H") != std::string::npos);

  Run forced = run_cli("check --pair sl2c-sl2r --force-search --max-degree 4");
  REQUIRE(forced.code == 0);
  CHECK(forced.out.find("criterion inapplicable (complexification pair") !=
        std::string::npos);
  CHECK(forced.out.find("forced search ran to degree 4") != std::string::npos);
}

TEST_CASE("check input validation exits 2") {
  Run unknown = run_cli("check --pair nope");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown catalog pair") != std::string::npos);

  CHECK(run_cli("check").code == 2);
  CHECK(run_cli("check --pair a --spec b").code == 2);
  CHECK(run_cli("check --pair gl4r-gl2c --max-degree 0").code == 2);
  CHECK(run_cli("check --pair gl4r-gl2c --max-degree 65").code == 2);
  CHECK(run_cli("check --pair gl4r-gl2c --format xml").code == 2);
}

TEST_CASE("check reads pair-spec files") {
  std::string spec = temp_path("spec.json");
  spit(spec, kToySpec);
  Run r = run_cli("check --spec " + spec + " --format json");
  REQUIRE(r.code == 0);
  auto rep = nlohmann::ordered_json::parse(r.out);
  CHECK(rep["pair"]["id"] == "toy-sl2r-so11");
  CHECK(rep["verdict"] == "obstruction_found");
  CHECK(rep["witness"]["name"] == "e");
  CHECK(rep["witness"]["poly_degree"] == 1);
  std::remove(spec.c_str());

  std::string bad = temp_path("bad.json");
  spit(bad, "{ definitely not json");
  Run b = run_cli("check --spec " + bad);
  CHECK(b.code == 2);
  CHECK(b.err.find("pair spec") != std::string::npos);
  std::remove(bad.c_str());

  Run missing = run_cli("check --spec /nonexistent/path.json");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read spec file") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  std::string out = temp_path("report.json");
  Run r = run_cli("check --pair gl4r-gl2c --format json --out " + out);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  Run direct = run_cli("check --pair gl4r-gl2c --format json");
  CHECK(slurp(out) == direct.out);
  std::remove(out.c_str());
}

TEST_CASE("the degree bound comes from the flag, then the environment") {
  Run env1 = run_cli("check --pair gl4r-gl2c --format json", "CKFORMS_MAX_DEGREE=1 ");
  REQUIRE(env1.code == 0);
  auto rep = nlohmann::ordered_json::parse(env1.out);
  CHECK(rep["verdict"] == "inconclusive");
  CHECK(rep["max_degree_searched"] == 1);

  Run both = run_cli("check --pair gl4r-gl2c --format json --max-degree 8",
                     "CKFORMS_MAX_DEGREE=1 ");
  REQUIRE(both.code == 0);
  CHECK(nlohmann::ordered_json::parse(both.out)["verdict"] == "obstruction_found");

  for (const char* bad : {"abc", "0", "65", "-3"}) {
    Run r = run_cli("check --pair gl4r-gl2c",
                    std::string("CKFORMS_MAX_DEGREE=") + bad + " ");
    CHECK(r.code == 2);
    CHECK(r.err.find("CKFORMS_MAX_DEGREE") != std::string::npos);
  }
}

TEST_CASE("list prints the catalog with sources and expectations") {
  Run r = run_cli("list");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sl-pq-so-pq(1,3) | Cor 1.4 (2)") != std::string::npos);
  CHECK(r.out.find("aka sl4r-so13") != std::string::npos);
  CHECK(r.out.find("obstruction_found: e (degree 2)") != std::string::npos);

  Run filtered = run_cli("list \"Remark 1.8\"");
  REQUIRE(filtered.code == 0);
  int lines = 0;
  for (char c : filtered.out) lines += c == '\n';
  CHECK(lines == 2);

  Run none = run_cli("list zzz-no-such-thing");
  CHECK(none.code == 0);
  CHECK(none.out.empty());

  Run js = run_cli("list --format json");
  REQUIRE(js.code == 0);
  auto arr = nlohmann::ordered_json::parse(js.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 21);

  Run fams = run_cli("list --families");
  REQUIRE(fams.code == 0);
  CHECK(fams.out.find("sl-pq-so-pq(p,q) | ") != std::string::npos);
  CHECK(fams.out.find("u-prq-upq-ur(p,q,r) | ") != std::string::npos);
  lines = 0;
  for (char c : fams.out) lines += c == '\n';
  CHECK(lines == 11);
}

TEST_CASE("sweep walks a parameter grid in odometer order") {
  Run r = run_cli(
      "sweep --family sl-pq-so-pq --range p=1:5:2 --range q=1:3:2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["sweep"]["family"] == "sl-pq-so-pq");
  CHECK(j["sweep"]["ranges"]["p"] == "1:5:2");
  REQUIRE(j["reports"].size() == 6);
  // p slowest: (1,1,..),(1,3),(3,1),(3,3),(5,1),(5,3)
  CHECK(j["reports"][0]["pair"]["id"] == "sl-pq-so-pq(1,1)");
  CHECK(j["reports"][1]["pair"]["id"] == "sl-pq-so-pq(1,3)");
  CHECK(j["reports"][2]["pair"]["id"] == "sl-pq-so-pq(3,1)");
  CHECK(j["reports"][5]["pair"]["id"] == "sl-pq-so-pq(5,3)");
  for (const auto& rep : j["reports"]) {
    CHECK(rep["verdict"] == "obstruction_found");
    CHECK(rep["witness"]["name"] == "e");
  }
  CHECK(j["summary"]["total"] == 6);
  CHECK(j["summary"]["obstruction_found"] == 6);
  CHECK(j["summary"]["errors"] == 0);
}

TEST_CASE("sweep text format and mixed verdicts") {
  Run r = run_cli("sweep --family sl-pq-so-pq --range p=1:2 --range q=1:2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sl-pq-so-pq(1,1): obstruction_found  witness e (degree 1)") !=
        std::string::npos);
  CHECK(r.out.find("sl-pq-so-pq(1,2): inapplicable (equal_rank_h_kh)") !=
        std::string::npos);
  CHECK(r.out.find("summary: total 4, obstruction_found 1, inconclusive 0, "
                   "inapplicable 3, errors 0") != std::string::npos);
}

TEST_CASE("sweep validates its ranges") {
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=1:3").code == 2);  // q missing
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=1 --range q=1 --range p=2").code == 2);
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=1 --range z=1").code == 2);
  CHECK(run_cli("sweep --family nope --range p=1").code == 2);
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=1:5:0 --range q=1").code == 2);
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=1:2000 --range q=1").code == 2);
  CHECK(run_cli("sweep --family sl-pq-so-pq --range p=x --range q=1").code == 2);
  CHECK(run_cli("sweep").code == 2);
  CHECK(run_cli("sweep --builtins --range p=1").code == 2);

  // an empty interval is a legal, empty sweep
  Run empty = run_cli("sweep --family sl-pq-so-pq --range p=3:1 --range q=1 --format json");
  REQUIRE(empty.code == 0);
  auto j = nlohmann::ordered_json::parse(empty.out);
  CHECK(j["reports"].empty());
  CHECK(j["summary"]["total"] == 0);
}

TEST_CASE("sweeping the equal-rank family stays inapplicable") {
  Run r = run_cli(
      "sweep --family u-prq-upq-ur --range p=1:2 --range q=1:2 --range r=1:2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j["reports"].size() == 8);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["verdict"] == "inapplicable");
    CHECK(rep["precheck"] == "equal_rank_h_kh");
  }
}

TEST_CASE("parallel sweeps render byte-identical files") {
  std::string f1 = temp_path("jobs1.json"), f4 = temp_path("jobs4.json");
  Run r1 = run_cli("sweep --family sl-pq-so-pq --range p=1:3 --range q=1:3 --format json"
                   " --jobs 1 --out " + f1);
  Run r4 = run_cli("sweep --family sl-pq-so-pq --range p=1:3 --range q=1:3 --format json"
                   " --jobs 4 --out " + f4);
  REQUIRE(r1.code == 0);
  REQUIRE(r4.code == 0);
  std::string a = slurp(f1), b = slurp(f4);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  std::remove(f1.c_str());
  std::remove(f4.c_str());
}
