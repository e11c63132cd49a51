// End-to-end tests of the bbrack command line binary.  The binary path and
// the shipped data directory come from BBRACK_BIN / BBRACK_DATA.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr combined
};

std::string bin_path() {
  const char* p = std::getenv("BBRACK_BIN");
  REQUIRE(p != nullptr);
  return p;
}

std::string data_path() {
  const char* p = std::getenv("BBRACK_DATA");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = "\"" + bin_path() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exit code policy", "[cli]") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);                  // a subcommand is required
  CHECK(run("frobnicate").code == 2);        // unknown subcommand
  CHECK(run("invariant --knot L2a1").code == 2);  // missing required flag
  CHECK(run("invariant --knot L2a1 --bracket ex1 --format nope").code == 2);

  SECTION("usage errors print to stderr with a fixed prefix") {
    RunResult r = run("invariant --knot L2a1 --pd U --bracket ex1");
    CHECK(r.code == 2);
    CHECK_THAT(r.out, ContainsSubstring(
                          "usage error: pass exactly one of --knot or --pd"));
    CHECK(run("invariant --bracket ex1").code == 2);
    RunResult unk = run("invariant --knot nosuch --bracket ex1");
    CHECK(unk.code == 2);
    CHECK_THAT(unk.out, ContainsSubstring("unknown catalog name 'nosuch'"));
    RunResult ub = run("invariant --knot L2a1 --bracket nosuch");
    CHECK(ub.code == 2);
    CHECK_THAT(ub.out, ContainsSubstring("unknown bracket 'nosuch'"));
  }
  SECTION("data errors exit 1 with the error kind") {
    RunResult r = run("invariant --pd 'X[1,2,3' --bracket ex1");
    CHECK(r.code == 1);
    CHECK_THAT(r.out, StartsWith("error: MalformedPD"));
    RunResult r2 = run("search --biquandle ca2 --ring Laurent");
    CHECK(r2.code == 1);
    CHECK_THAT(r2.out, StartsWith("error: Infinite"));
    RunResult r3 = run("search --biquandle ca2 --ring Q7");
    CHECK(r3.code == 2);
    CHECK_THAT(r3.out, ContainsSubstring("unknown ring spec 'Q7'"));
  }
}

TEST_CASE("verify-biquandle", "[cli]") {
  SECTION("built-in names") {
    RunResult r = run("verify-biquandle --biquandle ca2");
    CHECK(r.code == 0);
    CHECK(r.out == "ok (n=2)\n");
    CHECK(run("verify-biquandle --biquandle dihedral3").out == "ok (n=3)\n");
  }
  SECTION("shipped table files") {
    RunResult r = run("verify-biquandle --biquandle " + data_path() +
                      "/biquandles/alexander-z5-t2-r4.bq");
    CHECK(r.code == 0);
    CHECK(r.out == "ok (n=5)\n");
  }
  SECTION("axiom failures exit 1 and name the axiom") {
    std::string tmp = "/tmp/bbrack_bad.bq";
    std::ofstream(tmp) << "1 1 1 1\n1 1 1 1\n";
    RunResult r = run("verify-biquandle --biquandle " + tmp);
    CHECK(r.code == 1);
    CHECK(r.out == "axiom ii: beta_1 not a bijection\n");
    RunResult j = run("verify-biquandle --biquandle " + tmp + " --format json");
    CHECK(j.code == 1);
    json parsed = json::parse(j.out);
    CHECK(parsed["valid"] == false);
    CHECK(parsed["error"] == "axiom ii: beta_1 not a bijection");
    std::remove(tmp.c_str());
  }
  SECTION("json success") {
    json parsed = json::parse(
        run("verify-biquandle --biquandle ca2 --format json").out);
    CHECK(parsed == json({{"valid", true}, {"n", 2}}));
  }
  SECTION("unknown name") {
    CHECK(run("verify-biquandle --biquandle nosuch").code == 2);
  }
}

TEST_CASE("verify-bracket", "[cli]") {
  SECTION("built-ins") {
    CHECK(run("verify-bracket --bracket ex1").out == "ok (delta=2, w=1)\n");
    CHECK(run("verify-bracket --bracket f8").out ==
          "ok (delta=1+t+t^2, w=1+t^2)\n");
    CHECK(run("verify-bracket --bracket z11-dihedral").out ==
          "ok (delta=7, w=3)\n");
  }
  SECTION("shipped files resolve their biquandle header") {
    RunResult r =
        run("verify-bracket --bracket " + data_path() + "/brackets/ex1.br");
    CHECK(r.code == 0);
    CHECK(r.out == "ok (delta=2, w=1)\n");
  }
  SECTION("failing structure prints the first violated condition") {
    RunResult r = run("verify-bracket --bracket " + data_path() +
                      "/brackets/z3-counterexample.br");
    CHECK(r.code == 1);
    CHECK(r.out == "KinkCondition at x=2\n");
  }
  SECTION("json") {
    json parsed =
        json::parse(run("verify-bracket --bracket ex1 --format json").out);
    CHECK(parsed == json({{"valid", true}, {"delta", "2"}, {"w", "1"}}));
  }
}

TEST_CASE("colorings", "[cli]") {
  SECTION("counts") {
    CHECK(run("colorings --knot 4_1 --biquandle alexander-z5-t2-r4").out ==
          "5\n");
    CHECK(run("colorings --knot 3_1 --biquandle dihedral3").out == "9\n");
    CHECK(run("colorings --knot 3_1 --mirror --biquandle dihedral3").out ==
          "9\n");
  }
  SECTION("listing the hopf link") {
    RunResult r =
        run("colorings --pd 'X[1,3,2,4] X[3,1,4,2]' --biquandle ca2 --list");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1=1 2=2 3=1 4=2\n"
          "1=1 2=2 3=2 4=1\n"
          "1=2 2=1 3=1 4=2\n"
          "1=2 2=1 3=2 4=1\n"
          "4\n");
  }
  SECTION("free circles are labeled separately") {
    RunResult r = run("colorings --pd 'U U' --biquandle ca2 --list");
    CHECK(r.out ==
          "u: 1 1\n"
          "u: 1 2\n"
          "u: 2 1\n"
          "u: 2 2\n"
          "4\n");
  }
  SECTION("json") {
    json parsed = json::parse(
        run("colorings --knot L2a1 --biquandle ca2 --format json").out);
    CHECK(parsed["count"] == 4);
    json listed = json::parse(run(
        "colorings --knot L2a1 --biquandle ca2 --list --format json").out);
    REQUIRE(listed["colorings"].size() == 4);
    CHECK(listed["colorings"][0]["colors"]["1"] == 1);
    CHECK(listed["colorings"][0]["colors"]["2"] == 2);
  }
}

TEST_CASE("invariant", "[cli]") {
  SECTION("named bracket and bracket file agree") {
    CHECK(run("invariant --knot L2a1 --bracket ex1").out == "2u^3+2u^4\n");
    CHECK(run("invariant --knot L2a1 --bracket " + data_path() +
              "/brackets/ex1.br").out == "2u^3+2u^4\n");
  }
  SECTION("formats") {
    CHECK(run("invariant --knot L2a1 --bracket ex1 --format multiset").out ==
          "{3,3,4,4}\n");
    json parsed = json::parse(
        run("invariant --knot L2a1 --bracket ex1 --format json").out);
    CHECK(parsed["count"] == 4);
    REQUIRE(parsed["values"].size() == 2);
    CHECK(parsed["values"][0]["exponent"] == "3");
    CHECK(parsed["values"][0]["multiplicity"] == 2);
    CHECK(parsed["values"][1]["exponent"] == "4");
    CHECK(parsed["values"][1]["multiplicity"] == 2);
  }
  SECTION("zero exponents collapse to a bare multiplicity") {
    CHECK(run("invariant --knot 3_1 --mirror --bracket f8").out == "2\n");
    CHECK(run("invariant --knot 3_1 --mirror --bracket f8 --format multiset")
              .out == "{0,0}\n");
  }
  SECTION("unknots") {
    CHECK(run("invariant --pd U --bracket z11-dihedral").out == "3u^7\n");
    CHECK(run("invariant --pd 'U U' --bracket ex1").out == "4u^4\n");
  }
}

TEST_CASE("search", "[cli]") {
  SECTION("text output shape") {
    RunResult r = run("search --biquandle ca2 --ring Z5 --limit 3");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, StartsWith("found 3 brackets (candidates: "));
    CHECK_THAT(r.out, ContainsSubstring("delta="));
    CHECK_THAT(r.out, ContainsSubstring(" | "));
  }
  SECTION("full enumeration over Z5") {
    json parsed = json::parse(
        run("search --biquandle ca2 --ring Z5 --format json").out);
    CHECK(parsed["count"] == 256);
    CHECK(parsed["biquandle"] == "ca2");
    CHECK(parsed["ring"] == "Z5");
    REQUIRE(parsed["brackets"].size() == 256);
    CHECK(parsed["brackets"][0].contains("A"));
    CHECK(parsed["brackets"][0].contains("delta"));
  }
  SECTION("dedup classes partition the results") {
    json parsed = json::parse(
        run("search --biquandle ca2 --ring Z5 --dedup --format json").out);
    size_t total = 0;
    for (const auto& cls : parsed["classes"]) total += cls.size();
    CHECK(total == 256);
  }
  SECTION("report file") {
    std::string tmp = "/tmp/bbrack_report.json";
    RunResult r =
        run("search --biquandle ca2 --ring Z5 --out " + tmp);
    CHECK(r.code == 0);
    std::ifstream in(tmp);
    REQUIRE(in.good());
    json parsed = json::parse(in);
    CHECK(parsed["count"] == 256);
    std::remove(tmp.c_str());
  }
}

TEST_CASE("tables", "[cli]") {
  SECTION("GF(8) knot table groups all knots into seven rows") {
    RunResult r = run("tables f8-knots");
    CHECK(r.code == 0);
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    bool found_unknot_row = false;
    while (std::getline(in, line)) {
      ++rows;
      CHECK_THAT(line, ContainsSubstring(" : "));
      if (line.find("{2\u00d71+t+t^2} : ") == 0) {
        found_unknot_row = true;
        for (const char* nm : {"Unknot", "5_1", "7_6", "8_15"})
          CHECK_THAT(line, ContainsSubstring(nm));
      }
    }
    CHECK(rows == 7);
    CHECK(found_unknot_row);
    CHECK(run("tables f8-knots").out == r.out);  // byte-stable
  }
  SECTION("z11 knot table") {
    RunResult r = run("tables z11-knots");
    CHECK(r.code == 0);
    bool found = false;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
      if (line.rfind("3u^2 : ", 0) == 0) {
        found = true;
        CHECK_THAT(line, ContainsSubstring("4_1"));
      }
    CHECK(found);
  }
  SECTION("link table covers the shipped links") {
    RunResult r = run("tables f8-links");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("L2a1"));
    CHECK_THAT(r.out, ContainsSubstring("L7a7"));
  }
  SECTION("json") {
    json parsed = json::parse(run("tables f8-knots --format json").out);
    CHECK(parsed["table"] == "f8-knots");
    CHECK(parsed["rows"].size() == 7);
    for (const auto& row : parsed["rows"]) {
      CHECK(row.contains("value"));
      CHECK(row.contains("names"));
    }
  }
  SECTION("unknown table name") {
    CHECK(run("tables nope").code == 2);
  }
}

TEST_CASE("rmatrix", "[cli]") {
  SECTION("full text export of the Z5 bracket") {
    RunResult r = run("rmatrix --bracket ex1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "I:\n"
          "1 0\n"
          "0 1\n"
          "N: 0 1 1 0\n"
          "U: 0 1 1 0\n"
          "X[1,1] (classical R-matrix: yes):\n"
          "1 0 0 0\n"
          "0 0 4 0\n"
          "0 4 0 0\n"
          "0 0 0 1\n"
          "X[1,2] (classical R-matrix: no):\n"
          "3 0 0 0\n"
          "0 0 2 0\n"
          "0 2 1 0\n"
          "0 0 0 3\n"
          "X[2,1] (classical R-matrix: yes):\n"
          "4 0 0 0\n"
          "0 0 1 0\n"
          "0 1 0 0\n"
          "0 0 0 4\n"
          "X[2,2] (classical R-matrix: yes):\n"
          "1 0 0 0\n"
          "0 0 4 0\n"
          "0 4 0 0\n"
          "0 0 0 1\n");
  }
  SECTION("json flags each colored matrix") {
    json parsed = json::parse(run("rmatrix --bracket ex1 --format json").out);
    REQUIRE(parsed["X"].size() == 4);
    std::vector<bool> classical;
    for (const auto& x : parsed["X"]) classical.push_back(x["classical"]);
    CHECK(classical == std::vector<bool>{true, false, true, true});
    CHECK(parsed["N"] == json::array({"0", "1", "1", "0"}));
  }
}
