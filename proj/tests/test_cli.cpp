#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nilgood/cli.hpp"

using nilgood::run_cli;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("nilgood_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("classify command") {
  CliResult r = run({"classify", "free(C(3),C(3))", "--ring", "p:3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"bad\"") != std::string::npos);
  CHECK(r.out.find("\"rule\": \"R5\"") != std::string::npos);

  CliResult good = run({"classify", "free(C(2),C(2))", "--ring", "p:2"});
  CHECK(good.code == 0);
  CHECK(good.out.find("verdict: good") != std::string::npos);

  CliResult unknown = run({"classify", "free(Z,C(3))", "--ring", "p:2"});
  CHECK(unknown.code == 0);  // Unknown is a verdict, not an error
  CHECK(unknown.out.find("verdict: unknown") != std::string::npos);

  CliResult space = run({"classify", "RP(2)", "--ring", "Zinv:2"});
  CHECK(space.code == 0);
  CHECK(space.out.find("verdict: bad") != std::string::npos);

  CliResult syntax = run({"classify", "free(C(3)", "--ring", "p:3"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("position") != std::string::npos);

  CliResult badring = run({"classify", "C(4)", "--ring", "p:6"});
  CHECK(badring.code == 2);
}

TEST_CASE("profile command") {
  CliResult r = run({"profile", "prod(free(C(3),C(3)),C(5))", "--primes", "2,3,5,7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p=2: good") != std::string::npos);
  CHECK(r.out.find("p=3: bad") != std::string::npos);
  CHECK(r.out.find("p=5: good") != std::string::npos);
  CHECK(r.out.find("p=7: good") != std::string::npos);
}

TEST_CASE("kernel-rank and euler commands") {
  CliResult r = run({"kernel-rank", "free(C(5),C(5))", "--p", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "16\n");

  CliResult chi = run({"euler", "free(C(3),C(3))"});
  CHECK(chi.code == 0);
  CHECK(chi.out == "-1/3\n");

  CliResult inadmissible = run({"kernel-rank", "free(C(6),C(2))", "--p", "2"});
  CHECK(inadmissible.code == 2);
}

TEST_CASE("homology and oracle commands") {
  CliResult rp2 = run({"homology", "RP(2)", "--ring", "p:2", "--max-degree", "2"});
  CHECK(rp2.code == 0);
  CHECK(rp2.out.find("H_0: dim 1") != std::string::npos);
  CHECK(rp2.out.find("H_2: dim 1") != std::string::npos);

  CliResult bc3 = run({"homology", "B(C(3))", "--ring", "Z", "--max-degree", "4"});
  CHECK(bc3.code == 0);
  CHECK(bc3.out.find("H_1: Z/3") != std::string::npos);
  CHECK(bc3.out.find("H_2: 0") != std::string::npos);

  CliResult oracle = run({"oracle", "C(3)", "--ring", "Z", "--max-degree", "4"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("H_3: Z/3") != std::string::npos);

  // Oracle bounds violation maps to exit 3.
  CliResult toobig = run({"oracle", "S(4)", "--ring", "p:2"});
  CHECK(toobig.code == 3);

  CliResult badring = run({"homology", "RP(2)", "--ring", "Zmod:4"});
  CHECK(badring.code == 2);
}

TEST_CASE("series command") {
  CliResult r = run({"series", "C(4)", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("orders: 4 2 1 1") != std::string::npos);
  CHECK(r.out.find("reaches trivial: yes") != std::string::npos);

  CliResult infinite = run({"series", "free(C(2),C(2))", "--p", "2"});
  CHECK(infinite.code == 2);
}

TEST_CASE("nilpotent-action command") {
  TempFile f("action.json", R"json({
    "actor": "C(2)",
    "target": "C(3)",
    "generators": [1],
    "images": [[0, 2, 1]]
  })json");
  CliResult r = run({"nilpotent-action", f.path, "--brute-force"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nilpotent: no") != std::string::npos);
  CHECK(r.out.find("(agrees)") != std::string::npos);

  CliResult json = run({"nilpotent-action", f.path, "--json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"nilpotent\": false") != std::string::npos);

  TempFile bad("action_bad.json", R"json({"actor": "C(2)"})json");
  CHECK(run({"nilpotent-action", bad.path}).code == 2);
  CHECK(run({"nilpotent-action", "no_such_file.json"}).code == 2);
}

TEST_CASE("zlattice command") {
  TempFile f("rep.txt", "1\n1\n-1\n");
  CliResult r = run({"zlattice", f.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("nilpotent: no") != std::string::npos);
  CHECK(r.out.find("1 2 4 8") != std::string::npos);  // the doubling chain

  TempFile id("rep_id.txt", "2\n1\n1 0\n0 1\n");
  CliResult rid = run({"zlattice", id.path});
  CHECK(rid.code == 0);
  CHECK(rid.out.find("nilpotent: yes") != std::string::npos);

  CliResult sweep = run({"zlattice", "--sweep", "--rank", "1", "--max-entry", "1",
                         "--serial", "--json"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("\"counterexamples\": []") != std::string::npos);

  CHECK(run({"zlattice"}).code == 2);
  TempFile nonuni("rep_bad.txt", "1\n1\n2\n");
  CHECK(run({"zlattice", nonuni.path}).code == 2);
}

TEST_CASE("table files load as explicit groups") {
  TempFile f("klein.tbl", "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  CliResult r = run({"series", "C(1)", "--p", "2"});  // smoke: series still works
  CHECK(r.code == 0);
  CliResult oracle = run({"oracle", "@" + f.path, "--ring", "p:2", "--max-degree", "2"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("H_1: dim 2") != std::string::npos);
}

TEST_CASE("cli rejects unknown flags and reports version") {
  CHECK(run({"classify", "C(2)", "--ring", "p:2", "--frobnicate"}).code == 2);
  CliResult v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("nilgood") != std::string::npos);
  CHECK(run({}).code == 2);  // a subcommand is required
}

TEST_CASE("json outputs match the published schemas") {
  CliResult j = run({"classify", "free(C(3),C(3))", "--ring", "p:3", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.contains("verdict"));
  CHECK(doc.contains("ring"));
  CHECK(doc.contains("trace"));
  CHECK(doc.contains("notes"));
  CHECK(doc["ring"]["kind"] == "field_p");
  CHECK(doc["ring"]["p"] == 3);
  REQUIRE(doc["trace"].is_array());
  REQUIRE(!doc["trace"].empty());
  for (const auto& entry : doc["trace"]) {
    CHECK(entry.contains("rule"));
    CHECK(entry.contains("citation"));
    CHECK(entry.contains("at"));
  }

  CliResult h = run({"homology", "B(C(3))", "--ring", "Z", "--max-degree", "3", "--json"});
  auto hdoc = nlohmann::json::parse(h.out);
  CHECK(hdoc["ring"] == "Z");
  REQUIRE(hdoc["entries"].is_array());
  CHECK(hdoc["entries"].size() == 4);
  CHECK(hdoc["entries"][1]["torsion"][0] == 3);

  CliResult s = run({"zlattice", "--sweep", "--rank", "1", "--max-entry", "1", "--json"});
  auto sdoc = nlohmann::json::parse(s.out);
  for (const char* key : {"rank", "max_abs_entry", "max_order", "candidates",
                          "representations", "nilpotent", "identity", "counterexamples"})
    CHECK(sdoc.contains(key));
}

TEST_CASE("cli output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "prod(free(C(3),C(3)),C(5))", "--ring", "p:3", "--json"},
           {"profile", "free(C(3),C(3),C(5))", "--primes", "2,3,5", "--json"},
           {"homology", "wedge(Sph(1),Sph(2))", "--ring", "p:2", "--json"}}) {
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
