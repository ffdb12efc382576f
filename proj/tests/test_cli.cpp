// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* cli() { return QREUSE_CLI_PATH; }

int run(const std::string& args) {
  const std::string cmd = std::string(cli()) + " " + args;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qreuse_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("gen writes deterministic files with manifests") {
  TempDir tmp;
  const std::string a = tmp / "a.qasm";
  const std::string b = tmp / "b.qasm";
  CHECK(run("gen random -n 4 -m 10 --seed 1 -o " + a) == 0);
  CHECK(run("gen random -n 4 -m 10 --seed 1 -o " + b) == 0);
  CHECK(slurp(a) == slurp(b));

  json manifest = json::parse(slurp(a + ".manifest.json"));
  CHECK(manifest["command"] == "gen random");
  CHECK(manifest["seeds"] == json::array({1}));
  CHECK(manifest["outputs"][0] == a);
  CHECK(manifest.contains("tool_version"));
  CHECK(manifest.contains("duration_ms"));

  // Different seed, different bytes.
  const std::string c = tmp / "c.qasm";
  CHECK(run("gen random -n 4 -m 10 --seed 2 -o " + c) == 0);
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("gen to stdout") {
  TempDir tmp;
  const std::string out = tmp / "ghz.qasm";
  CHECK(run("gen ghz -n 3 > " + out) == 0);
  CHECK(slurp(out).find("OPENQASM 2.0;") == 0);
  CHECK_FALSE(fs::exists(out + ".manifest.json"));

  CHECK(run("gen nosuchfamily -n 3 > /dev/null 2>&1") == 1);
}

TEST_CASE("resize writes output, report, and manifest") {
  TempDir tmp;
  const std::string in = tmp / "ghz4.qasm";
  const std::string out = tmp / "ghz4_small.qasm";
  REQUIRE(run("gen ghz -n 4 -o " + in) == 0);

  CHECK(run("resize -i " + in + " -o " + out) == 0);
  CHECK(slurp(out).find("qreg q[2];") != std::string::npos);

  json report = json::parse(slurp(out + ".report.json"));
  CHECK(report["original_width"] == 4);
  CHECK(report["width"] == 2);
  CHECK(report["resizable"] == true);
  CHECK(report["resets_added"] == 2);
  CHECK(report["tenancies"].size() == 4);

  json manifest = json::parse(slurp(out + ".manifest.json"));
  CHECK(manifest["command"] == "resize");
  CHECK(manifest["inputs"][0] == in);
}

TEST_CASE("resize passthrough exits 2") {
  TempDir tmp;
  const std::string in = tmp / "ent4.qasm";
  const std::string out = tmp / "ent4_out.qasm";
  REQUIRE(run("gen entblock -n 4 -o " + in) == 0);
  CHECK(run("resize -i " + in + " -o " + out + " 2> /dev/null") == 2);
  // Passthrough emits the same text it parsed.
  CHECK(slurp(out) == slurp(in));
  json report = json::parse(slurp(out + ".report.json"));
  CHECK(report["resizable"] == false);
  CHECK(report["width"] == 4);
}

TEST_CASE("resize enforces --max-width with exit 3") {
  TempDir tmp;
  const std::string in = tmp / "ghz4.qasm";
  REQUIRE(run("gen ghz -n 4 -o " + in) == 0);
  CHECK(run("resize -i " + in + " -o " + (tmp / "o.qasm") +
            " --max-width 1 2> /dev/null") == 3);
  CHECK(run("resize -i " + in + " -o " + (tmp / "o2.qasm") +
            " --max-width 2") == 0);
}

TEST_CASE("resize reports parse failures on stderr with exit 1") {
  TempDir tmp;
  const std::string in = tmp / "broken.qasm";
  std::ofstream(in) << "OPENQASM 2.0;\nqreg q[2];\nif (c == 1) x q[0];\n";
  const std::string err = tmp / "err.txt";
  CHECK(run("resize -i " + in + " -o " + (tmp / "o.qasm") + " 2> " + err) == 1);
  const std::string text = slurp(err);
  CHECK(text.find("broken.qasm:3:1") != std::string::npos);
  CHECK(text.find("conditional") != std::string::npos);

  CHECK(run("resize -i " + (tmp / "missing.qasm") + " 2> /dev/null") == 1);
}

TEST_CASE("check compares two circuits") {
  TempDir tmp;
  const std::string in = tmp / "ghz4.qasm";
  const std::string out = tmp / "small.qasm";
  REQUIRE(run("gen ghz -n 4 -o " + in) == 0);
  REQUIRE(run("resize -i " + in + " -o " + out) == 0);

  const std::string report = tmp / "eq.json";
  CHECK(run("check -a " + in + " -b " + out + " --report " + report +
            " > /dev/null") == 0);
  json doc = json::parse(slurp(report));
  CHECK(doc["equivalent"] == true);
  CHECK(doc["tvd"].get<double>() < 1e-9);

  const std::string other = tmp / "bv.qasm";
  REQUIRE(run("gen bv --secret 0011 -o " + other) == 0);
  CHECK(run("check -a " + in + " -b " + other + " > /dev/null 2>&1") == 1);
}

TEST_CASE("oracle command prints the exact minimum") {
  TempDir tmp;
  const std::string in = tmp / "ghz4.qasm";
  const std::string report = tmp / "oracle.json";
  REQUIRE(run("gen ghz -n 4 -o " + in) == 0);
  CHECK(run("oracle -i " + in + " --report " + report + " > /dev/null") == 0);
  json doc = json::parse(slurp(report));
  CHECK(doc["min_width"] == 2);
  CHECK(doc["witness_order"].size() == 8);
  CHECK(doc["nodes_explored"].get<std::uint64_t>() > 0);

  // Guard: too many instructions without a budget.
  const std::string big = tmp / "ghz26.qasm";
  REQUIRE(run("gen ghz -n 26 -o " + big) == 0);
  CHECK(run("oracle -i " + big + " 2> /dev/null") == 1);
  CHECK(run("oracle -i " + big + " --budget 10000000 > /dev/null") == 0);
}

TEST_CASE("bench tabulates a corpus") {
  TempDir tmp;
  fs::path corpus = fs::path(tmp.path) / "corpus";
  fs::create_directories(corpus);
  REQUIRE(run("gen ghz -n 4 -o " + (corpus / "a_ghz4.qasm").string()) == 0);
  REQUIRE(run("gen entblock -n 4 -o " + (corpus / "b_ent4.qasm").string()) == 0);
  REQUIRE(run("gen bv --secret 00011 -o " + (corpus / "c_bv5.qasm").string()) == 0);
  std::ofstream(corpus / "d_broken.qasm") << "not qasm at all\n";

  const std::string table = tmp / "table.json";
  const std::string csv = tmp / "table.csv";
  CHECK(run("bench --dir " + corpus.string() + " -o " + table + " --csv " +
            csv) == 0);

  json doc = json::parse(slurp(table));
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["file"] == "a_ghz4.qasm");
  CHECK(doc["rows"][0]["width"] == 2);
  CHECK(doc["rows"][0]["oracle_width"] == 2);
  CHECK(doc["rows"][0]["tvd"].get<double>() < 1e-9);
  CHECK(doc["rows"][0]["equivalent"] == true);

  CHECK(doc["rows"][1]["file"] == "b_ent4.qasm");
  CHECK(doc["rows"][1]["resizable"] == false);
  CHECK(doc["rows"][1]["oracle_width"] == 4);
  // Opaque block: not simulable, recorded as skipped rather than fatal.
  CHECK(doc["rows"][1]["tvd"].is_null());
  CHECK(doc["rows"][1].contains("check_skipped"));

  CHECK(doc["rows"][2]["file"] == "c_bv5.qasm");
  CHECK(doc["rows"][2]["width"] == 2);

  CHECK(doc["rows"][3]["file"] == "d_broken.qasm");
  CHECK(doc["rows"][3].contains("error"));

  const std::string csv_text = slurp(csv);
  CHECK(csv_text.find("file,qubits,width") == 0);
  CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 5);

  CHECK(fs::exists(table + ".manifest.json"));

  CHECK(run("bench --dir " + (tmp / "nodir") + " 2> /dev/null") == 1);
}

TEST_CASE("dependency override feeds the resizer") {
  TempDir tmp;
  const std::string in = tmp / "ghz3.qasm";
  REQUIRE(run("gen ghz -n 3 -o " + in) == 0);
  // An override that declares every qubit dependent on all others forces the
  // passthrough path.
  const std::string deps = tmp / "deps.json";
  std::ofstream(deps) << R"({"0": [0,1,2], "1": [1,0,2], "2": [2,0,1]})";
  CHECK(run("resize -i " + in + " -o " + (tmp / "o.qasm") + " --deps " + deps +
            " 2> /dev/null") == 2);

  std::ofstream(deps) << R"({"0": [0]})";
  CHECK(run("resize -i " + in + " --deps " + deps + " > /dev/null 2>&1") == 1);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run("definitely-not-a-command > /dev/null 2>&1") != 0);
  CHECK(run("resize > /dev/null 2>&1") != 0);
  CHECK(run("> /dev/null 2>&1") != 0);  // no subcommand
}
