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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qreuse/circuit.hpp"
#include "qreuse/dag.hpp"
#include "qreuse/generate.hpp"
#include "qreuse/oracle.hpp"
#include "qreuse/qasm.hpp"
#include "qreuse/resize.hpp"
#include "qreuse/simulate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPassthrough = 2;
constexpr int kExitOverWidth = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

qreuse::Circuit load_circuit(const std::string& path) {
  auto result = qreuse::parse_qasm(read_file(path));
  if (!result.ok()) {
    std::ostringstream msg;
    for (const auto& d : result.diagnostics)
      msg << path << ":" << d.line << ":" << d.column << ": "
          << (d.severity == qreuse::Severity::Error ? "error" : "warning")
          << ": " << d.message << "\n";
    throw std::runtime_error(msg.str());
  }
  return std::move(*result.circuit);
}

// Every file-writing run leaves a manifest next to its primary output.
void write_manifest(const std::string& command,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    const std::vector<std::uint64_t>& seeds,
                    Clock::time_point started) {
  if (outputs.empty()) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      Clock::now() - started)
                      .count();
  json doc = {{"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"seeds", seeds},
              {"tool_version", std::string(qreuse::kToolVersion)},
              {"duration_ms", ms}};
  write_file(outputs.front() + ".manifest.json", doc.dump(2) + "\n");
}

json counts_json(const qreuse::GateCounts& g) {
  return {{"total_gates", g.total_gates},   {"cnot_count", g.cnot_count},
          {"measure_count", g.measure_count}, {"reset_count", g.reset_count},
          {"barrier_count", g.barrier_count}, {"depth", g.depth}};
}

// ---------------------------------------------------------------------------

struct ResizeArgs {
  std::string input, output, report, deps;
  std::int64_t max_width = -1;
};

int run_resize(const ResizeArgs& args) {
  const auto started = Clock::now();
  qreuse::Circuit circuit = load_circuit(args.input);
  qreuse::GateDag dag = qreuse::build_dag(circuit);
  qreuse::DependencyTable table =
      args.deps.empty()
          ? qreuse::dependency_table(dag)
          : qreuse::dependency_table_with_override(dag, read_file(args.deps));
  qreuse::ResizePlan plan = qreuse::resize(circuit, table);

  const std::string qasm = qreuse::emit_qasm(plan.resized);
  const std::string report = qreuse::plan_report(plan);

  std::vector<std::string> outputs;
  if (args.output.empty()) {
    std::cout << qasm;
    std::cerr << report;
  } else {
    write_file(args.output, qasm);
    outputs.push_back(args.output);
    const std::string report_path =
        args.report.empty() ? args.output + ".report.json" : args.report;
    write_file(report_path, report);
    outputs.push_back(report_path);
  }
  std::vector<std::string> inputs = {args.input};
  if (!args.deps.empty()) inputs.push_back(args.deps);
  write_manifest("resize", inputs, outputs, {}, started);

  for (const std::string& w : plan.warnings) std::cerr << "warning: " << w << "\n";
  if (args.max_width >= 0 && plan.width > args.max_width) {
    std::cerr << "width " << plan.width << " exceeds --max-width "
              << args.max_width << "\n";
    return kExitOverWidth;
  }
  if (!plan.resizable) {
    std::cerr << "circuit is not resizable; passed through unchanged\n";
    return kExitPassthrough;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string a, b, report;
  double tolerance = 1e-9;
};

int run_check(const CheckArgs& args) {
  const auto started = Clock::now();
  qreuse::Circuit ca = load_circuit(args.a);
  qreuse::Circuit cb = load_circuit(args.b);
  qreuse::EquivalenceReport rep =
      qreuse::check_equivalence(ca, cb, args.tolerance);
  json doc = {{"tvd", rep.tvd},
              {"tolerance", rep.tolerance},
              {"equivalent", rep.equivalent},
              {"branches_a", rep.branches_a},
              {"branches_b", rep.branches_b}};
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!args.report.empty()) {
    write_file(args.report, text);
    write_manifest("check", {args.a, args.b}, {args.report}, {}, started);
  }
  return rep.equivalent ? kExitOk : kExitError;
}

struct OracleArgs {
  std::string input, report;
  std::uint64_t budget = 0;
};

int run_oracle(const OracleArgs& args) {
  const auto started = Clock::now();
  qreuse::Circuit circuit = load_circuit(args.input);
  qreuse::OracleResult res =
      qreuse::min_width_oracle(circuit, {.node_budget = args.budget});
  json doc = {{"min_width", res.min_width},
              {"witness_order", res.witness_order},
              {"nodes_explored", res.nodes_explored}};
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!args.report.empty()) {
    write_file(args.report, text);
    write_manifest("oracle", {args.input}, {args.report}, {}, started);
  }
  return kExitOk;
}

struct GenArgs {
  std::string family, secret = "101", output;
  std::uint32_t n = 4;
  std::uint64_t m = 16;
  std::uint64_t seed = 1;
  double fraction = 0.5;
};

int run_gen(const GenArgs& args) {
  const auto started = Clock::now();
  qreuse::Circuit c;
  std::vector<std::uint64_t> seeds;
  if (args.family == "bv") {
    c = qreuse::gen_bv(qreuse::SecretString::from_string(args.secret));
  } else if (args.family == "ghz") {
    c = qreuse::gen_ghz(args.n);
  } else if (args.family == "cat") {
    c = qreuse::gen_cat(args.n);
  } else if (args.family == "entblock") {
    c = qreuse::gen_entangled_block(args.n);
  } else if (args.family == "random") {
    c = qreuse::gen_random(args.n, static_cast<std::uint32_t>(args.m),
                           args.seed, args.fraction);
    seeds.push_back(args.seed);
  } else if (args.family == "scaling") {
    c = qreuse::gen_scaling(args.n, args.m);
  } else {
    throw std::runtime_error("unknown family '" + args.family +
                             "' (expected bv|ghz|cat|entblock|random|scaling)");
  }
  const std::string qasm = qreuse::emit_qasm(c);
  if (args.output.empty()) {
    std::cout << qasm;
  } else {
    write_file(args.output, qasm);
    write_manifest("gen " + args.family, {}, {args.output}, seeds, started);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string dir, output, csv;
  std::uint64_t budget = 0;
  double tolerance = 1e-9;
};

json bench_row(const fs::path& file, const BenchArgs& args) {
  json row;
  row["file"] = file.filename().string();
  try {
    qreuse::Circuit circuit = load_circuit(file.string());
    qreuse::DependencyTable table =
        qreuse::dependency_table(qreuse::build_dag(circuit));
    qreuse::ResizePlan plan = qreuse::resize(circuit, table);

    row["qubits"] = plan.original_width;
    row["width"] = plan.width;
    row["resizable"] = plan.resizable;
    row["resets_added"] = plan.resets_added;
    row["gate_counts"] = {{"before", counts_json(plan.counts_before)},
                          {"after", counts_json(plan.counts_after)}};

    try {
      qreuse::OracleResult oracle =
          qreuse::min_width_oracle(circuit, {.node_budget = args.budget});
      row["oracle_width"] = oracle.min_width;
    } catch (const std::exception& e) {
      row["oracle_width"] = nullptr;
      row["oracle_skipped"] = e.what();
    }
    try {
      qreuse::EquivalenceReport rep =
          qreuse::check_equivalence(circuit, plan.resized, args.tolerance);
      row["tvd"] = rep.tvd;
      row["equivalent"] = rep.equivalent;
    } catch (const std::exception& e) {
      row["tvd"] = nullptr;
      row["check_skipped"] = e.what();
    }
  } catch (const std::exception& e) {
    row["error"] = e.what();
  }
  return row;
}

std::string bench_csv(const json& rows) {
  std::ostringstream out;
  out << "file,qubits,width,resizable,total_gates,cnot_count,measure_count,"
         "resets_added,oracle_width,tvd,error\n";
  auto cell = [](const json& row, const char* key) -> std::string {
    if (!row.contains(key) || row[key].is_null()) return "";
    const json& v = row[key];
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      for (char& ch : s)
        if (ch == ',' || ch == '\n') ch = ' ';
      return s;
    }
    return v.dump();
  };
  for (const json& row : rows) {
    out << cell(row, "file") << ',' << cell(row, "qubits") << ','
        << cell(row, "width") << ',' << cell(row, "resizable") << ',';
    if (row.contains("gate_counts"))
      out << row["gate_counts"]["before"]["total_gates"].dump();
    out << ',';
    if (row.contains("gate_counts"))
      out << row["gate_counts"]["before"]["cnot_count"].dump();
    out << ',';
    if (row.contains("gate_counts"))
      out << row["gate_counts"]["before"]["measure_count"].dump();
    out << ',' << cell(row, "resets_added") << ',' << cell(row, "oracle_width")
        << ',' << cell(row, "tvd") << ',' << cell(row, "error") << '\n';
  }
  return out.str();
}

int run_bench(const BenchArgs& args) {
  const auto started = Clock::now();
  if (!fs::is_directory(args.dir))
    throw std::runtime_error("'" + args.dir + "' is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.dir))
    if (entry.is_regular_file() && entry.path().extension() == ".qasm")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  json rows = json::array();
  for (const fs::path& f : files) rows.push_back(bench_row(f, args));
  json doc = {{"corpus", args.dir}, {"rows", rows}};
  const std::string text = doc.dump(2) + "\n";

  std::vector<std::string> inputs;
  for (const fs::path& f : files) inputs.push_back(f.string());
  std::vector<std::string> outputs;
  if (args.output.empty()) {
    std::cout << text;
  } else {
    write_file(args.output, text);
    outputs.push_back(args.output);
  }
  if (!args.csv.empty()) {
    write_file(args.csv, bench_csv(rows));
    outputs.push_back(args.csv);
  }
  write_manifest("bench", inputs, outputs, {}, started);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qreuse: rewrite quantum circuits onto fewer qubit slots via "
               "mid-circuit measurement and reset"};
  app.require_subcommand(1);

  ResizeArgs resize_args;
  auto* resize_cmd =
      app.add_subcommand("resize", "Rewrite a circuit onto minimal slots");
  resize_cmd->add_option("-i,--input", resize_args.input, "input .qasm")
      ->required();
  resize_cmd->add_option("-o,--output", resize_args.output,
                         "output .qasm (stdout when omitted)");
  resize_cmd->add_option("--report", resize_args.report,
                         "plan report path (default <output>.report.json)");
  resize_cmd->add_option("--deps", resize_args.deps,
                         "JSON dependency-table override");
  resize_cmd->add_option("--max-width", resize_args.max_width,
                         "exit 3 if the result needs more slots than this");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand(
      "check", "Compare the outcome distributions of two circuits");
  check_cmd->add_option("-a", check_args.a, "first .qasm")->required();
  check_cmd->add_option("-b", check_args.b, "second .qasm")->required();
  check_cmd->add_option("--tolerance", check_args.tolerance, "TVD tolerance");
  check_cmd->add_option("--report", check_args.report, "report path");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exact minimum width by exhaustive schedule search");
  oracle_cmd->add_option("-i,--input", oracle_args.input, "input .qasm")
      ->required();
  oracle_cmd->add_option("--budget", oracle_args.budget,
                         "search-node budget (lifts the 24-instruction guard)");
  oracle_cmd->add_option("--report", oracle_args.report, "report path");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark circuit");
  gen_cmd->add_option("family", gen_args.family,
                      "bv|ghz|cat|entblock|random|scaling")
      ->required();
  gen_cmd->add_option("--secret", gen_args.secret, "bv secret bitstring");
  gen_cmd->add_option("-n", gen_args.n, "qubit count");
  gen_cmd->add_option("-m", gen_args.m, "instruction count");
  gen_cmd->add_option("--seed", gen_args.seed, "random seed");
  gen_cmd->add_option("--fraction", gen_args.fraction, "two-qubit fraction");
  gen_cmd->add_option("-o,--output", gen_args.output,
                      "output .qasm (stdout when omitted)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Resize every .qasm in a directory and tabulate results");
  bench_cmd->add_option("--dir", bench_args.dir, "corpus directory")
      ->required();
  bench_cmd->add_option("-o,--output", bench_args.output,
                        "JSON table path (stdout when omitted)");
  bench_cmd->add_option("--csv", bench_args.csv, "also write a CSV table");
  bench_cmd->add_option("--budget", bench_args.budget, "oracle node budget");
  bench_cmd->add_option("--tolerance", bench_args.tolerance, "TVD tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (resize_cmd->parsed()) return run_resize(resize_args);
    if (check_cmd->parsed()) return run_check(check_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (!msg.empty() && msg.back() == '\n') msg.pop_back();
    std::cerr << "error: " << msg << "\n";
    return kExitError;
  }
  return kExitError;
}
