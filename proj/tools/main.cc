// Copyright 2026 The structeval Authors.
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


// Command-line front end: eval, explain, validate-schema, list-metrics.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "structeval/corpus.h"
#include "structeval/errors.h"
#include "structeval/schema.h"
#include "structeval/zoo/registry.h"

namespace {

using structeval::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitResource = 2;

struct Flags {
  std::string schema;
  std::vector<std::string> metrics;
  std::string pred;
  std::string gold;
  std::string config;
  std::vector<std::string> report;
  std::string aggregate;
  std::string solver = "exact";
  std::uint64_t seed = 0;
  std::size_t node_limit = structeval::kDefaultNodeLimit;
  std::string output;
  std::string format = "json";
  int jobs = 1;
};

void AddRunFlags(CLI::App* app, Flags& f) {
  app->add_option("--schema", f.schema, "Schema file describing the metric");
  app->add_option("--metric", f.metrics, "Builtin metric name (repeatable)");
  app->add_option("--pred", f.pred, "Predicted corpus (JSON Lines)")->required();
  app->add_option("--gold", f.gold, "Reference corpus (JSON Lines)")->required();
  app->add_option("--config", f.config, "Dataset configuration file");
  app->add_option("--report", f.report,
                  "Normalizers to report: P, R, F, J (repeatable)");
  app->add_option("--aggregate", f.aggregate, "micro or macro");
  app->add_option("--solver", f.solver, "exact or hillclimb");
  app->add_option("--seed", f.seed, "Seed for the hill-climbing solver");
  app->add_option("--node-limit", f.node_limit,
                  "Branch-and-bound node budget per solve");
  app->add_option("--output", f.output, "Write the report here");
  app->add_option("--format", f.format, "json or tsv");
  app->add_option("--jobs", f.jobs, "Documents evaluated concurrently");
}

structeval::RunConfig ToConfig(const Flags& f) {
  structeval::RunConfig c;
  c.schema_path = f.schema;
  c.metrics = f.metrics;
  c.pred_path = f.pred;
  c.gold_path = f.gold;
  c.config_path = f.config;
  for (const auto& r : f.report) {
    try {
      c.report.push_back(structeval::ParseNormalizer(r));
    } catch (const structeval::Error& e) {
      throw structeval::ConfigError(e.message(), "--report");
    }
  }
  if (!f.aggregate.empty()) {
    c.aggregation = structeval::ParseAggregation(f.aggregate);
  }
  c.solver = structeval::ParseSolverMode(f.solver);
  c.seed = f.seed;
  c.node_limit = f.node_limit;
  c.format = structeval::ParseReportFormat(f.format);
  c.jobs = f.jobs;
  return c;
}

void Emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw structeval::ConfigError("cannot write output file", output);
  out << text;
}

int ReportError(const char* kind, const std::string& message,
                const std::string& path, int code) {
  Json err;
  err["error"]["kind"] = kind;
  err["error"]["message"] = message;
  if (!path.empty()) err["error"]["path"] = path;
  err["exit_code"] = code;
  std::cerr << err.dump() << "\n";
  return code;
}

std::string ListMetrics(bool verbose) {
  std::string out;
  for (const auto& m : structeval::zoo::ZooMetrics()) {
    out += m.name + "\t" + m.summary + "\n";
    if (verbose) out += "    payload: " + m.payload + "\n";
  }
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Structured-prediction evaluation toolkit"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* eval = app.add_subcommand("eval", "Score a predicted corpus");
  AddRunFlags(eval, flags);

  std::string doc_id;
  CLI::App* explain =
      app.add_subcommand("explain", "Dump the alignments for one document");
  AddRunFlags(explain, flags);
  explain->add_option("--doc-id", doc_id, "Document to explain")->required();

  std::string schema_path;
  CLI::App* validate =
      app.add_subcommand("validate-schema", "Check a schema file");
  validate->add_option("schema", schema_path, "Schema file")->required();

  bool verbose = false;
  std::string list_output;
  CLI::App* list = app.add_subcommand("list-metrics", "List builtin metrics");
  list->add_flag("--verbose", verbose, "Describe payload shapes");
  list->add_option("--output", list_output, "Write the listing here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("usage", e.what(), "", kExitError);
  }

  try {
    if (*eval) {
      structeval::RunConfig cfg = ToConfig(flags);
      Emit(structeval::RunEval(cfg), flags.output);
    } else if (*explain) {
      structeval::RunConfig cfg = ToConfig(flags);
      Emit(structeval::RunExplain(cfg, doc_id), flags.output);
    } else if (*validate) {
      std::ifstream in(schema_path);
      if (!in) throw structeval::SchemaError("cannot open file", schema_path);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      structeval::Schema s = structeval::ParseSchema(text);
      Json ok;
      ok["valid"] = true;
      ok["types"] = s.types.size();
      ok["root"] = s.metric.root;
      std::cout << ok.dump() << "\n";
    } else if (*list) {
      Emit(ListMetrics(verbose), list_output);
    }
  } catch (const structeval::Error& e) {
    int code = e.kind() == structeval::ErrorKind::kResource ? kExitResource
                                                            : kExitError;
    return ReportError(structeval::ErrorKindName(e.kind()), e.message(), e.path(),
                       code);
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), "", kExitError);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return Run(argc, argv); }
