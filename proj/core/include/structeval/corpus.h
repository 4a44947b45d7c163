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


#ifndef STRUCTEVAL_CORPUS_H_
#define STRUCTEVAL_CORPUS_H_

// Corpus ingestion, batch evaluation and report emission.

#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "structeval/latent.h"
#include "structeval/report.h"
#include "structeval/schema.h"
#include "structeval/sim.h"
#include "structeval/zoo/config.h"

namespace structeval {

using Json = nlohmann::ordered_json;

struct Document {
  std::string doc_id;
  Json payload;
  int line = 0;
};

// JSON Lines with one {"doc_id", "payload"} object per line. Blank lines are
// skipped. Throws DataError naming the line on malformed input, empty or
// duplicate ids.
std::vector<Document> ParseCorpus(std::istream& in, const std::string& name);
std::vector<Document> LoadCorpus(const std::string& path);

struct DocPair {
  std::string doc_id;
  const Json* pred = nullptr;
  const Json* gold = nullptr;
};

// Pairs documents in gold order. Throws DataError listing the ids present on
// only one side.
std::vector<DocPair> JoinCorpora(const std::vector<Document>& pred,
                                 const std::vector<Document>& gold);

enum class ReportFormat { kJson, kTsv };
ReportFormat ParseReportFormat(std::string_view name);

struct RunConfig {
  std::string schema_path;           // exclusive with `metrics`
  std::vector<std::string> metrics;  // zoo metric names
  std::string pred_path;
  std::string gold_path;
  std::string config_path;               // optional dataset config
  std::vector<Normalizer> report;        // empty: the metric's default
  std::optional<Aggregation> aggregation;  // unset: the metric's default
  SolverMode solver = SolverMode::kExact;
  std::uint64_t seed = 0;
  std::size_t node_limit = kDefaultNodeLimit;
  ReportFormat format = ReportFormat::kJson;
  int jobs = 1;
};

// One metric ready to run on payloads.
struct Evaluator {
  std::string name;
  std::vector<Normalizer> report;
  Aggregation aggregation = Aggregation::kMicro;
  std::function<MetricCounts(const Json& pred, const Json& gold,
                             EvalContext ctx)>
      evaluate;
};

// Shared state of a run: the dataset config and compiled evaluators.
class EvalSession {
 public:
  // Throws ConfigError for an invalid combination of options or unknown
  // metric names, SchemaError for a bad schema.
  explicit EvalSession(const RunConfig& cfg);

  const std::vector<Evaluator>& evaluators() const { return evaluators_; }

  // Evaluates every pair, running up to cfg.jobs documents concurrently.
  // The result is indexed [doc][metric].
  std::vector<std::vector<MetricCounts>> EvaluateAll(
      const std::vector<DocPair>& docs) const;

  Json Report(const std::vector<DocPair>& docs,
              const std::vector<std::vector<MetricCounts>>& counts) const;
  std::string RenderTsv(const Json& report) const;

  Json Explain(const DocPair& doc) const;

 private:
  RunConfig cfg_;
  std::unique_ptr<zoo::DatasetConfig> config_;
  std::unique_ptr<DerivedMetric> derived_;
  std::vector<Evaluator> evaluators_;
};

// Corpus-level values: micro normalizes the summed counts, macro averages
// per-document values.
MetricValues Aggregate(const std::vector<MetricCounts>& docs, Aggregation a);

Json AlignmentToJson(const Alignment& a);

// Runs `eval` end to end and returns the rendered report text.
std::string RunEval(const RunConfig& cfg);
// Runs `explain` for one document.
std::string RunExplain(const RunConfig& cfg, const std::string& doc_id);

}  // namespace structeval

#endif  // STRUCTEVAL_CORPUS_H_
