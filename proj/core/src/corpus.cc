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


#include "structeval/corpus.h"

#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "structeval/errors.h"
#include "structeval/zoo/registry.h"

namespace structeval {

// --- corpora -----------------------------------------------------------------

std::vector<Document> ParseCorpus(std::istream& in, const std::string& name) {
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string where = name + ":" + std::to_string(line);
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DataError("malformed JSON on line " + std::to_string(line) + ": " +
                          e.what(),
                      where);
    }
    if (!j.is_object()) {
      throw DataError("line " + std::to_string(line) + " is not an object",
                      where);
    }
    auto id = j.find("doc_id");
    if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
      throw DataError("line " + std::to_string(line) +
                          " needs a nonempty string 'doc_id'",
                      where);
    }
    auto payload = j.find("payload");
    if (payload == j.end()) {
      throw DataError("line " + std::to_string(line) + " has no 'payload'",
                      where);
    }
    Document d{id->get<std::string>(), std::move(*payload), line};
    if (!seen.insert(d.doc_id).second) {
      throw DataError("duplicate doc_id '" + d.doc_id + "' on line " +
                          std::to_string(line),
                      where);
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<Document> LoadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file", path);
  return ParseCorpus(in, path);
}

std::vector<DocPair> JoinCorpora(const std::vector<Document>& pred,
                                 const std::vector<Document>& gold) {
  std::map<std::string, const Document*> by_id;
  for (const auto& d : pred) by_id[d.doc_id] = &d;
  std::vector<DocPair> out;
  std::vector<std::string> missing_pred;
  std::set<std::string> gold_ids;
  for (const auto& g : gold) {
    gold_ids.insert(g.doc_id);
    auto it = by_id.find(g.doc_id);
    if (it == by_id.end()) {
      missing_pred.push_back(g.doc_id);
      continue;
    }
    out.push_back({g.doc_id, &it->second->payload, &g.payload});
  }
  std::vector<std::string> missing_gold;
  for (const auto& p : pred) {
    if (!gold_ids.count(p.doc_id)) missing_gold.push_back(p.doc_id);
  }
  if (!missing_pred.empty() || !missing_gold.empty()) {
    auto list = [](const std::vector<std::string>& ids) {
      std::string s;
      for (const auto& id : ids) s += (s.empty() ? "" : ", ") + id;
      return s;
    };
    std::string msg = "doc_id mismatch between pred and gold";
    if (!missing_pred.empty()) msg += "; missing from pred: " + list(missing_pred);
    if (!missing_gold.empty()) msg += "; missing from gold: " + list(missing_gold);
    throw DataError(msg);
  }
  return out;
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  throw ConfigError("unknown output format '" + std::string(name) +
                    "' (expected json or tsv)");
}

// --- aggregation -------------------------------------------------------------

MetricValues Aggregate(const std::vector<MetricCounts>& docs, Aggregation a) {
  if (docs.empty()) return ValuesOf(MetricCounts::Single({0.0, 0.0, 0.0}));
  if (a == Aggregation::kMicro) {
    MetricCounts total = docs.front();
    for (std::size_t i = 1; i < docs.size(); ++i) total += docs[i];
    return ValuesOf(total);
  }
  MetricValues sum;
  bool all_j = true;
  double j = 0.0;
  for (const auto& d : docs) {
    MetricValues v = ValuesOf(d);
    sum.p += v.p;
    sum.r += v.r;
    sum.f += v.f;
    if (v.j) {
      j += *v.j;
    } else {
      all_j = false;
    }
  }
  double n = static_cast<double>(docs.size());
  MetricValues out{sum.p / n, sum.r / n, sum.f / n, std::nullopt};
  if (all_j) out.j = j / n;
  return out;
}

// --- session -----------------------------------------------------------------

namespace {

std::vector<Normalizer> AllNormalizers() {
  return {Normalizer::kPrecision, Normalizer::kRecall, Normalizer::kF,
          Normalizer::kJaccard};
}

Json ReadJsonFile(const std::string& path, ErrorKind kind) {
  std::ifstream in(path);
  auto fail = [&](const std::string& m) -> Json {
    if (kind == ErrorKind::kSchema) throw SchemaError(m, path);
    throw ConfigError(m, path);
  };
  if (!in) return fail("cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    return fail(std::string("malformed JSON: ") + e.what());
  }
}

void PutValues(Json& j, const MetricValues& v,
               const std::vector<Normalizer>& report) {
  for (Normalizer n : report) {
    switch (n) {
      case Normalizer::kPrecision:
        j["P"] = v.p;
        break;
      case Normalizer::kRecall:
        j["R"] = v.r;
        break;
      case Normalizer::kF:
        j["F"] = v.f;
        break;
      case Normalizer::kJaccard:
        if (v.j) j["J"] = *v.j;
        break;
    }
  }
}

void PutCounts(Json& j, const MetricCounts& c) {
  if (c.factors.size() == 1 && c.factors[0].Symmetric()) {
    const Tally& t = c.factors[0];
    j["sigma_pr"] = t.matched_p;
    j["sigma_pp"] = t.pred;
    j["sigma_rr"] = t.gold;
    return;
  }
  Json fs = Json::array();
  for (const Tally& t : c.factors) {
    fs.push_back({{"matched_pred", t.matched_p},
                  {"matched_gold", t.matched_r},
                  {"pred", t.pred},
                  {"gold", t.gold}});
  }
  j["factors"] = fs;
}

std::string FormatNumber(double v) {
  return Json(v).dump();
}

}  // namespace

EvalSession::EvalSession(const RunConfig& cfg) : cfg_(cfg) {
  if (cfg.schema_path.empty() == cfg.metrics.empty()) {
    throw ConfigError("exactly one of --schema or --metric is required");
  }
  if (cfg.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (cfg.node_limit < 1) throw ConfigError("--node-limit must be positive");
  if (!cfg.config_path.empty()) {
    config_ = std::make_unique<zoo::DatasetConfig>(zoo::ParseDatasetConfig(
        ReadJsonFile(cfg.config_path, ErrorKind::kConfig)));
  }
  LatentOptions latent;
  latent.mode = cfg.solver;
  latent.seed = cfg.seed;
  latent.node_limit = cfg.node_limit;

  if (!cfg.schema_path.empty()) {
    Schema schema =
        ParseSchemaJson(ReadJsonFile(cfg.schema_path, ErrorKind::kSchema));
    DeriveOptions opts;
    opts.latent = latent;
    opts.graph.node_limit = cfg.node_limit;
    opts.config = config_.get();
    derived_ = std::make_unique<DerivedMetric>(std::move(schema), opts);
    const MetricDef& m = derived_->schema().metric;
    Evaluator e;
    e.name = m.name.empty() ? std::string("schema") : m.name;
    e.report = cfg.report.empty() ? m.report : cfg.report;
    e.aggregation = cfg.aggregation.value_or(m.aggregation);
    const DerivedMetric* d = derived_.get();
    e.evaluate = [d](const Json& p, const Json& g, EvalContext ctx) {
      return d->Evaluate(p, g, ctx);
    };
    evaluators_.push_back(std::move(e));
    return;
  }
  std::set<std::string> seen;
  for (const auto& name : cfg.metrics) {
    const zoo::ZooMetric* zm = zoo::FindZooMetric(name);
    if (zm == nullptr) {
      throw ConfigError("unknown metric '" + name +
                        "' (see list-metrics for the available names)");
    }
    if (!seen.insert(name).second) {
      throw ConfigError("metric '" + name + "' requested twice");
    }
    Evaluator e;
    e.name = name;
    e.report = cfg.report.empty() ? AllNormalizers() : cfg.report;
    e.aggregation = cfg.aggregation.value_or(Aggregation::kMicro);
    const zoo::DatasetConfig* dc = config_.get();
    e.evaluate = [zm, dc, latent](const Json& p, const Json& g,
                                  EvalContext ctx) {
      zoo::ZooContext zc{dc, latent};
      return zm->evaluate(zoo::JsonCursor(p, "$.pred"),
                          zoo::JsonCursor(g, "$.gold"), zc, ctx);
    };
    evaluators_.push_back(std::move(e));
  }
}

std::vector<std::vector<MetricCounts>> EvalSession::EvaluateAll(
    const std::vector<DocPair>& docs) const {
  std::vector<std::vector<MetricCounts>> out(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  auto run = [&](std::size_t i) {
    try {
      for (const auto& e : evaluators_) {
        bool exact = true;
        MetricCounts c = e.evaluate(*docs[i].pred, *docs[i].gold,
                                    EvalContext{nullptr, &exact});
        c.exact = c.exact && exact;
        out[i].push_back(std::move(c));
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(cfg_.jobs), docs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      run(i);
      if (errors[i]) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < docs.size(); i = next++) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  // Report the failure of the earliest document so errors are deterministic.
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const DataError& e) {
      std::string path = e.path().empty() ? "$" : e.path();
      throw DataError(e.message(), docs[i].doc_id + ":" + path);
    }
  }
  return out;
}

Json EvalSession::Report(
    const std::vector<DocPair>& docs,
    const std::vector<std::vector<MetricCounts>>& counts) const {
  Json report;
  report["documents"] = docs.size();
  bool all_exact = true;
  Json metrics = Json::object();
  for (std::size_t m = 0; m < evaluators_.size(); ++m) {
    const Evaluator& e = evaluators_[m];
    std::vector<MetricCounts> column;
    bool exact = true;
    for (const auto& row : counts) {
      column.push_back(row[m]);
      exact = exact && row[m].exact;
    }
    all_exact = all_exact && exact;
    Json mj;
    mj["aggregation"] = AggregationName(e.aggregation);
    PutValues(mj, Aggregate(column, e.aggregation), e.report);
    if (!column.empty()) {
      MetricCounts total = column.front();
      for (std::size_t i = 1; i < column.size(); ++i) total += column[i];
      PutCounts(mj, total);
    } else {
      PutCounts(mj, MetricCounts::Single({0.0, 0.0, 0.0}));
    }
    mj["solver_exact"] = exact;
    metrics[e.name] = mj;
  }
  report["solver_exact"] = all_exact;
  report["metrics"] = metrics;
  Json per_doc = Json::array();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Json dj;
    dj["doc_id"] = docs[i].doc_id;
    Json dm = Json::object();
    for (std::size_t m = 0; m < evaluators_.size(); ++m) {
      Json mj;
      PutValues(mj, ValuesOf(counts[i][m]), evaluators_[m].report);
      PutCounts(mj, counts[i][m]);
      mj["solver_exact"] = counts[i][m].exact;
      dm[evaluators_[m].name] = mj;
    }
    dj["metrics"] = dm;
    per_doc.push_back(dj);
  }
  report["per_doc"] = per_doc;
  return report;
}

std::string EvalSession::RenderTsv(const Json& report) const {
  std::ostringstream os;
  os << "metric\taggregation\tdocuments\tP\tR\tF\tJ\tsolver_exact\n";
  for (const auto& [name, m] : report["metrics"].items()) {
    os << name << '\t' << m["aggregation"].get<std::string>() << '\t'
       << report["documents"].get<std::size_t>();
    for (const char* key : {"P", "R", "F", "J"}) {
      os << '\t';
      if (m.contains(key)) os << FormatNumber(m[key].get<double>());
    }
    os << '\t' << (m["solver_exact"].get<bool>() ? "true" : "false") << '\n';
  }
  return os.str();
}

Json AlignmentToJson(const Alignment& a) {
  Json j;
  j["level"] = a.level;
  j["score"] = a.score;
  j["exact"] = a.exact;
  Json pairs = Json::array();
  for (const auto& p : a.pairs) {
    Json pj;
    pj["pred"] = p.pred;
    pj["gold"] = p.gold;
    pj["weight"] = p.weight;
    if (!p.nested.empty()) {
      Json nested = Json::array();
      for (const auto& n : p.nested) nested.push_back(AlignmentToJson(n));
      pj["nested"] = nested;
    }
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  if (!a.variables.empty()) {
    Json vars = Json::array();
    for (const auto& [x, y] : a.variables) vars.push_back(Json::array({x, y}));
    j["variables"] = vars;
  }
  return j;
}

Json EvalSession::Explain(const DocPair& doc) const {
  Json out;
  out["doc_id"] = doc.doc_id;
  Json metrics = Json::object();
  for (const auto& e : evaluators_) {
    std::vector<Alignment> sink;
    bool exact = true;
    MetricCounts c = e.evaluate(*doc.pred, *doc.gold, EvalContext{&sink, &exact});
    c.exact = c.exact && exact;
    Json mj;
    PutValues(mj, ValuesOf(c), e.report);
    PutCounts(mj, c);
    mj["solver_exact"] = c.exact;
    Json al = Json::array();
    for (const auto& a : sink) al.push_back(AlignmentToJson(a));
    mj["alignments"] = al;
    metrics[e.name] = mj;
  }
  out["metrics"] = metrics;
  return out;
}

std::string RunEval(const RunConfig& cfg) {
  EvalSession session(cfg);
  std::vector<Document> pred = LoadCorpus(cfg.pred_path);
  std::vector<Document> gold = LoadCorpus(cfg.gold_path);
  std::vector<DocPair> docs = JoinCorpora(pred, gold);
  Json report = session.Report(docs, session.EvaluateAll(docs));
  if (cfg.format == ReportFormat::kTsv) return session.RenderTsv(report);
  return report.dump(2) + "\n";
}

std::string RunExplain(const RunConfig& cfg, const std::string& doc_id) {
  EvalSession session(cfg);
  std::vector<Document> pred = LoadCorpus(cfg.pred_path);
  std::vector<Document> gold = LoadCorpus(cfg.gold_path);
  std::vector<DocPair> docs = JoinCorpora(pred, gold);
  for (const auto& d : docs) {
    if (d.doc_id == doc_id) return session.Explain(d).dump(2) + "\n";
  }
  throw DataError("unknown doc_id '" + doc_id + "'");
}

}  // namespace structeval
