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


#ifndef STRUCTEVAL_TESTS_GENERATORS_H_
#define STRUCTEVAL_TESTS_GENERATORS_H_

// Random payload generators shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gen {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

inline int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& v) {
  return v[Uniform(rng, 0, static_cast<int>(v.size()) - 1)];
}

inline Json Mention(Rng& rng, int max_left = 3) {
  int left = Uniform(rng, 0, max_left);
  return {{"left", left}, {"right", left + Uniform(rng, 0, 1)}};
}

inline Json Relations(Rng& rng) {
  Json out = Json::array();
  int n = Uniform(rng, 0, 4);
  for (int i = 0; i < n; ++i) {
    out.push_back({{"type", Pick(rng, std::vector<std::string>{"WorkFor", "LiveIn"})},
                   {"subj", Mention(rng, 2)},
                   {"obj", Mention(rng, 2)}});
  }
  return out;
}

inline Json Edges(Rng& rng) {
  Json out = Json::array();
  int n = Uniform(rng, 0, 5);
  for (int i = 0; i < n; ++i) {
    out.push_back({{"gov", Uniform(rng, 0, 3)},
                   {"dep", Uniform(rng, 1, 4)},
                   {"rel", Pick(rng, std::vector<std::string>{"nsubj", "obj"})}});
  }
  return out;
}

inline Json Events(Rng& rng) {
  Json out = Json::array();
  int n = Uniform(rng, 0, 3);
  for (int i = 0; i < n; ++i) {
    Json args = Json::array();
    int k = Uniform(rng, 0, 3);
    for (int a = 0; a < k; ++a) {
      args.push_back({{"mention", Mention(rng, 2)},
                      {"role", Pick(rng, std::vector<std::string>{"agent", "place"})}});
    }
    out.push_back(
        {{"trig",
          {{"mention", Mention(rng, 2)},
           {"type", Pick(rng, std::vector<std::string>{"Attack", "Move"})}}},
         {"args", args}});
  }
  return out;
}

// A partition of a random subset of {m0..m<pool-1>}.
inline std::vector<std::vector<std::string>> Clusters(Rng& rng, int pool = 7) {
  std::vector<std::string> ms;
  for (int i = 0; i < pool; ++i) {
    if (Uniform(rng, 0, 3) > 0) ms.push_back("m" + std::to_string(i));
  }
  std::shuffle(ms.begin(), ms.end(), rng);
  std::vector<std::vector<std::string>> out;
  for (const auto& m : ms) {
    if (out.empty() || Uniform(rng, 0, 2) == 0) {
      out.push_back({m});
    } else {
      out[Uniform(rng, 0, static_cast<int>(out.size()) - 1)].push_back(m);
    }
  }
  return out;
}

inline Json ClustersJson(const std::vector<std::vector<std::string>>& c) {
  Json out = Json::array();
  for (const auto& k : c) out.push_back(k);
  return out;
}

// Role fillers with 1..3 distinct mentions each. With `singleton`, every
// filler holds exactly one mention.
inline Json RoleFillers(Rng& rng, bool singleton = false) {
  Json out = Json::array();
  int n = Uniform(rng, 0, 4);
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> pool = {"a", "b", "c", "d"};
    std::shuffle(pool.begin(), pool.end(), rng);
    int k = singleton ? 1 : Uniform(rng, 1, 3);
    Json entity = Json::array();
    for (int j = 0; j < k; ++j) entity.push_back(pool[j]);
    out.push_back({{"role", Pick(rng, std::vector<std::string>{"perp", "victim"})},
                   {"entity", entity}});
  }
  return out;
}

// Random AMR propositions over variables named `prefix`0.. with an instance
// proposition per variable and a few relational ones.
inline Json Amr(Rng& rng, const std::string& prefix = "x", int max_vars = 3) {
  Json out = Json::array();
  int vars = Uniform(rng, 1, max_vars);
  std::vector<std::string> concepts = {"dog", "cat", "run"};
  for (int v = 0; v < vars; ++v) {
    out.push_back({{"rel", "instance"},
                   {"subj", prefix + std::to_string(v)},
                   {"obj", {{"concept", Pick(rng, concepts)}}}});
  }
  int rels = Uniform(rng, 0, 3);
  for (int i = 0; i < rels; ++i) {
    std::string s = prefix + std::to_string(Uniform(rng, 0, vars - 1));
    if (Uniform(rng, 0, 3) == 0) {
      out.push_back({{"rel", "polarity"},
                     {"subj", s},
                     {"obj", {{"concept", "-"}}}});
    } else {
      out.push_back({{"rel", Pick(rng, std::vector<std::string>{"ARG0", "ARG1"})},
                     {"subj", s},
                     {"obj", {{"var", prefix + std::to_string(Uniform(rng, 0, vars - 1))}}}});
    }
  }
  return out;
}

// Renames variables by a random permutation and shuffles the propositions.
inline Json RenameAmr(Rng& rng, const Json& amr, const std::string& prefix) {
  std::vector<std::string> names;
  auto collect = [&](const std::string& s) {
    if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
  };
  for (const auto& p : amr) {
    collect(p["subj"].get<std::string>());
    if (p["obj"].contains("var")) collect(p["obj"]["var"].get<std::string>());
  }
  std::vector<int> perm(names.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto rename = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    return prefix + std::to_string(perm[it - names.begin()]);
  };
  Json out = Json::array();
  for (const auto& p : amr) {
    Json q = p;
    q["subj"] = rename(p["subj"].get<std::string>());
    if (p["obj"].contains("var")) q["obj"]["var"] = rename(p["obj"]["var"].get<std::string>());
    out.push_back(q);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// A pred/gold pair where gold is a perturbed copy of pred (so the two
// overlap often enough to exercise nontrivial matchings).
template <typename F>
std::pair<Json, Json> Pair(Rng& rng, F make) {
  Json gold = make(rng);
  Json pred = Uniform(rng, 0, 2) == 0 ? make(rng) : gold;
  if (pred.size() > 0 && Uniform(rng, 0, 1) == 0) {
    pred.erase(pred.begin() + Uniform(rng, 0, static_cast<int>(pred.size()) - 1));
  }
  Json extra = make(rng);
  for (const auto& e : extra) {
    if (Uniform(rng, 0, 2) == 0) pred.push_back(e);
  }
  return {pred, gold};
}

}  // namespace gen

#endif  // STRUCTEVAL_TESTS_GENERATORS_H_
