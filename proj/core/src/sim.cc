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

#include "structeval/sim.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace structeval {

Normalizer ParseNormalizer(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (s == "P" || s == "PRECISION") return Normalizer::kPrecision;
  if (s == "R" || s == "RECALL") return Normalizer::kRecall;
  if (s == "F" || s == "F1" || s == "DICE") return Normalizer::kF;
  if (s == "J" || s == "JACCARD") return Normalizer::kJaccard;
  throw ConfigError("unknown normalizer '" + std::string(name) + "'");
}

const char* NormalizerName(Normalizer n) {
  switch (n) {
    case Normalizer::kPrecision: return "P";
    case Normalizer::kRecall: return "R";
    case Normalizer::kF: return "F";
    case Normalizer::kJaccard: return "J";
  }
  return "?";
}

double PrecisionOf(double numerator, double pred_total, double gold_total) {
  if (pred_total == 0.0) return gold_total == 0.0 ? 1.0 : 0.0;
  return numerator / pred_total;
}

double RecallOf(double numerator, double pred_total, double gold_total) {
  if (gold_total == 0.0) return pred_total == 0.0 ? 1.0 : 0.0;
  return numerator / gold_total;
}

double HarmonicMean(double p, double r, bool both_empty) {
  if (both_empty) return 1.0;
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

SimScore Normalize(Normalizer n, const OverlapTriple& t) {
  const bool both_empty = t.sigma_pp == 0.0 && t.sigma_rr == 0.0;
  switch (n) {
    case Normalizer::kPrecision:
      return {PrecisionOf(t.sigma_pr, t.sigma_pp, t.sigma_rr), true};
    case Normalizer::kRecall:
      return {RecallOf(t.sigma_pr, t.sigma_pp, t.sigma_rr), true};
    case Normalizer::kF:
      return {HarmonicMean(PrecisionOf(t.sigma_pr, t.sigma_pp, t.sigma_rr),
                           RecallOf(t.sigma_pr, t.sigma_pp, t.sigma_rr),
                           both_empty),
              true};
    case Normalizer::kJaccard: {
      if (both_empty) return {1.0, true};
      double den = t.sigma_pp + t.sigma_rr - t.sigma_pr;
      return {den > 0.0 ? t.sigma_pr / den : 0.0, true};
    }
  }
  return {0.0, true};
}

const char* AtomKindName(Atom::Kind kind) {
  switch (kind) {
    case Atom::Kind::kBool: return "bool";
    case Atom::Kind::kInt: return "int";
    case Atom::Kind::kReal: return "real";
    case Atom::Kind::kString: return "string";
    case Atom::Kind::kTag: return "label";
    case Atom::Kind::kTuple: return "tuple";
  }
  return "?";
}

std::string Atom::ToString() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, bool>) {
          os << (v ? "true" : "false");
        } else if constexpr (std::is_same_v<V, EnumTag>) {
          os << v.label;
        } else if constexpr (std::is_same_v<V, Tuple>) {
          os << '(';
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) os << ", ";
            os << v[i].ToString();
          }
          os << ')';
        } else {
          os << v;
        }
      },
      data_);
  return os.str();
}

namespace {

void CheckSameKind(const Atom& x, const Atom& y) {
  if (x.kind() != y.kind()) {
    throw InvalidComparison(std::string("cannot compare ") +
                            AtomKindName(x.kind()) + " with " +
                            AtomKindName(y.kind()));
  }
  if (x.kind() == Atom::Kind::kTuple) {
    const auto& a = std::get<Atom::Tuple>(x.data());
    const auto& b = std::get<Atom::Tuple>(y.data());
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      CheckSameKind(a[i], b[i]);
    }
  }
}

}  // namespace

SimScore DiscreteSim(const Atom& x, const Atom& y) {
  CheckSameKind(x, y);
  return {x == y ? 1.0 : 0.0, true};
}

void CheckCutoff(double cutoff) {
  if (!(cutoff >= 0.0 && cutoff <= 1.0)) {
    throw ConfigError("threshold cutoff must lie in [0, 1]");
  }
}

SimScore ThresholdSim(SimScore inner, double cutoff, bool strict) {
  CheckCutoff(cutoff);
  if (!inner.normalized) {
    throw ConfigError("threshold requires a normalized inner similarity");
  }
  bool pass = strict ? inner.value > cutoff : inner.value >= cutoff;
  return {pass ? 1.0 : 0.0, true};
}

}  // namespace structeval
