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

#ifndef STRUCTEVAL_SIM_H_
#define STRUCTEVAL_SIM_H_

// Similarity values, the discrete and product primitives, and the four
// overlap normalizers. Everything else in the library composes these.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "structeval/errors.h"

namespace structeval {

// Absolute tolerance used when comparing scores.
inline constexpr double kScoreTolerance = 1e-9;
// Weights at or below this are treated as zero when building witnesses.
inline constexpr double kZeroWeight = 1e-12;

struct SimScore {
  double value = 0.0;
  bool normalized = true;
};

enum class Normalizer { kPrecision, kRecall, kF, kJaccard };

// "P", "R", "F", "J" (case-insensitive; long names also accepted).
Normalizer ParseNormalizer(std::string_view name);
const char* NormalizerName(Normalizer n);
inline constexpr Normalizer kAllNormalizers[] = {
    Normalizer::kPrecision, Normalizer::kRecall, Normalizer::kF,
    Normalizer::kJaccard};

// Sigma(P,R), Sigma(P,P), Sigma(R,R).
struct OverlapTriple {
  double sigma_pr = 0.0;
  double sigma_pp = 0.0;
  double sigma_rr = 0.0;

  OverlapTriple& operator+=(const OverlapTriple& o) {
    sigma_pr += o.sigma_pr;
    sigma_pp += o.sigma_pp;
    sigma_rr += o.sigma_rr;
    return *this;
  }
};

// Degenerate denominators never fail: both sides empty scores 1, one side
// empty scores 0 on the ratio whose denominator vanished.
SimScore Normalize(Normalizer n, const OverlapTriple& t);

double PrecisionOf(double numerator, double pred_total, double gold_total);
double RecallOf(double numerator, double pred_total, double gold_total);
double HarmonicMean(double p, double r, bool both_empty);

// --- discrete similarity -----------------------------------------------------

struct EnumTag {
  std::string label;
  bool operator==(const EnumTag&) const = default;
  auto operator<=>(const EnumTag&) const = default;
};

// A primitive comparable value: integer, real, boolean, string, enum tag or
// a tuple of those.
class Atom {
 public:
  using Tuple = std::vector<Atom>;
  enum class Kind { kBool, kInt, kReal, kString, kTag, kTuple };

  Atom() : data_(std::int64_t{0}) {}
  Atom(bool b) : data_(b) {}                       // NOLINT
  Atom(int i) : data_(std::int64_t{i}) {}          // NOLINT
  Atom(std::int64_t i) : data_(i) {}               // NOLINT
  Atom(double d) : data_(d) {}                     // NOLINT
  Atom(std::string s) : data_(std::move(s)) {}     // NOLINT
  Atom(const char* s) : data_(std::string(s)) {}   // NOLINT
  Atom(EnumTag t) : data_(std::move(t)) {}         // NOLINT
  Atom(Tuple t) : data_(std::move(t)) {}           // NOLINT

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  const std::variant<bool, std::int64_t, double, std::string, EnumTag, Tuple>&
  data() const {
    return data_;
  }

  bool operator==(const Atom& o) const { return data_ == o.data_; }
  bool operator<(const Atom& o) const { return data_ < o.data_; }

  std::string ToString() const;

 private:
  std::variant<bool, std::int64_t, double, std::string, EnumTag, Tuple> data_;
};

const char* AtomKindName(Atom::Kind kind);

// Kronecker delta on primitives. Throws InvalidComparison when the kinds
// differ (recursively for tuples of equal length).
SimScore DiscreteSim(const Atom& x, const Atom& y);

// Indicator [inner > cutoff] (strict) or [inner >= cutoff].
SimScore ThresholdSim(SimScore inner, double cutoff, bool strict);
void CheckCutoff(double cutoff);

// --- witnesses ---------------------------------------------------------------

// One level of a witness matching: which predicted items were aligned to
// which reference items, plus the alignments chosen inside each pair.
struct Alignment {
  struct Pair {
    int pred = 0;
    int gold = 0;
    double weight = 0.0;
    std::vector<Alignment> nested;
  };
  std::string level;
  double score = 0.0;
  std::vector<Pair> pairs;
  // Latent variable alignment (pred name, gold name), when the level had one.
  std::vector<std::pair<std::string, std::string>> variables;
  bool exact = true;
};

// Threaded through similarity evaluation. Both members are optional.
struct EvalContext {
  // When set, matching nodes append their witness here.
  std::vector<Alignment>* sink = nullptr;
  // Cleared when a heuristic (non-exact) solver produced part of the value.
  bool* exact = nullptr;

  EvalContext Quiet() const { return EvalContext{nullptr, exact}; }
  void MarkInexact() const {
    if (exact != nullptr) *exact = false;
  }
};

// --- composable similarities -------------------------------------------------

// A type-erased similarity over T. `normalized` is a static property of the
// composition: a normalized similarity always returns values in [0, 1].
template <typename T>
class Similarity {
 public:
  using Fn = std::function<double(const T&, const T&, EvalContext)>;

  Similarity() = default;
  Similarity(Fn fn, bool normalized)
      : fn_(std::move(fn)), normalized_(normalized) {}

  double Value(const T& a, const T& b, EvalContext ctx = {}) const {
    return fn_(a, b, ctx);
  }
  SimScore operator()(const T& a, const T& b) const {
    return SimScore{fn_(a, b, {}), normalized_};
  }
  bool normalized() const { return normalized_; }
  bool valid() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
  bool normalized_ = true;
};

template <typename T>
Similarity<T> Discrete() {
  return Similarity<T>(
      [](const T& a, const T& b, EvalContext) { return a == b ? 1.0 : 0.0; },
      true);
}

template <>
inline Similarity<Atom> Discrete<Atom>() {
  return Similarity<Atom>(
      [](const Atom& a, const Atom& b, EvalContext) {
        return DiscreteSim(a, b).value;
      },
      true);
}

// Lifts a similarity over a field into a similarity over the record.
template <typename R, typename F, typename Get>
Similarity<R> Project(Get get, Similarity<F> inner) {
  bool normalized = inner.normalized();
  return Similarity<R>(
      [get = std::move(get), inner = std::move(inner)](
          const R& a, const R& b, EvalContext ctx) {
        return inner.Value(get(a), get(b), ctx);
      },
      normalized);
}

template <typename R, typename F>
Similarity<R> Field(F R::*member, Similarity<F> inner) {
  return Project<R, F>([member](const R& r) -> const F& { return r.*member; },
                       std::move(inner));
}

// Componentwise product; normalized iff every component is.
template <typename R>
Similarity<R> Product(std::vector<Similarity<R>> parts) {
  bool normalized = true;
  for (const auto& p : parts) normalized = normalized && p.normalized();
  return Similarity<R>(
      [parts = std::move(parts)](const R& a, const R& b, EvalContext ctx) {
        double v = 1.0;
        for (const auto& p : parts) {
          v *= p.Value(a, b, ctx);
          if (v == 0.0) break;
        }
        return v;
      },
      normalized);
}

template <typename R>
Similarity<R> Product(std::initializer_list<Similarity<R>> parts) {
  return Product<R>(std::vector<Similarity<R>>(parts));
}

template <typename T>
Similarity<T> Threshold(Similarity<T> inner, double cutoff, bool strict) {
  CheckCutoff(cutoff);
  if (!inner.normalized()) {
    throw ConfigError("threshold requires a normalized inner similarity");
  }
  return Similarity<T>(
      [inner = std::move(inner), cutoff, strict](const T& a, const T& b,
                                                 EvalContext ctx) {
        return ThresholdSim(SimScore{inner.Value(a, b, ctx), true}, cutoff,
                            strict)
            .value;
      },
      true);
}

// product_sim: evaluates each (accessor, similarity) component on the pair
// and multiplies the results.
template <typename R>
SimScore ProductSim(std::span<const Similarity<R>> components, const R& a,
                    const R& b) {
  SimScore out{1.0, true};
  for (const auto& c : components) {
    out.value *= c.Value(a, b);
    out.normalized = out.normalized && c.normalized();
  }
  return out;
}

}  // namespace structeval

#endif  // STRUCTEVAL_SIM_H_
