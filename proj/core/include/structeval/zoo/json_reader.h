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


#ifndef STRUCTEVAL_ZOO_JSON_READER_H_
#define STRUCTEVAL_ZOO_JSON_READER_H_

// Path-aware accessors for reading payload JSON. Every failure is a
// DataError carrying the JSON path of the offending value.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "structeval/sim.h"

namespace structeval::zoo {

using Json = nlohmann::ordered_json;

class JsonCursor {
 public:
  JsonCursor(const Json& value, std::string path)
      : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }

  JsonCursor Key(const std::string& key) const;
  // Null cursor when the key is absent.
  bool Has(const std::string& key) const;
  JsonCursor At(std::size_t i) const;
  std::size_t Size() const;  // requires an array

  void RequireArray() const;
  void RequireObject() const;
  std::string String() const;
  std::int64_t Int() const;
  double Real() const;
  bool Bool() const;
  // Scalars map to atoms; arrays of scalars map to tuples.
  Atom ToAtom() const;

  [[noreturn]] void Fail(const std::string& message) const;

 private:
  const Json* value_;
  std::string path_;
};

const char* JsonTypeName(const Json& j);

}  // namespace structeval::zoo

#endif  // STRUCTEVAL_ZOO_JSON_READER_H_
