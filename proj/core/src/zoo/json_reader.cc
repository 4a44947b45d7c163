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


#include "structeval/zoo/json_reader.h"

#include "structeval/errors.h"

namespace structeval::zoo {

const char* JsonTypeName(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return "null";
    case Json::value_t::object:
      return "object";
    case Json::value_t::array:
      return "array";
    case Json::value_t::string:
      return "string";
    case Json::value_t::boolean:
      return "boolean";
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return "integer";
    case Json::value_t::number_float:
      return "number";
    default:
      return "value";
  }
}

void JsonCursor::Fail(const std::string& message) const {
  throw DataError(message, path_);
}

void JsonCursor::RequireArray() const {
  if (!value_->is_array()) {
    Fail(std::string("expected array, got ") + JsonTypeName(*value_));
  }
}

void JsonCursor::RequireObject() const {
  if (!value_->is_object()) {
    Fail(std::string("expected object, got ") + JsonTypeName(*value_));
  }
}

bool JsonCursor::Has(const std::string& key) const {
  return value_->is_object() && value_->contains(key);
}

JsonCursor JsonCursor::Key(const std::string& key) const {
  RequireObject();
  auto it = value_->find(key);
  if (it == value_->end()) Fail("missing field '" + key + "'");
  return JsonCursor(*it, path_ + "." + key);
}

JsonCursor JsonCursor::At(std::size_t i) const {
  RequireArray();
  return JsonCursor((*value_)[i], path_ + "[" + std::to_string(i) + "]");
}

std::size_t JsonCursor::Size() const {
  RequireArray();
  return value_->size();
}

std::string JsonCursor::String() const {
  if (!value_->is_string()) {
    Fail(std::string("expected string, got ") + JsonTypeName(*value_));
  }
  return value_->get<std::string>();
}

std::int64_t JsonCursor::Int() const {
  if (!value_->is_number_integer()) {
    Fail(std::string("expected integer, got ") + JsonTypeName(*value_));
  }
  return value_->get<std::int64_t>();
}

double JsonCursor::Real() const {
  if (!value_->is_number()) {
    Fail(std::string("expected number, got ") + JsonTypeName(*value_));
  }
  return value_->get<double>();
}

bool JsonCursor::Bool() const {
  if (!value_->is_boolean()) {
    Fail(std::string("expected boolean, got ") + JsonTypeName(*value_));
  }
  return value_->get<bool>();
}

Atom JsonCursor::ToAtom() const {
  const Json& j = *value_;
  if (j.is_string()) return Atom(j.get<std::string>());
  if (j.is_boolean()) return Atom(j.get<bool>());
  if (j.is_number_integer()) return Atom(j.get<std::int64_t>());
  if (j.is_number_float()) return Atom(j.get<double>());
  if (j.is_array()) {
    Atom::Tuple t;
    for (std::size_t i = 0; i < j.size(); ++i) {
      JsonCursor c = At(i);
      if (c.json().is_array() || c.json().is_object() || c.json().is_null()) {
        c.Fail("tuple components must be scalars");
      }
      t.push_back(c.ToAtom());
    }
    return Atom(std::move(t));
  }
  Fail(std::string("expected a primitive value, got ") + JsonTypeName(j));
}

}  // namespace structeval::zoo
