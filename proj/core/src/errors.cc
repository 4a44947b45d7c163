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

#include "structeval/errors.h"

#include <utility>

namespace structeval {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kData: return "data";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kInvalidComparison: return "invalid-comparison";
    case ErrorKind::kPrecondition: return "precondition";
  }
  return "unknown";
}

namespace {

std::string Decorate(const std::string& message, const std::string& path) {
  if (path.empty()) return message;
  return path + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(Decorate(message, path)),
      kind_(kind),
      path_(std::move(path)),
      message_(message) {}

}  // namespace structeval
