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

#ifndef STRUCTEVAL_ERRORS_H_
#define STRUCTEVAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace structeval {

// Broad failure classes. The CLI maps these onto exit codes, so every
// exception thrown by the library derives from Error.
enum class ErrorKind {
  kSchema,             // malformed or inconsistent schema / similarity spec
  kData,               // input document does not match the expected shape
  kConfig,             // invalid option or dataset configuration
  kResource,           // solver or size limit exceeded
  kInvalidComparison,  // primitive values of different kinds compared
  kPrecondition,       // caller violated a documented precondition
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = "");

  ErrorKind kind() const { return kind_; }
  // Location of the failure: a JSON path ("$.types.Entity.element") or a
  // "file:line" reference. Empty when not applicable.
  const std::string& path() const { return path_; }
  // The message without the path prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string path_;
  std::string message_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message, std::string path = "")
      : Error(ErrorKind::kSchema, message, std::move(path)) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& message, std::string path = "")
      : Error(ErrorKind::kData, message, std::move(path)) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, std::string path = "")
      : Error(ErrorKind::kConfig, message, std::move(path)) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

class InvalidComparison : public Error {
 public:
  explicit InvalidComparison(const std::string& message)
      : Error(ErrorKind::kInvalidComparison, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::kPrecondition, message) {}
};

}  // namespace structeval

#endif  // STRUCTEVAL_ERRORS_H_
