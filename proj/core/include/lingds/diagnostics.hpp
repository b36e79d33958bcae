// Copyright 2026 The lingds Authors
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

#ifndef LINGDS_DIAGNOSTICS_H_
#define LINGDS_DIAGNOSTICS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lingds {

// Base class for fatal pipeline errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed XML input. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Unsatisfiable rewrite request (cyclic copies, dangling substitutions).
class NormalizeError : public Error {
 public:
  using Error::Error;
};

enum class Severity { kInfo, kWarning, kError };

const char* SeverityName(Severity severity);

// One finding. The rule id is a stable machine-readable key; the path
// locates the offending element ("" for document-level findings).
struct Diagnostic {
  Severity severity = Severity::kInfo;
  std::string rule;
  std::string path;
  std::string message;

  std::string ToString() const;
  bool operator==(const Diagnostic&) const = default;
};

// Accumulates findings across a pipeline run. Also serves as the
// validation report type: validation violations are kError entries.
class Diagnostics {
 public:
  void Add(Severity severity, std::string rule, std::string path,
           std::string message);
  void Info(std::string rule, std::string path, std::string message);
  void Warning(std::string rule, std::string path, std::string message);
  void Violation(std::string rule, std::string path, std::string message);

  const std::vector<Diagnostic>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t CountAtLeast(Severity severity) const;
  std::size_t CountRule(const std::string& rule) const;
  bool HasErrors() const { return CountAtLeast(Severity::kError) > 0; }
  bool HasWarnings() const { return CountAtLeast(Severity::kWarning) > 0; }

 private:
  std::vector<Diagnostic> entries_;
};

}  // namespace lingds

#endif  // LINGDS_DIAGNOSTICS_H_
