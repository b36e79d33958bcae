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
//
// Structural tree equivalence for annotated documents. Two trees are
// equivalent when their element structure, word tokens, attributes, and
// reference topology agree; element ids and explicit synthesis markings
// are ignored so that expanded material with fresh ids can be compared
// against hand-written long forms. Local references must point at
// corresponding elements; non-local terms must resolve to the same URI.

#ifndef LINGDS_TESTS_SUPPORT_TREECMP_HPP_
#define LINGDS_TESTS_SUPPORT_TREECMP_HPP_

#include <string>

#include "lingds/document.hpp"

namespace lingds::test {

struct TreeCompareOptions {
  // Keep punctuation-only tokens and attached punctuation. The default
  // drops them so that word-level paraphrases of the same structure
  // compare equal regardless of comma and period placement.
  bool keep_punctuation = false;
};

struct TreeDiff {
  bool equal = false;
  std::string message;  // first mismatch, empty when equal
  explicit operator bool() const { return equal; }
};

TreeDiff CompareTrees(const LingElement& a, const LingElement& b,
                      const TreeCompareOptions& opts = {});

TreeDiff CompareDocs(const Document& a, const Document& b,
                     const TreeCompareOptions& opts = {});

}  // namespace lingds::test

#endif  // LINGDS_TESTS_SUPPORT_TREECMP_HPP_
