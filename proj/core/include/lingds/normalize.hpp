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
// Rewriting annotated descriptions back into explicit form: edit
// reconstruction (the annotator's cleanups undone) and ellipsis
// expansion (copy / substitute / noCopy rewrites applied, with fresh id
// renaming inside copied material).

#ifndef LINGDS_NORMALIZE_H_
#define LINGDS_NORMALIZE_H_

#include <set>
#include <string>
#include <vector>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds {

// One undone edit: at `offset_original` of the source text the original
// bytes `original` stood where the annotated tree carries `replacement`.
struct EditEntry {
  std::string path;  // edited element
  std::string original;
  std::string replacement;
  std::size_t offset_original = 0;
  std::size_t offset_annotated = 0;
  bool operator==(const EditEntry&) const = default;
};

struct EditLog {
  std::vector<EditEntry> entries;

  // Rebuilds the annotated text from the original text by replaying the
  // entries in reverse.
  std::string ApplyInverse(const std::string& original) const;
};

struct OriginalText {
  std::string text;
  EditLog log;
};

// Reconstructs the pre-edit source text: the content text of every
// edited element is replaced by its edit payload. Nested edits are
// shadowed by the outermost one.
OriginalText ReconstructOriginal(const Document& doc);

// One planned copy rewrite.
struct CopyPlan {
  const LingElement* copier = nullptr;
  std::vector<const LingElement*> sources;  // in attribute order
  bool implicit = false;  // recovered from substitute references
  std::vector<const LingElement*> excluded;   // noCopy targets
  // noCopy targets that are ancestors of the copier; these trigger the
  // out-of-line rewrite.
  std::vector<const LingElement*> ancestor_excluded;
};

// Collects copy rewrites. Explicit copy attributes always plan; under
// coordination-family synthesis a child without copy whose descendants
// substitute into exactly one sibling gets an implicit plan for that
// sibling. Cyclic copies and substitutions outside every source are
// NormalizeErrors.
std::vector<CopyPlan> PlanCopies(const Document& doc, Diagnostics& diags);

// Smallest fresh id: base + the smallest positive integer suffix not
// yet taken.
std::string FreshId(const std::string& base,
                    const std::set<std::string>& taken);

// Applies every copy plan outermost-first and returns the rewritten
// document. Guarantees, given the result R:
//   - R contains no copy, substitute, or noCopy attributes;
//   - ids minted inside copied material are fresh;
//   - Expand(R) is structurally equal to R.
Document Expand(const Document& doc, Diagnostics& diags);

}  // namespace lingds

#endif  // LINGDS_NORMALIZE_H_
