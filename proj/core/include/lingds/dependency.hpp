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
// Governor resolution. Within each element the children (child elements
// and text tokens alike) form dependency candidates; the synthesis kind
// decides how governors are assigned. Phrasal nodes never govern.
// Ambiguity is first-class: unresolved groups carry candidate sets
// instead of arcs.

#ifndef LINGDS_DEPENDENCY_H_
#define LINGDS_DEPENDENCY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds {

// A whitespace-delimited token with its byte offset in the text run.
// Punctuation glued to a word stays attached.
struct Token {
  std::string text;
  int offset = 0;
  bool operator==(const Token&) const = default;
};

std::vector<Token> Tokenize(std::string_view text);

// A dependency node: a child element or a text token.
struct DepNode {
  const LingElement* element = nullptr;  // null for tokens
  const LingElement* owner = nullptr;    // token: the containing element
  int content_index = -1;                // token: content slot of its run
  int token_index = -1;                  // token: ordinal within the run
  std::string text;                      // token text
  int offset = -1;                       // token byte offset in the run

  bool IsToken() const { return element == nullptr; }
  // Tokens are potential governors; Phrase and Quotation elements are not.
  bool Phrasal() const;
  // "/0/1" for elements, "/0/1@2.0" for token 0 of the run at slot 2.
  std::string PathString() const;
  bool SameNode(const DepNode& other) const;
};

enum class Certainty { kResolved, kAmbiguous };

const char* CertaintyName(Certainty certainty);

struct DepArc {
  DepNode dependant;
  DepNode governor;
  Certainty certainty = Certainty::kResolved;
};

// Resolution result for the children of one element.
struct DepGroup {
  std::vector<DepNode> nodes;  // children in document order
  std::vector<DepArc> arcs;
  // Non-phrasal children when the governor choice stayed open.
  std::vector<DepNode> candidates;
  bool ambiguous = false;
  // Forward/backward group with no possible governor.
  bool unresolved_head = false;
  // Root of the internal forest when resolution succeeded.
  std::optional<DepNode> root;

  // Coordination-family groups.
  bool coordination = false;
  // The conjunction child, when one is designated; otherwise the parent
  // element itself plays the operator role.
  const LingElement* operator_child = nullptr;
  std::vector<const LingElement*> conjuncts;  // argument children in order
  // Children tagged as disfluent material (repair: all but the last
  // conjunct; error: every conjunct).
  std::vector<const LingElement*> erroneous;
};

class DependencyGraph {
 public:
  void SetGroup(const LingElement* parent, DepGroup group);
  const DepGroup* GroupOf(const LingElement* parent) const;

  void SetExtraposed(const LingElement* dependant, const LingElement* governor);
  const LingElement* ExtraposedGovernor(const LingElement* dependant) const;

  // The resolved governor node of a child element: the extraposed
  // target when one is declared, else the sibling arc's governor.
  std::optional<DepNode> GovernorOf(const LingElement& child) const;

  // "DEP\t<dependant>\t<governor>\t<certainty>" lines, sorted. Ambiguous
  // groups contribute one line per child/candidate pairing.
  std::vector<std::string> ExportArcs(const LingElement& root) const;

 private:
  std::map<const LingElement*, DepGroup> groups_;
  std::map<const LingElement*, const LingElement*> extraposed_;
};

// Resolves one element's children. Exposed for targeted testing; whole
// documents go through ResolveDependencies.
DepGroup ResolveElement(const LingElement& element, Diagnostics& diags);

// Resolves every element of the document, then applies extraposition:
// an explicit depend reference overrides the sibling arc of its element.
DependencyGraph ResolveDependencies(const Document& doc, Diagnostics& diags);

}  // namespace lingds

#endif  // LINGDS_DEPENDENCY_H_
