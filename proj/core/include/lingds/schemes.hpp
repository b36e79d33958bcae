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
// Registry of classification schemes: the built-in linguistic relation
// schemes and the deixis scheme, plus user-supplied scheme files.
// Classification of term references into deictic indices, relation
// terms, and unary predicates drives the semantic compiler.

#ifndef LINGDS_SCHEMES_H_
#define LINGDS_SCHEMES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds {

// What a resolved term denotes.
enum class TermClass {
  kDeictic,
  kRelationTerm,
  kUnaryPredicate,
  kIndividual,
  kUnknown,
};

// Whether a relation argument position denotes the syntactic occurrence
// (mention) or the described entity (use).
enum class ArgMode { kUse, kMention };

const char* TermClassName(TermClass c);
const char* ArgModeName(ArgMode m);

// Indices of the deixis scheme. The published term ids for the first
// person plural forms are "plp", "pli", "plx"; the more regular
// spellings p1p/p1i/p1x are accepted as aliases.
enum class DeicticIndex {
  kP0,           // general public
  kP1,           // first person singular
  kP1Plural,     // first person plural
  kP1Inclusive,  // first person plural inclusive
  kP1Exclusive,  // first person plural exclusive
  kP2,           // second person singular
  kP2Plural,     // second person plural
  kNil,          // nothing
  kTop,          // the top-level discourse
  kSelf,         // the element itself
};

const char* DeicticIndexName(DeicticIndex index);

// One classification scheme. Open schemes classify every term id under
// their URI; closed schemes only the listed ones.
struct Scheme {
  std::string uri;
  std::map<std::string, std::string> terms;  // term id -> definition
  TermClass term_class = TermClass::kRelationTerm;
  // Argument modes of (source, target) ends for relation terms.
  std::pair<ArgMode, ArgMode> arg_mode{ArgMode::kUse, ArgMode::kUse};
  bool variable_arity = false;
  bool open = false;
};

// Well-known scheme URIs.
extern const char kDeixisSchemeUri[];
extern const char kSemanticRelationSchemeUri[];
extern const char kSyntacticRelationSchemeUri[];
extern const char kSyntacticSemanticRelationSchemeUri[];
extern const char kSemanticSyntacticRelationSchemeUri[];
extern const char kUnaryPredicateSchemeUri[];
extern const char kVariableAritySchemeUri[];
extern const char kDeixesOntologyUri[];
extern const char kBaseRelationSchemeUri[];
// Relation term asserting coreference without merging.
extern const char kEqualTermId[];
// Presupposed conjunct relation of coordination operators.
extern const char kArgumentTermId[];
// Set membership term used for multi-target equality.
std::string MemberTermUri();

class SchemeRegistry {
 public:
  struct Lookup {
    const Scheme* scheme = nullptr;  // null when the URI matches nothing
    std::string term_id;
    std::string definition;  // "" when the term carries none
    bool known_term = false;
  };

  void Add(Scheme scheme);
  const Scheme* FindScheme(const std::string& uri) const;
  // Splits a full term URI into scheme and term id by the longest
  // registered scheme prefix.
  Lookup LookupTerm(const std::string& uri) const;

  const std::map<std::string, Scheme>& schemes() const { return schemes_; }

 private:
  std::map<std::string, Scheme> schemes_;
};

// Registry preloaded with the deixis scheme and the four linguistic
// relation schemes, plus the conventional auxiliary ontologies used by
// short alias prefixes.
SchemeRegistry BuiltinRegistry();

// Classifies a resolved reference. Local "#id" references are
// individuals; unresolved references are unknown.
TermClass Classify(const TermRef& ref, const SchemeRegistry& registry);

// True for terms of variable-arity relation schemes.
bool IsVariableArity(const TermRef& ref, const SchemeRegistry& registry);

// Argument modes of a relation term's (source, target) ends. Unknown
// terms default to (use, use).
std::pair<ArgMode, ArgMode> ArgModesOf(const TermRef& ref,
                                       const SchemeRegistry& registry);

// Deictic index of a reference into the deixis scheme.
std::optional<DeicticIndex> DeicticIndexOf(const TermRef& ref,
                                           const SchemeRegistry& registry);

// True for terms meaning "the previous sibling element" in a deixis
// ontology.
bool IsPreviousDeixis(const TermRef& ref, const SchemeRegistry& registry);

// Loads ClassificationScheme elements from an XML file into the
// registry. Unknown shapes are reported, not fatal.
void LoadSchemes(std::string_view xml_bytes, SchemeRegistry& registry,
                 Diagnostics& diags);

}  // namespace lingds

#endif  // LINGDS_SCHEMES_H_
