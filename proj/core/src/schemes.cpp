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

#include "lingds/schemes.hpp"

#include <algorithm>
#include <memory>
#include <string_view>
#include <variant>

#include "raw_xml.hpp"

namespace lingds {

const char kDeixisSchemeUri[] = "urn:mpeg:mpeg7:cs:DeixisCS:2002";
const char kSemanticRelationSchemeUri[] =
    "urn:mpeg:mpeg7:cs:SemanticRelationCS:2001";
const char kSyntacticRelationSchemeUri[] =
    "urn:mpeg:mpeg7:cs:SyntacticRelationCS:2002";
const char kSyntacticSemanticRelationSchemeUri[] =
    "urn:mpeg:mpeg7:cs:SyntacticSemanticRelationCS:2002";
const char kSemanticSyntacticRelationSchemeUri[] =
    "urn:mpeg:mpeg7:cs:SemanticSyntacticRelationCS:2002";
const char kUnaryPredicateSchemeUri[] = "urn:SomeOntologyOfUnaryPredicates";
const char kVariableAritySchemeUri[] =
    "urn:SomeOntologyOfVariableArityRelations";
const char kDeixesOntologyUri[] = "urn:SomeOntologyOfDeixes";
const char kBaseRelationSchemeUri[] = "urn:mpeg:mpeg7:cs:BaseRelationCS:2001";
const char kEqualTermId[] = "equal";
const char kArgumentTermId[] = "argument";

std::string MemberTermUri() {
  return std::string(kBaseRelationSchemeUri) + ":member";
}

const char* TermClassName(TermClass c) {
  switch (c) {
    case TermClass::kDeictic: return "deictic";
    case TermClass::kRelationTerm: return "relation";
    case TermClass::kUnaryPredicate: return "unary";
    case TermClass::kIndividual: return "individual";
    case TermClass::kUnknown: return "unknown";
  }
  return "?";
}

const char* ArgModeName(ArgMode m) {
  return m == ArgMode::kUse ? "use" : "mention";
}

const char* DeicticIndexName(DeicticIndex index) {
  switch (index) {
    case DeicticIndex::kP0: return "p0";
    case DeicticIndex::kP1: return "p1";
    case DeicticIndex::kP1Plural: return "plp";
    case DeicticIndex::kP1Inclusive: return "pli";
    case DeicticIndex::kP1Exclusive: return "plx";
    case DeicticIndex::kP2: return "p2";
    case DeicticIndex::kP2Plural: return "p2p";
    case DeicticIndex::kNil: return "nil";
    case DeicticIndex::kTop: return "top";
    case DeicticIndex::kSelf: return "self";
  }
  return "?";
}

void SchemeRegistry::Add(Scheme scheme) {
  schemes_[scheme.uri] = std::move(scheme);
}

const Scheme* SchemeRegistry::FindScheme(const std::string& uri) const {
  auto it = schemes_.find(uri);
  return it == schemes_.end() ? nullptr : &it->second;
}

SchemeRegistry::Lookup SchemeRegistry::LookupTerm(const std::string& uri) const {
  Lookup result;
  // Longest registered scheme prefix wins; the term id is the remainder
  // after the separating colon.
  for (const auto& [scheme_uri, scheme] : schemes_) {
    if (uri.size() > scheme_uri.size() + 1 && uri.starts_with(scheme_uri) &&
        uri[scheme_uri.size()] == ':') {
      if (result.scheme == nullptr ||
          scheme_uri.size() > result.scheme->uri.size()) {
        result.scheme = &scheme;
        result.term_id = uri.substr(scheme_uri.size() + 1);
      }
    }
  }
  if (result.scheme != nullptr) {
    auto it = result.scheme->terms.find(result.term_id);
    if (it != result.scheme->terms.end()) {
      result.known_term = true;
      result.definition = it->second;
    } else if (result.scheme->open) {
      result.known_term = true;
    }
  }
  return result;
}

namespace {

Scheme MakeDeixisScheme() {
  Scheme scheme;
  scheme.uri = kDeixisSchemeUri;
  scheme.term_class = TermClass::kDeictic;
  scheme.terms = {
      {"p0", "General public"},
      {"p1", "First person singular (`I')"},
      {"plp", "First person plural (`We')"},
      {"pli", "First person plural (inclusive of the second person)"},
      {"plx", "First person plural (exclusive of the second person)"},
      {"p2", "Second person singular (Singular `you')"},
      {"p2p", "Second person plural (Plural `you')"},
      {"nil", "Nothing"},
      {"top", "The top-level discourse context"},
      {"self", "The element itself"},
  };
  // Regularized spellings of the first person plural ids.
  scheme.terms["p1p"] = scheme.terms["plp"];
  scheme.terms["p1i"] = scheme.terms["pli"];
  scheme.terms["p1x"] = scheme.terms["plx"];
  return scheme;
}

Scheme MakeRelationScheme(const char* uri, ArgMode source_mode,
                          ArgMode target_mode) {
  Scheme scheme;
  scheme.uri = uri;
  scheme.term_class = TermClass::kRelationTerm;
  scheme.arg_mode = {source_mode, target_mode};
  scheme.open = true;
  scheme.terms = {{"null", "Empty relation"}};
  return scheme;
}

}  // namespace

SchemeRegistry BuiltinRegistry() {
  SchemeRegistry registry;
  registry.Add(MakeDeixisScheme());
  registry.Add(MakeRelationScheme(kSemanticRelationSchemeUri, ArgMode::kUse,
                                  ArgMode::kUse));
  registry.Add(MakeRelationScheme(kSyntacticRelationSchemeUri,
                                  ArgMode::kMention, ArgMode::kMention));
  registry.Add(MakeRelationScheme(kSyntacticSemanticRelationSchemeUri,
                                  ArgMode::kMention, ArgMode::kUse));
  registry.Add(MakeRelationScheme(kSemanticSyntacticRelationSchemeUri,
                                  ArgMode::kUse, ArgMode::kMention));
  registry.Add(MakeRelationScheme(kBaseRelationSchemeUri, ArgMode::kUse,
                                  ArgMode::kUse));
  registry.Add(MakeRelationScheme("urn:mpeg:mpeg7:cs:SpatialRelationCS:2001",
                                  ArgMode::kUse, ArgMode::kUse));
  registry.Add(MakeRelationScheme("urn:mpeg:mpeg7:cs:TemporalRelationCS:2001",
                                  ArgMode::kUse, ArgMode::kUse));

  Scheme unary;
  unary.uri = kUnaryPredicateSchemeUri;
  unary.term_class = TermClass::kUnaryPredicate;
  unary.open = true;
  registry.Add(std::move(unary));

  Scheme variable = MakeRelationScheme(kVariableAritySchemeUri, ArgMode::kUse,
                                       ArgMode::kUse);
  variable.variable_arity = true;
  registry.Add(std::move(variable));

  Scheme deixes;
  deixes.uri = kDeixesOntologyUri;
  deixes.term_class = TermClass::kDeictic;
  deixes.open = true;
  deixes.terms = {{"previous", "The previous sibling element"}};
  registry.Add(std::move(deixes));

  Scheme iso8601;
  iso8601.uri = "urn:ISO8601";
  iso8601.term_class = TermClass::kIndividual;
  iso8601.open = true;
  registry.Add(std::move(iso8601));

  return registry;
}

TermClass Classify(const TermRef& ref, const SchemeRegistry& registry) {
  if (ref.local) return TermClass::kIndividual;
  if (!ref.resolved) return TermClass::kUnknown;
  auto lookup = registry.LookupTerm(ref.uri);
  if (lookup.scheme == nullptr) return TermClass::kUnknown;
  if (!lookup.known_term) return TermClass::kUnknown;
  return lookup.scheme->term_class;
}

bool IsVariableArity(const TermRef& ref, const SchemeRegistry& registry) {
  if (!ref.resolved || ref.local) return false;
  auto lookup = registry.LookupTerm(ref.uri);
  return lookup.scheme != nullptr && lookup.scheme->variable_arity;
}

std::pair<ArgMode, ArgMode> ArgModesOf(const TermRef& ref,
                                       const SchemeRegistry& registry) {
  if (ref.resolved && !ref.local) {
    auto lookup = registry.LookupTerm(ref.uri);
    if (lookup.scheme != nullptr) return lookup.scheme->arg_mode;
  }
  return {ArgMode::kUse, ArgMode::kUse};
}

std::optional<DeicticIndex> DeicticIndexOf(const TermRef& ref,
                                           const SchemeRegistry& registry) {
  if (!ref.resolved || ref.local) return std::nullopt;
  auto lookup = registry.LookupTerm(ref.uri);
  if (lookup.scheme == nullptr || lookup.scheme->uri != kDeixisSchemeUri) {
    return std::nullopt;
  }
  const std::string& id = lookup.term_id;
  if (id == "p0") return DeicticIndex::kP0;
  if (id == "p1") return DeicticIndex::kP1;
  if (id == "plp" || id == "p1p") return DeicticIndex::kP1Plural;
  if (id == "pli" || id == "p1i") return DeicticIndex::kP1Inclusive;
  if (id == "plx" || id == "p1x") return DeicticIndex::kP1Exclusive;
  if (id == "p2") return DeicticIndex::kP2;
  if (id == "p2p") return DeicticIndex::kP2Plural;
  if (id == "nil") return DeicticIndex::kNil;
  if (id == "top") return DeicticIndex::kTop;
  if (id == "self") return DeicticIndex::kSelf;
  return std::nullopt;
}

bool IsPreviousDeixis(const TermRef& ref, const SchemeRegistry& registry) {
  if (!ref.resolved || ref.local) return false;
  auto lookup = registry.LookupTerm(ref.uri);
  return lookup.scheme != nullptr &&
         lookup.scheme->term_class == TermClass::kDeictic &&
         lookup.scheme->uri != kDeixisSchemeUri &&
         lookup.term_id == "previous";
}

namespace {

using internal::LocalName;
using internal::RawNode;

bool ContainsWord(const std::string& uri, std::string_view word) {
  return uri.find(word) != std::string::npos;
}

// Scheme URIs carry their own classification in practice: deixis
// schemes name deixes, unary ontologies name predicates, everything
// else names relations.
TermClass InferClass(const std::string& uri) {
  if (ContainsWord(uri, "Deixis") || ContainsWord(uri, "Deixes")) {
    return TermClass::kDeictic;
  }
  if (ContainsWord(uri, "Unary") || ContainsWord(uri, "Predicate")) {
    return TermClass::kUnaryPredicate;
  }
  return TermClass::kRelationTerm;
}

void CollectTerms(const RawNode& node, Scheme& scheme) {
  for (const auto& child : node.children) {
    const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child);
    if (elem == nullptr) continue;
    const RawNode& term = **elem;
    if (LocalName(term.name) != "Term") {
      continue;
    }
    const internal::RawAttr* id = term.FindAttr("termID");
    if (id != nullptr) {
      std::string definition;
      for (const auto& sub : term.children) {
        const auto* text_elem = std::get_if<std::unique_ptr<RawNode>>(&sub);
        if (text_elem == nullptr) continue;
        std::string_view local = LocalName((*text_elem)->name);
        if (local == "Definition" || local == "Name") {
          if (!definition.empty()) definition += "; ";
          definition += (*text_elem)->Text();
        }
      }
      scheme.terms[id->value] = definition;
    }
    CollectTerms(term, scheme);  // terms may nest
  }
}

void CollectSchemes(const RawNode& node, SchemeRegistry& registry,
                    Diagnostics& diags) {
  if (LocalName(node.name) == "ClassificationScheme") {
    const internal::RawAttr* uri = node.FindAttr("uri");
    if (uri == nullptr || uri->value.empty()) {
      diags.Warning("scheme-uri", "",
                    "ClassificationScheme without a uri attribute ignored");
      return;
    }
    Scheme scheme;
    const Scheme* existing = registry.FindScheme(uri->value);
    if (existing != nullptr) {
      scheme = *existing;  // extend builtins, keep their classification
    } else {
      scheme.uri = uri->value;
      scheme.term_class = InferClass(uri->value);
      scheme.variable_arity = ContainsWord(uri->value, "VariableArity");
    }
    if (const internal::RawAttr* strict = node.FindAttr("strict")) {
      scheme.open = strict->value == "false" || strict->value == "0";
    }
    CollectTerms(node, scheme);
    registry.Add(std::move(scheme));
    return;
  }
  for (const auto& child : node.children) {
    if (const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child)) {
      CollectSchemes(**elem, registry, diags);
    }
  }
}

}  // namespace

void LoadSchemes(std::string_view xml_bytes, SchemeRegistry& registry,
                 Diagnostics& diags) {
  std::unique_ptr<RawNode> raw = internal::ParseRawXml(xml_bytes);
  CollectSchemes(*raw, registry, diags);
}

}  // namespace lingds
