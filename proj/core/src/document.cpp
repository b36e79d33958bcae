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

#include "lingds/document.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>
#include <utility>

namespace lingds {

const char* SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kInfo: return "info";
    case Severity::kWarning: return "warning";
    case Severity::kError: return "error";
  }
  return "?";
}

std::string Diagnostic::ToString() const {
  std::string out = SeverityName(severity);
  out += '\t';
  out += rule;
  out += '\t';
  out += path.empty() ? "-" : path;
  out += '\t';
  out += message;
  return out;
}

void Diagnostics::Add(Severity severity, std::string rule, std::string path,
                      std::string message) {
  entries_.push_back(Diagnostic{severity, std::move(rule), std::move(path),
                                std::move(message)});
}

void Diagnostics::Info(std::string rule, std::string path,
                       std::string message) {
  Add(Severity::kInfo, std::move(rule), std::move(path), std::move(message));
}

void Diagnostics::Warning(std::string rule, std::string path,
                          std::string message) {
  Add(Severity::kWarning, std::move(rule), std::move(path), std::move(message));
}

void Diagnostics::Violation(std::string rule, std::string path,
                            std::string message) {
  Add(Severity::kError, std::move(rule), std::move(path), std::move(message));
}

std::size_t Diagnostics::CountAtLeast(Severity severity) const {
  std::size_t n = 0;
  for (const auto& d : entries_) {
    if (static_cast<int>(d.severity) >= static_cast<int>(severity)) ++n;
  }
  return n;
}

std::size_t Diagnostics::CountRule(const std::string& rule) const {
  std::size_t n = 0;
  for (const auto& d : entries_) {
    if (d.rule == rule) ++n;
  }
  return n;
}

namespace {

struct KindName {
  ElementKind kind;
  const char* name;
};

constexpr std::array<KindName, 9> kKindNames = {{
    {ElementKind::kLinguisticDocument, "Linguistic"},
    {ElementKind::kHeading, "Heading"},
    {ElementKind::kDivision, "Division"},
    {ElementKind::kParagraph, "Paragraph"},
    {ElementKind::kSentences, "Sentences"},
    {ElementKind::kSentence, "Sentence"},
    {ElementKind::kHead, "Head"},
    {ElementKind::kPhrase, "Phrase"},
    {ElementKind::kQuotation, "Quotation"},
}};

struct SynthesisName {
  SynthesisKind kind;
  const char* name;
};

constexpr std::array<SynthesisName, 8> kSynthesisNames = {{
    {SynthesisKind::kNone, "none"},
    {SynthesisKind::kDependency, "dependency"},
    {SynthesisKind::kForward, "forward"},
    {SynthesisKind::kBackward, "backward"},
    {SynthesisKind::kCoordination, "coordination"},
    {SynthesisKind::kApposition, "apposition"},
    {SynthesisKind::kRepair, "repair"},
    {SynthesisKind::kError, "error"},
}};

}  // namespace

const char* ElementKindName(ElementKind kind) {
  for (const auto& e : kKindNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

const char* SynthesisKindName(SynthesisKind kind) {
  for (const auto& e : kSynthesisNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

std::optional<ElementKind> ElementKindFromName(std::string_view name) {
  for (const auto& e : kKindNames) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

std::optional<SynthesisKind> SynthesisKindFromName(std::string_view name) {
  for (const auto& e : kSynthesisNames) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

bool IsDocumentLevel(ElementKind kind) {
  return kind == ElementKind::kLinguisticDocument ||
         kind == ElementKind::kDivision || kind == ElementKind::kQuotation;
}

bool IsSyntacticConstituent(ElementKind kind) {
  return kind == ElementKind::kSentence || kind == ElementKind::kHead ||
         kind == ElementKind::kPhrase;
}

bool AdmitsChild(ElementKind parent, ElementKind child) {
  if (IsDocumentLevel(parent)) {
    return child == ElementKind::kHeading || child == ElementKind::kDivision ||
           child == ElementKind::kParagraph ||
           child == ElementKind::kSentences ||
           child == ElementKind::kSentence || child == ElementKind::kQuotation;
  }
  if (IsSyntacticConstituent(parent)) {
    return child == ElementKind::kHead || child == ElementKind::kPhrase ||
           child == ElementKind::kQuotation;
  }
  // Heading, Paragraph, Sentences: the sentence grouping model.
  return child == ElementKind::kSentences || child == ElementKind::kSentence ||
         child == ElementKind::kQuotation;
}

std::string TermRef::LocalId() const {
  return local && !raw.empty() ? raw.substr(1) : std::string();
}

std::string JoinRaw(const TermRefList& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ' ';
    out += t.raw;
  }
  return out;
}

TermRefList RelationDecl::EffectiveTypes() const {
  TermRefList out;
  if (type.has_value()) out.push_back(*type);
  out.insert(out.end(), type_list.begin(), type_list.end());
  return out;
}

TermRefList RelationDecl::EffectiveSources() const {
  TermRefList out = source;
  out.insert(out.end(), general_source.begin(), general_source.end());
  return out;
}

TermRefList RelationDecl::EffectiveTargets() const {
  TermRefList out = target;
  out.insert(out.end(), general_target.begin(), general_target.end());
  return out;
}

SynthesisKind LingElement::EffectiveSynthesis() const {
  if (synthesis.has_value()) return *synthesis;
  return IsSyntacticConstituent(kind_) ? SynthesisKind::kDependency
                                       : SynthesisKind::kCoordination;
}

bool LingElement::Phrasal() const {
  return kind_ == ElementKind::kPhrase || kind_ == ElementKind::kQuotation;
}

std::string LingElement::Path() const {
  if (parent_ == nullptr) return "/";
  std::string prefix = parent_->Path();
  if (prefix == "/") prefix.clear();
  return prefix + "/" + std::to_string(content_index_);
}

std::string LingElement::LanguageTag() const {
  for (const LingElement* e = this; e != nullptr; e = e->parent_) {
    if (!e->lang.empty()) return e->lang;
  }
  return std::string();
}

std::string LingElement::DirectText() const {
  std::string out;
  for (const auto& item : content) {
    if (const auto* run = std::get_if<TextRun>(&item)) out += run->text;
  }
  return out;
}

std::string LingElement::InnerText() const {
  std::string out;
  for (const auto& item : content) {
    if (const auto* run = std::get_if<TextRun>(&item)) {
      out += run->text;
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&item)) {
      out += (*child)->InnerText();
    }
  }
  return out;
}

std::vector<const LingElement*> LingElement::ElementChildren() const {
  std::vector<const LingElement*> out;
  for (const auto& item : content) {
    if (const auto* child = std::get_if<std::unique_ptr<LingElement>>(&item)) {
      out.push_back(child->get());
    }
  }
  return out;
}

std::vector<LingElement*> LingElement::ElementChildren() {
  std::vector<LingElement*> out;
  for (auto& item : content) {
    if (auto* child = std::get_if<std::unique_ptr<LingElement>>(&item)) {
      out.push_back(child->get());
    }
  }
  return out;
}

std::unique_ptr<LingElement> LingElement::Clone() const {
  auto copy = std::make_unique<LingElement>(kind_);
  copy->id = id;
  copy->lang = lang;
  copy->elem_type = elem_type;
  copy->depend = depend;
  copy->equal = equal;
  copy->semantics = semantics;
  copy->compound_semantics = compound_semantics;
  copy->operators = operators;
  copy->copy = this->copy;
  copy->no_copy = no_copy;
  copy->substitute = substitute;
  copy->in_scope = in_scope;
  copy->edit = edit;
  copy->base_form = base_form;
  copy->function_word = function_word;
  copy->synthesis = synthesis;
  copy->start = start;
  copy->length = length;
  copy->non_linear = non_linear;
  copy->locators = locators;
  copy->relations = relations;
  copy->extra_attrs = extra_attrs;
  for (const auto& item : content) {
    if (const auto* run = std::get_if<TextRun>(&item)) {
      copy->content.emplace_back(*run);
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&item)) {
      copy->content.emplace_back((*child)->Clone());
    } else {
      copy->content.emplace_back(std::get<OpaqueXml>(item));
    }
  }
  return copy;
}

void LingElement::Adopt() {
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (auto* child = std::get_if<std::unique_ptr<LingElement>>(&content[i])) {
      (*child)->parent_ = this;
      (*child)->content_index_ = static_cast<int>(i);
      (*child)->Adopt();
    }
  }
}

void LingElement::Walk(
    const std::function<void(const LingElement&)>& visit) const {
  visit(*this);
  for (const auto& item : content) {
    if (const auto* child = std::get_if<std::unique_ptr<LingElement>>(&item)) {
      std::as_const(**child).Walk(visit);
    }
  }
}

void LingElement::Walk(const std::function<void(LingElement&)>& visit) {
  visit(*this);
  for (auto& item : content) {
    if (auto* child = std::get_if<std::unique_ptr<LingElement>>(&item)) {
      (*child)->Walk(visit);
    }
  }
}

bool LingElement::IsAncestorOf(const LingElement& other) const {
  for (const LingElement* e = other.parent(); e != nullptr; e = e->parent()) {
    if (e == this) return true;
  }
  return false;
}

bool StructuralEqual(const LingElement& a, const LingElement& b) {
  if (a.kind() != b.kind() || a.id != b.id || a.lang != b.lang ||
      a.elem_type != b.elem_type || a.depend != b.depend ||
      a.equal != b.equal || a.semantics != b.semantics ||
      a.compound_semantics != b.compound_semantics ||
      a.operators != b.operators || a.copy != b.copy ||
      a.no_copy != b.no_copy || a.substitute != b.substitute ||
      a.in_scope != b.in_scope || a.edit != b.edit ||
      a.base_form != b.base_form || a.function_word != b.function_word ||
      a.synthesis != b.synthesis || a.start != b.start ||
      a.length != b.length || a.non_linear != b.non_linear ||
      a.locators != b.locators || a.relations != b.relations ||
      a.extra_attrs != b.extra_attrs ||
      a.content.size() != b.content.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.content.size(); ++i) {
    const auto& ia = a.content[i];
    const auto& ib = b.content[i];
    if (ia.index() != ib.index()) return false;
    if (const auto* run = std::get_if<TextRun>(&ia)) {
      if (*run != std::get<TextRun>(ib)) return false;
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&ia)) {
      if (!StructuralEqual(**child,
                           *std::get<std::unique_ptr<LingElement>>(ib))) {
        return false;
      }
    } else {
      if (std::get<OpaqueXml>(ia) != std::get<OpaqueXml>(ib)) return false;
    }
  }
  return true;
}

void AliasTable::Set(const std::string& alias, const std::string& uri) {
  entries_[alias] = uri;
}

std::optional<std::string> AliasTable::Lookup(const std::string& alias) const {
  auto it = entries_.find(alias);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Document Document::CloneDoc() const {
  Document out;
  out.aliases = aliases;
  if (root != nullptr) {
    out.root = root->Clone();
    out.root->Adopt();
  }
  return out;
}

std::map<std::string, std::string> IdTable(const LingElement& root,
                                           Diagnostics* diags) {
  std::map<std::string, std::string> table;
  root.Walk([&](const LingElement& e) {
    if (e.id.empty()) return;
    auto [it, inserted] = table.emplace(e.id, e.Path());
    if (!inserted && diags != nullptr) {
      diags->Violation("duplicate-id", e.Path(),
                       "id '" + e.id + "' already defined at " + it->second);
    }
  });
  return table;
}

std::map<std::string, const LingElement*> IdIndex(const LingElement& root) {
  std::map<std::string, const LingElement*> index;
  root.Walk([&](const LingElement& e) {
    if (!e.id.empty()) index.emplace(e.id, &e);
  });
  return index;
}

namespace {

// Checks that every local reference on `e` has a defined target.
void CheckLocalRefs(const LingElement& e,
                    const std::map<std::string, std::string>& ids,
                    Diagnostics& diags) {
  auto check = [&](const TermRef& ref, const char* attr) {
    if (!ref.local) return;
    if (ids.find(ref.LocalId()) == ids.end()) {
      diags.Warning("dangling-ref", e.Path(),
                    std::string(attr) + " reference '" + ref.raw +
                        "' names no element in this document");
    }
  };
  for (const auto& t : e.equal) check(t, "equal");
  if (e.depend.has_value()) check(*e.depend, "depend");
  for (const auto& t : e.copy) check(t, "copy");
  for (const auto& t : e.no_copy) check(t, "noCopy");
  if (e.substitute.has_value()) check(*e.substitute, "substitute");
  if (e.in_scope.has_value()) check(*e.in_scope, "inScope");
  for (const auto& r : e.relations) {
    for (const auto& t : r.EffectiveSources()) check(t, "Relation source");
    for (const auto& t : r.EffectiveTargets()) check(t, "Relation target");
  }
}

}  // namespace

Diagnostics Validate(const Document& doc) {
  Diagnostics diags;
  if (doc.root == nullptr) {
    diags.Violation("empty-document", "", "document has no linguistic root");
    return diags;
  }
  auto ids = IdTable(*doc.root, &diags);
  const LingElement& root = *doc.root;
  if (root.kind() == ElementKind::kLinguisticDocument &&
      root.ElementChildren().empty()) {
    diags.Warning("empty-document", root.Path(),
                  "document element has no child elements");
  }
  root.Walk([&](const LingElement& e) {
    for (const LingElement* child : e.ElementChildren()) {
      if (!AdmitsChild(e.kind(), child->kind())) {
        diags.Violation(
            "child-kind", child->Path(),
            std::string(ElementKindName(child->kind())) +
                " is not admitted in the content of " +
                ElementKindName(e.kind()));
      }
    }
    if (!IsSyntacticConstituent(e.kind())) {
      if (!e.base_form.empty()) {
        diags.Violation("attr-placement", e.Path(),
                        "baseForm is only allowed on syntactic constituents");
      }
      if (!e.function_word.empty()) {
        diags.Violation(
            "attr-placement", e.Path(),
            "functionWord is only allowed on syntactic constituents");
      }
    }
    CheckLocalRefs(e, ids, diags);
  });
  return diags;
}

}  // namespace lingds
