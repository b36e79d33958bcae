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
// In-memory model of an MPEG-7 Linguistic DS description: a tree of
// linguistic elements over mixed content, plus the attribute vocabulary
// of the Linguistic DS schema. Documents are immutable after
// construction; the normalizer produces rewritten clones.

#ifndef LINGDS_DOCUMENT_H_
#define LINGDS_DOCUMENT_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingds/diagnostics.hpp"

namespace lingds {

// Element kinds of the Linguistic DS. LinguisticDocument is the kind of
// the document root element (serialized as <Linguistic>).
enum class ElementKind {
  kLinguisticDocument,
  kHeading,
  kDivision,
  kParagraph,
  kSentences,
  kSentence,
  kHead,
  kPhrase,
  kQuotation,
};

// How the children of an element combine into the whole.
enum class SynthesisKind {
  kNone,
  kDependency,
  kForward,
  kBackward,
  kCoordination,
  kApposition,
  kRepair,
  kError,
};

const char* ElementKindName(ElementKind kind);
const char* SynthesisKindName(SynthesisKind kind);
std::optional<ElementKind> ElementKindFromName(std::string_view name);
std::optional<SynthesisKind> SynthesisKindFromName(std::string_view name);

// True when `child` may appear in the content of `parent` per the
// Linguistic DS content models: document-level elements admit the
// document-level kinds, Sentences-like elements admit sentence grouping,
// and syntactic constituents admit constituents.
bool AdmitsChild(ElementKind parent, ElementKind child);

// True for kinds whose content model is the document-level choice group.
bool IsDocumentLevel(ElementKind kind);
// True for Sentence, Head, and Phrase (syntactic constituents).
bool IsSyntacticConstituent(ElementKind kind);

// One classification term reference as written in an attribute value.
// The raw spelling is preserved for serialization; `uri` holds the
// resolved form when alias resolution succeeded.
struct TermRef {
  std::string raw;
  std::string uri;
  bool local = false;     // "#id" reference into the same document
  bool deictic = false;   // resolves into a deixis scheme
  bool resolved = false;  // uri is meaningful (always true for local refs)

  // The id named by a local reference (raw without the leading '#').
  std::string LocalId() const;
  bool operator==(const TermRef&) const = default;
};

using TermRefList = std::vector<TermRef>;

// Joins the raw spellings back into an attribute value.
std::string JoinRaw(const TermRefList& terms);

// A media locator child. Only the section shapes exercised by the
// Linguistic DS are modeled; field meaning depends on `section`.
struct MediaLocator {
  enum class Section {
    kNone,          // bare MediaUri
    kStream,        // StreamSection: unit/start/length
    kBytePosition,  // BytePosition: start=offset, length
    kMediaTime,     // MediaTime with absolute MediaTimePoint/MediaDuration
    kIncrTime,      // MediaTime with MediaRelIncrTimePoint@mediaTimeUnit
  };

  std::string xsi_type;  // raw xsi:type attribute, "" when absent
  std::string uri;       // MediaUri text
  Section section = Section::kNone;
  std::string unit;    // StreamSection@unit or @mediaTimeUnit
  std::string start;   // section start (offset, time point, or count)
  std::string length;  // section length (count or duration)

  bool operator==(const MediaLocator&) const = default;
};

// A Relation child: a typed edge between described entities. `type`
// holds the single relation term, `type_list` the composed chain; the
// source/target pairs keep both the plain and the general attribute
// forms.
struct RelationDecl {
  std::optional<TermRef> type;
  TermRefList type_list;
  TermRefList source;
  TermRefList target;
  TermRefList general_source;
  TermRefList general_target;

  bool Untyped() const { return !type.has_value() && type_list.empty(); }
  // Relation terms in composition order: `type` first, then `type_list`.
  TermRefList EffectiveTypes() const;
  TermRefList EffectiveSources() const;
  TermRefList EffectiveTargets() const;
  bool operator==(const RelationDecl&) const = default;
};

class LingElement;

// A run of character data between child elements.
struct TextRun {
  std::string text;
  bool operator==(const TextRun&) const = default;
};

// Verbatim bytes of an element outside the modeled subset, preserved
// for round-tripping.
struct OpaqueXml {
  std::string xml;
  bool operator==(const OpaqueXml&) const = default;
};

using ContentItem =
    std::variant<TextRun, std::unique_ptr<LingElement>, OpaqueXml>;

// One linguistic element. Attribute fields mirror the schema; empty
// strings and empty lists mean the attribute is absent.
class LingElement {
 public:
  explicit LingElement(ElementKind kind) : kind_(kind) {}
  LingElement(const LingElement&) = delete;
  LingElement& operator=(const LingElement&) = delete;

  ElementKind kind() const { return kind_; }
  void set_kind(ElementKind kind) { kind_ = kind; }

  std::string id;
  std::string lang;  // xml:lang as written on this element
  std::optional<TermRef> elem_type;
  std::optional<TermRef> depend;
  TermRefList equal;
  TermRefList semantics;
  TermRefList compound_semantics;
  TermRefList operators;
  TermRefList copy;
  TermRefList no_copy;
  std::optional<TermRef> substitute;
  std::optional<TermRef> in_scope;
  // Raw edit attribute (":" + replaced text), absent when not annotated.
  std::optional<std::string> edit;
  std::string base_form;
  std::string function_word;
  std::optional<SynthesisKind> synthesis;
  std::string start;   // raw media start attribute
  std::string length;  // raw media length attribute
  // Marks a synthetic container for rewritten material that carries no
  // left-to-right order against its siblings.
  bool non_linear = false;

  std::vector<MediaLocator> locators;
  std::vector<RelationDecl> relations;
  std::vector<ContentItem> content;
  // Unmodeled attributes, preserved as written.
  std::vector<std::pair<std::string, std::string>> extra_attrs;

  const LingElement* parent() const { return parent_; }
  int content_index() const { return content_index_; }

  // Explicit synthesis, or the kind's default: coordination for
  // document-level and sentence-grouping kinds, dependency for
  // syntactic constituents.
  SynthesisKind EffectiveSynthesis() const;

  // Phrasal elements (Phrase, Quotation) never govern a dependency.
  bool Phrasal() const;

  // Slash-joined content indices from the root ("/" for the root,
  // "/2/0" for the element at content slot 0 of the element at slot 2).
  std::string Path() const;

  // xml:lang in effect here, walking ancestors ("" when unset anywhere).
  std::string LanguageTag() const;

  // Concatenated text runs of this element only.
  std::string DirectText() const;
  // Concatenated text of this element and its descendants.
  std::string InnerText() const;

  std::vector<const LingElement*> ElementChildren() const;
  std::vector<LingElement*> ElementChildren();

  // Deep copy without parent linkage; call Adopt() on the new root.
  std::unique_ptr<LingElement> Clone() const;

  // Recomputes parent pointers and content indices below this element.
  void Adopt();

  // Preorder traversal, this element included.
  void Walk(const std::function<void(const LingElement&)>& visit) const;
  void Walk(const std::function<void(LingElement&)>& visit);

  bool IsAncestorOf(const LingElement& other) const;

 private:
  ElementKind kind_;
  const LingElement* parent_ = nullptr;
  int content_index_ = -1;
};

// Structural equality over kind, attributes, and content (parent
// linkage excluded).
bool StructuralEqual(const LingElement& a, const LingElement& b);

// Classification scheme aliases declared in description headers.
class AliasTable {
 public:
  void Set(const std::string& alias, const std::string& uri);
  std::optional<std::string> Lookup(const std::string& alias) const;
  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }
  bool operator==(const AliasTable&) const = default;

 private:
  std::map<std::string, std::string> entries_;
};

// A parsed description: the outermost linguistic element plus the alias
// declarations that were in scope for it.
struct Document {
  std::unique_ptr<LingElement> root;
  AliasTable aliases;

  Document CloneDoc() const;
};

// Maps every id to the path of its defining element. The first
// definition wins; redefinitions are reported when `diags` is given.
std::map<std::string, std::string> IdTable(const LingElement& root,
                                           Diagnostics* diags = nullptr);

// Maps every id to its defining element (first definition wins).
std::map<std::string, const LingElement*> IdIndex(const LingElement& root);

// Checks content-model admissibility, the root child requirement,
// attribute placement, id uniqueness, and local reference targets.
// Violations are kError entries; dangling references and a childless
// root are kWarning entries.
Diagnostics Validate(const Document& doc);

}  // namespace lingds

#endif  // LINGDS_DOCUMENT_H_
