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

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingds/schemes.hpp"
#include "lingds/xml.hpp"
#include "raw_xml.hpp"

namespace lingds {
namespace {

using internal::LocalName;
using internal::RawAttr;
using internal::RawNode;

const RawNode* FindLinguisticRoot(const RawNode& node) {
  if (ElementKindFromName(LocalName(node.name)).has_value()) return &node;
  for (const auto& child : node.children) {
    if (const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child)) {
      if (const RawNode* found = FindLinguisticRoot(**elem)) return found;
    }
  }
  return nullptr;
}

void CollectAliases(const RawNode& node, AliasTable& aliases) {
  if (LocalName(node.name) == "Header") {
    const RawAttr* alias = node.FindAttr("alias");
    const RawAttr* href = node.FindAttr("href");
    if (alias != nullptr && href != nullptr) {
      aliases.Set(alias->value, href->value);
    }
  }
  for (const auto& child : node.children) {
    if (const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child)) {
      CollectAliases(**elem, aliases);
    }
  }
}

// Builds LingElement trees from raw nodes.
class ModelBuilder {
 public:
  ModelBuilder(std::string_view src, const AliasTable& aliases,
               Diagnostics& diags)
      : src_(src), aliases_(aliases), diags_(diags) {}

  std::unique_ptr<LingElement> Build(const RawNode& raw) {
    auto kind = ElementKindFromName(LocalName(raw.name));
    if (!kind.has_value()) {
      throw ParseError("'" + raw.name + "' is not a linguistic element",
                       raw.line, raw.column);
    }
    auto element = std::make_unique<LingElement>(*kind);
    for (const auto& attr : raw.attrs) {
      ApplyAttr(*element, attr);
    }
    for (const auto& child : raw.children) {
      if (const auto* text = std::get_if<std::string>(&child)) {
        AppendText(*element, *text);
        continue;
      }
      const RawNode& node = *std::get<std::unique_ptr<RawNode>>(child);
      std::string_view local = LocalName(node.name);
      if (local == "MediaLocator") {
        element->locators.push_back(BuildLocator(node));
      } else if (local == "Relation") {
        element->relations.push_back(BuildRelation(node));
      } else if (local == "Header") {
        // Alias headers live in the document-level alias table.
      } else if (ElementKindFromName(local).has_value()) {
        element->content.emplace_back(Build(node));
      } else {
        diags_.Info("opaque-element", "",
                    "element '" + node.name + "' kept verbatim");
        element->content.emplace_back(
            OpaqueXml{std::string(src_.substr(node.begin,
                                              node.end - node.begin))});
      }
    }
    return element;
  }

 private:
  void AppendText(LingElement& element, const std::string& text) {
    if (!element.content.empty() &&
        std::holds_alternative<TextRun>(element.content.back())) {
      std::get<TextRun>(element.content.back()).text += text;
    } else {
      element.content.emplace_back(TextRun{text});
    }
  }

  TermRef Resolve(const std::string& raw) {
    TermRef ref = ResolveTermRef(raw, aliases_);
    if (!ref.resolved) {
      diags_.Warning("unresolved-term", "",
                     "term reference '" + raw + "' does not resolve");
    }
    return ref;
  }

  TermRefList ResolveList(const std::string& raw) {
    TermRefList refs = ResolveTermRefList(raw, aliases_);
    for (const auto& ref : refs) {
      if (!ref.resolved) {
        diags_.Warning("unresolved-term", "",
                       "term reference '" + ref.raw + "' does not resolve");
      }
    }
    return refs;
  }

  std::optional<TermRef> ResolveSingle(const RawAttr& attr) {
    TermRefList refs = ResolveList(attr.value);
    if (refs.empty()) return std::nullopt;
    if (refs.size() > 1) {
      diags_.Warning("single-ref", "",
                     "attribute '" + attr.name +
                         "' takes one reference; extra entries ignored");
    }
    return refs.front();
  }

  void ApplyAttr(LingElement& element, const RawAttr& attr) {
    std::string_view name = attr.name;
    if (name == "id") {
      element.id = attr.value;
    } else if (name == "xml:lang") {
      element.lang = attr.value;
    } else if (name == "type") {
      element.elem_type = Resolve(attr.value);
    } else if (name == "depend") {
      element.depend = ResolveSingle(attr);
    } else if (name == "equal" || name == "eq") {
      if (name == "eq") {
        diags_.Warning("deprecated-attr", "",
                       "attribute 'eq' is deprecated; use 'equal'");
      }
      element.equal = ResolveList(attr.value);
    } else if (name == "semantics") {
      element.semantics = ResolveList(attr.value);
    } else if (name == "compoundSemantics") {
      element.compound_semantics = ResolveList(attr.value);
    } else if (name == "operator") {
      element.operators = ResolveList(attr.value);
    } else if (name == "copy") {
      element.copy = ResolveList(attr.value);
    } else if (name == "noCopy") {
      element.no_copy = ResolveList(attr.value);
    } else if (name == "substitute") {
      element.substitute = ResolveSingle(attr);
    } else if (name == "inScope") {
      element.in_scope = ResolveSingle(attr);
    } else if (name == "edit") {
      if (attr.value.empty() || attr.value[0] != ':') {
        throw ParseError("edit value must start with ':'", attr.line,
                         attr.column);
      }
      element.edit = attr.value;
    } else if (name == "baseForm") {
      element.base_form = attr.value;
    } else if (name == "functionWord") {
      element.function_word = attr.value;
    } else if (name == "synthesis") {
      auto kind = SynthesisKindFromName(attr.value);
      if (!kind.has_value()) {
        throw ParseError("unknown synthesis value '" + attr.value + "'",
                         attr.line, attr.column);
      }
      element.synthesis = *kind;
    } else if (name == "start") {
      element.start = attr.value;
    } else if (name == "length") {
      element.length = attr.value;
    } else if (name == "nonLinear") {
      element.non_linear = attr.value == "true" || attr.value == "1";
    } else if (name.starts_with("xmlns") || name.starts_with("xsi:")) {
      element.extra_attrs.emplace_back(attr.name, attr.value);
    } else {
      diags_.Info("unknown-attr", "",
                  "attribute '" + attr.name + "' kept verbatim");
      element.extra_attrs.emplace_back(attr.name, attr.value);
    }
  }

  MediaLocator BuildLocator(const RawNode& raw) {
    MediaLocator locator;
    if (const RawAttr* t = raw.FindAttr("xsi:type")) locator.xsi_type = t->value;
    for (const auto& child : raw.children) {
      const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child);
      if (elem == nullptr) continue;
      const RawNode& node = **elem;
      std::string_view local = LocalName(node.name);
      if (local == "MediaUri") {
        locator.uri = node.Text();
      } else if (local == "BytePosition") {
        locator.section = MediaLocator::Section::kBytePosition;
        locator.unit = "byte";
        if (const RawAttr* a = node.FindAttr("offset")) locator.start = a->value;
        if (const RawAttr* a = node.FindAttr("length")) locator.length = a->value;
      } else if (local == "StreamSection") {
        locator.section = MediaLocator::Section::kStream;
        if (const RawAttr* a = node.FindAttr("unit")) locator.unit = a->value;
        if (const RawAttr* a = node.FindAttr("start")) locator.start = a->value;
        if (const RawAttr* a = node.FindAttr("length")) locator.length = a->value;
      } else if (local == "MediaTime") {
        BuildMediaTime(node, locator);
      } else {
        diags_.Info("opaque-element", "",
                    "locator child '" + node.name + "' ignored");
      }
    }
    return locator;
  }

  void BuildMediaTime(const RawNode& raw, MediaLocator& locator) {
    for (const auto& child : raw.children) {
      const auto* elem = std::get_if<std::unique_ptr<RawNode>>(&child);
      if (elem == nullptr) continue;
      const RawNode& node = **elem;
      std::string_view local = LocalName(node.name);
      if (local == "MediaTimePoint") {
        locator.section = MediaLocator::Section::kMediaTime;
        locator.start = node.Text();
      } else if (local == "MediaDuration") {
        if (locator.section == MediaLocator::Section::kNone) {
          locator.section = MediaLocator::Section::kMediaTime;
        }
        locator.length = node.Text();
      } else if (local == "MediaRelIncrTimePoint") {
        locator.section = MediaLocator::Section::kIncrTime;
        locator.start = node.Text();
        if (const RawAttr* a = node.FindAttr("mediaTimeUnit")) {
          locator.unit = a->value;
        }
      } else if (local == "MediaIncrDuration") {
        locator.section = MediaLocator::Section::kIncrTime;
        locator.length = node.Text();
        if (locator.unit.empty()) {
          if (const RawAttr* a = node.FindAttr("mediaTimeUnit")) {
            locator.unit = a->value;
          }
        }
      }
    }
  }

  RelationDecl BuildRelation(const RawNode& raw) {
    RelationDecl relation;
    for (const auto& attr : raw.attrs) {
      std::string_view name = attr.name;
      if (name == "type") {
        relation.type = Resolve(attr.value);
      } else if (name == "typelist") {
        relation.type_list = ResolveList(attr.value);
      } else if (name == "source") {
        relation.source = ResolveList(attr.value);
      } else if (name == "target") {
        relation.target = ResolveList(attr.value);
      } else if (name == "generalSource") {
        relation.general_source = ResolveList(attr.value);
      } else if (name == "generalTarget") {
        relation.general_target = ResolveList(attr.value);
      } else if (name.starts_with("xsi:") || name.starts_with("xmlns")) {
        // Type discriminators carry no relation content.
      } else {
        diags_.Info("unknown-attr", "",
                    "relation attribute '" + attr.name + "' ignored");
      }
    }
    return relation;
  }

  std::string_view src_;
  const AliasTable& aliases_;
  Diagnostics& diags_;
};

}  // namespace

TermRef ResolveTermRef(std::string_view raw, const AliasTable& aliases) {
  TermRef ref;
  ref.raw = std::string(raw);
  if (raw.empty()) return ref;
  if (raw[0] == '#') {
    ref.local = true;
    ref.resolved = true;
    return ref;
  }
  if (raw[0] == ':') {
    auto second = raw.find(':', 1);
    if (second == std::string_view::npos || second == 1) return ref;
    std::string alias(raw.substr(1, second - 1));
    std::string term(raw.substr(second + 1));
    std::optional<std::string> uri = aliases.Lookup(alias);
    if (!uri.has_value()) {
      // Conventional shorthands used throughout published descriptions.
      if (alias == "d") {
        uri = kDeixisSchemeUri;
      } else if (alias == "r") {
        uri = kSemanticRelationSchemeUri;
      } else if (alias == "u") {
        uri = kUnaryPredicateSchemeUri;
      } else if (alias == "v") {
        uri = kVariableAritySchemeUri;
      }
    }
    if (!uri.has_value()) return ref;
    ref.uri = *uri + ":" + term;
    ref.resolved = true;
  } else {
    ref.uri = std::string(raw);
    ref.resolved = true;
  }
  ref.deictic = ref.uri.starts_with(std::string(kDeixisSchemeUri) + ":");
  return ref;
}

TermRefList ResolveTermRefList(std::string_view raw,
                               const AliasTable& aliases) {
  TermRefList out;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < raw.size() &&
           !std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back(ResolveTermRef(raw.substr(start, i - start), aliases));
    }
  }
  return out;
}

Document ParseDocument(std::string_view bytes, Diagnostics& diags) {
  std::unique_ptr<RawNode> raw = internal::ParseRawXml(bytes);
  const RawNode* root = FindLinguisticRoot(*raw);
  if (root == nullptr) {
    throw ParseError("no linguistic element found", raw->line, raw->column);
  }
  Document doc;
  CollectAliases(*raw, doc.aliases);
  ModelBuilder builder(bytes, doc.aliases, diags);
  doc.root = builder.Build(*root);
  doc.root->Adopt();
  return doc;
}

}  // namespace lingds
