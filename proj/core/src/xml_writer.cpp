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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lingds/xml.hpp"

namespace lingds {
namespace {

void EscapeText(const std::string& text, std::string& out) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
}

void EscapeAttr(const std::string& text, std::string& out) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
}

using AttrList = std::vector<std::pair<std::string, std::string>>;

void WriteTag(std::string& out, const std::string& name, AttrList attrs,
              bool self_close) {
  std::sort(attrs.begin(), attrs.end());
  out += '<';
  out += name;
  for (const auto& [attr_name, value] : attrs) {
    out += ' ';
    out += attr_name;
    out += "=\"";
    EscapeAttr(value, out);
    out += '"';
  }
  out += self_close ? "/>" : ">";
}

void WriteLocator(std::string& out, const MediaLocator& locator) {
  AttrList attrs;
  if (!locator.xsi_type.empty()) attrs.emplace_back("xsi:type", locator.xsi_type);
  bool empty = locator.uri.empty() &&
               locator.section == MediaLocator::Section::kNone;
  WriteTag(out, "MediaLocator", std::move(attrs), empty);
  if (empty) return;
  if (!locator.uri.empty()) {
    out += "<MediaUri>";
    EscapeText(locator.uri, out);
    out += "</MediaUri>";
  }
  switch (locator.section) {
    case MediaLocator::Section::kNone:
      break;
    case MediaLocator::Section::kBytePosition: {
      AttrList section;
      if (!locator.length.empty()) section.emplace_back("length", locator.length);
      if (!locator.start.empty()) section.emplace_back("offset", locator.start);
      WriteTag(out, "BytePosition", std::move(section), true);
      break;
    }
    case MediaLocator::Section::kStream: {
      AttrList section;
      if (!locator.length.empty()) section.emplace_back("length", locator.length);
      if (!locator.start.empty()) section.emplace_back("start", locator.start);
      if (!locator.unit.empty()) section.emplace_back("unit", locator.unit);
      WriteTag(out, "StreamSection", std::move(section), true);
      break;
    }
    case MediaLocator::Section::kMediaTime:
      out += "<MediaTime>";
      if (!locator.start.empty()) {
        out += "<MediaTimePoint>";
        EscapeText(locator.start, out);
        out += "</MediaTimePoint>";
      }
      if (!locator.length.empty()) {
        out += "<MediaDuration>";
        EscapeText(locator.length, out);
        out += "</MediaDuration>";
      }
      out += "</MediaTime>";
      break;
    case MediaLocator::Section::kIncrTime:
      out += "<MediaTime>";
      if (!locator.start.empty()) {
        AttrList point;
        if (!locator.unit.empty()) {
          point.emplace_back("mediaTimeUnit", locator.unit);
        }
        WriteTag(out, "MediaRelIncrTimePoint", std::move(point), false);
        EscapeText(locator.start, out);
        out += "</MediaRelIncrTimePoint>";
      }
      if (!locator.length.empty()) {
        AttrList duration;
        if (locator.start.empty() && !locator.unit.empty()) {
          duration.emplace_back("mediaTimeUnit", locator.unit);
        }
        WriteTag(out, "MediaIncrDuration", std::move(duration), false);
        EscapeText(locator.length, out);
        out += "</MediaIncrDuration>";
      }
      out += "</MediaTime>";
      break;
  }
  out += "</MediaLocator>";
}

void WriteRelation(std::string& out, const RelationDecl& relation) {
  AttrList attrs;
  if (!relation.general_source.empty()) {
    attrs.emplace_back("generalSource", JoinRaw(relation.general_source));
  }
  if (!relation.general_target.empty()) {
    attrs.emplace_back("generalTarget", JoinRaw(relation.general_target));
  }
  if (!relation.source.empty()) {
    attrs.emplace_back("source", JoinRaw(relation.source));
  }
  if (!relation.target.empty()) {
    attrs.emplace_back("target", JoinRaw(relation.target));
  }
  if (relation.type.has_value()) {
    attrs.emplace_back("type", relation.type->raw);
  }
  if (!relation.type_list.empty()) {
    attrs.emplace_back("typelist", JoinRaw(relation.type_list));
  }
  WriteTag(out, "Relation", std::move(attrs), true);
}

void WriteElement(std::string& out, const LingElement& element,
                  const AliasTable* root_aliases) {
  AttrList attrs;
  if (!element.id.empty()) attrs.emplace_back("id", element.id);
  if (!element.lang.empty()) attrs.emplace_back("xml:lang", element.lang);
  if (element.elem_type.has_value()) {
    attrs.emplace_back("type", element.elem_type->raw);
  }
  if (element.depend.has_value()) {
    attrs.emplace_back("depend", element.depend->raw);
  }
  if (!element.equal.empty()) attrs.emplace_back("equal", JoinRaw(element.equal));
  if (!element.semantics.empty()) {
    attrs.emplace_back("semantics", JoinRaw(element.semantics));
  }
  if (!element.compound_semantics.empty()) {
    attrs.emplace_back("compoundSemantics", JoinRaw(element.compound_semantics));
  }
  if (!element.operators.empty()) {
    attrs.emplace_back("operator", JoinRaw(element.operators));
  }
  if (!element.copy.empty()) attrs.emplace_back("copy", JoinRaw(element.copy));
  if (!element.no_copy.empty()) {
    attrs.emplace_back("noCopy", JoinRaw(element.no_copy));
  }
  if (element.substitute.has_value()) {
    attrs.emplace_back("substitute", element.substitute->raw);
  }
  if (element.in_scope.has_value()) {
    attrs.emplace_back("inScope", element.in_scope->raw);
  }
  if (element.edit.has_value()) attrs.emplace_back("edit", *element.edit);
  if (!element.base_form.empty()) {
    attrs.emplace_back("baseForm", element.base_form);
  }
  if (!element.function_word.empty()) {
    attrs.emplace_back("functionWord", element.function_word);
  }
  if (element.synthesis.has_value()) {
    attrs.emplace_back("synthesis", SynthesisKindName(*element.synthesis));
  }
  if (!element.start.empty()) attrs.emplace_back("start", element.start);
  if (!element.length.empty()) attrs.emplace_back("length", element.length);
  if (element.non_linear) attrs.emplace_back("nonLinear", "true");
  for (const auto& extra : element.extra_attrs) attrs.push_back(extra);

  bool has_headers = root_aliases != nullptr && !root_aliases->entries().empty();
  bool empty = !has_headers && element.locators.empty() &&
               element.relations.empty() && element.content.empty();
  const std::string name = ElementKindName(element.kind());
  WriteTag(out, name, std::move(attrs), empty);
  if (empty) return;

  if (has_headers) {
    for (const auto& [alias, uri] : root_aliases->entries()) {
      AttrList header;
      header.emplace_back("alias", alias);
      header.emplace_back("href", uri);
      header.emplace_back("xsi:type", "ClassificationSchemeAliasType");
      WriteTag(out, "Header", std::move(header), true);
    }
  }
  for (const auto& locator : element.locators) WriteLocator(out, locator);
  for (const auto& relation : element.relations) WriteRelation(out, relation);
  for (const auto& item : element.content) {
    if (const auto* run = std::get_if<TextRun>(&item)) {
      EscapeText(run->text, out);
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&item)) {
      WriteElement(out, **child, nullptr);
    } else {
      out += std::get<OpaqueXml>(item).xml;
    }
  }
  out += "</";
  out += name;
  out += '>';
}

}  // namespace

std::string SerializeCanonical(const Document& doc) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (doc.root != nullptr) {
    WriteElement(out, *doc.root, &doc.aliases);
  }
  out += '\n';
  return out;
}

}  // namespace lingds
