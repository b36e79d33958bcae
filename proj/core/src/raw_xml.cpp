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

#include "raw_xml.hpp"

#include <cctype>
#include <cstdlib>

#include "lingds/diagnostics.hpp"

namespace lingds::internal {

const RawAttr* RawNode::FindAttr(std::string_view name) const {
  for (const auto& a : attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::string RawNode::Text() const {
  std::string out;
  for (const auto& child : children) {
    if (const auto* text = std::get_if<std::string>(&child)) out += *text;
  }
  return out;
}

std::string_view LocalName(std::string_view name) {
  auto colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

namespace {

// Recursive-descent reader for the XML subset used by descriptions:
// elements, attributes, character data, CDATA, comments, processing
// instructions, a skipped DOCTYPE, and the predefined plus numeric
// entities. Tracks line and column for error positions and byte
// offsets for verbatim capture.
class XmlReader {
 public:
  explicit XmlReader(std::string_view src) : src_(src) {}

  std::unique_ptr<RawNode> Parse() {
    SkipBom();
    SkipMisc();
    if (!AtChar('<')) Fail("expected root element");
    auto root = ParseElement();
    SkipMisc();
    if (pos_ != src_.size()) Fail("trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) {
    throw ParseError(message, line_, column_);
  }

  bool AtEnd() const { return pos_ >= src_.size(); }
  char Peek() const { return AtEnd() ? '\0' : src_[pos_]; }
  bool AtChar(char c) const { return Peek() == c; }

  bool AtLiteral(std::string_view lit) const {
    return src_.compare(pos_, lit.size(), lit) == 0;
  }

  char Get() {
    if (AtEnd()) Fail("unexpected end of input");
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    Get();
  }

  void ExpectLiteral(std::string_view lit) {
    if (!AtLiteral(lit)) Fail("expected '" + std::string(lit) + "'");
    for (std::size_t i = 0; i < lit.size(); ++i) Get();
  }

  void SkipBom() {
    if (AtLiteral("\xEF\xBB\xBF")) pos_ += 3;
  }

  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void SkipWhitespace() {
    while (!AtEnd() && IsSpace(Peek())) Get();
  }

  void SkipMisc() {
    for (;;) {
      SkipWhitespace();
      if (AtLiteral("<?")) {
        SkipUntil("?>");
      } else if (AtLiteral("<!--")) {
        SkipUntil("-->");
      } else if (AtLiteral("<!DOCTYPE")) {
        SkipDoctype();
      } else {
        return;
      }
    }
  }

  void SkipUntil(std::string_view terminator) {
    while (!AtLiteral(terminator)) {
      if (AtEnd()) Fail("unterminated '" + std::string(terminator) + "'");
      Get();
    }
    for (std::size_t i = 0; i < terminator.size(); ++i) Get();
  }

  void SkipDoctype() {
    int brackets = 0;
    while (!AtEnd()) {
      char c = Get();
      if (c == '[') ++brackets;
      if (c == ']') --brackets;
      if (c == '>' && brackets <= 0) return;
    }
    Fail("unterminated DOCTYPE");
  }

  static bool IsNameStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  }
  static bool IsNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == ':' || c == '-' || c == '.';
  }

  std::string ParseName() {
    if (!IsNameStart(Peek())) Fail("expected a name");
    std::string name;
    name += Get();
    while (IsNameChar(Peek())) name += Get();
    return name;
  }

  void AppendCodepoint(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
      out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0x10FFFF) {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      Fail("character reference out of range");
    }
  }

  void ParseEntity(std::string& out) {
    Expect('&');
    if (AtChar('#')) {
      Get();
      int base = 10;
      if (AtChar('x') || AtChar('X')) {
        Get();
        base = 16;
      }
      std::string digits;
      while (Peek() != ';') {
        if (AtEnd()) Fail("unterminated character reference");
        digits += Get();
      }
      Expect(';');
      if (digits.empty()) Fail("empty character reference");
      char* end = nullptr;
      unsigned long cp = std::strtoul(digits.c_str(), &end, base);
      if (end == nullptr || *end != '\0') Fail("bad character reference");
      AppendCodepoint(out, cp);
      return;
    }
    std::string name;
    while (Peek() != ';') {
      if (AtEnd() || Peek() == '<') Fail("unterminated entity reference");
      name += Get();
    }
    Expect(';');
    if (name == "lt") {
      out += '<';
    } else if (name == "gt") {
      out += '>';
    } else if (name == "amp") {
      out += '&';
    } else if (name == "apos") {
      out += '\'';
    } else if (name == "quot") {
      out += '"';
    } else {
      Fail("unknown entity '&" + name + ";'");
    }
  }

  RawAttr ParseAttr() {
    RawAttr attr;
    attr.line = line_;
    attr.column = column_;
    attr.name = ParseName();
    SkipWhitespace();
    Expect('=');
    SkipWhitespace();
    char quote = Peek();
    if (quote != '"' && quote != '\'') Fail("expected quoted attribute value");
    Get();
    while (Peek() != quote) {
      if (AtEnd()) Fail("unterminated attribute value");
      if (AtChar('&')) {
        ParseEntity(attr.value);
      } else if (AtChar('<')) {
        Fail("'<' in attribute value");
      } else {
        attr.value += Get();
      }
    }
    Get();
    return attr;
  }

  std::unique_ptr<RawNode> ParseElement() {
    auto node = std::make_unique<RawNode>();
    node->begin = pos_;
    node->line = line_;
    node->column = column_;
    Expect('<');
    node->name = ParseName();
    for (;;) {
      SkipWhitespace();
      if (AtChar('>') || AtLiteral("/>")) break;
      RawAttr attr = ParseAttr();
      if (node->FindAttr(attr.name) != nullptr) {
        throw ParseError("duplicate attribute '" + attr.name + "'", attr.line,
                         attr.column);
      }
      node->attrs.push_back(std::move(attr));
    }
    if (AtLiteral("/>")) {
      Get();
      Get();
      node->end = pos_;
      return node;
    }
    Expect('>');
    ParseContent(*node);
    ExpectLiteral("</");
    std::string close = ParseName();
    if (close != node->name) {
      Fail("mismatched closing tag '" + close + "' for '" + node->name + "'");
    }
    SkipWhitespace();
    Expect('>');
    node->end = pos_;
    return node;
  }

  void AppendText(RawNode& node, const std::string& text) {
    if (text.empty()) return;
    if (!node.children.empty() &&
        std::holds_alternative<std::string>(node.children.back())) {
      std::get<std::string>(node.children.back()) += text;
    } else {
      node.children.emplace_back(text);
    }
  }

  void ParseContent(RawNode& node) {
    std::string text;
    for (;;) {
      if (AtEnd()) Fail("unterminated element '" + node.name + "'");
      if (AtChar('<')) {
        if (AtLiteral("</")) {
          AppendText(node, text);
          return;
        }
        if (AtLiteral("<!--")) {
          SkipUntil("-->");
          continue;
        }
        if (AtLiteral("<![CDATA[")) {
          ExpectLiteral("<![CDATA[");
          while (!AtLiteral("]]>")) {
            if (AtEnd()) Fail("unterminated CDATA section");
            text += Get();
          }
          ExpectLiteral("]]>");
          continue;
        }
        if (AtLiteral("<?")) {
          SkipUntil("?>");
          continue;
        }
        AppendText(node, text);
        text.clear();
        node.children.emplace_back(ParseElement());
        continue;
      }
      if (AtChar('&')) {
        ParseEntity(text);
        continue;
      }
      text += Get();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::unique_ptr<RawNode> ParseRawXml(std::string_view src) {
  return XmlReader(src).Parse();
}

}  // namespace lingds::internal
