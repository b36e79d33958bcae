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
// Internal raw XML tree shared by the description reader and the
// classification scheme loader. Not part of the installed interface.

#ifndef LINGDS_SRC_RAW_XML_H_
#define LINGDS_SRC_RAW_XML_H_

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lingds::internal {

struct RawAttr {
  std::string name;
  std::string value;
  int line = 0;
  int column = 0;
};

struct RawNode;
using RawChild = std::variant<std::string, std::unique_ptr<RawNode>>;

struct RawNode {
  std::string name;
  std::vector<RawAttr> attrs;
  std::vector<RawChild> children;
  int line = 0;
  int column = 0;
  std::size_t begin = 0;  // byte range of the element in the source
  std::size_t end = 0;

  const RawAttr* FindAttr(std::string_view name) const;
  // Concatenated direct text children.
  std::string Text() const;
};

std::string_view LocalName(std::string_view name);

// Parses one XML document (prolog plus root element). Throws ParseError.
std::unique_ptr<RawNode> ParseRawXml(std::string_view src);

}  // namespace lingds::internal

#endif  // LINGDS_SRC_RAW_XML_H_
