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
// Symbolic alignment of elements to media spans. Start and length
// attributes resolve against the nearest preceding locator attached to
// an ancestor; integer values inherit that locator's unit.

#ifndef LINGDS_MEDIA_H_
#define LINGDS_MEDIA_H_

#include <optional>
#include <string>
#include <vector>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds {

// A resolved media span. Units are symbolic: "byte", a media time unit
// literal such as "PT1N25F", or "timecode" for explicit time points.
struct MediaSpan {
  std::string path;
  std::string uri;
  std::string unit;
  std::string start;
  std::string length;
  bool resolved = false;
  std::string note;  // why resolution failed or was partial

  bool operator==(const MediaSpan&) const = default;
};

// The nearest preceding MediaLocator that is attached to a proper
// ancestor of `element`; null when there is none.
const MediaLocator* GoverningLocator(const LingElement& element);

// Span of one element: explicit start/length against the governing
// locator; an element with locators of its own answers with its first
// locator's section; otherwise the governing locator's section is
// inherited; with neither, the span is unresolved.
MediaSpan ResolveSpan(const LingElement& element, Diagnostics* diags = nullptr);

// "SPAN <path> <uri> <unit> <start> <length>" lines for every resolved
// element span, sorted. `-` stands for an absent field.
std::vector<std::string> ExportSpans(const Document& doc);

}  // namespace lingds

#endif  // LINGDS_MEDIA_H_
