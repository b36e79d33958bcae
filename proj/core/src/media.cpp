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

#include "lingds/media.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace lingds {

namespace {

bool IsInteger(const std::string& value) {
  if (value.empty()) return false;
  for (char c : value) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// The unit an integer start or length assumes under this locator: the
// explicit unit attribute when present, one byte for byte positions,
// otherwise none (explicit time points carry no integer unit).
std::string IntegerUnit(const MediaLocator& locator) {
  if (!locator.unit.empty()) return locator.unit;
  if (locator.section == MediaLocator::Section::kBytePosition) return "byte";
  return "";
}

// The display unit of the locator's own section.
std::string SectionUnit(const MediaLocator& locator) {
  switch (locator.section) {
    case MediaLocator::Section::kNone:
      return "";
    case MediaLocator::Section::kStream:
      return locator.unit.empty() ? "byte" : locator.unit;
    case MediaLocator::Section::kBytePosition:
      return "byte";
    case MediaLocator::Section::kMediaTime:
      return "timecode";
    case MediaLocator::Section::kIncrTime:
      return locator.unit;
  }
  return "";
}

MediaSpan SectionSpan(const LingElement& element,
                      const MediaLocator& locator) {
  MediaSpan span;
  span.path = element.Path();
  span.uri = locator.uri;
  span.unit = SectionUnit(locator);
  span.start = locator.start;
  span.length = locator.length;
  span.resolved = true;
  return span;
}

}  // namespace

const MediaLocator* GoverningLocator(const LingElement& element) {
  for (const LingElement* p = element.parent(); p != nullptr;
       p = p->parent()) {
    if (!p->locators.empty()) {
      // Locators precede their element's content, so the last locator
      // of the nearest carrying ancestor is the nearest preceding one.
      return &p->locators.back();
    }
  }
  return nullptr;
}

MediaSpan ResolveSpan(const LingElement& element, Diagnostics* diags) {
  if (!element.locators.empty()) {
    return SectionSpan(element, element.locators.front());
  }
  const MediaLocator* governing = GoverningLocator(element);
  if (element.start.empty() && element.length.empty()) {
    if (governing != nullptr) return SectionSpan(element, *governing);
    MediaSpan span;
    span.path = element.Path();
    span.note = "no locator or start attribute";
    return span;
  }
  MediaSpan span;
  span.path = element.Path();
  span.start = element.start;
  span.length = element.length;
  bool integer_valued =
      IsInteger(element.start) ||
      (element.start.empty() && IsInteger(element.length));
  if (!integer_valued) {
    // Explicit time points carry their own unit.
    span.unit = "timecode";
    span.resolved = true;
    if (governing != nullptr) {
      span.uri = governing->uri;
    } else {
      span.note = "no governing locator";
    }
    return span;
  }
  if (governing == nullptr) {
    span.note = "integer start with no governing locator";
    if (diags != nullptr) {
      diags->Warning("span-locator", element.Path(), span.note);
    }
    return span;
  }
  span.uri = governing->uri;
  std::string unit = IntegerUnit(*governing);
  if (unit.empty()) {
    span.note = "governing locator has no integer unit";
    if (diags != nullptr) {
      diags->Warning("span-unit", element.Path(), span.note);
    }
    return span;
  }
  span.unit = unit;
  span.resolved = true;
  // Child spans need not nest inside the parent span; report escapes as
  // information only.
  if (diags != nullptr && element.parent() != nullptr) {
    MediaSpan parent = ResolveSpan(*element.parent(), nullptr);
    if (parent.resolved && parent.uri == span.uri &&
        parent.unit == span.unit && IsInteger(parent.start) &&
        IsInteger(parent.length) && IsInteger(span.start) &&
        IsInteger(span.length)) {
      long parent_start = std::stol(parent.start);
      long parent_end = parent_start + std::stol(parent.length);
      long start = std::stol(span.start);
      long end = start + std::stol(span.length);
      if (start < parent_start || end > parent_end) {
        diags->Info("span-nesting", element.Path(),
                    "span extends outside the parent span");
      }
    }
  }
  return span;
}

std::vector<std::string> ExportSpans(const Document& doc) {
  std::vector<std::string> lines;
  if (doc.root == nullptr) return lines;
  doc.root->Walk([&lines](const LingElement& e) {
    MediaSpan span = ResolveSpan(e, nullptr);
    if (!span.resolved) return;
    auto field = [](const std::string& value) {
      return value.empty() ? std::string("-") : value;
    };
    lines.push_back("SPAN " + field(span.path) + " " + field(span.uri) +
                    " " + field(span.unit) + " " + field(span.start) + " " +
                    field(span.length));
  });
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace lingds
