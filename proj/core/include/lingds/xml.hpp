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
// Reading and writing Linguistic DS descriptions. The reader accepts a
// full Mpeg7 description wrapper or a bare linguistic fragment and
// preserves text runs byte-exactly; the writer emits a canonical form
// whose reparse reproduces the model.

#ifndef LINGDS_XML_H_
#define LINGDS_XML_H_

#include <string>
#include <string_view>

#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"

namespace lingds {

// Parses a description. Throws ParseError (with line and column) on
// malformed XML or malformed attribute values; recoverable oddities
// (unknown attributes, deprecated spellings) go to `diags`.
Document ParseDocument(std::string_view bytes, Diagnostics& diags);

// Resolves one term reference against the alias table: "#id" is local,
// ":alias:term" expands to "<alias uri>:term", full URIs pass through.
// The conventional aliases r, u, v, d fall back to their well-known
// scheme URIs when the document does not declare them. Unresolvable
// references come back with `resolved` false.
TermRef ResolveTermRef(std::string_view raw, const AliasTable& aliases);

// Splits a whitespace-separated reference list and resolves each entry.
TermRefList ResolveTermRefList(std::string_view raw, const AliasTable& aliases);

// Serializes to canonical form: UTF-8, attributes in byte order by
// name, no inserted whitespace, alias headers then locators then
// relations then content, text runs byte-identical to the model.
std::string SerializeCanonical(const Document& doc);

}  // namespace lingds

#endif  // LINGDS_XML_H_
