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

#include "lingds/normalize.hpp"

#include <set>
#include <string>

#include "doctest.h"
#include "lingds/dependency.hpp"
#include "lingds/document.hpp"
#include "lingds/schemes.hpp"
#include "lingds/semgraph.hpp"
#include "lingds/xml.hpp"
#include "support/fixtures.hpp"
#include "support/treecmp.hpp"

namespace lingds {
namespace {

using test::CompareDocs;
using test::LoadFixture;

Document ExpandFixture(const char* name, Diagnostics* out_diags = nullptr) {
  Document doc = LoadFixture(name);
  Diagnostics diags;
  Document expanded = Expand(doc, out_diags ? *out_diags : diags);
  return expanded;
}

// No copy, substitute, or noCopy annotation may survive expansion.
bool RewriteFree(const Document& doc) {
  bool clean = true;
  doc.root->Walk([&clean](const LingElement& e) {
    if (!e.copy.empty() || e.substitute.has_value() || !e.no_copy.empty())
      clean = false;
  });
  return clean;
}

const LingElement* ById(const Document& doc, const std::string& id) {
  auto index = IdIndex(*doc.root);
  auto it = index.find(id);
  return it == index.end() ? nullptr : it->second;
}

CompiledGraph CompileDoc(const Document& doc) {
  Diagnostics diags;
  Document expanded = Expand(doc, diags);
  DependencyGraph deps = ResolveDependencies(expanded, diags);
  SchemeRegistry registry = BuiltinRegistry();
  return Compile(expanded, deps, registry, diags);
}

TEST_CASE("single-source copy expands to the printed equivalent form") {
  Document expanded = ExpandFixture("snippet_copy.xml");
  Document expected = LoadFixture("snippet_copy_expected.xml");
  CHECK(SerializeCanonical(expanded) == SerializeCanonical(expected));
  CHECK(RewriteFree(expanded));
  CHECK(!Validate(expanded).HasErrors());
}

TEST_CASE("substitution grafts into the copy at the printed slot") {
  Document expanded = ExpandFixture("snippet_substitute.xml");
  Document expected = LoadFixture("snippet_substitute_expected.xml");
  CHECK(SerializeCanonical(expanded) == SerializeCanonical(expected));
  CHECK(RewriteFree(expanded));
}

TEST_CASE("ellipsis expansion matches the explicit long form") {
  Document expanded = ExpandFixture("date.xml");
  Document expected = LoadFixture("date_expected.xml");
  auto diff = CompareDocs(expanded, expected);
  CHECK_MESSAGE(diff.equal, diff.message);
  CHECK(RewriteFree(expanded));
  CHECK(!Validate(expanded).HasErrors());
}

TEST_CASE("implicit copies are recovered from substitution targets") {
  Document doc = LoadFixture("date_implicit.xml");
  Diagnostics diags;
  auto plans = PlanCopies(doc, diags);
  bool implicit = false;
  for (const auto& plan : plans) {
    if (plan.implicit) implicit = true;
  }
  CHECK(implicit);
  Document expanded = Expand(doc, diags);
  Document expected = LoadFixture("date_expected.xml");
  auto diff = CompareDocs(expanded, expected);
  CHECK_MESSAGE(diff.equal, diff.message);
}

TEST_CASE("a multi-source copier expands to one sibling per source") {
  Document expanded = ExpandFixture("tall_heavy.xml");
  Document expected = LoadFixture("tall_heavy_expected.xml");
  auto diff = CompareDocs(expanded, expected);
  CHECK_MESSAGE(diff.equal, diff.message);
  CHECK(RewriteFree(expanded));
  // References into copied material are renamed plan-wide: the copied
  // "He" must point at the copied antecedent, not the original.
  const LingElement* original = ById(expanded, "TOM");
  const LingElement* copied = ById(expanded, "TOM1");
  REQUIRE(original != nullptr);
  REQUIRE(copied != nullptr);
  int hits = 0;
  expanded.root->Walk([&](const LingElement& e) {
    for (const TermRef& t : e.equal) {
      if (t.LocalId() == "TOM1") ++hits;
    }
  });
  CHECK(hits == 1);
}

TEST_CASE("a copier may instantiate a source of a different kind") {
  Document expanded = ExpandFixture("comparative.xml");
  const LingElement* copy = ById(expanded, "TomMary1");
  REQUIRE(copy != nullptr);
  CHECK(copy->kind() == ElementKind::kHead);
  const LingElement* grafted = ById(expanded, "MARY1");
  REQUIRE(grafted != nullptr);
  CHECK(grafted->InnerText() == "Sue ");
  CHECK(copy->IsAncestorOf(*grafted));
  CHECK(RewriteFree(expanded));
}

TEST_CASE("an excluded ancestor moves the copy out of line") {
  Diagnostics diags;
  Document expanded = ExpandFixture("nocopy_house.xml", &diags);
  CHECK(diags.CountRule("minimal-phrase") == 1);
  // The copier is left as a bare reference to the out-of-line copy.
  const LingElement* target = ById(expanded, "TomLivesInAHouse1");
  REQUIRE(target != nullptr);
  CHECK(target->kind() == ElementKind::kSentence);
  bool found_ref = false;
  const LingElement* container = target->parent();
  REQUIRE(container != nullptr);
  CHECK(container->kind() == ElementKind::kSentences);
  CHECK(container->non_linear);
  CHECK(container->synthesis == SynthesisKind::kNone);
  expanded.root->Walk([&](const LingElement& e) {
    if (e.equal.size() == 1 && e.equal[0].LocalId() == "TomLivesInAHouse1" &&
        e.kind() == ElementKind::kPhrase && e.content.empty()) {
      found_ref = true;
    }
  });
  CHECK(found_ref);
  CHECK(RewriteFree(expanded));
  CHECK(!Validate(expanded).HasErrors());
  // The rewritten document is a fixed point.
  Diagnostics again;
  CHECK(SerializeCanonical(Expand(expanded, again)) == SerializeCanonical(expanded));
}

TEST_CASE("expansion is idempotent on every rewrite fixture") {
  for (const char* name :
       {"snippet_copy.xml", "snippet_substitute.xml", "date.xml",
        "date_implicit.xml", "tall_heavy.xml", "comparative.xml",
        "nocopy_house.xml", "wife_strict.xml", "wife_sloppy.xml"}) {
    CAPTURE(name);
    Document once = ExpandFixture(name);
    Diagnostics diags;
    Document twice = Expand(once, diags);
    CHECK(SerializeCanonical(twice) == SerializeCanonical(once));
  }
}

TEST_CASE("expansion leaves rewrite-free documents byte-identical") {
  Document doc = LoadFixture("structure.xml");
  Diagnostics diags;
  CHECK(SerializeCanonical(Expand(doc, diags)) == SerializeCanonical(doc));
}

TEST_CASE("strict identity keeps the copied pronoun bound to the original") {
  CompiledGraph compiled = CompileDoc(LoadFixture("wife_strict.xml"));
  auto cluster = compiled.ClusterOf("/1/1");
  CHECK(cluster == std::vector<std::string>{"/1/1", "/1/3/1", "/3/3/1"});
}

TEST_CASE("sloppy identity rebinds the copied pronoun") {
  CompiledGraph compiled = CompileDoc(LoadFixture("wife_sloppy.xml"));
  auto copied = compiled.ClusterOf("/3/1");
  CHECK(copied == std::vector<std::string>{"/3/1", "/3/3/1"});
  auto original = compiled.ClusterOf("/1/1");
  CHECK(original == std::vector<std::string>{"/1/1", "/1/3/1"});
}

TEST_CASE("edit reconstruction restores the replaced text") {
  Document doc = LoadFixture("edit_loves.xml");
  OriginalText original = ReconstructOriginal(doc);
  REQUIRE(original.log.entries.size() == 1);
  const EditEntry& entry = original.log.entries[0];
  CHECK(entry.original == ",");
  CHECK(entry.replacement == " loves");
  CHECK(original.text.find("Bill,") != std::string::npos);
  // Only the unedited first "loves" survives reconstruction.
  CHECK(original.text.find("loves") == original.text.rfind("loves"));
  CHECK(original.text.substr(entry.offset_original, 1) == ",");
  CHECK(original.log.ApplyInverse(original.text) == doc.root->InnerText());
}

TEST_CASE("repair insertions vanish from the original") {
  Document doc = LoadFixture("repair.xml");
  OriginalText original = ReconstructOriginal(doc);
  CHECK(!original.log.entries.empty());
  for (const EditEntry& entry : original.log.entries) CHECK(entry.original.empty());
  CHECK(original.log.ApplyInverse(original.text) == doc.root->InnerText());
  CHECK(original.text.size() < doc.root->InnerText().size());
}

TEST_CASE("apposition edits round-trip through the log") {
  Document doc = LoadFixture("apposition.xml");
  OriginalText original = ReconstructOriginal(doc);
  CHECK(original.log.ApplyInverse(original.text) == doc.root->InnerText());
}

TEST_CASE("fresh ids take the smallest untaken positive suffix") {
  CHECK(FreshId("B", {}) == "B1");
  CHECK(FreshId("B", {"B", "B1", "B2"}) == "B3");
  CHECK(FreshId("B", {"B1", "B3"}) == "B2");
}

TEST_CASE("cyclic copies are rejected") {
  Diagnostics diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence id=\"A\" copy=\"#B\"/>\n"
      " <Sentence id=\"B\" copy=\"#A\"/>\n"
      "</Linguistic>\n",
      diags);
  CHECK_THROWS_AS(Expand(doc, diags), NormalizeError);
}

TEST_CASE("a substitution outside every copy source is rejected") {
  Diagnostics diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence id=\"A\"><Phrase id=\"B\">x </Phrase></Sentence>\n"
      " <Sentence id=\"D\"><Phrase id=\"E\">z </Phrase></Sentence>\n"
      " <Sentence copy=\"#A\"><Phrase substitute=\"#E\">y </Phrase></Sentence>\n"
      "</Linguistic>\n",
      diags);
  CHECK_THROWS_AS(Expand(doc, diags), NormalizeError);
}

TEST_CASE("a substitution with no recoverable copy is dropped with a warning") {
  Diagnostics parse_diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence><Phrase id=\"B\">x </Phrase><Phrase substitute=\"#B\">y "
      "</Phrase></Sentence>\n"
      "</Linguistic>\n",
      parse_diags);
  Diagnostics diags;
  Document expanded = Expand(doc, diags);
  CHECK(diags.CountRule("orphan-rewrite") == 1);
  CHECK(RewriteFree(expanded));
}

}  // namespace
}  // namespace lingds
