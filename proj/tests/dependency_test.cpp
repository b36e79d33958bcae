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

#include "lingds/dependency.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lingds/document.hpp"
#include "lingds/xml.hpp"
#include "support/fixtures.hpp"

namespace lingds {
namespace {

using test::LoadFixture;

std::vector<std::string> ArcsOf(const char* name) {
  Document doc = LoadFixture(name);
  Diagnostics diags;
  DependencyGraph graph = ResolveDependencies(doc, diags);
  return graph.ExportArcs(*doc.root);
}

// The head word of an element: the token at the root of its internal
// dependency forest, found recursively.
std::string HeadWord(const DependencyGraph& graph, const LingElement& element) {
  const DepGroup* group = graph.GroupOf(&element);
  if (group != nullptr && group->root.has_value()) {
    const DepNode& root = *group->root;
    if (root.IsToken()) return root.text;
    return HeadWord(graph, *root.element);
  }
  // Leaf: the element's own text.
  std::string text = element.InnerText();
  std::string word;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!word.empty()) break;
      continue;
    }
    word.push_back(c);
  }
  return word;
}

// Every resolved arc projected onto head words.
std::multiset<std::pair<std::string, std::string>> WordArcs(const char* name) {
  Document doc = LoadFixture(name);
  Diagnostics diags;
  DependencyGraph graph = ResolveDependencies(doc, diags);
  std::multiset<std::pair<std::string, std::string>> words;
  doc.root->Walk([&](const LingElement& e) {
    const DepGroup* group = graph.GroupOf(&e);
    if (group == nullptr) return;
    for (const DepArc& arc : group->arcs) {
      if (arc.certainty != Certainty::kResolved) continue;
      auto word_of = [&](const DepNode& node) {
        return node.IsToken() ? node.text : HeadWord(graph, *node.element);
      };
      words.insert({word_of(arc.dependant), word_of(arc.governor)});
    }
  });
  return words;
}

TEST_CASE("tokenize keeps offsets and attached punctuation") {
  auto tokens = Tokenize("Tom  loves Mary. ");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0] == Token{"Tom", 0});
  CHECK(tokens[1] == Token{"loves", 5});
  CHECK(tokens[2] == Token{"Mary.", 11});
  CHECK(Tokenize("   ").empty());
  CHECK(Tokenize("").empty());
}

TEST_CASE("forward synthesis chains each child to the next governor") {
  CHECK(ArcsOf("forward_flat.xml") ==
        std::vector<std::string>{
            "DEP\t/1/1/1\t/1/1/3\tresolved",
            "DEP\t/1/1/3\t/1/1/5\tresolved",
            "DEP\t/1/1/5\t/1/1/7\tresolved",
        });
}

TEST_CASE("backward synthesis chains each child to the previous governor") {
  CHECK(ArcsOf("backward_flat.xml") ==
        std::vector<std::string>{
            "DEP\t/1/1/3\t/1/1/1\tresolved",
            "DEP\t/1/1/5\t/1/1/3\tresolved",
        });
}

TEST_CASE("flat and nested bracketings resolve to the same word arcs") {
  auto flat = WordArcs("forward_flat.xml");
  auto nested = WordArcs("forward_nested.xml");
  CHECK(!flat.empty());
  CHECK(flat == nested);
  CHECK(flat == std::multiset<std::pair<std::string, std::string>>{
                    {"very", "quickly"}, {"quickly", "flying"}, {"flying", "planes"}});

  auto flat_b = WordArcs("backward_flat.xml");
  auto nested_b = WordArcs("backward_nested.xml");
  CHECK(!flat_b.empty());
  CHECK(flat_b == nested_b);
}

TEST_CASE("a depend attribute overrides the sibling governor") {
  auto arcs = ArcsOf("extraposition.xml");
  CHECK(arcs.size() == 7);
  CHECK(std::find(arcs.begin(), arcs.end(), "DEP\t/1/1\t/1/5/3\tresolved") != arcs.end());
  // A bare comma token governs the extraposed phrase's surface slot.
  CHECK(std::find(arcs.begin(), arcs.end(), "DEP\t/1/3\t/1@2.0\tresolved") != arcs.end());
  CHECK(std::find(arcs.begin(), arcs.end(), "DEP\t/1@4.0\t/1@2.0\tresolved") != arcs.end());
}

TEST_CASE("two heads leave the governor choice open") {
  CHECK(ArcsOf("ambiguous_head.xml") ==
        std::vector<std::string>{
            "DEP\t/1/1/1\t/1/1/3\tambiguous",
            "DEP\t/1/1/1/1\t/1/1/1@2.0\tresolved",
            "DEP\t/1/1/3\t/1/1/1\tambiguous",
        });
  Document doc = LoadFixture("ambiguous_head.xml");
  Diagnostics diags;
  DependencyGraph graph = ResolveDependencies(doc, diags);
  CHECK(diags.CountRule("ambiguous-head") >= 1);
  const LingElement* phrase = doc.root->ElementChildren()[0]->ElementChildren()[0];
  const DepGroup* group = graph.GroupOf(phrase);
  REQUIRE(group != nullptr);
  CHECK(group->ambiguous);
  CHECK(group->candidates.size() == 2);
}

TEST_CASE("phrasal children attach to the single head") {
  CHECK(ArcsOf("good_idea.xml") ==
        std::vector<std::string>{
            "DEP\t/1/1/1\t/1/1/5\tresolved",
            "DEP\t/1/1/3\t/1/1/5\tresolved",
        });
}

TEST_CASE("bare tokens are dependency candidates") {
  CHECK(ArcsOf("flying_planes.xml") ==
        std::vector<std::string>{
            "DEP\t/1/1@0.0\t/1/1@0.1\tambiguous",
            "DEP\t/1/1@0.1\t/1/1@0.0\tambiguous",
        });
}

TEST_CASE("detailed bracketing resolves the inner reading and keeps the rest open") {
  auto arcs = ArcsOf("detailed_flying.xml");
  CHECK(std::find(arcs.begin(), arcs.end(),
                  "DEP\t/1/5/3/3/3/3/1\t/1/5/3/3/3/3/3\tresolved") != arcs.end());
  CHECK(std::find(arcs.begin(), arcs.end(),
                  "DEP\t/1/5/3/3/3/3\t/1/5/3/3/3/1\tambiguous") != arcs.end());
  CHECK(std::find(arcs.begin(), arcs.end(),
                  "DEP\t/1/5/3/3/3/3\t/1/5/3/3/3/5\tambiguous") != arcs.end());
}

TEST_CASE("coordination collects conjuncts in order") {
  Document doc = LoadFixture("edit_loves.xml");
  Diagnostics diags;
  DepGroup group = ResolveElement(*doc.root->ElementChildren()[0], diags);
  CHECK(group.coordination);
  REQUIRE(group.conjuncts.size() == 2);
  CHECK(group.conjuncts[0]->InnerText().find("Tom") != std::string::npos);
  CHECK(group.conjuncts[1]->InnerText().find("Bill") != std::string::npos);
  CHECK(group.erroneous.empty());
}

TEST_CASE("repair marks every conjunct but the last as erroneous") {
  Document doc = LoadFixture("repair.xml");
  const LingElement* repair = nullptr;
  doc.root->Walk([&](const LingElement& e) {
    if (e.synthesis == SynthesisKind::kRepair) repair = &e;
  });
  REQUIRE(repair != nullptr);
  Diagnostics diags;
  DepGroup group = ResolveElement(*repair, diags);
  CHECK(group.coordination);
  REQUIRE(group.conjuncts.size() == 2);
  REQUIRE(group.erroneous.size() == 1);
  CHECK(group.erroneous[0] == group.conjuncts[0]);
}

TEST_CASE("apposition conjuncts are not erroneous") {
  Document doc = LoadFixture("apposition.xml");
  const LingElement* appo = nullptr;
  doc.root->Walk([&](const LingElement& e) {
    if (e.synthesis == SynthesisKind::kApposition) appo = &e;
  });
  REQUIRE(appo != nullptr);
  Diagnostics diags;
  DepGroup group = ResolveElement(*appo, diags);
  CHECK(group.coordination);
  CHECK(group.erroneous.empty());
}

TEST_CASE("error synthesis marks every conjunct erroneous") {
  Diagnostics parse_diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence synthesis=\"error\"><Phrase>a </Phrase><Phrase>b </Phrase>"
      "</Sentence>\n"
      "</Linguistic>\n",
      parse_diags);
  Diagnostics diags;
  DepGroup group = ResolveElement(*doc.root->ElementChildren()[0], diags);
  CHECK(group.erroneous.size() == 2);
}

TEST_CASE("a forward group of phrases alone has no possible head") {
  Diagnostics parse_diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence synthesis=\"forward\"><Phrase>a </Phrase><Phrase>b </Phrase>"
      "</Sentence>\n"
      "</Linguistic>\n",
      parse_diags);
  Diagnostics diags;
  DepGroup group = ResolveElement(*doc.root->ElementChildren()[0], diags);
  CHECK(group.unresolved_head);
  CHECK(group.arcs.empty());
  CHECK(diags.CountRule("unresolved-head") == 1);
}

TEST_CASE("a dangling depend reference warns and falls back") {
  Diagnostics parse_diags;
  Document doc = ParseDocument(
      "<Linguistic>\n"
      " <Sentence><Phrase depend=\"#nowhere\">a </Phrase><Head>b </Head>"
      "</Sentence>\n"
      "</Linguistic>\n",
      parse_diags);
  Diagnostics diags;
  DependencyGraph graph = ResolveDependencies(doc, diags);
  CHECK(diags.CountRule("depend-target") == 1);
  auto arcs = graph.ExportArcs(*doc.root);
  CHECK(std::find(arcs.begin(), arcs.end(), "DEP\t/1/1\t/1/3\tresolved") != arcs.end());
}

// Independent check of governor assignment: enumerate every possible
// forest over element-only children and keep those that satisfy the
// declarative constraints (phrasals never govern; the governor lies in
// the preferred direction when a candidate exists there, with no
// nearer candidate in between; single root; acyclic). Exactly one
// forest must survive, and it must be the resolved one.
namespace forest {

struct Child {
  bool phrasal;
};

struct Survivor {
  std::vector<int> gov;  // index per child, -1 for the root
};

std::vector<Survivor> Enumerate(const std::vector<Child>& children, bool forward) {
  const int n = static_cast<int>(children.size());
  std::vector<Survivor> result;
  std::vector<int> gov(n, -1);
  auto nearer_between = [&](int from, int to) {
    int lo = std::min(from, to), hi = std::max(from, to);
    for (int k = lo + 1; k < hi; ++k) {
      if (!children[k].phrasal) return true;
    }
    return false;
  };
  auto dir_candidate = [&](int i) {
    if (forward) {
      for (int k = i + 1; k < n; ++k)
        if (!children[k].phrasal) return true;
    } else {
      for (int k = i - 1; k >= 0; --k)
        if (!children[k].phrasal) return true;
    }
    return false;
  };
  auto acyclic_single_root = [&]() {
    int roots = 0;
    for (int i = 0; i < n; ++i)
      if (gov[i] < 0) ++roots;
    if (roots != 1) return false;
    for (int i = 0; i < n; ++i) {
      int steps = 0, k = i;
      while (k >= 0 && steps <= n) {
        k = gov[k];
        ++steps;
      }
      if (steps > n) return false;
    }
    return true;
  };
  auto legal = [&](int i) {
    // An element with a candidate in the preferred direction is never
    // the head of the group.
    if (gov[i] < 0) return !dir_candidate(i);
    int g = gov[i];
    if (g == i || children[g].phrasal) return false;
    bool in_dir = forward ? g > i : g < i;
    if (dir_candidate(i) && !in_dir) return false;
    if (nearer_between(i, g)) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int k = 0; k < n; ++k)
        if (!legal(k)) return;
      if (!acyclic_single_root()) return;
      result.push_back({gov});
      return;
    }
    for (int g = -1; g < n; ++g) {
      gov[i] = g;
      rec(i + 1);
    }
    gov[i] = -1;
  };
  rec(0);
  return result;
}

}  // namespace forest

TEST_CASE("brute-force forest oracle agrees on every shape up to six children") {
  for (int n = 2; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (bool forward : {true, false}) {
        std::vector<forest::Child> children;
        std::string xml = "<Linguistic>\n <Sentence synthesis=\"";
        xml += forward ? "forward" : "backward";
        xml += "\">";
        for (int i = 0; i < n; ++i) {
          bool phrasal = (mask >> i) & 1;
          children.push_back({phrasal});
          xml += phrasal ? "<Phrase>p </Phrase>" : "<Head>h </Head>";
        }
        xml += "</Sentence>\n</Linguistic>\n";
        CAPTURE(xml);
        Diagnostics parse_diags;
        Document doc = ParseDocument(xml, parse_diags);
        Diagnostics diags;
        DepGroup group = ResolveElement(*doc.root->ElementChildren()[0], diags);
        auto survivors = forest::Enumerate(children, forward);
        if (mask == (1 << n) - 1) {
          // All-phrasal: nothing can govern.
          CHECK(survivors.empty());
          CHECK(group.unresolved_head);
          continue;
        }
        REQUIRE(survivors.size() == 1);
        CHECK(!group.ambiguous);
        REQUIRE(group.root.has_value());
        const auto& gov = survivors[0].gov;
        // Compare the unique surviving forest with the resolved arcs.
        std::set<std::pair<int, int>> expected;
        int expected_root = -1;
        for (int i = 0; i < n; ++i) {
          if (gov[i] < 0) {
            expected_root = i;
          } else {
            expected.insert({i, gov[i]});
          }
        }
        std::set<std::pair<int, int>> actual;
        auto ordinal = [&](const DepNode& node) { return node.element->content_index(); };
        for (const DepArc& arc : group.arcs) {
          actual.insert({ordinal(arc.dependant), ordinal(arc.governor)});
        }
        CHECK(actual == expected);
        CHECK(ordinal(*group.root) == expected_root);
      }
    }
  }
}

}  // namespace
}  // namespace lingds
