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

#include "support/gen.hpp"

#include <array>
#include <string>
#include <vector>

namespace lingds::test {
namespace {

constexpr std::array<const char*, 22> kWords = {
    "Tom",  "Mary", "Bill", "Sue",  "loves",  "wants",  "to",   "date",
    "with", "a",    "boy",  "girl", "saw",    "an",     "old",  "man",
    "flying", "planes", "good", "idea", "the", "house"};

constexpr std::array<ElementKind, 9> kAllKinds = {
    ElementKind::kLinguisticDocument, ElementKind::kHeading,
    ElementKind::kDivision,           ElementKind::kParagraph,
    ElementKind::kSentences,          ElementKind::kSentence,
    ElementKind::kHead,               ElementKind::kPhrase,
    ElementKind::kQuotation};

constexpr std::array<SynthesisKind, 8> kAllSynthesis = {
    SynthesisKind::kNone,         SynthesisKind::kDependency,
    SynthesisKind::kForward,      SynthesisKind::kBackward,
    SynthesisKind::kCoordination, SynthesisKind::kApposition,
    SynthesisKind::kRepair,       SynthesisKind::kError};

constexpr std::array<const char*, 5> kTerms = {
    ":d:p1", ":d:top", ":u:boy", ":r:agent", "urn:example:cs:TestCS:2026:foo"};

TermRef MakeRef(std::string raw) {
  TermRef ref;
  ref.raw = std::move(raw);
  return ref;
}

class Generator {
 public:
  Generator(std::mt19937& rng, const GenOptions& opts) : rng_(rng), opts_(opts) {}

  Document Run() {
    Document doc;
    doc.root = Build(ElementKind::kLinguisticDocument, 0);
    if (doc.root->ElementChildren().empty()) {
      auto child = Build(ElementKind::kSentence, 1);
      doc.root->content.emplace_back(std::move(child));
    }
    if (Chance(0.5)) doc.root->lang = "en";
    if (Chance(0.4)) doc.aliases.Set("d", "urn:mpeg:mpeg7:cs:DeixisCS:2002");
    if (Chance(0.3)) doc.aliases.Set("x", "urn:example:cs:TestCS:2026");
    doc.root->Adopt();
    if (opts_.with_rewrites) Sprinkle(doc);
    doc.root->Adopt();
    return doc;
  }

 private:
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }
  std::string Word() { return kWords[Int(0, kWords.size() - 1)]; }
  std::string FreshId() { return "n" + std::to_string(id_counter_++); }

  std::vector<ElementKind> Admissible(ElementKind parent) {
    std::vector<ElementKind> kinds;
    for (ElementKind k : kAllKinds) {
      if (AdmitsChild(parent, k)) kinds.push_back(k);
    }
    return kinds;
  }

  std::unique_ptr<LingElement> Build(ElementKind kind, int depth) {
    auto elem = std::make_unique<LingElement>(kind);
    if (Chance(0.55)) elem->id = FreshId();
    if (IsSyntacticConstituent(kind)) {
      if (Chance(0.1)) elem->base_form = Word();
      if (Chance(0.08)) elem->function_word = "aux";
    }
    if (Chance(0.12)) elem->synthesis = kAllSynthesis[Int(0, kAllSynthesis.size() - 1)];
    std::vector<ElementKind> kinds = Admissible(kind);
    const double token_p = IsSyntacticConstituent(kind) ? 0.6 : 0.25;
    int items = Int(0, opts_.max_children);
    for (int i = 0; i < items; ++i) {
      if (depth >= opts_.max_depth || kinds.empty() || Chance(token_p)) {
        std::string text = Word();
        if (Chance(0.15)) text += Chance(0.5) ? "," : ".";
        text += " ";
        elem->content.emplace_back(TextRun{std::move(text)});
      } else {
        elem->content.emplace_back(Build(kinds[Int(0, kinds.size() - 1)], depth + 1));
      }
    }
    return elem;
  }

  static bool HasRewrite(const LingElement& e) {
    bool found = false;
    e.Walk([&found](const LingElement& d) {
      if (!d.copy.empty() || d.substitute.has_value() || !d.no_copy.empty())
        found = true;
    });
    return found;
  }

  static bool Disjoint(const LingElement& a, const LingElement& b) {
    return &a != &b && !a.IsAncestorOf(b) && !b.IsAncestorOf(a);
  }

  void Sprinkle(Document& doc) {
    std::vector<LingElement*> elems;
    doc.root->Walk([&elems](LingElement& e) { elems.push_back(&e); });
    std::vector<std::string> ids;
    for (const LingElement* e : elems) {
      if (!e->id.empty()) ids.push_back(e->id);
    }
    auto random_id = [&]() { return ids[Int(0, ids.size() - 1)]; };

    for (LingElement* e : elems) {
      if (e->parent() == nullptr) continue;
      if (!ids.empty() && Chance(0.08)) e->depend = MakeRef("#" + random_id());
      if (!ids.empty() && Chance(0.08)) {
        e->equal.push_back(MakeRef("#" + random_id()));
        if (Chance(0.25)) e->equal.push_back(MakeRef("#" + random_id()));
      }
      if (!ids.empty() && Chance(0.04)) e->in_scope = MakeRef("#" + random_id());
      if (Chance(0.1)) {
        e->semantics.push_back(MakeRef(kTerms[Int(0, kTerms.size() - 1)]));
        if (Chance(0.2)) e->semantics.push_back(MakeRef(kTerms[Int(0, kTerms.size() - 1)]));
      }
      if (Chance(0.04)) e->operators.push_back(MakeRef(Chance(0.5) ? ":v:and" : ":r:agent"));
      if (Chance(0.03)) e->compound_semantics.push_back(MakeRef(":u:boy"));
      if (Chance(0.04)) {
        constexpr std::array<const char*, 3> kEdits = {":", ":,", "um:"};
        e->edit = kEdits[Int(0, 2)];
      }
      if (!ids.empty() && Chance(0.05)) {
        RelationDecl rel;
        rel.type = MakeRef(":r:agent");
        rel.target.push_back(MakeRef("#" + random_id()));
        e->relations.push_back(std::move(rel));
      }
      if (Chance(0.04)) {
        MediaLocator loc;
        loc.uri = "media/stream.bin";
        loc.section = MediaLocator::Section::kBytePosition;
        loc.start = std::to_string(Int(0, 64));
        loc.length = std::to_string(Int(8, 128));
        e->locators.push_back(std::move(loc));
      }
      if (Chance(0.05)) {
        e->start = std::to_string(Int(0, 50));
        e->length = std::to_string(Int(1, 20));
      }
    }

    // Copy/substitute pairs. Sources must stay rewrite-free and no
    // copier may sit inside a chosen source, otherwise expansion would
    // need more than one pass.
    std::vector<const LingElement*> sources;
    int attempts = Int(0, 2);
    for (int a = 0; a < attempts; ++a) {
      LingElement* copier = elems[Int(0, elems.size() - 1)];
      if (copier->parent() == nullptr || !copier->copy.empty()) continue;
      bool inside_source = false;
      for (const LingElement* s : sources) {
        if (s->IsAncestorOf(*copier) || s == copier) inside_source = true;
      }
      if (inside_source) continue;
      std::vector<LingElement*> pool;
      for (LingElement* s : elems) {
        if (s->id.empty() || s->parent() == nullptr) continue;
        if (!Disjoint(*s, *copier) || HasRewrite(*s)) continue;
        if (!AdmitsChild(copier->parent()->kind(), s->kind())) continue;
        pool.push_back(s);
      }
      if (pool.empty()) continue;
      LingElement* source = pool[Int(0, pool.size() - 1)];
      copier->copy.push_back(MakeRef("#" + source->id));
      sources.push_back(source);
      if (Chance(0.25)) {
        LingElement* second = pool[Int(0, pool.size() - 1)];
        if (second != source && Disjoint(*second, *source)) {
          copier->copy.push_back(MakeRef("#" + second->id));
          sources.push_back(second);
        }
      }
      if (Chance(0.3)) {
        std::vector<const LingElement*> inner;
        source->Walk([&](const LingElement& d) {
          if (&d != source && !d.id.empty() &&
              AdmitsChild(copier->kind(), d.kind())) {
            inner.push_back(&d);
          }
        });
        if (!inner.empty()) {
          const LingElement* target = inner[Int(0, inner.size() - 1)];
          auto sub = Build(target->kind(), opts_.max_depth - 1);
          sub->substitute = MakeRef("#" + target->id);
          copier->content.emplace_back(std::move(sub));
        }
      }
    }
  }

  std::mt19937& rng_;
  GenOptions opts_;
  int id_counter_ = 0;
};

}  // namespace

Document GenerateDocument(std::mt19937& rng, const GenOptions& opts) {
  return Generator(rng, opts).Run();
}

}  // namespace lingds::test
