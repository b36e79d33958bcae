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

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

#include "lingds/dependency.hpp"

namespace lingds {

namespace {

// Appends a run, merging with a preceding run so the model never holds
// two adjacent text items.
void AppendRun(std::vector<ContentItem>& content, const std::string& text) {
  if (text.empty()) return;
  if (!content.empty() && std::holds_alternative<TextRun>(content.back())) {
    std::get<TextRun>(content.back()).text += text;
  } else {
    content.emplace_back(TextRun{text});
  }
}

void EmitOriginal(const LingElement& element, std::string& original,
                  std::size_t& annotated_offset, EditLog& log) {
  if (element.edit.has_value()) {
    // The outermost edit shadows any nested ones.
    std::string payload = element.edit->substr(1);
    std::string replacement = element.InnerText();
    log.entries.push_back(EditEntry{element.Path(), payload, replacement,
                                    original.size(), annotated_offset});
    original += payload;
    annotated_offset += replacement.size();
    return;
  }
  for (const auto& item : element.content) {
    if (const auto* run = std::get_if<TextRun>(&item)) {
      original += run->text;
      annotated_offset += run->text.size();
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&item)) {
      EmitOriginal(**child, original, annotated_offset, log);
    }
  }
}

}  // namespace

std::string EditLog::ApplyInverse(const std::string& original) const {
  std::string out = original;
  // Right-to-left replay keeps earlier offsets valid.
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    out.replace(it->offset_original, it->original.size(), it->replacement);
  }
  return out;
}

OriginalText ReconstructOriginal(const Document& doc) {
  OriginalText out;
  if (doc.root == nullptr) return out;
  std::size_t annotated_offset = 0;
  EmitOriginal(*doc.root, out.text, annotated_offset, out.log);
  return out;
}

std::string FreshId(const std::string& base,
                    const std::set<std::string>& taken) {
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (taken.find(candidate) == taken.end()) return candidate;
  }
}

namespace {

bool InsideOrSelf(const LingElement* ancestor, const LingElement* element) {
  return ancestor == element || ancestor->IsAncestorOf(*element);
}

// Elements of the copier subtree carrying substitute, outermost-first;
// a consumed substitution hides any nested inside it.
void CollectSubstitutes(const LingElement& element,
                        std::vector<const LingElement*>& out) {
  for (const LingElement* child : element.ElementChildren()) {
    if (child->substitute.has_value()) {
      out.push_back(child);
    } else {
      CollectSubstitutes(*child, out);
    }
  }
}

// Sibling-arc pairs (dependant element, governor element) within the
// subtree under `root`, with explicit depend references overriding.
std::vector<std::pair<const LingElement*, const LingElement*>> ElementArcs(
    const LingElement& root,
    const std::map<std::string, const LingElement*>& ids) {
  std::vector<std::pair<const LingElement*, const LingElement*>> arcs;
  Diagnostics scratch;
  root.Walk([&](const LingElement& parent) {
    DepGroup group = ResolveElement(parent, scratch);
    for (const DepArc& arc : group.arcs) {
      if (arc.dependant.IsToken() || arc.governor.IsToken()) continue;
      const LingElement* dependant = arc.dependant.element;
      if (dependant->depend.has_value()) continue;  // overridden below
      arcs.emplace_back(dependant, arc.governor.element);
    }
  });
  root.Walk([&](const LingElement& element) {
    if (!element.depend.has_value() || !element.depend->local) return;
    auto it = ids.find(element.depend->LocalId());
    if (it != ids.end()) arcs.emplace_back(&element, it->second);
  });
  return arcs;
}

// Closes an exclusion set over dependants: whatever leans on excluded
// material goes with it.
void CloseOverDependants(
    const LingElement& source,
    const std::map<std::string, const LingElement*>& ids,
    std::set<const LingElement*>& excluded) {
  auto arcs = ElementArcs(source, ids);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [dependant, governor] : arcs) {
      if (excluded.count(governor) != 0 && excluded.count(dependant) == 0) {
        excluded.insert(dependant);
        changed = true;
      }
    }
  }
}

const LingElement* ResolveLocal(
    const TermRef& ref, const std::map<std::string, const LingElement*>& ids) {
  if (!ref.local) return nullptr;
  auto it = ids.find(ref.LocalId());
  return it == ids.end() ? nullptr : it->second;
}

CopyPlan MakePlan(const LingElement& copier,
                  std::vector<const LingElement*> sources,
                  const std::map<std::string, const LingElement*>& ids,
                  bool implicit) {
  CopyPlan plan;
  plan.copier = &copier;
  plan.sources = std::move(sources);
  plan.implicit = implicit;
  for (const TermRef& ref : copier.no_copy) {
    const LingElement* target = ResolveLocal(ref, ids);
    if (target == nullptr) {
      throw NormalizeError("noCopy target '" + ref.raw + "' at " +
                           copier.Path() + " not found");
    }
    if (InsideOrSelf(target, &copier)) {
      plan.ancestor_excluded.push_back(target);
    } else {
      plan.excluded.push_back(target);
    }
  }
  // Substitution targets must land inside the copied material.
  std::vector<const LingElement*> substitutes;
  CollectSubstitutes(copier, substitutes);
  for (const LingElement* sub : substitutes) {
    const LingElement* target = ResolveLocal(*sub->substitute, ids);
    if (target == nullptr) {
      throw NormalizeError("substitute target '" + sub->substitute->raw +
                           "' at " + sub->Path() + " not found");
    }
    bool inside = false;
    for (const LingElement* source : plan.sources) {
      if (InsideOrSelf(source, target)) inside = true;
    }
    if (!inside) {
      throw NormalizeError("substitute target '" + sub->substitute->raw +
                           "' at " + sub->Path() +
                           " lies outside every copy source");
    }
  }
  return plan;
}

bool CoordinationFamily(SynthesisKind kind) {
  return kind == SynthesisKind::kCoordination ||
         kind == SynthesisKind::kApposition ||
         kind == SynthesisKind::kRepair || kind == SynthesisKind::kError;
}

// A child without copy whose substitutes all point into one sibling is
// an elided conjunct; the copy of that sibling is recoverable.
std::optional<const LingElement*> ImplicitSource(
    const LingElement& parent, const LingElement& child,
    const std::map<std::string, const LingElement*>& ids,
    Diagnostics& diags) {
  std::vector<const LingElement*> substitutes;
  CollectSubstitutes(child, substitutes);
  if (substitutes.empty()) return std::nullopt;
  const LingElement* common = nullptr;
  for (const LingElement* sub : substitutes) {
    const LingElement* target = ResolveLocal(*sub->substitute, ids);
    if (target == nullptr) return std::nullopt;
    const LingElement* sibling = nullptr;
    for (const LingElement* candidate : parent.ElementChildren()) {
      if (candidate == &child) continue;
      if (InsideOrSelf(candidate, target)) sibling = candidate;
    }
    if (sibling == nullptr) return std::nullopt;
    if (common != nullptr && common != sibling) {
      diags.Warning("implicit-copy", child.Path(),
                    "substitutes point into more than one sibling; no "
                    "copy recovered");
      return std::nullopt;
    }
    common = sibling;
  }
  return common;
}

void CheckAcyclic(const std::vector<CopyPlan>& plans) {
  for (const CopyPlan& plan : plans) {
    for (const LingElement* source : plan.sources) {
      if (InsideOrSelf(plan.copier, source)) {
        throw NormalizeError("cyclic copy: source " + source->Path() +
                             " lies inside copier " + plan.copier->Path());
      }
      if (source->IsAncestorOf(*plan.copier) &&
          plan.ancestor_excluded.empty()) {
        throw NormalizeError("cyclic copy: copier " + plan.copier->Path() +
                             " lies inside its own source " + source->Path() +
                             " with nothing excluded");
      }
    }
  }
  // Chains: expanding plan a duplicates plan b's copier when b sits
  // inside a's sources.
  auto reaches = [&plans](const CopyPlan& a, const CopyPlan& b) {
    for (const LingElement* source : a.sources) {
      if (!InsideOrSelf(source, b.copier)) continue;
      bool cut = false;
      for (const LingElement* excluded : a.excluded) {
        if (InsideOrSelf(excluded, b.copier)) cut = true;
      }
      for (const LingElement* excluded : a.ancestor_excluded) {
        if (InsideOrSelf(excluded, b.copier)) cut = true;
      }
      if (!cut) return true;
    }
    return false;
  };
  std::size_t n = plans.size();
  // Colors: 0 fresh, 1 on stack, 2 done.
  std::vector<int> color(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    color[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !reaches(plans[i], plans[j])) continue;
      if (color[j] == 1) {
        throw NormalizeError("cyclic copy chain through " +
                             plans[i].copier->Path() + " and " +
                             plans[j].copier->Path());
      }
      if (color[j] == 0) visit(j);
    }
    color[i] = 2;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (color[i] == 0) visit(i);
  }
}

}  // namespace

std::vector<CopyPlan> PlanCopies(const Document& doc, Diagnostics& diags) {
  std::vector<CopyPlan> plans;
  if (doc.root == nullptr) return plans;
  std::map<std::string, const LingElement*> ids = IdIndex(*doc.root);
  doc.root->Walk([&](const LingElement& element) {
    if (!element.copy.empty()) {
      std::vector<const LingElement*> sources;
      for (const TermRef& ref : element.copy) {
        const LingElement* source = ResolveLocal(ref, ids);
        if (source == nullptr) {
          throw NormalizeError("copy target '" + ref.raw + "' at " +
                               element.Path() + " not found");
        }
        sources.push_back(source);
      }
      plans.push_back(MakePlan(element, std::move(sources), ids, false));
      return;
    }
    if (element.parent() == nullptr ||
        !CoordinationFamily(element.parent()->EffectiveSynthesis())) {
      return;
    }
    auto source = ImplicitSource(*element.parent(), element, ids, diags);
    if (source.has_value()) {
      plans.push_back(MakePlan(element, {*source}, ids, true));
    }
  });
  // Walk order is preorder, so plans already run outermost-first with
  // document order among siblings.
  CheckAcyclic(plans);
  return plans;
}

namespace {

// Context and bookkeeping for applying one plan to a mutable tree.
class PlanApplier {
 public:
  PlanApplier(Document& doc, const CopyPlan& plan, Diagnostics& diags,
              std::set<std::string>& taken)
      : doc_(doc), plan_(plan), diags_(diags), taken_(taken),
        ids_(IdIndex(*doc.root)) {}

  void Apply() {
    BuildExclusions();
    BuildSubstitutions();
    BuildRenames();
    std::vector<std::unique_ptr<LingElement>> copies;
    for (const LingElement* source : plan_.sources) {
      auto copy = CopyFiltered(*source);
      Remap(*copy, Context::kRebind);
      copies.push_back(std::move(copy));
    }
    if (plan_.ancestor_excluded.empty()) {
      ReplaceCopier(std::move(copies));
    } else {
      RewriteOutOfLine(std::move(copies));
    }
    doc_.root->Adopt();
  }

 private:
  enum class Context { kRebind, kKeep };

  void BuildExclusions() {
    for (const LingElement* e : plan_.excluded) excluded_.insert(e);
    for (const LingElement* e : plan_.ancestor_excluded) excluded_.insert(e);
    for (const LingElement* source : plan_.sources) {
      CloseOverDependants(*source, ids_, excluded_);
    }
  }

  void BuildSubstitutions() {
    std::vector<const LingElement*> substitutes;
    CollectSubstitutes(*plan_.copier, substitutes);
    for (const LingElement* sub : substitutes) {
      const LingElement* target = ResolveLocal(*sub->substitute, ids_);
      if (target == nullptr || excluded_.count(target) != 0) {
        throw NormalizeError("substitute target '" + sub->substitute->raw +
                             "' at " + sub->Path() +
                             " is not part of the copied material");
      }
      substitutions_[target] = sub;
    }
  }

  // Fresh names for every id defined in the copied material. The first
  // copy root takes over the copier's id; substituted slots take the
  // replacement's own id when it has one.
  void BuildRenames() {
    bool first_source = true;
    for (const LingElement* source : plan_.sources) {
      source->Walk([&](const LingElement& element) {
        if (Omitted(element) || element.id.empty()) return;
        auto sub = substitutions_.find(&element);
        if (sub != substitutions_.end() && !sub->second->id.empty()) {
          renames_[element.id] = sub->second->id;
          return;
        }
        if (first_source && &element == source && !plan_.copier->id.empty()) {
          renames_[element.id] = plan_.copier->id;
          return;
        }
        std::string fresh = FreshId(element.id, taken_);
        taken_.insert(fresh);
        renames_[element.id] = fresh;
      });
      first_source = false;
    }
  }

  bool Omitted(const LingElement& element) const {
    for (const LingElement* e = &element; e != nullptr; e = e->parent()) {
      if (excluded_.count(e) != 0) return true;
    }
    return false;
  }

  std::unique_ptr<LingElement> CopyFiltered(const LingElement& source) {
    auto sub = substitutions_.find(&source);
    if (sub != substitutions_.end()) {
      // Instantiation: the replacement stands where the target stood.
      auto graft = sub->second->Clone();
      graft->substitute.reset();
      if (graft->id.empty() && !source.id.empty()) {
        graft->id = renames_.at(source.id);
      }
      grafted_.insert(graft.get());
      return graft;
    }
    auto copy = std::make_unique<LingElement>(source.kind());
    copy->id = source.id;
    copy->lang = source.lang;
    copy->elem_type = source.elem_type;
    copy->depend = source.depend;
    copy->equal = source.equal;
    copy->semantics = source.semantics;
    copy->compound_semantics = source.compound_semantics;
    copy->operators = source.operators;
    copy->copy = source.copy;
    copy->no_copy = source.no_copy;
    copy->substitute = source.substitute;
    copy->in_scope = source.in_scope;
    copy->edit = source.edit;
    copy->base_form = source.base_form;
    copy->function_word = source.function_word;
    copy->synthesis = source.synthesis;
    copy->start = source.start;
    copy->length = source.length;
    copy->non_linear = source.non_linear;
    copy->locators = source.locators;
    copy->relations = source.relations;
    copy->extra_attrs = source.extra_attrs;
    for (const auto& item : source.content) {
      if (const auto* run = std::get_if<TextRun>(&item)) {
        AppendRun(copy->content, run->text);
      } else if (const auto* child =
                     std::get_if<std::unique_ptr<LingElement>>(&item)) {
        if (excluded_.count(child->get()) != 0) continue;
        copy->content.emplace_back(CopyFiltered(**child));
      } else {
        copy->content.emplace_back(std::get<OpaqueXml>(item));
      }
    }
    copy_of_[&source] = copy.get();
    return copy;
  }

  void RemapRef(TermRef& ref) const {
    if (!ref.local) return;
    auto it = renames_.find(ref.LocalId());
    if (it == renames_.end()) return;
    ref.raw = "#" + it->second;
  }

  void RemapList(TermRefList& refs) const {
    for (TermRef& ref : refs) RemapRef(ref);
  }

  // Renames ids unconditionally; rebinds local references only when the
  // governing scope introducer sits inside the copied material (sloppy
  // identity). References under an outside introducer keep their
  // original referent (strict identity). Grafted replacements were
  // written outside the abstraction and keep all their references.
  void Remap(LingElement& element, Context inherited) {
    if (grafted_.count(&element) != 0) return;
    Context context = inherited;
    if (element.in_scope.has_value()) {
      const TermRef& introducer = *element.in_scope;
      bool inside = introducer.local &&
                    renames_.count(introducer.LocalId()) != 0;
      context = inside ? Context::kRebind : Context::kKeep;
    }
    if (!element.id.empty()) {
      auto it = renames_.find(element.id);
      if (it != renames_.end()) element.id = it->second;
    }
    if (context == Context::kRebind) {
      if (element.elem_type.has_value()) RemapRef(*element.elem_type);
      if (element.depend.has_value()) RemapRef(*element.depend);
      RemapList(element.equal);
      RemapList(element.semantics);
      RemapList(element.compound_semantics);
      RemapList(element.operators);
      RemapList(element.copy);
      RemapList(element.no_copy);
      if (element.substitute.has_value()) RemapRef(*element.substitute);
      if (element.in_scope.has_value()) RemapRef(*element.in_scope);
      for (RelationDecl& relation : element.relations) {
        if (relation.type.has_value()) RemapRef(*relation.type);
        RemapList(relation.type_list);
        RemapList(relation.source);
        RemapList(relation.target);
        RemapList(relation.general_source);
        RemapList(relation.general_target);
      }
    }
    for (LingElement* child : element.ElementChildren()) {
      Remap(*child, context);
    }
  }

  // The copier's slot receives the copies, in source order.
  void ReplaceCopier(std::vector<std::unique_ptr<LingElement>> copies) {
    LingElement* parent = MutableParentOfCopier();
    int slot = plan_.copier->content_index();
    auto& content = parent->content;
    content.erase(content.begin() + slot);
    for (std::size_t i = 0; i < copies.size(); ++i) {
      content.insert(content.begin() + slot + static_cast<int>(i),
                     std::move(copies[i]));
    }
  }

  // Ancestor exclusion: the copier becomes a fresh phrase coreferent
  // with the copy of the minimal containing phrase, and the copied
  // stream moves out of line after the source.
  void RewriteOutOfLine(std::vector<std::unique_ptr<LingElement>> copies) {
    // The smallest excluded ancestor anchors the coreference.
    const LingElement* smallest = plan_.ancestor_excluded.front();
    for (const LingElement* e : plan_.ancestor_excluded) {
      if (smallest->IsAncestorOf(*e)) smallest = e;
    }
    const LingElement* anchor = smallest->parent();
    while (anchor != nullptr && copy_of_.count(anchor) == 0) {
      anchor = anchor->parent();
    }
    if (anchor == nullptr) {
      throw NormalizeError("no copied phrase contains the noCopy target " +
                           smallest->Path());
    }
    diags_.Info("minimal-phrase", plan_.copier->Path(),
                "coreference anchored at the nearest copied ancestor " +
                    anchor->Path());
    LingElement* anchor_copy = copy_of_.at(anchor);
    if (anchor_copy->id.empty()) {
      anchor_copy->id = FreshId("ref", taken_);
      taken_.insert(anchor_copy->id);
    }
    auto phrase = std::make_unique<LingElement>(plan_.copier->kind());
    phrase->id = plan_.copier->id;
    TermRef coref;
    coref.raw = "#" + anchor_copy->id;
    coref.local = true;
    coref.resolved = true;
    phrase->equal.push_back(std::move(coref));

    LingElement* parent = MutableParentOfCopier();
    parent->content[plan_.copier->content_index()] = std::move(phrase);

    auto container =
        std::make_unique<LingElement>(ContainerKind(copies.front()->kind()));
    container->non_linear = true;
    container->synthesis = SynthesisKind::kNone;
    for (auto& copy : copies) container->content.emplace_back(std::move(copy));

    const LingElement* source = plan_.sources.front();
    if (source->parent() == nullptr) {
      doc_.root->content.emplace_back(std::move(container));
    } else {
      LingElement* source_parent = Mutable(source->parent());
      source_parent->content.insert(
          source_parent->content.begin() + source->content_index() + 1,
          std::move(container));
    }
  }

  // A container kind that admits `kind` and is admissible wherever
  // `kind` itself is.
  static ElementKind ContainerKind(ElementKind kind) {
    switch (kind) {
      case ElementKind::kSentence:
      case ElementKind::kSentences:
        return ElementKind::kSentences;
      case ElementKind::kHead:
      case ElementKind::kPhrase:
        return ElementKind::kPhrase;
      case ElementKind::kHeading:
      case ElementKind::kParagraph:
      case ElementKind::kDivision:
        return ElementKind::kDivision;
      default:
        return ElementKind::kQuotation;
    }
  }

  // Plans are computed over the owned document, so shedding const to
  // edit in place is sound.
  static LingElement* Mutable(const LingElement* element) {
    return const_cast<LingElement*>(element);
  }

  LingElement* MutableParentOfCopier() {
    if (plan_.copier->parent() == nullptr) {
      throw NormalizeError("the outermost element cannot carry copy");
    }
    return Mutable(plan_.copier->parent());
  }

  Document& doc_;
  const CopyPlan& plan_;
  Diagnostics& diags_;
  std::set<std::string>& taken_;
  std::map<std::string, const LingElement*> ids_;
  std::set<const LingElement*> excluded_;
  std::map<const LingElement*, const LingElement*> substitutions_;
  std::map<std::string, std::string> renames_;
  std::map<const LingElement*, LingElement*> copy_of_;
  std::set<const LingElement*> grafted_;
};

}  // namespace

Document Expand(const Document& doc, Diagnostics& diags) {
  Document out = doc.CloneDoc();
  if (out.root == nullptr) return out;
  std::set<std::string> taken;
  for (const auto& [id, path] : IdTable(*out.root)) taken.insert(id);
  // Nested copiers surface once their containers are copied, so plan,
  // apply the batch, and plan again until quiet.
  for (int pass = 0;; ++pass) {
    if (pass > 64) {
      throw NormalizeError("copy expansion did not converge");
    }
    std::vector<CopyPlan> plans = PlanCopies(out, diags);
    if (plans.empty()) break;
    // A plan inside an already-applied copier was consumed by that
    // application; drop it from the batch.
    std::vector<const CopyPlan*> batch;
    std::vector<const LingElement*> applied;
    for (const CopyPlan& plan : plans) {
      bool consumed = false;
      for (const LingElement* copier : applied) {
        if (InsideOrSelf(copier, plan.copier)) consumed = true;
        for (const LingElement* source : plan.sources) {
          if (InsideOrSelf(copier, source)) consumed = true;
        }
      }
      if (consumed) continue;
      batch.push_back(&plan);
      applied.push_back(plan.copier);
    }
    for (const CopyPlan* plan : batch) {
      PlanApplier(out, *plan, diags, taken).Apply();
    }
  }
  // Rewrite attributes with no surviving plan are spent; drop them.
  out.root->Walk([&diags](LingElement& element) {
    if (!element.copy.empty() || !element.no_copy.empty() ||
        element.substitute.has_value()) {
      diags.Warning("orphan-rewrite", element.Path(),
                    "unused copy, noCopy, or substitute attribute dropped");
      element.copy.clear();
      element.no_copy.clear();
      element.substitute.reset();
    }
  });
  return out;
}

}  // namespace lingds
