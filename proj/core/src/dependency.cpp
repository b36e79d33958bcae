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

namespace lingds {

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(Token{std::string(text.substr(start, i - start)),
                             static_cast<int>(start)});
    }
  }
  return tokens;
}

bool DepNode::Phrasal() const {
  if (IsToken()) return false;
  return element->Phrasal();
}

std::string DepNode::PathString() const {
  if (!IsToken()) return element->Path();
  return owner->Path() + "@" + std::to_string(content_index) + "." +
         std::to_string(token_index);
}

bool DepNode::SameNode(const DepNode& other) const {
  if (IsToken() != other.IsToken()) return false;
  if (!IsToken()) return element == other.element;
  return owner == other.owner && content_index == other.content_index &&
         token_index == other.token_index;
}

const char* CertaintyName(Certainty certainty) {
  return certainty == Certainty::kResolved ? "resolved" : "ambiguous";
}

namespace {

std::vector<DepNode> ChildNodes(const LingElement& element) {
  std::vector<DepNode> nodes;
  for (std::size_t slot = 0; slot < element.content.size(); ++slot) {
    const ContentItem& item = element.content[slot];
    if (const auto* text = std::get_if<TextRun>(&item)) {
      std::vector<Token> tokens = Tokenize(text->text);
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        DepNode node;
        node.owner = &element;
        node.content_index = static_cast<int>(slot);
        node.token_index = static_cast<int>(t);
        node.text = tokens[t].text;
        node.offset = tokens[t].offset;
        nodes.push_back(std::move(node));
      }
    } else if (const auto* child =
                   std::get_if<std::unique_ptr<LingElement>>(&item)) {
      DepNode node;
      node.element = child->get();
      nodes.push_back(std::move(node));
    }
    // Opaque content takes no part in dependency structure.
  }
  return nodes;
}

int NearestNonPhrasal(const std::vector<DepNode>& nodes, int from, int step) {
  for (int i = from + step; i >= 0 && i < static_cast<int>(nodes.size());
       i += step) {
    if (!nodes[i].Phrasal()) return i;
  }
  return -1;
}

void ResolveInternal(const std::vector<DepNode>& nodes, DepGroup& group) {
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (!nodes[i].Phrasal()) candidates.push_back(i);
  }
  if (candidates.empty()) {
    group.ambiguous = true;
    group.unresolved_head = true;
    return;
  }
  if (candidates.size() > 1) {
    group.ambiguous = true;
    for (int i : candidates) group.candidates.push_back(nodes[i]);
    return;
  }
  int head = candidates.front();
  group.root = nodes[head];
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (i == head) continue;
    group.arcs.push_back(DepArc{nodes[i], nodes[head], Certainty::kResolved});
  }
}

// Word order resolution: the head sits at one end, and every other node
// leans toward it, attaching to the nearest possible governor on the
// head side (falling back to the other side past the head).
void ResolveDirectional(const std::vector<DepNode>& nodes, int step,
                        DepGroup& group) {
  int head = -1;
  if (step > 0) {
    head = NearestNonPhrasal(nodes, static_cast<int>(nodes.size()), -1);
  } else {
    head = NearestNonPhrasal(nodes, -1, 1);
  }
  if (head < 0) {
    group.unresolved_head = true;
    return;
  }
  group.root = nodes[head];
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (i == head) continue;
    int governor = NearestNonPhrasal(nodes, i, step);
    if (governor < 0) governor = NearestNonPhrasal(nodes, i, -step);
    group.arcs.push_back(
        DepArc{nodes[i], nodes[governor], Certainty::kResolved});
  }
}

void ResolveCoordination(const LingElement& element,
                         const std::vector<DepNode>& nodes, DepGroup& group) {
  group.coordination = true;
  std::vector<const LingElement*> children = element.ElementChildren();
  const LingElement* op = nullptr;
  int with_operator = 0;
  for (const LingElement* child : children) {
    if (!child->operators.empty()) {
      ++with_operator;
      op = child;
    }
  }
  if (with_operator != 1) {
    op = nullptr;
    int heads = 0;
    for (const LingElement* child : children) {
      if (child->kind() == ElementKind::kHead) {
        ++heads;
        op = child;
      }
    }
    if (heads != 1) op = nullptr;
  }
  group.operator_child = op;
  for (const LingElement* child : children) {
    if (child != op) group.conjuncts.push_back(child);
  }
  SynthesisKind synthesis = element.EffectiveSynthesis();
  if (synthesis == SynthesisKind::kRepair && !group.conjuncts.empty()) {
    group.erroneous.assign(group.conjuncts.begin(),
                           group.conjuncts.end() - 1);
  } else if (synthesis == SynthesisKind::kError) {
    group.erroneous = group.conjuncts;
  }
  if (op == nullptr) return;
  // The conjunction governs its conjuncts and any loose tokens.
  for (const DepNode& node : nodes) {
    if (!node.IsToken() && node.element == op) {
      group.root = node;
      break;
    }
  }
  if (!group.root.has_value()) return;
  for (const DepNode& node : nodes) {
    if (node.SameNode(*group.root)) continue;
    group.arcs.push_back(DepArc{node, *group.root, Certainty::kResolved});
  }
}

}  // namespace

DepGroup ResolveElement(const LingElement& element, Diagnostics& diags) {
  DepGroup group;
  group.nodes = ChildNodes(element);
  if (group.nodes.empty()) return group;
  if (group.nodes.size() == 1) {
    // A sole child is the unit, phrasal or not.
    group.root = group.nodes.front();
    return group;
  }
  switch (element.EffectiveSynthesis()) {
    case SynthesisKind::kNone:
      break;
    case SynthesisKind::kDependency:
      ResolveInternal(group.nodes, group);
      break;
    case SynthesisKind::kForward:
      ResolveDirectional(group.nodes, 1, group);
      break;
    case SynthesisKind::kBackward:
      ResolveDirectional(group.nodes, -1, group);
      break;
    case SynthesisKind::kCoordination:
    case SynthesisKind::kApposition:
    case SynthesisKind::kRepair:
    case SynthesisKind::kError:
      ResolveCoordination(element, group.nodes, group);
      break;
  }
  if (group.unresolved_head) {
    diags.Warning("unresolved-head", element.Path(),
                  "no possible governor among the children");
  } else if (group.ambiguous) {
    diags.Info("ambiguous-head", element.Path(),
               std::to_string(group.candidates.size()) +
                   " governor candidates left open");
  }
  return group;
}

void DependencyGraph::SetGroup(const LingElement* parent, DepGroup group) {
  groups_[parent] = std::move(group);
}

const DepGroup* DependencyGraph::GroupOf(const LingElement* parent) const {
  auto it = groups_.find(parent);
  return it == groups_.end() ? nullptr : &it->second;
}

void DependencyGraph::SetExtraposed(const LingElement* dependant,
                                    const LingElement* governor) {
  extraposed_[dependant] = governor;
}

const LingElement* DependencyGraph::ExtraposedGovernor(
    const LingElement* dependant) const {
  auto it = extraposed_.find(dependant);
  return it == extraposed_.end() ? nullptr : it->second;
}

std::optional<DepNode> DependencyGraph::GovernorOf(
    const LingElement& child) const {
  if (const LingElement* target = ExtraposedGovernor(&child)) {
    DepNode node;
    node.element = target;
    return node;
  }
  const DepGroup* group = GroupOf(child.parent());
  if (group == nullptr) return std::nullopt;
  for (const DepArc& arc : group->arcs) {
    if (!arc.dependant.IsToken() && arc.dependant.element == &child) {
      return arc.governor;
    }
  }
  return std::nullopt;
}

std::vector<std::string> DependencyGraph::ExportArcs(
    const LingElement& root) const {
  std::vector<std::string> lines;
  auto emit = [&lines](const std::string& dependant,
                       const std::string& governor, Certainty certainty) {
    lines.push_back("DEP\t" + dependant + "\t" + governor + "\t" +
                    CertaintyName(certainty));
  };
  root.Walk([&](const LingElement& element) {
    const DepGroup* group = GroupOf(&element);
    if (group == nullptr) return;
    for (const DepArc& arc : group->arcs) {
      if (!arc.dependant.IsToken() &&
          ExtraposedGovernor(arc.dependant.element) != nullptr) {
        continue;  // the explicit dependence replaces the sibling arc
      }
      emit(arc.dependant.PathString(), arc.governor.PathString(),
           arc.certainty);
    }
    if (group->ambiguous && !group->candidates.empty()) {
      for (const DepNode& node : group->nodes) {
        if (!node.IsToken() &&
            ExtraposedGovernor(node.element) != nullptr) {
          continue;
        }
        for (const DepNode& candidate : group->candidates) {
          if (candidate.SameNode(node)) continue;
          emit(node.PathString(), candidate.PathString(),
               Certainty::kAmbiguous);
        }
      }
    }
  });
  for (const auto& [dependant, governor] : extraposed_) {
    emit(dependant->Path(), governor->Path(), Certainty::kResolved);
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

DependencyGraph ResolveDependencies(const Document& doc, Diagnostics& diags) {
  DependencyGraph graph;
  if (doc.root == nullptr) return graph;
  std::map<std::string, const LingElement*> ids = IdIndex(*doc.root);
  doc.root->Walk([&](const LingElement& element) {
    graph.SetGroup(&element, ResolveElement(element, diags));
  });
  doc.root->Walk([&](const LingElement& element) {
    if (!element.depend.has_value()) return;
    const TermRef& ref = *element.depend;
    if (!ref.local) {
      diags.Warning("depend-target", element.Path(),
                    "depend reference '" + ref.raw +
                        "' is not a local element reference");
      return;
    }
    auto it = ids.find(ref.LocalId());
    if (it == ids.end()) {
      diags.Warning("depend-target", element.Path(),
                    "depend target '" + ref.raw + "' not found");
      return;
    }
    graph.SetExtraposed(&element, it->second);
  });
  return graph;
}

}  // namespace lingds
