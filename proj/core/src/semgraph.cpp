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
// Compilation runs in five passes over the element tree, all in
// document order so that node creation and union order are
// reproducible: node allocation, structural unification plus attribute
// chains, scope edges, equality merging, and relation attachment.

#include "lingds/semgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lingds {

const char* NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kEntity: return "entity";
    case NodeKind::kPredicateTerm: return "predicateTerm";
    case NodeKind::kSyntaxMention: return "syntaxMention";
    case NodeKind::kDeictic: return "deictic";
    case NodeKind::kIntermediate: return "intermediate";
  }
  return "?";
}

int SemGraph::AddNode(SemNode node) {
  int index = static_cast<int>(nodes_.size());
  by_id_.emplace(node.id, index);
  nodes_.push_back(std::move(node));
  uf_parent_.push_back(index);
  return index;
}

int SemGraph::Find(int i) const {
  while (uf_parent_[i] != i) {
    uf_parent_[i] = uf_parent_[uf_parent_[i]];
    i = uf_parent_[i];
  }
  return i;
}

void SemGraph::Unite(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return;
  // Classes stay homogeneous in mention-ness, so testing the
  // representatives is enough to keep mentions apart from uses.
  bool mention_a = nodes_[a].kind == NodeKind::kSyntaxMention;
  bool mention_b = nodes_[b].kind == NodeKind::kSyntaxMention;
  if (mention_a != mention_b) return;
  if (a < b) {
    uf_parent_[b] = a;
  } else {
    uf_parent_[a] = b;
  }
}

std::vector<int> SemGraph::ClassOf(int i) const {
  std::vector<int> members;
  int root = Find(i);
  for (int j = 0; j < NodeCount(); ++j) {
    if (Find(j) == root) members.push_back(j);
  }
  return members;
}

std::string SemGraph::CanonicalId(int i) const {
  std::string best;
  for (int member : ClassOf(i)) {
    const std::string& id = nodes_[member].id;
    if (best.empty() || id < best) best = id;
  }
  return best;
}

int SemGraph::NodeByid(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? -1 : it->second;
}

int CompiledGraph::SelfOf(const std::string& path) const {
  auto it = self_of.find(path);
  return it == self_of.end() ? -1 : it->second;
}

int CompiledGraph::GovOf(const std::string& path) const {
  auto it = gov_of.find(path);
  return it == gov_of.end() ? -1 : it->second;
}

std::vector<std::vector<std::string>> CompiledGraph::CorefClusters() const {
  std::map<int, std::vector<std::string>> classes;
  for (const auto& [path, index] : self_of) {
    classes[graph.Find(index)].push_back(path);
  }
  std::vector<std::vector<std::string>> clusters;
  for (auto& [root, paths] : classes) {
    if (paths.size() < 2) continue;
    std::sort(paths.begin(), paths.end());
    clusters.push_back(std::move(paths));
  }
  std::sort(clusters.begin(), clusters.end());
  return clusters;
}

std::vector<std::string> CompiledGraph::ClusterOf(
    const std::string& path) const {
  int index = SelfOf(path);
  if (index < 0) return {};
  int root = graph.Find(index);
  std::vector<std::string> members;
  for (const auto& [other, other_index] : self_of) {
    if (graph.Find(other_index) == root) members.push_back(other);
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// The URI printed and matched for a term: the resolved form when alias
// resolution succeeded, the raw spelling otherwise.
std::string TermUri(const TermRef& ref) {
  return ref.resolved && !ref.uri.empty() ? ref.uri : ref.raw;
}

bool IsUnaryTerm(const TermRef& ref, const SchemeRegistry& registry) {
  return Classify(ref, registry) == TermClass::kUnaryPredicate;
}

int EnsureNode(SemGraph& graph, const std::string& id, NodeKind kind,
               const std::string& label) {
  int existing = graph.NodeByid(id);
  if (existing >= 0) return existing;
  SemNode node;
  node.id = id;
  node.kind = kind;
  node.label = label;
  return graph.AddNode(std::move(node));
}

int FreshIntermediate(SemGraph& graph, int* fresh_counter) {
  SemNode node;
  node.id = "i:" + std::to_string((*fresh_counter)++);
  node.kind = NodeKind::kIntermediate;
  return graph.AddNode(std::move(node));
}

SemEdge MakeEdge(int source, int target, const std::string& relation) {
  SemEdge edge;
  edge.source = source;
  edge.target = target;
  edge.relation = relation;
  return edge;
}

// A broken arrow of the network reading: argument node to the shared
// predicate-term node of the unary.
void AddPredicateEdge(SemGraph& graph, int at, const TermRef& term,
                      const SchemeRegistry& registry) {
  std::string uri = TermUri(term);
  int predicate = EnsureNode(graph, "p:" + uri, NodeKind::kPredicateTerm, uri);
  SemEdge edge = MakeEdge(at, predicate, uri);
  auto modes = ArgModesOf(term, registry);
  edge.source_mode = modes.first;
  edge.target_mode = modes.second;
  edge.predicate = true;
  graph.AddEdge(edge);
}

}  // namespace

int ComposeTermList(SemGraph& graph, const TermRefList& terms, int source,
                    int target, const SchemeRegistry& registry,
                    Diagnostics& diags, const std::string& path,
                    int* fresh_counter) {
  (void)diags;
  (void)path;
  int binaries = 0;
  for (const TermRef& term : terms) {
    if (!IsUnaryTerm(term, registry)) ++binaries;
  }
  if (binaries == 0) {
    // Unary-only lists reduce every p to "p(X) and X=Y": the chain never
    // advances, so the two endpoints denote one entity.
    graph.Unite(source, target);
    for (const TermRef& term : terms) {
      AddPredicateEdge(graph, source, term, registry);
    }
    return 0;
  }
  int current = source;
  int seen = 0;
  int intermediates = 0;
  for (const TermRef& term : terms) {
    if (IsUnaryTerm(term, registry)) {
      AddPredicateEdge(graph, current, term, registry);
      continue;
    }
    ++seen;
    int next = target;
    if (seen < binaries) {
      next = FreshIntermediate(graph, fresh_counter);
      ++intermediates;
    }
    SemEdge edge = MakeEdge(current, next, TermUri(term));
    auto modes = ArgModesOf(term, registry);
    edge.source_mode = modes.first;
    edge.target_mode = modes.second;
    graph.AddEdge(edge);
    current = next;
  }
  return intermediates;
}

namespace {

class Compiler {
 public:
  Compiler(const Document& doc, const DependencyGraph& deps,
           const SchemeRegistry& registry, Diagnostics& diags)
      : doc_(doc), deps_(deps), registry_(registry), diags_(diags) {}

  CompiledGraph Run() {
    if (doc_.root == nullptr) return std::move(out_);
    ids_ = IdIndex(*doc_.root);
    CreateNodes(*doc_.root);
    Structure(*doc_.root, 0);
    Scopes(*doc_.root);
    Equalities(*doc_.root);
    Relations(*doc_.root);
    Lexical(*doc_.root);
    return std::move(out_);
  }

 private:
  SemGraph& graph() { return out_.graph; }

  int Self(const LingElement& e) const { return self_idx_.at(&e); }
  int Gov(const LingElement& e) const { return gov_idx_.at(&e); }
  const std::string& PathOf(const LingElement& e) const {
    return path_.at(&e);
  }

  void CreateNodes(const LingElement& root) {
    root.Walk([this](const LingElement& e) {
      std::string path = e.Path();
      path_[&e] = path;
      self_idx_[&e] =
          graph().AddNode(SemNode{"s:" + path, NodeKind::kEntity, "", false});
      gov_idx_[&e] =
          graph().AddNode(SemNode{"g:" + path, NodeKind::kEntity, "", false});
      out_.self_of[path] = self_idx_[&e];
      out_.gov_of[path] = gov_idx_[&e];
    });
  }

  int MentionOf(const LingElement& e) {
    const std::string& path = PathOf(e);
    int node =
        EnsureNode(graph(), "m:" + path, NodeKind::kSyntaxMention, "");
    out_.mention_of[path] = node;
    return node;
  }

  // Single variable-arity operator term: the element contributes a
  // coordination relation node rather than a binary chain.
  bool VariableArityCarrier(const LingElement& e) const {
    return e.operators.size() == 1 &&
           IsVariableArity(e.operators[0], registry_);
  }

  // --- Pass 2: dependency-driven unification and attribute chains ---

  void Structure(const LingElement& e, int compound_depth) {
    const DepGroup* group = deps_.GroupOf(&e);
    const LingElement* root_child = nullptr;
    if (group != nullptr && group->root.has_value() &&
        group->root->element != nullptr) {
      root_child = group->root->element;
    }
    if (root_child != nullptr) {
      // The head stands for the whole: both nodes delegate. A conjunct's
      // head shares the conjunct's nodes, so conjunct status follows.
      graph().Unite(Self(e), Self(*root_child));
      graph().Unite(Gov(e), Gov(*root_child));
      delegated_.insert(&e);
      if (conjunct_.count(&e) > 0) conjunct_.insert(root_child);
    }
    std::vector<const LingElement*> children = e.ElementChildren();
    for (const LingElement* child : children) {
      auto governor = deps_.GovernorOf(*child);
      if (!governor.has_value()) continue;
      if (governor->element != nullptr) {
        graph().Unite(Gov(*child), Self(*governor->element));
      } else {
        // A token governor carries no node of its own; its semantics
        // live in the attributes of the enclosing element.
        graph().Unite(Gov(*child), Self(e));
      }
    }
    CoordinationArgs(e, group, root_child, children);
    Attributes(e, compound_depth);
    int child_depth =
        compound_depth + (e.compound_semantics.empty() ? 0 : 1);
    for (const LingElement* child : children) {
      Structure(*child, child_depth);
    }
  }

  void CoordinationArgs(const LingElement& e, const DepGroup* group,
                        const LingElement* root_child,
                        const std::vector<const LingElement*>& children) {
    const LingElement* carrier = nullptr;
    std::vector<const LingElement*> conjuncts;
    if (group != nullptr && group->coordination) {
      if (group->operator_child != nullptr) {
        carrier = group->operator_child;
        conjuncts = group->conjuncts;
      } else if (VariableArityCarrier(e)) {
        carrier = &e;
        conjuncts = group->conjuncts;
      }
    } else if (root_child != nullptr && VariableArityCarrier(*root_child)) {
      carrier = root_child;
      for (const LingElement* child : children) {
        if (child != root_child) conjuncts.push_back(child);
      }
    } else if (VariableArityCarrier(e)) {
      carrier = &e;
      for (const LingElement* child : children) {
        if (child != root_child) conjuncts.push_back(child);
      }
    }
    if (carrier == nullptr) return;
    int relation_node = Self(*carrier);
    SemNode& node = graph().node(relation_node);
    node.variable_arity = true;
    if (node.label.empty() && carrier->operators.size() == 1) {
      node.label = TermUri(carrier->operators[0]);
    }
    int index = 0;
    for (const LingElement* conjunct : conjuncts) {
      if (conjunct == carrier) continue;
      SemArg arg;
      arg.relation_node = relation_node;
      arg.index = ++index;
      arg.argument = Self(*conjunct);
      graph().AddArg(arg);
      // The presupposed argument relation of the operator: the conjunct
      // hangs directly off the coordination node.
      graph().Unite(Gov(*conjunct), relation_node);
      conjunct_.insert(conjunct);
    }
  }

  // True when the operator list is just the presupposed conjunct
  // relation, which the ordered argument edge already records.
  bool ArgumentOnly(const TermRefList& ops) const {
    if (ops.size() != 1) return false;
    const TermRef& term = ops[0];
    std::string uri = TermUri(term);
    auto lookup = registry_.LookupTerm(uri);
    if (lookup.scheme != nullptr) return lookup.term_id == kArgumentTermId;
    return uri.size() > std::char_traits<char>::length(kArgumentTermId) &&
           uri.ends_with(std::string(":") + kArgumentTermId);
  }

  void Attributes(const LingElement& e, int compound_depth) {
    bool conjunct = conjunct_.count(&e) > 0;
    const TermRefList& ops = e.operators;
    const TermRefList& sem = e.semantics;
    const TermRefList& compound = e.compound_semantics;
    int self = Self(e);
    int gov = Gov(e);

    if (VariableArityCarrier(e)) {
      SemNode& node = graph().node(self);
      node.variable_arity = true;
      if (node.label.empty()) node.label = TermUri(ops[0]);
      // Both the self node and the governor node of the coordination,
      // unless the coordination is itself a conjunct of a larger one, in
      // which case its governor is the enclosing relation node.
      if (!conjunct) graph().Unite(gov, self);
      if (!sem.empty()) SelfAnchoredChain(sem, e);
      if (!compound.empty()) SelfAnchoredChain(compound, e);
      return;
    }
    if (conjunct) {
      // The ordered argument edge covers the default conjunct relation;
      // anything else chains off the coordination node.
      if (!ops.empty() && !ArgumentOnly(ops)) OperatorChain(ops, gov, self);
      if (!sem.empty()) SelfAnchoredChain(sem, e);
      if (!compound.empty()) SelfAnchoredChain(compound, e);
      return;
    }
    if (!ops.empty()) {
      OperatorChain(ops, gov, self);
      if (!sem.empty()) SelfAnchoredChain(sem, e);
      if (!compound.empty()) CheckCompound(e);
      return;
    }
    if (!sem.empty()) {
      // Content without an operator specializes what it depends on: the
      // governor node and the self node denote one entity.
      graph().Unite(gov, self);
      SelfAnchoredChain(sem, e);
      if (!compound.empty()) CheckCompound(e);
      return;
    }
    if (!compound.empty()) {
      ComposeTermList(graph(), compound, gov, self, registry_, diags_,
                      PathOf(e), &fresh_);
      return;
    }
    // No semantic attributes at all: partial description. The head of a
    // composite shares the composite's nodes; the composite speaks.
    if (delegated_.count(&e) > 0) return;
    if (graph().node(self).variable_arity) return;
    if (compound_depth > 0) return;
    // Partiality: some relation holds between governor and self, with
    // both ends of the term chain unspecified.
    SemEdge open = MakeEdge(gov, self, "");
    open.open_prefix = true;
    open.open_suffix = true;
    graph().AddEdge(open);
  }

  // Operator terms always relate the governor node to the self node,
  // so every term acts as a chain link here, unary or not.
  void OperatorChain(const TermRefList& terms, int source, int target) {
    int current = source;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      int next = k + 1 == terms.size()
                     ? target
                     : FreshIntermediate(graph(), &fresh_);
      SemEdge edge = MakeEdge(current, next, TermUri(terms[k]));
      auto modes = ArgModesOf(terms[k], registry_);
      edge.source_mode = modes.first;
      edge.target_mode = modes.second;
      graph().AddEdge(edge);
      current = next;
    }
  }

  // Semantics terms describe the self node: unaries attach there, and
  // binary terms open a chain into unnamed structure.
  void SelfAnchoredChain(const TermRefList& terms, const LingElement& e) {
    int current = Self(e);
    int binaries = 0;
    for (const TermRef& term : terms) {
      if (!IsUnaryTerm(term, registry_)) ++binaries;
    }
    int seen = 0;
    for (const TermRef& term : terms) {
      if (IsUnaryTerm(term, registry_)) {
        AddPredicateEdge(graph(), current, term, registry_);
        continue;
      }
      ++seen;
      int next = FreshIntermediate(graph(), &fresh_);
      SemEdge edge = MakeEdge(current, next, TermUri(term));
      auto modes = ArgModesOf(term, registry_);
      edge.source_mode = modes.first;
      edge.target_mode = modes.second;
      edge.open_suffix = seen == binaries;
      graph().AddEdge(edge);
      current = next;
    }
  }

  // compoundSemantics restates operator plus semantics; when all three
  // appear, the compound form is checked against the split form rather
  // than compiled twice.
  void CheckCompound(const LingElement& e) {
    std::vector<std::string> split;
    for (const TermRef& term : e.operators) split.push_back(TermUri(term));
    for (const TermRef& term : e.semantics) split.push_back(TermUri(term));
    std::vector<std::string> compound;
    for (const TermRef& term : e.compound_semantics) {
      compound.push_back(TermUri(term));
    }
    if (split != compound) {
      diags_.Warning("compound-mismatch", PathOf(e),
                     "compoundSemantics disagrees with operator plus "
                     "semantics");
    }
  }

  // --- Deixis ---

  bool PersonIndex(DeicticIndex index) const {
    switch (index) {
      case DeicticIndex::kP1:
      case DeicticIndex::kP1Plural:
      case DeicticIndex::kP1Inclusive:
      case DeicticIndex::kP1Exclusive:
      case DeicticIndex::kP2:
      case DeicticIndex::kP2Plural:
        return true;
      default:
        return false;
    }
  }

  // The quotation whose utterance context covers references written on
  // this element: strictly enclosing, so attributes on a Quotation
  // element itself still speak from outside it.
  const LingElement* EnclosingQuotation(const LingElement& e) const {
    for (const LingElement* p = e.parent(); p != nullptr; p = p->parent()) {
      if (p->kind() == ElementKind::kQuotation) return p;
    }
    return nullptr;
  }

  int DeicticNode(DeicticIndex index, const LingElement& context) {
    if (index == DeicticIndex::kSelf) return Self(context);
    std::string name = DeicticIndexName(index);
    std::string id = "d:" + name;
    if (PersonIndex(index)) {
      // A quotation is an utterance by someone else: its participant
      // indices name per-quotation speakers, not the document's.
      const LingElement* quotation = EnclosingQuotation(context);
      if (quotation != nullptr) id += "@" + PathOf(*quotation);
    }
    return EnsureNode(graph(), id, NodeKind::kDeictic, name);
  }

  int PreviousSiblingNode(const LingElement& embedding) {
    const LingElement* parent = embedding.parent();
    const LingElement* previous = nullptr;
    if (parent != nullptr) {
      for (const LingElement* child : parent->ElementChildren()) {
        if (child == &embedding) break;
        previous = child;
      }
    }
    if (previous != nullptr) return Self(*previous);
    diags_.Warning("previous-sibling", PathOf(embedding),
                   "previous-sibling deixis with no previous sibling");
    return EnsureNode(graph(), "d:previous@" + PathOf(embedding),
                      NodeKind::kDeictic, "previous");
  }

  struct Resolved {
    int node = -1;
    const LingElement* element = nullptr;  // set for local targets
  };

  Resolved ResolveRef(const TermRef& ref, const LingElement& context,
                      const char* rule) {
    Resolved result;
    if (ref.local) {
      auto it = ids_.find(ref.LocalId());
      if (it == ids_.end()) {
        diags_.Warning(rule, PathOf(context),
                       "reference to unknown id '" + ref.raw + "'");
        return result;
      }
      result.element = it->second;
      result.node = Self(*it->second);
      return result;
    }
    if (auto index = DeicticIndexOf(ref, registry_)) {
      result.node = DeicticNode(*index, context);
      return result;
    }
    if (IsPreviousDeixis(ref, registry_)) {
      result.node = PreviousSiblingNode(context);
      return result;
    }
    std::string uri = TermUri(ref);
    result.node = EnsureNode(graph(), "t:" + uri,
                             ref.deictic ? NodeKind::kDeictic
                                         : NodeKind::kEntity,
                             uri);
    return result;
  }

  // --- Pass 3: scope edges ---

  void Scopes(const LingElement& root) {
    root.Walk([this](const LingElement& e) {
      if (!e.in_scope.has_value()) return;
      const TermRef& ref = *e.in_scope;
      if (ref.local) {
        auto it = ids_.find(ref.LocalId());
        if (it == ids_.end()) {
          diags_.Warning("scope-target", PathOf(e),
                         "inScope names unknown id '" + ref.raw + "'");
          return;
        }
        SemScope scope;
        scope.node = Self(e);
        scope.introducer = Self(*it->second);
        graph().AddScope(scope);
        scope_intro_[&e] = it->second;
        return;
      }
      auto index = DeicticIndexOf(ref, registry_);
      if (index.has_value()) {
        SemScope scope;
        scope.node = Self(e);
        scope.introducer = DeicticNode(*index, e);
        graph().AddScope(scope);
        // Deictic scopes (the top-level discourse) introduce no
        // abstraction boundary for the instance rule.
        scope_intro_[&e] = nullptr;
        return;
      }
      diags_.Warning("scope-target", PathOf(e),
                     "inScope value '" + ref.raw +
                         "' is neither a reference nor a deictic index");
    });
  }

  // --- Pass 4: equality merging ---

  bool InsideOrSelf(const LingElement& e, const LingElement& scope) const {
    return &e == &scope || scope.IsAncestorOf(e);
  }

  // An equal reference from outside the abstraction that binds the
  // target denotes an instance, not the abstracted entity.
  bool CrossesAbstraction(const LingElement& referrer,
                          const LingElement& target) const {
    auto it = scope_intro_.find(&target);
    if (it == scope_intro_.end() || it->second == nullptr) return false;
    return !InsideOrSelf(referrer, *it->second);
  }

  void FlagQuotationCrossing(const LingElement& e,
                             const LingElement* target) {
    if (target == nullptr) return;
    if (EnclosingQuotation(e) != EnclosingQuotation(*target)) {
      diags_.Info("quotation-equal", PathOf(e),
                  "equality crosses a quotation boundary");
    }
  }

  void Equalities(const LingElement& root) {
    root.Walk([this](const LingElement& e) {
      if (e.equal.empty()) return;
      std::vector<Resolved> targets;
      for (const TermRef& ref : e.equal) {
        Resolved target = ResolveRef(ref, e, "equal-target");
        if (target.node >= 0) targets.push_back(target);
      }
      if (targets.empty()) return;
      if (targets.size() == 1) {
        const Resolved& target = targets[0];
        FlagQuotationCrossing(e, target.element);
        if (target.element != nullptr &&
            CrossesAbstraction(e, *target.element)) {
          SemEdge edge = MakeEdge(target.node, Self(e), "");
          edge.instance = true;
          graph().AddEdge(edge);
          return;
        }
        graph().Unite(Self(e), target.node);
        return;
      }
      // Several referents: the element denotes their set.
      int set_node = EnsureNode(graph(),
                                "set:" + std::to_string(set_counter_++),
                                NodeKind::kEntity, "");
      graph().Unite(Self(e), set_node);
      for (const Resolved& target : targets) {
        FlagQuotationCrossing(e, target.element);
        SemEdge edge = MakeEdge(set_node, target.node, MemberTermUri());
        edge.instance = target.element != nullptr &&
                        CrossesAbstraction(e, *target.element);
        graph().AddEdge(edge);
      }
    });
  }

  // --- Pass 5: relation elements ---

  void Relations(const LingElement& root) {
    root.Walk([this](const LingElement& e) {
      for (const RelationDecl& relation : e.relations) {
        AttachRelation(e, relation);
      }
    });
  }

  void AttachRelation(const LingElement& e, const RelationDecl& relation) {
    TermRefList sources = relation.EffectiveSources();
    TermRefList targets = relation.EffectiveTargets();
    TermRefList types = relation.EffectiveTypes();
    std::vector<Resolved> from;
    if (sources.empty()) {
      Resolved self;
      self.node = Self(e);
      self.element = &e;
      from.push_back(self);
    } else {
      for (const TermRef& ref : sources) {
        Resolved source = ResolveRef(ref, e, "relation-source");
        if (source.node >= 0) from.push_back(source);
      }
    }
    std::vector<Resolved> to;
    for (const TermRef& ref : targets) {
      Resolved target = ResolveRef(ref, e, "relation-target");
      if (target.node >= 0) to.push_back(target);
    }
    if (to.empty()) {
      diags_.Warning("relation-target", PathOf(e),
                     "relation with no resolvable target");
      return;
    }
    if (relation.Untyped()) {
      diags_.Warning("untyped-relation", PathOf(e),
                     "relation carries neither type nor typeList");
    }
    for (const Resolved& source : from) {
      for (const Resolved& target : to) {
        RelationChain(types, source, target);
      }
    }
  }

  int Bind(const Resolved& end, ArgMode mode) {
    if (mode == ArgMode::kMention && end.element != nullptr) {
      return MentionOf(*end.element);
    }
    return end.node;
  }

  void RelationChain(const TermRefList& types, const Resolved& source,
                     const Resolved& target) {
    const TermRef* first_binary = nullptr;
    const TermRef* last_binary = nullptr;
    int binaries = 0;
    for (const TermRef& term : types) {
      if (IsUnaryTerm(term, registry_)) continue;
      if (first_binary == nullptr) first_binary = &term;
      last_binary = &term;
      ++binaries;
    }
    ArgMode source_mode = first_binary != nullptr
                              ? ArgModesOf(*first_binary, registry_).first
                              : ArgMode::kUse;
    ArgMode target_mode = last_binary != nullptr
                              ? ArgModesOf(*last_binary, registry_).second
                              : ArgMode::kUse;
    int source_node = Bind(source, source_mode);
    int target_node = Bind(target, target_mode);
    if (binaries == 0) {
      // Typeless or unary-only: the link exists but its relation stays
      // open. A relation never merges its arguments.
      for (const TermRef& term : types) {
        AddPredicateEdge(graph(), source_node, term, registry_);
      }
      SemEdge open = MakeEdge(source_node, target_node, "");
      open.open_prefix = true;
      open.open_suffix = true;
      open.source_mode = source_mode;
      open.target_mode = target_mode;
      graph().AddEdge(open);
      return;
    }
    int current = source_node;
    int seen = 0;
    for (const TermRef& term : types) {
      if (IsUnaryTerm(term, registry_)) {
        AddPredicateEdge(graph(), current, term, registry_);
        continue;
      }
      ++seen;
      int next = seen == binaries ? target_node
                                  : FreshIntermediate(graph(), &fresh_);
      SemEdge edge = MakeEdge(current, next, TermUri(term));
      auto modes = ArgModesOf(term, registry_);
      edge.source_mode = modes.first;
      edge.target_mode = modes.second;
      graph().AddEdge(edge);
      current = next;
    }
  }

  // --- Pass 6: lexical annotations on the mention ---

  void Lexical(const LingElement& root) {
    root.Walk([this](const LingElement& e) {
      AddWordEdges(e, e.base_form, "baseForm");
      AddWordEdges(e, e.function_word, "functionWord");
    });
  }

  // baseForm and functionWord describe the wording, not the referent,
  // so their edges hang off the syntax mention node.
  void AddWordEdges(const LingElement& e, const std::string& value,
                    const std::string& relation) {
    if (value.empty()) return;
    std::size_t pos = 0;
    while (pos < value.size()) {
      while (pos < value.size() && value[pos] == ' ') ++pos;
      std::size_t end = pos;
      while (end < value.size() && value[end] != ' ') ++end;
      if (end > pos) {
        std::string word = value.substr(pos, end - pos);
        int word_node = EnsureNode(graph(), "w:" + word,
                                   NodeKind::kPredicateTerm, word);
        graph().AddEdge(MakeEdge(MentionOf(e), word_node, relation));
      }
      pos = end;
    }
  }

  const Document& doc_;
  const DependencyGraph& deps_;
  const SchemeRegistry& registry_;
  Diagnostics& diags_;
  CompiledGraph out_;
  std::map<std::string, const LingElement*> ids_;
  std::map<const LingElement*, int> self_idx_;
  std::map<const LingElement*, int> gov_idx_;
  std::map<const LingElement*, std::string> path_;
  std::set<const LingElement*> delegated_;
  std::set<const LingElement*> conjunct_;
  // Element with inScope -> introducer element (null for deictic scopes).
  std::map<const LingElement*, const LingElement*> scope_intro_;
  int fresh_ = 0;
  int set_counter_ = 0;
};

}  // namespace

CompiledGraph Compile(const Document& doc, const DependencyGraph& deps,
                      const SchemeRegistry& registry, Diagnostics& diags) {
  Compiler compiler(doc, deps, registry, diags);
  return compiler.Run();
}

std::string ExportTriples(const SemGraph& graph) {
  std::vector<std::string> lines;
  // Canonical id per class: the lexicographically smallest member id.
  std::map<int, std::string> canonical;
  for (int i = 0; i < graph.NodeCount(); ++i) {
    int root = graph.Find(i);
    const std::string& id = graph.node(i).id;
    auto it = canonical.find(root);
    if (it == canonical.end() || id < it->second) canonical[root] = id;
  }
  auto class_id = [&](int i) { return canonical.at(graph.Find(i)); };
  for (int i = 0; i < graph.NodeCount(); ++i) {
    const SemNode& node = graph.node(i);
    lines.push_back("NODE " + node.id + " " + NodeKindName(node.kind) + " " +
                    (node.label.empty() ? "-" : node.label));
  }
  for (const SemEdge& edge : graph.edges()) {
    std::string flags;
    if (edge.source_mode == ArgMode::kMention) flags += 'M';
    if (edge.target_mode == ArgMode::kMention) flags += 'm';
    if (edge.open_prefix) flags += 'a';
    if (edge.open_suffix) flags += 'z';
    if (edge.predicate) flags += 'p';
    if (edge.instance) flags += 'i';
    if (flags.empty()) flags = "-";
    lines.push_back("EDGE " + class_id(edge.source) + " " +
                    (edge.relation.empty() ? "-" : edge.relation) + " " +
                    class_id(edge.target) + " " + flags);
  }
  for (int i = 0; i < graph.NodeCount(); ++i) {
    const std::string& representative = canonical.at(graph.Find(i));
    const std::string& id = graph.node(i).id;
    if (id != representative) {
      lines.push_back("EQ " + representative + " " + id);
    }
  }
  for (const SemArg& arg : graph.args()) {
    lines.push_back("ARG " + class_id(arg.relation_node) + " " +
                    std::to_string(arg.index) + " " +
                    class_id(arg.argument));
  }
  for (const SemScope& scope : graph.scopes()) {
    lines.push_back("SCOPE " + class_id(scope.node) + " " +
                    class_id(scope.introducer));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace lingds
