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
// The semantic graph. Every element owns a self node (what it
// describes) and a governor-facing node; composition unifies a child's
// governor node with its governor's self node. Operator and semantics
// term lists compile into edge chains, equality merges via union-find,
// relations attach with per-end mention/use modes, deixis resolves to
// shared index nodes, and scopes become edges to their introducers.

#ifndef LINGDS_SEMGRAPH_H_
#define LINGDS_SEMGRAPH_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lingds/dependency.hpp"
#include "lingds/diagnostics.hpp"
#include "lingds/document.hpp"
#include "lingds/schemes.hpp"

namespace lingds {

enum class NodeKind {
  kEntity,
  kPredicateTerm,
  kSyntaxMention,
  kDeictic,
  kIntermediate,
};

const char* NodeKindName(NodeKind kind);

struct SemNode {
  std::string id;  // stable id derived from the element path or term
  NodeKind kind = NodeKind::kEntity;
  std::string label;  // term URI, deictic term, or ""
  // Variable-arity relation node (coordination operator).
  bool variable_arity = false;
};

struct SemEdge {
  int source = -1;
  int target = -1;
  std::string relation;  // term URI, "" for an unspecified relation
  bool open_prefix = false;
  bool open_suffix = false;
  ArgMode source_mode = ArgMode::kUse;
  ArgMode target_mode = ArgMode::kUse;
  bool predicate = false;  // unary predicate attachment
  // Target end denotes an instance of the abstraction, not the
  // abstracted entity itself.
  bool instance = false;
};

// An ordered argument of a variable-arity relation node.
struct SemArg {
  int relation_node = -1;
  int index = 1;
  int argument = -1;
};

// Scope membership: node's referent is bound within the introducer.
struct SemScope {
  int node = -1;
  int introducer = -1;
};

class SemGraph {
 public:
  int AddNode(SemNode node);
  const SemNode& node(int i) const { return nodes_[i]; }
  SemNode& node(int i) { return nodes_[i]; }
  int NodeCount() const { return static_cast<int>(nodes_.size()); }

  void AddEdge(SemEdge edge) { edges_.push_back(edge); }
  void AddArg(SemArg arg) { args_.push_back(arg); }
  void AddScope(SemScope scope) { scopes_.push_back(scope); }

  const std::vector<SemEdge>& edges() const { return edges_; }
  const std::vector<SemArg>& args() const { return args_; }
  const std::vector<SemScope>& scopes() const { return scopes_; }

  // Union-find merge. Mention nodes never merge with non-mention nodes.
  void Unite(int a, int b);
  int Find(int i) const;
  bool United(int a, int b) const { return Find(a) == Find(b); }

  // Members of the equivalence class of `i`.
  std::vector<int> ClassOf(int i) const;

  // Lexicographically smallest node id of the class (the id printed for
  // the class in exports).
  std::string CanonicalId(int i) const;

  int NodeByid(const std::string& id) const;  // -1 when absent

 private:
  std::vector<SemNode> nodes_;
  std::vector<SemEdge> edges_;
  std::vector<SemArg> args_;
  std::vector<SemScope> scopes_;
  mutable std::vector<int> uf_parent_;
  std::map<std::string, int> by_id_;
};

// Compilation output: the graph plus per-element node handles.
struct CompiledGraph {
  SemGraph graph;
  // Element path -> node index.
  std::map<std::string, int> self_of;
  std::map<std::string, int> gov_of;
  std::map<std::string, int> mention_of;  // only elements with mentions

  int SelfOf(const std::string& path) const;
  int GovOf(const std::string& path) const;

  // Equivalence classes over element self nodes, as sorted path lists;
  // classes with fewer than two elements are omitted.
  std::vector<std::vector<std::string>> CorefClusters() const;
  // The cluster containing the element at `path` (paths, sorted).
  std::vector<std::string> ClusterOf(const std::string& path) const;
};

// Compiles the dependency-resolved document into its semantic graph.
CompiledGraph Compile(const Document& doc, const DependencyGraph& deps,
                      const SchemeRegistry& registry, Diagnostics& diags);

// Chain composition: terms t1..tn compile to edges between `source` and
// `target` with fresh intermediates between binary terms; a unary term
// adds a predicate edge at the current chain node without advancing.
// With no binary term at all, source and target unify. Returns the
// number of intermediates created.
int ComposeTermList(SemGraph& graph, const TermRefList& terms, int source,
                    int target, const SchemeRegistry& registry,
                    Diagnostics& diags, const std::string& path,
                    int* fresh_counter);

// Deterministic text export, one record per line, sorted:
//   NODE <id> <kind> <label>
//   EDGE <src> <rel> <dst> <flags>
//   EQ <repr> <member>
//   ARG <relnode> <index> <arg>
//   SCOPE <node> <introducer>
// Node references use the canonical id of the node's class; `-` stands
// for an empty label or flag set.
std::string ExportTriples(const SemGraph& graph);

}  // namespace lingds

#endif  // LINGDS_SEMGRAPH_H_
