#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trigproof/registry.hpp"

namespace trigproof {

// Dependency DAG over the catalog. Edges point from a lemma to what it
// uses: for verified scripts they are exactly the invoked sets reported by
// verification, for figure-fact bundles the declared primitive axioms.
struct DepGraph {
  std::vector<std::string> nodes;                       // sorted ids
  std::map<std::string, std::set<std::string>> edges;   // dependent -> deps
  std::set<std::string> external_provenance;            // tagged axioms

  bool has_node(const std::string& id) const {
    return edges.count(id) != 0;
  }
};

struct AuditVerdict {
  std::string target;
  std::string forbidden;
  bool reachable = false;
  std::vector<std::string> witness_path;  // target ... forbidden, shortest,
                                          // lexicographic tie-break
  std::vector<std::string> ancestor_set;  // sorted
  std::vector<std::string> external_provenance_flags;  // sorted, in ancestors
};

// Builds the DAG from verified reports. All reports must be accepted and
// every referenced id must resolve; a cycle raises CycleDetected.
DepGraph build_graph(const Registry& reg,
                     const std::vector<VerifyReport>& reports);

// Transitive dependency closure of id, excluding id itself.
std::set<std::string> ancestors(const DepGraph& g, const std::string& id);
// Independent implementation used to cross-check `ancestors`.
std::set<std::string> ancestors_bfs(const DepGraph& g, const std::string& id);

AuditVerdict audit(const DepGraph& g, const std::string& target,
                   const std::string& forbidden);

}  // namespace trigproof
