#include "trigproof/audit.hpp"

#include <algorithm>
#include <deque>

#include "trigproof/errors.hpp"

namespace trigproof {

DepGraph build_graph(const Registry& reg,
                     const std::vector<VerifyReport>& reports) {
  DepGraph g;
  for (const auto& lf : reg.lemmas()) {
    g.nodes.push_back(lf.id);
    std::set<std::string>& deps = g.edges[lf.id];
    if (lf.kind == LemmaKind::Axiom) {
      // Figure-fact bundles declare the primitive axioms they package.
      for (const auto& d : lf.declared_deps) deps.insert(d);
    }
    for (const auto& t : lf.tags)
      if (t == "external-provenance") g.external_provenance.insert(lf.id);
  }
  for (const auto& rep : reports) {
    if (!rep.accepted)
      throw Error("build_graph requires accepted reports; " + rep.lemma_id +
                  " is rejected");
    if (!g.edges.count(rep.lemma_id))
      throw Error("report for unknown lemma " + rep.lemma_id);
    for (const auto& dep : rep.invoked) g.edges[rep.lemma_id].insert(dep);
  }
  for (const auto& [from, deps] : g.edges)
    for (const auto& to : deps)
      if (!g.edges.count(to))
        throw Error("dangling dependency " + from + " -> " + to);

  // Cycle check via DFS colors; report the ids on any cycle found.
  std::map<std::string, int> color;  // 0 white, 1 grey, 2 black
  std::vector<std::string> stack;
  for (const auto& start : g.nodes) {
    if (color[start]) continue;
    std::vector<std::pair<std::string, bool>> work{{start, false}};
    while (!work.empty()) {
      auto [node, done] = work.back();
      work.pop_back();
      if (done) {
        color[node] = 2;
        if (!stack.empty() && stack.back() == node) stack.pop_back();
        continue;
      }
      if (color[node] == 2) continue;
      if (color[node] == 1) continue;
      color[node] = 1;
      stack.push_back(node);
      work.emplace_back(node, true);
      for (const auto& dep : g.edges.at(node)) {
        if (color[dep] == 1) {
          std::string cycle;
          auto it = std::find(stack.begin(), stack.end(), dep);
          for (; it != stack.end(); ++it) {
            if (!cycle.empty()) cycle += ", ";
            cycle += *it;
          }
          throw CycleDetected(cycle);
        }
        if (color[dep] == 0) work.emplace_back(dep, false);
      }
    }
  }
  return g;
}

std::set<std::string> ancestors(const DepGraph& g, const std::string& id) {
  if (!g.has_node(id)) throw UnknownLemma(id);
  // Iterative DFS.
  std::set<std::string> seen;
  std::vector<std::string> stack(g.edges.at(id).begin(), g.edges.at(id).end());
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const auto& dep : g.edges.at(cur)) stack.push_back(dep);
  }
  seen.erase(id);
  return seen;
}

std::set<std::string> ancestors_bfs(const DepGraph& g, const std::string& id) {
  if (!g.has_node(id)) throw UnknownLemma(id);
  std::set<std::string> seen;
  std::deque<std::string> queue(g.edges.at(id).begin(), g.edges.at(id).end());
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    if (!seen.insert(cur).second) continue;
    for (const auto& dep : g.edges.at(cur)) queue.push_back(dep);
  }
  seen.erase(id);
  return seen;
}

AuditVerdict audit(const DepGraph& g, const std::string& target,
                   const std::string& forbidden) {
  if (!g.has_node(target)) throw UnknownLemma(target);
  if (!g.has_node(forbidden)) throw UnknownLemma(forbidden);
  AuditVerdict v;
  v.target = target;
  v.forbidden = forbidden;
  std::set<std::string> anc = ancestors(g, target);
  v.ancestor_set.assign(anc.begin(), anc.end());
  for (const auto& id : v.ancestor_set)
    if (g.external_provenance.count(id))
      v.external_provenance_flags.push_back(id);
  v.reachable = anc.count(forbidden) != 0;
  if (!v.reachable) return v;

  // Shortest witness path target -> ... -> forbidden; lexicographic
  // tie-break via distance-to-forbidden over reverse edges, then a greedy
  // walk picking the smallest id among distance-decreasing dependencies.
  std::map<std::string, std::set<std::string>> redges;
  for (const auto& [from, deps] : g.edges)
    for (const auto& to : deps) redges[to].insert(from);
  std::map<std::string, int> dist;
  dist[forbidden] = 0;
  std::deque<std::string> queue{forbidden};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& up : redges[cur])
      if (!dist.count(up)) {
        dist[up] = dist[cur] + 1;
        queue.push_back(up);
      }
  }
  std::string cur = target;
  v.witness_path.push_back(cur);
  while (cur != forbidden) {
    int d = dist.at(cur);
    for (const auto& dep : g.edges.at(cur)) {  // set: id order
      auto it = dist.find(dep);
      if (it != dist.end() && it->second == d - 1) {
        cur = dep;
        break;
      }
    }
    v.witness_path.push_back(cur);
  }
  return v;
}

}  // namespace trigproof
