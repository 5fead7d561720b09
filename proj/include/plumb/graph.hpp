#pragma once

#include "plumb/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace plumb {

/// A plumbing (resolution) graph: a tree of rational vertices decorated with
/// Euler numbers.  Vertex order is declaration order and fixes the indexing
/// of every vector quantity downstream.
struct PlumbingGraph {
  std::vector<std::string> ids;
  std::vector<long long> euler;
  std::vector<std::pair<int, int>> edges;  // index pairs, first < second
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(ids.size()); }

  int index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
      if (ids[i] == id) return i;
    return -1;
  }

  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
  }
};

namespace detail {

inline void build_adjacency(PlumbingGraph& g) {
  g.adj.assign(g.size(), {});
  for (auto [a, b] : g.edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
}

inline void validate_tree(const PlumbingGraph& g) {
  const int n = g.size();
  if (n == 0) throw parse_error("graph has no vertices");
  if (static_cast<int>(g.edges.size()) != n - 1)
    throw parse_error("non-tree topology: expected " + std::to_string(n - 1) +
                      " edges, got " + std::to_string(g.edges.size()));
  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw parse_error("non-tree topology: graph is disconnected");
}

}  // namespace detail

/// Parses the line-based format:
///   vertex <id> <euler_number>
///   edge <id> <id>
/// '#' starts a comment, blank lines are ignored.  Rejects duplicate ids,
/// self-loops, duplicate edges, unknown endpoints and non-tree topologies.
inline PlumbingGraph parse_graph(const std::string& text) {
  PlumbingGraph g;
  std::map<std::string, int> index;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (directive == "vertex") {
      std::string id, eu;
      if (!(ls >> id >> eu)) throw parse_error("vertex needs <id> <euler>" + where);
      long long e;
      try {
        size_t pos = 0;
        e = std::stoll(eu, &pos);
        if (pos != eu.size()) throw std::invalid_argument(eu);
      } catch (const std::exception&) {
        throw parse_error("malformed euler number '" + eu + "'" + where);
      }
      if (index.count(id)) throw parse_error("duplicate vertex id '" + id + "'" + where);
      index[id] = g.size();
      g.ids.push_back(id);
      g.euler.push_back(e);
    } else if (directive == "edge") {
      std::string a, b;
      if (!(ls >> a >> b)) throw parse_error("edge needs two vertex ids" + where);
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw parse_error("edge to unknown vertex '" + a + "'" + where);
      if (ib == index.end()) throw parse_error("edge to unknown vertex '" + b + "'" + where);
      int u = ia->second, v = ib->second;
      if (u == v) throw parse_error("self-loop at '" + a + "'" + where);
      if (u > v) std::swap(u, v);
      if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(u, v)) != g.edges.end())
        throw parse_error("duplicate edge " + a + " " + b + where);
      g.edges.emplace_back(u, v);
    } else {
      throw parse_error("unknown directive '" + directive + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw parse_error("trailing tokens after directive" + where);
  }
  detail::build_adjacency(g);
  detail::validate_tree(g);
  return g;
}

/// Byte-stable inverse of parse_graph on canonical graphs.
inline std::string serialize(const PlumbingGraph& g) {
  std::ostringstream out;
  for (int i = 0; i < g.size(); ++i)
    out << "vertex " << g.ids[i] << " " << g.euler[i] << "\n";
  for (auto [a, b] : g.edges)
    out << "edge " << g.ids[a] << " " << g.ids[b] << "\n";
  return out.str();
}

/// Connected components of the subgraph induced by `subset`, each a sorted
/// vertex index list; components are ordered by smallest member.
inline std::vector<std::vector<int>> support_components(const PlumbingGraph& g,
                                                        const std::set<int>& subset) {
  std::vector<std::vector<int>> comps;
  std::set<int> remaining = subset;
  while (!remaining.empty()) {
    int root = *remaining.begin();
    std::vector<int> comp;
    std::vector<int> stack{root};
    remaining.erase(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v]) {
        auto it = remaining.find(w);
        if (it != remaining.end()) {
          remaining.erase(it);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace plumb
