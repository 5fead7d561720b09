#pragma once

#include "plumb/plumb.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture: " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline plumb::PlumbingGraph load(const std::string& name) {
  return plumb::parse_graph(read_fixture(name));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "a1.graph", "a2.graph", "a3.graph", "a4.graph", "a5.graph",
      "d4.graph", "e6.graph", "e7.graph", "e8.graph", "sigma237.graph",
      "star7.graph"};
  return names;
}

/// Random tree with Euler numbers in [lo_euler, -1]; not necessarily
/// negative definite — callers filter with check_negative_definite.
inline plumb::PlumbingGraph random_tree(std::mt19937& rng, int max_vertices,
                                        int lo_euler = -5) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  plumb::PlumbingGraph g;
  std::uniform_int_distribution<int> eu(lo_euler, -1);
  for (int i = 0; i < n; ++i) {
    g.ids.push_back("v" + std::to_string(i));
    g.euler.push_back(eu(rng));
  }
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    int p = parent(rng);
    g.edges.emplace_back(p, i);
  }
  plumb::detail::build_adjacency(g);
  return g;
}

/// Random negative-definite tree (resamples until the form is definite).
inline plumb::PlumbingGraph random_definite_tree(std::mt19937& rng, int max_vertices,
                                                 int lo_euler = -5) {
  while (true) {
    plumb::PlumbingGraph g = random_tree(rng, max_vertices, lo_euler);
    if (plumb::check_negative_definite(plumb::intersection_form(g)).negative_definite)
      return g;
  }
}

inline plumb::QVec qvec(std::initializer_list<long long> xs) {
  plumb::QVec v;
  for (long long x : xs) v.push_back(plumb::Rat(x));
  return v;
}

inline plumb::IVec ivec(std::initializer_list<long long> xs) {
  plumb::IVec v;
  for (long long x : xs) v.push_back(plumb::Int(x));
  return v;
}

}  // namespace testutil
