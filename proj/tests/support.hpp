#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "perfcol/codes.hpp"
#include "perfcol/graphs.hpp"

namespace perfcol::testing {

inline Code make_code(const GraphSpec& g, std::initializer_list<std::vector<int>> words) {
  std::vector<Vertex> v;
  for (const auto& w : words) v.push_back(g.make_vertex(w));
  return Code(g, std::move(v));
}

inline Code make_code(const GraphSpec& g, const std::vector<std::vector<int>>& words) {
  std::vector<Vertex> v;
  for (const auto& w : words) v.push_back(g.make_vertex(w));
  return Code(g, std::move(v));
}

/// Code from a subset of vertex indices.
inline Code code_from_indices(const GraphSpec& g, const std::vector<VertexIndex>& indices) {
  const IndexedGraph graph(g);
  std::vector<Vertex> words;
  for (VertexIndex i : indices) words.push_back(graph.vertex_at(i));
  return Code(g, std::move(words));
}

inline const Code& hexacode() {
  static const Code c = search_hexacode();
  return c;
}

/// Every Hamming and Doob graph with at most max_vertices vertices and at
/// least one coordinate.
inline std::vector<GraphSpec> small_graphs(std::uint64_t max_vertices) {
  std::vector<GraphSpec> out;
  for (int q = 2; q <= 9; ++q) {
    std::uint64_t count = q;
    for (int n = 1; count <= max_vertices; ++n, count *= q) out.push_back(GraphSpec::hamming(n, q));
  }
  for (int m = 1; m <= 3; ++m) {
    std::uint64_t count = std::uint64_t{1} << (4 * m);
    for (int n = 0; count <= max_vertices; ++n, count *= 4) out.push_back(GraphSpec::doob(m, n));
  }
  return out;
}

struct NamedColoring {
  std::string name;
  Coloring coloring;
};

/// Perfect colorings known by construction, on graphs with at most
/// max_vertices vertices.
inline std::vector<NamedColoring> known_perfect_colorings(std::uint64_t max_vertices) {
  std::vector<NamedColoring> out;
  auto add = [&](std::string name, const GraphSpec& g, auto&& make) {
    if (g.vertex_count() <= max_vertices) out.push_back({std::move(name), make()});
  };
  for (const auto& g : small_graphs(max_vertices)) {
    add("singleton in " + g.to_string(), g, [&] {
      return distance_coloring(Code(g, {IndexedGraph(g).vertex_at(0)}));
    });
  }
  add("{00} in H(2,3)", GraphSpec::hamming(2, 3), [] { return distance_coloring(make_code(GraphSpec::hamming(2, 3), {{0, 0}})); });
  add("{0000,1111}", GraphSpec::hamming(4, 2), [] {
    return distance_coloring(make_code(GraphSpec::hamming(4, 2), {{0, 0, 0, 0}, {1, 1, 1, 1}}));
  });
  add("{000,111}", GraphSpec::hamming(3, 2), [] {
    return distance_coloring(make_code(GraphSpec::hamming(3, 2), {{0, 0, 0}, {1, 1, 1}}));
  });
  add("hexacode", GraphSpec::hamming(6, 4), [] { return distance_coloring(hexacode()); });
  add("punctured hexacode", GraphSpec::hamming(5, 4), [] { return distance_coloring(projection(hexacode(), 1)); });
  add("cube bipartition", GraphSpec::hamming(4, 2), [] {
    const GraphSpec g = GraphSpec::hamming(4, 2);
    std::vector<int> c(16);
    for (int v = 0; v < 16; ++v) c[v] = __builtin_popcount(v) & 1;
    return Coloring(g, c);
  });
  add("first coordinate of H(3,3)", GraphSpec::hamming(3, 3), [] {
    const GraphSpec g = GraphSpec::hamming(3, 3);
    std::vector<int> c(27);
    for (int v = 0; v < 27; ++v) c[v] = v / 9;
    return Coloring(g, c);
  });
  add("Shrikhande independent set", GraphSpec::doob(1, 0), [] {
    std::vector<int> c(16, 1);
    for (int v : {0, 2, 8, 10}) c[v] = 0;
    return Coloring(GraphSpec::doob(1, 0), c);
  });
  add("independent set times K_4", GraphSpec::doob(1, 1), [] {
    std::vector<int> c(64, 1);
    for (int v = 0; v < 64; ++v) {
      const int pair = v / 4;
      if (pair == 0 || pair == 2 || pair == 8 || pair == 10) c[v] = 0;
    }
    return Coloring(GraphSpec::doob(1, 1), c);
  });
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

/// Runs a shell command, capturing stdout.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace perfcol::testing
