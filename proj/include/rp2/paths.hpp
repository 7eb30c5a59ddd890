#pragma once

#include <optional>
#include <vector>

#include "rp2/hypergraph.hpp"

namespace rp2 {

// Vertex sequence from one endpoint to the other.
using Path = std::vector<Vertex>;

// Closed walk without the repeated first vertex; length >= 3.
using Cycle = std::vector<Vertex>;

struct PathSystem {
  std::vector<Path> paths;
};

// Reusable max-flow workspace for counting internally vertex-disjoint x-y
// paths of length >= 2 whose internal vertices satisfy `allowed`. The direct
// edge xy is never used.
class DisjointPathCounter {
 public:
  // min(max number of such paths, limit). `allowed` is indexed by vertex.
  std::size_t count(const Graph& g, Vertex x, Vertex y, const std::vector<char>& allowed,
                    std::size_t limit);

  // Flow decomposition after a successful count(), smallest vertex first.
  std::vector<Path> extract(Vertex x, Vertex y) const;

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    std::int32_t cap;
  };

  void build(const Graph& g, Vertex x, Vertex y, const std::vector<char>& allowed);
  bool augment(std::uint32_t source, std::uint32_t sink);

  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::int32_t> parent_arc_;
  std::vector<std::uint32_t> parent_node_;
  std::vector<std::uint32_t> queue_;
};

// Exactly k internally disjoint x-y paths through U (length >= 2, internal
// vertices in U), or nullopt when none exist. Requires x != y and x, y not
// in U.
std::optional<PathSystem> disjoint_paths(const Graph& g, Vertex x, Vertex y, const VertexSet& through,
                                         std::size_t k);

// Shortest x-y path of length >= 2 with internal vertices in U \ avoid.
std::optional<Path> path_through(const Graph& g, Vertex x, Vertex y, const VertexSet& through,
                                 const VertexSet& avoid);

// Cycle v0 v1 ... v2 (so v1 v0 v2 is a subpath) whose other vertices lie in
// U \ avoid. v2 itself must lie in U \ avoid.
std::optional<Cycle> cycle_with_forced_second_vertex(const Graph& g, Vertex v0, Vertex v1, Vertex v2,
                                                     const VertexSet& through, const VertexSet& avoid);

// Cycle v0 ... v3 closed by the edge v3 v0, other vertices in U \ avoid.
std::optional<Cycle> cycle_with_edge(const Graph& g, Vertex v0, Vertex v3, const VertexSet& through,
                                     const VertexSet& avoid);

}  // namespace rp2
