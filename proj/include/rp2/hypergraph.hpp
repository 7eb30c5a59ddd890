#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rp2 {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex IDs.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool set_contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Unordered pair stored with first < second.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// 3-element vertex set in ascending order.
struct Triple {
  std::array<Vertex, 3> v{};

  Triple() = default;
  Triple(Vertex x, Vertex y, Vertex z);

  Vertex operator[](std::size_t i) const { return v[i]; }
  bool has(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool distinct() const { return v[0] != v[1] && v[1] != v[2]; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Simple undirected graph whose vertex set is a subset of 0..universe-1.
// Adjacency lists are sorted so every traversal is ordered by vertex ID.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t universe, std::span<const Vertex> vertices, std::span<const Edge> edges);

  // Vertex set is all of 0..universe-1.
  static Graph complete_vertex_set(std::size_t universe, std::span<const Edge> edges);

  std::size_t universe() const { return adj_.size(); }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(Vertex v) const { return v < present_.size() && present_[v] != 0; }
  bool has_edge(Vertex x, Vertex y) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<Edge> edges() const;
  Graph induced(const VertexSet& keep) const;
  Graph with_edges(std::span<const Edge> edges) const;

 private:
  std::vector<char> present_;
  VertexSet vertices_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// 3-uniform hypergraph on vertices 0..n-1. Immutable after construction.
class Hypergraph3 {
 public:
  Hypergraph3() = default;

  // Canonicalizes and deduplicates. Throws InputError on a repeated vertex
  // inside a triple or a vertex >= n.
  Hypergraph3(std::size_t n, std::vector<Triple> edges);

  std::size_t n() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(const Triple& t) const;
  bool contains(Vertex a, Vertex b, Vertex c) const;

  // Opposite pairs of the hyperedges through v, sorted.
  const std::vector<Edge>& incident(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return incident_[v].size(); }

  friend bool operator==(const Hypergraph3& x, const Hypergraph3& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::vector<Edge>> incident_;
};

Graph link_graph(const Hypergraph3& h, Vertex u);
Graph pair_link(const Hypergraph3& h, Vertex u, Vertex u2);
std::size_t codegree(const Hypergraph3& h, Vertex v, Vertex w);

// T_vw for every pair, as a dense n*n table (symmetric, zero diagonal).
std::vector<std::uint32_t> codegree_table(const Hypergraph3& h);

struct BestPair {
  Vertex u = 0;
  Vertex u2 = 0;
  std::size_t link_edges = 0;
};

BestPair best_pair(const Hypergraph3& h);

// Common-link edge counts e(H_{u,u'}) for all pairs, dense n*n table.
std::vector<std::uint32_t> pair_link_sizes(const Hypergraph3& h);

Hypergraph3 parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph3& h);

// Same layout with two vertices per line.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace rp2
