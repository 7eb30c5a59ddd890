#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rp2/errors.hpp"
#include "rp2/paths.hpp"

using namespace rp2;

namespace {

Graph graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<Edge> edges;
  for (auto [a, b] : list) edges.emplace_back(a, b);
  return Graph::complete_vertex_set(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph::complete_vertex_set(n, edges);
}

// Independent re-check of a path system.
bool valid_system(const Graph& g, Vertex x, Vertex y, const VertexSet& through, const std::vector<Path>& paths) {
  std::set<Vertex> seen;
  for (const auto& p : paths) {
    if (p.size() < 3 || p.front() != x || p.back() != y) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (!set_contains(through, p[i])) return false;
      if (!seen.insert(p[i]).second) return false;
    }
  }
  return true;
}

bool valid_cycle(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  if (std::set<Vertex>(c.begin(), c.end()).size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

}  // namespace

TEST_CASE("disjoint paths examples") {
  // x=0, y=1, a=2, b=3
  const auto g = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto two = disjoint_paths(g, 0, 1, {2, 3}, 2);
  REQUIRE(two);
  CHECK(two->paths == std::vector<Path>{{0, 2, 1}, {0, 3, 1}});
  CHECK_FALSE(disjoint_paths(g, 0, 1, {2}, 2));
  const auto k5 = disjoint_paths(complete(5), 0, 1, {2, 3, 4}, 3);
  REQUIRE(k5);
  CHECK(k5->paths.size() == 3);
  for (const auto& p : k5->paths) CHECK(p.size() == 3);
  CHECK_THROWS_AS(disjoint_paths(g, 0, 0, {2}, 1), InputError);
  CHECK_THROWS_AS(disjoint_paths(g, 0, 1, {1, 2}, 1), InputError);
}

TEST_CASE("disjoint paths agree with brute-force packing") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const auto g = oracle::random_graph(n, 0.45, seed);
    VertexSet through;
    std::vector<char> allowed(n, 0);
    for (Vertex v = 2; v < n; ++v)
      if ((seed >> (v % 5)) & 1 || v % 3 == 0) {
        through.push_back(v);
        allowed[v] = 1;
      }
    const std::size_t truth = oracle::max_disjoint(g, 0, 1, allowed);
    DisjointPathCounter counter;
    CHECK(counter.count(g, 0, 1, allowed, 100) == truth);
    for (std::size_t k = 1; k <= truth + 1; ++k) {
      const auto res = disjoint_paths(g, 0, 1, through, k);
      CHECK(res.has_value() == (k <= truth));
      if (res) {
        CHECK(res->paths.size() == k);
        CHECK(valid_system(g, 0, 1, through, res->paths));
      }
    }
  }
}

TEST_CASE("path_through") {
  const auto p = graph(3, {{0, 1}, {1, 2}});
  CHECK(path_through(p, 0, 2, {1}, {}) == Path{0, 1, 2});
  CHECK_FALSE(path_through(p, 0, 2, {1}, {1}));
  // Direct edge is never a path.
  CHECK_FALSE(path_through(graph(2, {{0, 1}}), 0, 1, {}, {}));
}

TEST_CASE("path_through on a 3x3 grid matches BFS") {
  std::vector<Edge> edges;
  auto id = [](Vertex r, Vertex c) { return r * 3 + c; };
  for (Vertex r = 0; r < 3; ++r)
    for (Vertex c = 0; c < 3; ++c) {
      if (c + 1 < 3) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < 3) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  const auto g = Graph::complete_vertex_set(9, edges);
  const VertexSet through{1, 2, 3, 4, 5, 6, 7};
  const auto path = path_through(g, 0, 8, through, {});
  REQUIRE(path);
  std::vector<char> allowed(9, 0);
  for (Vertex v : through) allowed[v] = 1;
  CHECK(static_cast<int>(path->size()) - 1 == oracle::bfs_distance(g, 0, 8, allowed));
  CHECK(path->size() - 1 == 4);
  CHECK(valid_system(g, 0, 8, through, {*path}));
  // Deterministic: the lexicographically first shortest path.
  CHECK(*path == Path{0, 1, 2, 5, 8});
}

TEST_CASE("path_through respects avoid on random graphs") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 8;
    const auto g = oracle::random_graph(n, 0.35, seed);
    VertexSet through{2, 3, 4, 5, 6, 7};
    VertexSet avoid{static_cast<Vertex>(2 + seed % 6)};
    std::vector<char> allowed(n, 0);
    for (Vertex v : set_difference(through, avoid)) allowed[v] = 1;
    const auto path = path_through(g, 0, 1, through, avoid);
    const int truth = oracle::bfs_distance(g, 0, 1, allowed);
    CHECK(path.has_value() == (truth >= 0));
    if (path) {
      CHECK(static_cast<int>(path->size()) - 1 == truth);
      CHECK(valid_system(g, 0, 1, set_difference(through, avoid), {*path}));
    }
  }
}

TEST_CASE("cycle with forced second vertex") {
  // 5-cycle 0-1-2-3-4-0 with v0=0, v1=1, v2=4.
  const auto c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto c = cycle_with_forced_second_vertex(c5, 0, 1, 4, {2, 3, 4}, {});
  REQUIRE(c);
  CHECK(*c == Cycle{0, 1, 2, 3, 4});
  const auto tri = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto t = cycle_with_forced_second_vertex(tri, 0, 1, 2, {2}, {});
  REQUIRE(t);
  CHECK(t->size() == 3);
  // v2 cut off from v1 once v0 is removed.
  const auto cut = graph(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}});
  CHECK_FALSE(cycle_with_forced_second_vertex(cut, 0, 1, 2, {2, 3, 4}, {}));
  // v2 outside U is not allowed.
  CHECK_FALSE(cycle_with_forced_second_vertex(c5, 0, 1, 4, {2, 3}, {}));
  CHECK_THROWS_AS(cycle_with_forced_second_vertex(c5, 0, 1, 1, {2, 3}, {}), InputError);
}

TEST_CASE("cycle with edge") {
  // K4 on v0=0, v3=1, a=2, b=3.
  const auto c = cycle_with_edge(complete(4), 0, 1, {2}, {});
  REQUIRE(c);
  CHECK(*c == Cycle{0, 2, 1});
  const auto star = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(cycle_with_edge(star, 0, 1, {2, 3, 4}, {}));
  const auto c6 = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto six = cycle_with_edge(c6, 0, 1, {2, 3, 4, 5}, {});
  REQUIRE(six);
  CHECK(six->size() == 6);
  CHECK(valid_cycle(c6, *six));
}

TEST_CASE("cycles on random graphs are valid and respect U and avoid") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto g = oracle::random_graph(10, 0.4, seed);
    if (!g.has_edge(0, 1) || !g.has_edge(0, 2)) continue;
    const VertexSet through{2, 4, 5, 6, 7, 8, 9};
    const VertexSet avoid{static_cast<Vertex>(4 + seed % 3)};
    if (auto c = cycle_with_forced_second_vertex(g, 0, 1, 2, through, avoid)) {
      CHECK(valid_cycle(g, *c));
      CHECK((*c)[0] == 0);
      CHECK((*c)[1] == 1);
      CHECK(c->back() == 2);
      for (std::size_t i = 2; i < c->size(); ++i) {
        CHECK(set_contains(through, (*c)[i]));
        CHECK_FALSE(set_contains(avoid, (*c)[i]));
      }
    }
    if (auto c = cycle_with_edge(g, 0, 1, through, avoid)) {
      CHECK(valid_cycle(g, *c));
      CHECK(c->front() == 0);
      CHECK(c->back() == 1);
      for (std::size_t i = 1; i + 1 < c->size(); ++i) {
        CHECK(set_contains(through, (*c)[i]));
        CHECK_FALSE(set_contains(avoid, (*c)[i]));
      }
    }
  }
}

TEST_CASE("path searches are deterministic") {
  const auto g = oracle::random_graph(12, 0.4, 99);
  VertexSet through;
  for (Vertex v = 2; v < 12; ++v) through.push_back(v);
  const auto a = disjoint_paths(g, 0, 1, through, 2);
  const auto b = disjoint_paths(g, 0, 1, through, 2);
  REQUIRE(a.has_value() == b.has_value());
  if (a) CHECK(a->paths == b->paths);
}
