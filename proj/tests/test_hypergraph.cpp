#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rp2/errors.hpp"
#include "rp2/generators.hpp"
#include "rp2/hypergraph.hpp"

using namespace rp2;

namespace {

Hypergraph3 make(std::size_t n, std::initializer_list<std::array<Vertex, 3>> list) {
  std::vector<Triple> edges;
  for (const auto& t : list) edges.emplace_back(t[0], t[1], t[2]);
  return Hypergraph3(n, std::move(edges));
}

std::vector<Edge> edge_list(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<Edge> out;
  for (auto [a, b] : list) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("hypergraph canonicalizes and rejects bad triples") {
  const auto h = make(5, {{2, 1, 0}, {0, 1, 2}, {4, 3, 0}});
  CHECK(h.edge_count() == 2);
  CHECK(h.edges()[0] == Triple(0, 1, 2));
  CHECK(h.contains(2, 0, 1));
  CHECK_FALSE(h.contains(1, 2, 3));
  CHECK_THROWS_AS(make(3, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(make(3, {{0, 1, 3}}), InputError);
}

TEST_CASE("link graph") {
  const auto h = make(4, {{0, 1, 2}, {0, 1, 3}});
  CHECK(link_graph(h, 0).edges() == edge_list({{1, 2}, {1, 3}}));
  const auto lonely = make(4, {{0, 1, 2}});
  const auto g = link_graph(lonely, 3);
  CHECK(g.edge_count() == 0);
  CHECK(g.vertices() == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(link_graph(lonely, 4), InputError);
}

TEST_CASE("pair link") {
  CHECK(pair_link(make(5, {{0, 2, 3}, {1, 2, 3}, {0, 3, 4}, {1, 3, 4}}), 0, 1).edges() ==
        edge_list({{2, 3}, {3, 4}}));
  const auto single = pair_link(make(3, {{0, 1, 2}}), 0, 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.vertices() == VertexSet{2});
  const auto k6 = pair_link(complete_hypergraph(6), 0, 1);
  CHECK(k6.vertices() == VertexSet{2, 3, 4, 5});
  CHECK(k6.edge_count() == 6);
  CHECK_THROWS_AS(pair_link(complete_hypergraph(6), 2, 2), InputError);
}

TEST_CASE("codegree") {
  CHECK(codegree(make(5, {{0, 2, 3}, {1, 2, 3}, {4, 2, 3}}), 2, 3) == 3);
  CHECK(codegree(make(5, {{0, 1, 2}}), 3, 4) == 0);
  CHECK(codegree(complete_hypergraph(9), 4, 7) == 7);
  CHECK_THROWS_AS(codegree(complete_hypergraph(4), 1, 1), InputError);
}

TEST_CASE("best pair examples") {
  const auto bp = best_pair(make(5, {{0, 2, 3}, {1, 2, 3}, {0, 3, 4}, {1, 3, 4}}));
  CHECK(bp.u == 0);
  CHECK(bp.u2 == 1);
  CHECK(bp.link_edges == 2);
  const auto empty = best_pair(Hypergraph3(4, {}));
  CHECK(empty.u == 0);
  CHECK(empty.u2 == 1);
  CHECK(empty.link_edges == 0);
  const auto k6 = best_pair(complete_hypergraph(6));
  CHECK(k6.u == 0);
  CHECK(k6.u2 == 1);
  CHECK(k6.link_edges == 6);
  CHECK_THROWS_AS(best_pair(Hypergraph3(1, {})), InputError);
}

TEST_CASE("best pair matches enumeration over all pairs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const auto h = random_hypergraph(n, 3 * n, seed);
    std::size_t best = 0;
    Vertex bu = 0, bw = 1;
    bool first = true;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w = u + 1; w < n; ++w) {
        const auto e = pair_link(h, u, w).edge_count();
        if (first || e > best) {
          best = e;
          bu = u;
          bw = w;
          first = false;
        }
      }
    const auto bp = best_pair(h);
    CHECK(bp.link_edges == best);
    CHECK(bp.u == bu);
    CHECK(bp.u2 == bw);
  }
}

TEST_CASE("link and codegree properties on random hypergraphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto h = random_hypergraph(10, 30, seed);
    std::size_t sum = 0;
    for (Vertex v = 0; v < 10; ++v) {
      std::size_t direct = 0;
      for (const auto& t : h.edges()) direct += t.has(v) ? 1 : 0;
      CHECK(link_graph(h, v).edge_count() == direct);
      CHECK(h.degree(v) == direct);
      for (Vertex w = v + 1; w < 10; ++w) {
        sum += codegree(h, v, w);
        const auto pl = pair_link(h, v, w);
        const auto lv = link_graph(h, v);
        const auto lw = link_graph(h, w);
        for (const auto& e : pl.edges()) {
          CHECK(lv.has_edge(e.a, e.b));
          CHECK(lw.has_edge(e.a, e.b));
        }
      }
    }
    CHECK(sum == 3 * h.edge_count());
    const auto table = codegree_table(h);
    CHECK(table[2 * 10 + 5] == codegree(h, 2, 5));
  }
}

TEST_CASE("parse and serialize") {
  const auto h = parse_hypergraph("n=4\n0 1 2\n0 1 3\n");
  CHECK(h == make(4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(serialize_hypergraph(h) == "n=4\n0 1 2\n0 1 3\n");
  CHECK(parse_hypergraph("# comment\nn=4\n\n3 1 0\n0 1 3\n") == make(4, {{0, 1, 3}}));

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("n=3\n0 0 1\n") == 2);
  CHECK(line_of("n=3\n0 1 3\n") == 2);
  CHECK(line_of("n=5\n0 1 2\n0 1\n") == 3);
  CHECK(line_of("n=5\n0 1 x\n") == 2);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("serialize round-trips 100 random files") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 15;
    const std::size_t total = n * (n - 1) * (n - 2) / 6;
    const auto h = random_hypergraph(n, (seed * 7) % (total + 1), seed);
    const auto text = serialize_hypergraph(h);
    CHECK(parse_hypergraph(text) == h);
    CHECK(serialize_hypergraph(parse_hypergraph(text)) == text);
  }
}

TEST_CASE("graph format") {
  const auto g = parse_graph("n=4\n0 1\n1 0\n2 3\n");
  CHECK(g.edge_count() == 2);
  CHECK(serialize_graph(g) == "n=4\n0 1\n2 3\n");
  CHECK_THROWS_AS(parse_graph("n=3\n1 1\n"), ParseError);
}

TEST_CASE("best pair is deterministic") {
  const auto a = random_hypergraph(14, 120, 5);
  const auto b = random_hypergraph(14, 120, 5);
  CHECK(a == b);
  CHECK(best_pair(a).u == best_pair(b).u);
  CHECK(best_pair(a).u2 == best_pair(b).u2);
}
