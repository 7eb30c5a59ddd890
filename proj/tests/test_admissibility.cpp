#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rp2/admissibility.hpp"
#include "rp2/errors.hpp"
#include "rp2/generators.hpp"
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

// x=0, y=1, a=2, b=3
const Graph k4_minus = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

AdmissibilityParams params(double p, double eps, std::size_t k, std::size_t samples = 10000) {
  AdmissibilityParams ap;
  ap.p = p;
  ap.epsilon = eps;
  ap.k = k;
  ap.mc_samples = samples;
  return ap;
}

}  // namespace

TEST_CASE("exact probabilities on K4 minus an edge") {
  CHECK(admissible_exact(k4_minus, 0, 1, 0.5, 1) == doctest::Approx(0.75));
  CHECK(admissible_exact(k4_minus, 0, 1, 0.5, 2) == doctest::Approx(0.25));
  CHECK(admissible_exact(k4_minus, 0, 1, 1.0, 2) == doctest::Approx(1.0));
  CHECK(admissible_exact(k4_minus, 0, 1, 0.3, 3) == doctest::Approx(0.0));
}

TEST_CASE("exact mode agrees with enumeration of every subset") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed % 4;
    auto g = oracle::random_graph(n, 0.55, seed);
    if (!g.has_edge(0, 1)) {
      auto edges = g.edges();
      edges.emplace_back(0, 1);
      g = Graph::complete_vertex_set(n, edges);
    }
    for (double p : {0.2, 0.5, 0.8})
      for (std::size_t k = 1; k <= 3; ++k)
        CHECK(admissible_exact(g, 0, 1, p, k) == doctest::Approx(oracle::admissibility_by_subsets(g, 0, 1, p, k)));
  }
}

TEST_CASE("candidate vertices lie on x-y paths") {
  // 4 hangs off x only; 5 is isolated.
  const auto g = graph(6, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}});
  CHECK(path_candidates(g, 0, 1) == VertexSet{2, 3});
  CHECK_THROWS_AS(admissible_exact(complete(20), 0, 1, 0.5, 1, 16), CapacityError);
}

TEST_CASE("exact probability is monotone in p and k") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = oracle::random_graph(8, 0.5, seed + 100);
    auto edges = g.edges();
    edges.emplace_back(0, 1);
    g = Graph::complete_vertex_set(8, edges);
    for (std::size_t k = 1; k <= 3; ++k) {
      double prev = -1.0;
      for (double p : {0.1, 0.3, 0.5, 0.9}) {
        const double v = admissible_exact(g, 0, 1, p, k);
        CHECK(v >= prev - 1e-12);
        prev = v;
      }
    }
    for (double p : {0.1, 0.3, 0.5, 0.9})
      for (std::size_t k = 1; k < 4; ++k)
        CHECK(admissible_exact(g, 0, 1, p, k + 1) <= admissible_exact(g, 0, 1, p, k) + 1e-12);
  }
}

TEST_CASE("monte-carlo estimate") {
  const auto est = admissible_mc(k4_minus, 0, 1, params(0.5, 0.1, 1, 50000), 7);
  CHECK(std::abs(est.p_hat - 0.75) <= 0.02);
  CHECK(est.samples == 50000);
  CHECK(est.mode == EstimateMode::MonteCarlo);
  CHECK(est.ci_low <= est.p_hat);
  CHECK(est.p_hat <= est.ci_high);
  CHECK(est.verdict == AdmissibilityVerdict::NotAdmissible);

  const auto sure = admissible_mc(k4_minus, 0, 1, params(1.0, 1e-6, 2, 100), 1);
  CHECK(sure.p_hat == 1.0);
  CHECK(sure.verdict == AdmissibilityVerdict::Admissible);

  const auto bare = admissible_mc(graph(3, {{0, 1}, {1, 2}}), 0, 1, params(0.5, 0.5, 1, 100), 1);
  CHECK(bare.p_hat == 0.0);
  CHECK(bare.verdict == AdmissibilityVerdict::NotAdmissible);
}

TEST_CASE("monte-carlo is seed-deterministic and thread-independent") {
  auto ap = params(0.4, 0.2, 2, 4000);
  const auto g = complete(9);
  const auto a = admissible_mc(g, 0, 1, ap, 11);
  ap.threads = 4;
  const auto b = admissible_mc(g, 0, 1, ap, 11);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.ci_low == b.ci_low);
  CHECK(estimate_json(a) == estimate_json(b));
}

TEST_CASE("monte-carlo converges to the exact value for most seeds") {
  const auto g = complete(7);
  const double exact = admissible_exact(g, 0, 1, 0.5, 2);
  std::size_t close = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    close += std::abs(admissible_mc(g, 0, 1, params(0.5, 0.1, 2, 50000), seed).p_hat - exact) <= 0.02 ? 1 : 0;
  CHECK(close >= 95);
}

TEST_CASE("exact estimates carry a degenerate interval") {
  const auto est = assess_edge(k4_minus, 0, 1, params(0.5, 0.3, 1), 1);
  CHECK(est.mode == EstimateMode::Exact);
  CHECK(est.ci_low == est.p_hat);
  CHECK(est.ci_high == est.p_hat);
  CHECK(est.verdict == AdmissibilityVerdict::Admissible);
  CHECK(assess_edge(k4_minus, 0, 1, params(0.5, 0.2, 1), 1).verdict == AdmissibilityVerdict::NotAdmissible);
  CHECK_THROWS_AS(assess_edge(k4_minus, 2, 3, params(0.5, 0.2, 1), 1), InputError);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(params(0.0, 0.1, 1).validate(), InputError);
  CHECK_THROWS_AS(params(0.5, 0.0, 1).validate(), InputError);
  CHECK_THROWS_AS(params(0.5, 0.1, 0).validate(), InputError);
  CHECK_THROWS_AS(params(0.5, 0.1, 1, 0).validate(), InputError);
}

TEST_CASE("semi-admissibility on planted instances") {
  const auto inst = planted_semi_admissible(4, 2, 3);
  auto ap = params(1.0, 0.1, 2);
  ap.r = 4;
  const auto res = semi_admissible(inst.h, inst.e, inst.f, ap, 1);
  CHECK(res.holds);
  CHECK(res.witnesses == make_vertex_set(inst.witnesses));
  for (Vertex w : res.witnesses) {
    const auto y = inst.y, z = inst.z;
    for (const auto& g : {pair_link(inst.h, inst.x, w), pair_link(inst.h, w, inst.x2)}) {
      VertexSet all;
      for (Vertex v : g.vertices())
        if (v != y && v != z) all.push_back(v);
      CHECK(disjoint_paths(g, y, z, all, ap.k).has_value());
    }
  }
  ap.r = 5;
  CHECK_FALSE(semi_admissible(inst.h, inst.e, inst.f, ap, 1).holds);

  const auto small = planted_semi_admissible(1, 1, 9);
  auto one = params(1.0, 0.5, 1);
  one.r = 1;
  CHECK(semi_admissible(small.h, small.e, small.f, one, 1).holds);
}

TEST_CASE("semi-admissibility edge cases") {
  const Hypergraph3 h(4, {Triple(0, 2, 3), Triple(1, 2, 3)});
  auto ap = params(1.0, 0.5, 1);
  const auto none = semi_admissible(h, Triple(0, 2, 3), Triple(1, 2, 3), ap, 1);
  CHECK_FALSE(none.holds);
  CHECK(none.witnesses.empty());
  ap.r = 0;
  const auto vacuous = semi_admissible(h, Triple(0, 2, 3), Triple(1, 2, 3), ap, 1);
  CHECK(vacuous.holds);
  CHECK(vacuous.witnesses.empty());
  const Hypergraph3 h2(6, {Triple(0, 1, 2), Triple(3, 4, 5)});
  CHECK_THROWS_AS(semi_admissible(h2, Triple(0, 1, 2), Triple(3, 4, 5), ap, 1), InputError);
}

TEST_CASE("admissible edge fraction") {
  const auto k12 = admissible_edge_fraction(complete(12), params(0.5, 0.3, 2), 1);
  CHECK(k12.edges == 66);
  CHECK(k12.admissible == 66);
  CHECK(k12.bound == doctest::Approx(2.0 * 2 / (0.25 * 0.3) * 12));
  const auto empty = admissible_edge_fraction(Graph::complete_vertex_set(5, {}), params(0.5, 0.3, 2), 1);
  CHECK(empty.edges == 0);
  const auto star = admissible_edge_fraction(graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),
                                             params(0.5, 0.3, 1), 1);
  CHECK(star.edges == 5);
  CHECK(star.not_admissible == 5);
  const auto j = stats_json(star);
  CHECK(j.contains("bound"));
}

TEST_CASE("semi-admissible filter") {
  auto ap = params(0.9, 0.5, 1);
  ap.r = 1;
  const auto k9 = complete_hypergraph(9);
  const auto res = filter_semi_admissible(k9, ap, 1, 200);
  CHECK(res.kept.size() == k9.edge_count());
  CHECK(res.evicted == 0);
  const auto untested = filter_semi_admissible(k9, ap, 1, 0);
  CHECK(untested.kept.size() == k9.edge_count());
  CHECK(untested.budget_exhausted);
  const auto sparse = random_hypergraph(12, 12, 4);
  const auto thin = filter_semi_admissible(sparse, ap, 1, 1000);
  CHECK(thin.kept.size() <= sparse.edge_count());
}
