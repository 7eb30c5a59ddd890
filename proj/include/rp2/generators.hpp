#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rp2/hypergraph.hpp"
#include "rp2/paths.hpp"
#include "rp2/rp2_builder.hpp"
#include "rp2/surface.hpp"

namespace rp2 {

// Uniform m-subset of all C(n,3) triples. Throws InputError if m > C(n,3).
Hypergraph3 random_hypergraph(std::size_t n, std::size_t m, std::uint64_t seed);

Hypergraph3 complete_hypergraph(std::size_t n);

struct Fixture {
  std::string name;
  Complex2 facets;
  // verdict_name() of the expected report.
  std::string expected;
};

// tetra_sphere, octa_sphere, hemi_icosahedron_rp2, csaszar_torus,
// klein_bottle, cone_disk, pinch_point, triple_edge, double_pyramid_k
// (k = 5) and double_pyramid_<k> for k >= 3.
Fixture fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

// Smallest vertex count n such that the complex fits in 0..n-1.
Hypergraph3 complex_as_hypergraph(const Complex2& x);

struct PlantedMakeRP {
  Hypergraph3 h;
  Vertex u = 0;
  Vertex u2 = 0;
  Vertex v0 = 0;
  Vertex v1 = 0;
  Vertex v2 = 0;
  Vertex v3 = 0;
  Cycle c;
  Cycle c_prime;
  DiskPatch d;
  DiskPatch d_prime;
};

// Fresh labels per role, randomly permuted by `seed`. The disks have s and t
// interior path vertices on their two sides. lenC >= 4, lenC' >= 3, s, t >= 1.
PlantedMakeRP planted_makeRP_instance(std::size_t len_c, std::size_t len_c_prime, std::size_t s, std::size_t t,
                                      std::uint64_t seed);

struct PlantedSemiAdmissible {
  Hypergraph3 h;
  Triple e;
  Triple f;
  Vertex x = 0;
  Vertex x2 = 0;
  Vertex y = 0;
  Vertex z = 0;
  // fans[i] belongs to witnesses[i].
  std::vector<Vertex> witnesses;
  std::vector<VertexSet> fans;
};

// Pair (xyz, x'yz) with exactly r witnesses w. Each witness owns a fan of
// `fan_size` vertices a with xya, xaz, wya, waz, x'ya, x'az in H, so both
// pair-links of w contain fan_size disjoint y-z paths of length 2.
// fan_size = 0 means k + 2.
PlantedSemiAdmissible planted_semi_admissible(std::size_t r, std::size_t k, std::uint64_t seed,
                                              std::size_t fan_size = 0);

}  // namespace rp2
