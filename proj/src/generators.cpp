#include "rp2/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "rp2/errors.hpp"
#include "rp2/rng.hpp"

namespace rp2 {

namespace {

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Colexicographic unranking: idx = C(c,3) + C(b,2) + a with a < b < c.
Triple unrank(std::uint64_t idx) {
  std::uint64_t c = 2;
  while (choose3(c + 1) <= idx) ++c;
  idx -= choose3(c);
  std::uint64_t b = 1;
  while (choose2(b + 1) <= idx) ++b;
  idx -= choose2(b);
  return Triple(static_cast<Vertex>(idx), static_cast<Vertex>(b), static_cast<Vertex>(c));
}

Complex2 klein_grid(std::size_t a, std::size_t b) {
  // Columns wrap with a flip: (a, j) ~ (0, -j).
  auto id = [&](std::size_t i, std::size_t j) -> Vertex {
    if (i == a) {
      i = 0;
      j = (b - j % b) % b;
    }
    return static_cast<Vertex>(i * b + j % b);
  };
  std::vector<Triple> facets;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      facets.emplace_back(id(i, j), id(i + 1, j), id(i + 1, j + 1));
      facets.emplace_back(id(i, j), id(i + 1, j + 1), id(i, j + 1));
    }
  return Complex2(std::move(facets));
}

Complex2 double_pyramid_fixture(std::size_t k) {
  Cycle c(k);
  std::iota(c.begin(), c.end(), Vertex{0});
  return build_double_pyramid(static_cast<Vertex>(k), static_cast<Vertex>(k + 1), c);
}

}  // namespace

Hypergraph3 random_hypergraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = choose3(n);
  if (m > total) throw InputError("m exceeds C(n,3)");
  Rng rng(seed);
  // Floyd's sampling.
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!picked.insert(t).second) picked.insert(j);
  }
  std::vector<std::uint64_t> ids(picked.begin(), picked.end());
  std::sort(ids.begin(), ids.end());
  std::vector<Triple> edges;
  edges.reserve(m);
  for (auto idx : ids) edges.push_back(unrank(idx));
  return Hypergraph3(n, std::move(edges));
}

Hypergraph3 complete_hypergraph(std::size_t n) {
  std::vector<Triple> edges;
  edges.reserve(choose3(n));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) edges.emplace_back(a, b, c);
  return Hypergraph3(n, std::move(edges));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"tetra_sphere", "octa_sphere", "hemi_icosahedron_rp2",
                                              "csaszar_torus", "klein_bottle", "cone_disk",
                                              "pinch_point", "triple_edge", "double_pyramid_k"};
  return names;
}

Fixture fixture(std::string_view name) {
  Fixture f;
  f.name = std::string(name);
  auto tri = [](std::initializer_list<std::array<Vertex, 3>> list) {
    std::vector<Triple> out;
    for (const auto& t : list) out.emplace_back(t[0], t[1], t[2]);
    return Complex2(std::move(out));
  };
  if (name == "tetra_sphere") {
    f.facets = tri({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    f.expected = "Sphere";
  } else if (name == "octa_sphere") {
    f.facets = double_pyramid_fixture(4);
    f.expected = "Sphere";
  } else if (name == "hemi_icosahedron_rp2") {
    f.facets = tri({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                    {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
    f.expected = "RP2";
  } else if (name == "csaszar_torus") {
    std::vector<Triple> facets;
    for (Vertex i = 0; i < 7; ++i) {
      facets.emplace_back(i, (i + 1) % 7, (i + 3) % 7);
      facets.emplace_back(i, (i + 2) % 7, (i + 3) % 7);
    }
    f.facets = Complex2(std::move(facets));
    f.expected = "Torus(g=1)";
  } else if (name == "klein_bottle") {
    f.facets = klein_grid(3, 3);
    f.expected = "NonOrientable(k=2)";
  } else if (name == "cone_disk") {
    f.facets = tri({{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
    f.expected = "Disk";
  } else if (name == "pinch_point") {
    f.facets = tri({{0, 1, 2}, {0, 3, 4}});
    f.expected = "NotASurface";
  } else if (name == "triple_edge") {
    f.facets = tri({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    f.expected = "NotASurface";
  } else if (name.rfind("double_pyramid_", 0) == 0) {
    const auto tail = name.substr(15);
    std::size_t k = 5;
    if (tail != "k") {
      auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
      if (ec != std::errc() || ptr != tail.data() + tail.size() || k < 3)
        throw InputError("bad double pyramid size in '" + std::string(name) + "'");
    }
    f.facets = double_pyramid_fixture(k);
    f.expected = "Sphere";
  } else {
    throw InputError("unknown fixture '" + std::string(name) + "'");
  }
  return f;
}

Hypergraph3 complex_as_hypergraph(const Complex2& x) {
  const std::size_t n = x.vertices().empty() ? 0 : x.vertices().back() + 1;
  return Hypergraph3(n, x.facets());
}

PlantedMakeRP planted_makeRP_instance(std::size_t len_c, std::size_t len_c_prime, std::size_t s, std::size_t t,
                                      std::uint64_t seed) {
  if (len_c < 4 || len_c_prime < 3 || s < 1 || t < 1)
    throw InputError("planted instance needs lenC >= 4, lenC' >= 3, s, t >= 1");
  const std::size_t n = 6 + (len_c - 3) + (len_c_prime - 2) + 2 * (1 + s + t);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(perm);
  Vertex next = 0;
  auto fresh = [&] { return perm[next++]; };

  PlantedMakeRP out;
  out.u = fresh();
  out.u2 = fresh();
  out.v0 = fresh();
  out.v1 = fresh();
  out.v2 = fresh();
  out.v3 = fresh();

  out.c = {out.v0, out.v1};
  for (std::size_t i = 0; i < len_c - 3; ++i) out.c.push_back(fresh());
  out.c.push_back(out.v2);
  out.c_prime = {out.v0};
  for (std::size_t i = 0; i < len_c_prime - 2; ++i) out.c_prime.push_back(fresh());
  out.c_prime.push_back(out.v3);

  auto disk = [&](Vertex x, Vertex y, Vertex z, Vertex x2) {
    const Vertex w = fresh();
    Path a{y};
    for (std::size_t i = 0; i < s; ++i) a.push_back(fresh());
    a.push_back(z);
    Path b{y};
    for (std::size_t j = 0; j < t; ++j) b.push_back(fresh());
    b.push_back(z);
    return two_fan_disk(x, y, z, x2, w, a, b);
  };
  out.d = disk(out.v1, out.u, out.v0, out.v3);
  out.d_prime = disk(out.v2, out.u2, out.v0, out.v3);

  std::vector<Triple> facets;
  auto cone = [&](Vertex apex, const Cycle& cyc, Edge skip1, Edge skip2) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Edge e(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (e != skip1 && e != skip2) facets.emplace_back(apex, e.a, e.b);
    }
  };
  for (const Cycle* cyc : {&out.c, &out.c_prime}) {
    cone(out.u, *cyc, Edge(out.v0, out.v1), Edge(out.v0, out.v3));
    cone(out.u2, *cyc, Edge(out.v0, out.v2), Edge(out.v0, out.v3));
  }
  for (const auto& f : out.d.facets.facets()) facets.push_back(f);
  for (const auto& f : out.d_prime.facets.facets()) facets.push_back(f);
  out.h = Hypergraph3(n, std::move(facets));
  return out;
}

PlantedSemiAdmissible planted_semi_admissible(std::size_t r, std::size_t k, std::uint64_t seed,
                                              std::size_t fan_size) {
  if (r < 1 || k < 1) throw InputError("r and k must be >= 1");
  if (fan_size == 0) fan_size = k + 2;
  const std::size_t n = 4 + r * (1 + fan_size);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(perm);
  Vertex next = 0;
  auto fresh = [&] { return perm[next++]; };

  PlantedSemiAdmissible out;
  out.x = fresh();
  out.x2 = fresh();
  out.y = fresh();
  out.z = fresh();
  const Vertex x = out.x, x2 = out.x2, y = out.y, z = out.z;
  std::vector<Triple> edges{{x, y, z}, {x2, y, z}};
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex w = fresh();
    out.witnesses.push_back(w);
    edges.emplace_back(w, y, z);
    VertexSet fan;
    for (std::size_t j = 0; j < fan_size; ++j) {
      const Vertex a = fresh();
      fan.push_back(a);
      for (Vertex apex : {x, w, x2}) {
        edges.emplace_back(apex, y, a);
        edges.emplace_back(apex, a, z);
      }
    }
    std::sort(fan.begin(), fan.end());
    out.fans.push_back(std::move(fan));
  }
  out.e = Triple(x, y, z);
  out.f = Triple(x2, y, z);
  out.h = Hypergraph3(n, std::move(edges));
  return out;
}

}  // namespace rp2
