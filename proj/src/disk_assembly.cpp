#include <algorithm>
#include <set>

#include "rp2/errors.hpp"
#include "rp2/rng.hpp"
#include "rp2/rp2_builder.hpp"

namespace rp2 {

namespace {

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

bool simple_cycle(const Cycle& c) {
  if (c.size() < 3) return false;
  auto sorted = make_vertex_set(c);
  return sorted.size() == c.size();
}

}  // namespace

DiskPatch make_disk_patch(Complex2 facets, std::vector<Vertex> boundary) {
  const auto report = classify(facets);
  if (report.verdict != Verdict::Disk)
    throw DefectError("disk patch classifies as " + report.verdict_name());
  if (!has_induced_boundary(facets)) throw DefectError("disk patch lacks induced boundary");
  if (!same_cycle(report.boundary_cycles.front(), boundary))
    throw DefectError("disk patch boundary differs from the declared walk");
  DiskPatch patch;
  patch.interior = interior_vertices(facets);
  patch.facets = std::move(facets);
  patch.boundary = std::move(boundary);
  return patch;
}

DiskPatch two_fan_disk(Vertex x, Vertex y, Vertex z, Vertex x2, Vertex w, const Path& a_path, const Path& b_path) {
  if (a_path.size() < 3 || b_path.size() < 3) throw InputError("disk paths need an internal vertex");
  if (a_path.front() != y || a_path.back() != z || b_path.front() != y || b_path.back() != z)
    throw InputError("disk paths must run from y to z");
  std::vector<Triple> facets;
  for (std::size_t i = 0; i + 1 < a_path.size(); ++i) {
    facets.emplace_back(x, a_path[i], a_path[i + 1]);
    facets.emplace_back(w, a_path[i], a_path[i + 1]);
  }
  for (std::size_t j = 0; j + 1 < b_path.size(); ++j) {
    facets.emplace_back(w, b_path[j], b_path[j + 1]);
    facets.emplace_back(x2, b_path[j], b_path[j + 1]);
  }
  return make_disk_patch(Complex2(std::move(facets)), {y, x, z, x2});
}

Complex2 build_double_pyramid(Vertex u, Vertex u2, const Cycle& cycle) {
  if (u == u2) throw InputError("apexes must differ");
  if (!simple_cycle(cycle)) throw InputError("double pyramid needs a simple cycle of length >= 3");
  if (std::find(cycle.begin(), cycle.end(), u) != cycle.end() ||
      std::find(cycle.begin(), cycle.end(), u2) != cycle.end())
    throw InputError("apex lies on the cycle");
  std::vector<Triple> facets;
  for (const Edge& e : cycle_edges(cycle)) {
    facets.emplace_back(u, e.a, e.b);
    facets.emplace_back(u2, e.a, e.b);
  }
  return Complex2(std::move(facets));
}

Json sphere_json(const SphereCertificate& cert) {
  Json j;
  Json facets = Json::array();
  for (const auto& t : cert.facets.facets()) facets.push_back({t[0], t[1], t[2]});
  j["facets"] = facets;
  j["roles"] = {{"u", cert.u}, {"u1", cert.u2}};
  j["cycle"] = cert.cycle;
  j["report"] = report_json(cert.report);
  return j;
}

namespace {

// Any cycle of g, by iterative DFS from roots in the given order.
std::optional<Cycle> find_cycle(const Graph& g, const std::vector<Vertex>& roots) {
  const std::size_t n = g.universe();
  std::vector<std::int64_t> parent(n, -2);
  std::vector<char> on_stack(n, 0);
  for (Vertex root : roots) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    on_stack[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nbrs = g.neighbors(v);
      if (idx == nbrs.size()) {
        on_stack[v] = 0;
        stack.pop_back();
        continue;
      }
      Vertex w = nbrs[idx++];
      if (static_cast<std::int64_t>(w) == parent[v]) continue;
      if (on_stack[w]) {
        Cycle cycle;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cycle.push_back(it->first);
          if (it->first == w) break;
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] != -2) continue;
      parent[w] = v;
      on_stack[w] = 1;
      stack.push_back({w, 0});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SphereCertificate> find_sphere(const Hypergraph3& h, std::size_t budget, std::uint64_t seed) {
  const std::size_t n = h.n();
  if (n < 2) return std::nullopt;
  const auto sizes = pair_link_sizes(h);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (sizes[a * n + b] >= 3) pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return sizes[x.first * n + x.second] > sizes[y.first * n + y.second];
  });
  Rng rng(derive_seed(seed, {0x737068}));
  for (std::size_t i = 0; i < pairs.size() && i < budget; ++i) {
    auto [u, u2] = pairs[i];
    Graph g = pair_link(h, u, u2);
    std::vector<Vertex> roots = g.vertices();
    rng.shuffle(roots);
    auto cycle = find_cycle(g, roots);
    if (!cycle) continue;
    SphereCertificate cert;
    cert.u = u;
    cert.u2 = u2;
    cert.cycle = *cycle;
    cert.facets = build_double_pyramid(u, u2, *cycle);
    cert.report = classify(cert.facets);
    if (cert.report.verdict != Verdict::Sphere) throw DefectError("double pyramid is not a sphere");
    return cert;
  }
  return std::nullopt;
}

std::optional<DiskPatch> build_disk_from_pair(const Hypergraph3& h, Vertex x, Vertex y, Vertex z, Vertex x2,
                                              const VertexSet& through, const VertexSet& avoid,
                                              std::size_t k, std::uint64_t seed) {
  if (make_vertex_set({x, y, z, x2}).size() != 4) throw InputError("x, y, z, x' must be distinct");
  if (!h.contains(x, y, z) || !h.contains(x2, y, z)) throw InputError("xyz and x'yz must be edges of H");
  if (avoid.size() > k) throw InputError("|W| exceeds k");

  const VertexSet pool = set_difference(through, make_vertex_set({x, x2, y, z}));
  Rng rng(seed);
  VertexSet half1;
  VertexSet half2;
  for (Vertex v : pool) (rng.bernoulli(0.5) ? half1 : half2).push_back(v);

  std::vector<Vertex> witnesses;
  for (const Edge& opp : h.incident(y)) {
    Vertex w = 0;
    if (opp.a == z)
      w = opp.b;
    else if (opp.b == z)
      w = opp.a;
    else
      continue;
    if (w != x && w != x2 && set_contains(pool, w) && !set_contains(avoid, w)) witnesses.push_back(w);
  }
  std::sort(witnesses.begin(), witnesses.end());
  rng.shuffle(witnesses);

  const VertexSet avoid_a = set_union(avoid, {x2});
  const VertexSet avoid_b = set_union(avoid, {x});
  for (Vertex w : witnesses) {
    auto a_path = path_through(pair_link(h, x, w), y, z, half1, avoid_a);
    if (!a_path) continue;
    auto b_path = path_through(pair_link(h, w, x2), y, z, half2, avoid_b);
    if (!b_path) continue;
    DiskPatch disk = two_fan_disk(x, y, z, x2, w, *a_path, *b_path);
    if (!std::includes(pool.begin(), pool.end(), disk.interior.begin(), disk.interior.end()) ||
        !set_intersection(disk.interior, avoid).empty())
      throw DefectError("disk interior escapes U \\ W");
    for (const auto& t : disk.facets.facets())
      if (!h.contains(t)) throw DefectError("disk facet outside H");
    return disk;
  }
  return std::nullopt;
}

Complex2 assemble_rp2(Vertex u, Vertex u2, const Cycle& c, const Cycle& c_prime, const DiskPatch& d,
                      const DiskPatch& d_prime, Vertex v0, Vertex v1, Vertex v2, Vertex v3) {
  if (make_vertex_set({v0, v1, v2, v3}).size() != 4 || make_vertex_set({u, u2, v0, v1, v3}).size() != 5 ||
      v2 == u || v2 == u2)
    throw PreconditionError("vertices not distinct");
  if (!simple_cycle(c)) throw PreconditionError("C is not a simple cycle");
  if (!simple_cycle(c_prime)) throw PreconditionError("C' is not a simple cycle");

  auto neighbours_in = [](const Cycle& cyc, Vertex v) {
    auto it = std::find(cyc.begin(), cyc.end(), v);
    if (it == cyc.end()) return std::pair<Vertex, Vertex>{v, v};
    std::size_t i = static_cast<std::size_t>(it - cyc.begin());
    return std::pair<Vertex, Vertex>{cyc[(i + cyc.size() - 1) % cyc.size()], cyc[(i + 1) % cyc.size()]};
  };
  auto [cl, cr] = neighbours_in(c, v0);
  if (!((cl == v1 && cr == v2) || (cl == v2 && cr == v1)))
    throw PreconditionError("v1 v0 v2 is not a subpath of C");
  auto [pl, pr] = neighbours_in(c_prime, v0);
  if (pl != v3 && pr != v3) throw PreconditionError("v0v3 is not an edge of C'");

  auto check_disk = [](const DiskPatch& disk, const std::vector<Vertex>& boundary, const char* name) {
    const auto report = classify(disk.facets);
    if (report.verdict != Verdict::Disk) throw PreconditionError(std::string(name) + " is not a disk");
    if (!same_cycle(report.boundary_cycles.front(), boundary))
      throw PreconditionError(std::string(name) + " has the wrong boundary");
    if (!has_induced_boundary(disk.facets))
      throw PreconditionError(std::string(name) + " lacks induced boundary");
  };
  check_disk(d, {v0, v1, u, v3}, "D");
  check_disk(d_prime, {v0, v2, u2, v3}, "D'");

  const std::array<VertexSet, 5> parts{
      set_difference(make_vertex_set(c), make_vertex_set({v0, v1})),
      set_difference(make_vertex_set(c_prime), make_vertex_set({v0, v3})),
      interior_vertices(d.facets),
      interior_vertices(d_prime.facets),
      make_vertex_set({u, u2, v0, v1, v3}),
  };
  static constexpr const char* kNames[] = {"V(C)-{v0,v1}", "V(C')-{v0,v3}", "V°(D)", "V°(D')", "W"};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!set_intersection(parts[i], parts[j]).empty())
        throw PreconditionError(std::string("interior sets intersect: ") + kNames[i] + " and " + kNames[j]);

  std::set<Edge> skeleton;
  for (const Edge& e : cycle_edges(c)) skeleton.insert(e);
  for (const Edge& e : cycle_edges(c_prime)) skeleton.insert(e);
  std::vector<Triple> facets;
  for (const Edge& e : skeleton) {
    if (e != Edge(v0, v1) && e != Edge(v0, v3)) facets.emplace_back(u, e.a, e.b);
    if (e != Edge(v0, v2) && e != Edge(v0, v3)) facets.emplace_back(u2, e.a, e.b);
  }
  facets.insert(facets.end(), d.facets.facets().begin(), d.facets.facets().end());
  facets.insert(facets.end(), d_prime.facets.facets().begin(), d_prime.facets.facets().end());
  Complex2 result(std::move(facets));
  const auto report = classify(result);
  if (!report.is_rp2()) throw DefectError("assembled complex classifies as " + report.verdict_name());
  return result;
}

}  // namespace rp2
