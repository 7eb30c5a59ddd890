#include "rp2/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "rp2/errors.hpp"
#include "rp2/json_io.hpp"

namespace rp2 {

Complex2::Complex2(std::vector<Triple> facets) : facets_(std::move(facets)) {
  for (auto& t : facets_) {
    t = Triple(t[0], t[1], t[2]);
    if (!t.distinct()) throw InputError("repeated vertex in facet");
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

  std::vector<Edge> all;
  std::vector<Vertex> verts;
  all.reserve(3 * facets_.size());
  for (const auto& t : facets_) {
    all.emplace_back(t[0], t[1]);
    all.emplace_back(t[0], t[2]);
    all.emplace_back(t[1], t[2]);
    verts.insert(verts.end(), t.v.begin(), t.v.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    edges_.push_back(all[i]);
    edge_degree_.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  vertices_ = make_vertex_set(std::move(verts));
}

bool Complex2::has_facet(const Triple& t) const {
  return std::binary_search(facets_.begin(), facets_.end(), t);
}

bool Complex2::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::size_t Complex2::edge_degree(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return 0;
  return edge_degree_[static_cast<std::size_t>(it - edges_.begin())];
}

Complex2 Complex2::merged(const Complex2& other) const {
  std::vector<Triple> all = facets_;
  all.insert(all.end(), other.facets_.begin(), other.facets_.end());
  return Complex2(std::move(all));
}

std::int64_t euler_characteristic(const Complex2& x) {
  return static_cast<std::int64_t>(x.vertices().size()) - static_cast<std::int64_t>(x.edges().size()) +
         static_cast<std::int64_t>(x.facet_count());
}

const char* reason_name(NotSurfaceReason r) {
  switch (r) {
    case NotSurfaceReason::None: return "";
    case NotSurfaceReason::BadEdgeDegree: return "bad-edge-degree";
    case NotSurfaceReason::BadLink: return "bad-link";
    case NotSurfaceReason::Disconnected: return "disconnected";
    case NotSurfaceReason::Empty: return "empty";
  }
  return "";
}

std::string SurfaceReport::verdict_name() const {
  switch (verdict) {
    case Verdict::Sphere: return "Sphere";
    case Verdict::Torus: return "Torus(g=" + std::to_string(genus) + ")";
    case Verdict::NonOrientable:
      return genus == 1 ? std::string("RP2") : "NonOrientable(k=" + std::to_string(genus) + ")";
    case Verdict::Disk: return "Disk";
    case Verdict::SurfaceWithBoundary: return "SurfaceWithBoundary";
    case Verdict::NotASurface: return "NotASurface";
  }
  return "NotASurface";
}

namespace {

// Maps the sparse vertex IDs of a complex to 0..V-1.
struct LocalIndex {
  std::map<Vertex, std::size_t> of;
  explicit LocalIndex(const VertexSet& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) of.emplace(vs[i], i);
  }
  std::size_t operator()(Vertex v) const { return of.at(v); }
};

// Edge and link checks shared by classify and the boundary queries.
NotSurfaceReason manifold_check(const Complex2& x) {
  if (x.facet_count() == 0) return NotSurfaceReason::Empty;
  for (const Edge& e : x.edges()) {
    auto d = x.edge_degree(e);
    if (d < 1 || d > 2) return NotSurfaceReason::BadEdgeDegree;
  }
  // The link of v is the graph of edges opposite v. Edge degrees <= 2 bound
  // link degrees by 2, so it is a single path or cycle iff connected.
  std::map<Vertex, std::vector<Edge>> links;
  for (const auto& t : x.facets()) {
    links[t[0]].emplace_back(t[1], t[2]);
    links[t[1]].emplace_back(t[0], t[2]);
    links[t[2]].emplace_back(t[0], t[1]);
  }
  for (const auto& [v, link] : links) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : link) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::vector<Vertex> stack{adj.begin()->first};
    std::map<Vertex, bool> seen{{adj.begin()->first, true}};
    while (!stack.empty()) {
      Vertex w = stack.back();
      stack.pop_back();
      for (Vertex z : adj[w])
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
    }
    std::size_t reached = 0;
    for (const auto& [w, s] : seen) reached += s ? 1 : 0;
    if (reached != adj.size()) return NotSurfaceReason::BadLink;
  }
  return NotSurfaceReason::None;
}

bool facets_connected(const Complex2& x) {
  const auto& facets = x.facets();
  if (facets.empty()) return false;
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& t = facets[i];
    by_edge[Edge(t[0], t[1])].push_back(i);
    by_edge[Edge(t[0], t[2])].push_back(i);
    by_edge[Edge(t[1], t[2])].push_back(i);
  }
  std::vector<char> seen(facets.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    const auto& t = facets[i];
    for (Edge e : {Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])})
      for (std::size_t j : by_edge[e])
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
  }
  return reached == facets.size();
}

// Boundary edges form disjoint cycles once the manifold checks pass. Each
// cycle starts at its smallest vertex and heads toward the smaller neighbor.
std::vector<std::vector<Vertex>> trace_boundary(const Complex2& x) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : x.edges())
    if (x.edge_degree(e) == 1) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  std::vector<std::vector<Vertex>> cycles;
  std::map<Vertex, bool> used;
  for (const auto& [start, list] : adj) {
    if (used[start]) continue;
    std::vector<Vertex> cycle{start};
    used[start] = true;
    Vertex prev = start;
    Vertex cur = list.front();
    while (cur != start) {
      cycle.push_back(cur);
      used[cur] = true;
      const auto& next = adj[cur];
      if (next.size() != 2) throw DefectError("boundary vertex without two boundary edges");
      Vertex nxt = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = nxt;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// +1 if the facet's ascending order traverses e = (a<b) from a to b.
int relative_sign(const Triple& t, const Edge& e) {
  if (e.a == t[0] && e.b == t[2]) return -1;
  return 1;
}

Orientability orient(const Complex2& x) {
  const auto& facets = x.facets();
  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& t = facets[i];
    by_edge[Edge(t[0], t[1])].push_back(i);
    by_edge[Edge(t[0], t[2])].push_back(i);
    by_edge[Edge(t[1], t[2])].push_back(i);
  }
  std::vector<int> sign(facets.size(), 0);
  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      const auto& t = facets[i];
      for (Edge e : {Edge(t[0], t[1]), Edge(t[0], t[2]), Edge(t[1], t[2])}) {
        for (std::size_t j : by_edge[e]) {
          if (j == i) continue;
          // Neighbours must traverse the shared edge in opposite directions.
          int want = -sign[i] * relative_sign(t, e) * relative_sign(facets[j], e);
          if (sign[j] == 0) {
            sign[j] = want;
            queue.push(j);
          } else if (sign[j] != want) {
            return Orientability::No;
          }
        }
      }
    }
  }
  return Orientability::Yes;
}

}  // namespace

SurfaceReport classify(const Complex2& x) {
  SurfaceReport r;
  r.vertex_count = x.vertices().size();
  r.edge_count = x.edges().size();
  r.facet_count = x.facet_count();
  r.euler_char = euler_characteristic(x);
  r.connected = facets_connected(x);

  r.reason = manifold_check(x);
  if (r.reason == NotSurfaceReason::None && !r.connected) r.reason = NotSurfaceReason::Disconnected;
  if (r.reason != NotSurfaceReason::None) {
    r.verdict = Verdict::NotASurface;
    return r;
  }

  r.orientable = orient(x);
  r.boundary_cycles = trace_boundary(x);
  const bool orientable = r.orientable == Orientability::Yes;
  if (r.boundary_cycles.empty()) {
    if (orientable) {
      // chi = 2 - 2g
      r.genus = static_cast<int>((2 - r.euler_char) / 2);
      r.verdict = r.genus == 0 ? Verdict::Sphere : Verdict::Torus;
    } else {
      // chi = 2 - k
      r.genus = static_cast<int>(2 - r.euler_char);
      r.verdict = Verdict::NonOrientable;
    }
  } else if (r.boundary_cycles.size() == 1 && r.euler_char == 1) {
    r.verdict = Verdict::Disk;
  } else {
    r.verdict = Verdict::SurfaceWithBoundary;
  }
  return r;
}

std::string report_to_json(const SurfaceReport& r) { return report_json(r).dump(); }

VertexSet boundary_vertices(const Complex2& x) {
  if (manifold_check(x) != NotSurfaceReason::None)
    throw InputError("complex is not a manifold with boundary");
  std::vector<Vertex> out;
  for (const Edge& e : x.edges())
    if (x.edge_degree(e) == 1) {
      out.push_back(e.a);
      out.push_back(e.b);
    }
  return make_vertex_set(std::move(out));
}

VertexSet interior_vertices(const Complex2& x) {
  return set_difference(x.vertices(), boundary_vertices(x));
}

bool has_induced_boundary(const Complex2& x) {
  auto report = classify(x);
  if (report.verdict != Verdict::Disk && report.verdict != Verdict::SurfaceWithBoundary)
    throw InputError("induced boundary needs a surface with boundary, got " + report.verdict_name());
  const VertexSet boundary = boundary_vertices(x);
  for (const Edge& e : x.edges())
    if (set_contains(boundary, e.a) && set_contains(boundary, e.b) && x.edge_degree(e) != 1) return false;
  for (const auto& t : x.facets())
    if (set_contains(boundary, t[0]) && set_contains(boundary, t[1]) && set_contains(boundary, t[2]))
      return false;
  return true;
}

bool same_cycle(const std::vector<Vertex>& walk, const std::vector<Vertex>& cycle) {
  const std::size_t n = cycle.size();
  if (walk.size() != n) return false;
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      fwd = fwd && walk[i] == cycle[(shift + i) % n];
      bwd = bwd && walk[i] == cycle[(shift + n - i) % n];
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace rp2
