#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rp2/hypergraph.hpp"

namespace rp2 {

// Pure 2-dimensional simplicial complex given by its facets. The associated
// complex is the facets plus all their faces.
class Complex2 {
 public:
  Complex2() = default;
  explicit Complex2(std::vector<Triple> facets);

  const std::vector<Triple>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }
  bool has_facet(const Triple& t) const;
  bool has_edge(Edge e) const;

  // Number of facets containing e.
  std::size_t edge_degree(Edge e) const;

  Complex2 merged(const Complex2& other) const;

  friend bool operator==(const Complex2& a, const Complex2& b) { return a.facets_ == b.facets_; }

 private:
  std::vector<Triple> facets_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> edge_degree_;
  VertexSet vertices_;
};

std::int64_t euler_characteristic(const Complex2& x);

enum class Verdict {
  Sphere,
  Torus,
  NonOrientable,
  Disk,
  SurfaceWithBoundary,
  NotASurface,
};

enum class NotSurfaceReason { None, BadEdgeDegree, BadLink, Disconnected, Empty };

enum class Orientability { Yes, No, Undefined };

struct SurfaceReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t facet_count = 0;
  std::int64_t euler_char = 0;
  bool connected = false;
  std::vector<std::vector<Vertex>> boundary_cycles;
  Orientability orientable = Orientability::Undefined;
  Verdict verdict = Verdict::NotASurface;
  NotSurfaceReason reason = NotSurfaceReason::None;
  // Torus genus or crosscap count; 0 for other verdicts.
  int genus = 0;

  std::size_t boundary_components() const { return boundary_cycles.size(); }
  bool closed() const { return boundary_cycles.empty(); }
  bool is_rp2() const { return verdict == Verdict::NonOrientable && genus == 1; }

  // "Sphere", "RP2", "Torus(g=1)", "NonOrientable(k=2)", "Disk", ...
  std::string verdict_name() const;
};

const char* reason_name(NotSurfaceReason r);

SurfaceReport classify(const Complex2& x);

// Stable JSON object {V, E, F, chi, connected, boundary_components,
// orientable, verdict, reason?}.
std::string report_to_json(const SurfaceReport& r);

// Requires a manifold with nonempty boundary; throws InputError otherwise.
bool has_induced_boundary(const Complex2& x);

// V(X) minus the boundary vertices. Throws InputError unless X passes the
// manifold checks.
VertexSet interior_vertices(const Complex2& x);

// Vertices of the boundary, empty for closed surfaces. Same precondition.
VertexSet boundary_vertices(const Complex2& x);

// True when `walk` and `cycle` are the same cyclic sequence up to rotation
// and reflection.
bool same_cycle(const std::vector<Vertex>& walk, const std::vector<Vertex>& cycle);

}  // namespace rp2
