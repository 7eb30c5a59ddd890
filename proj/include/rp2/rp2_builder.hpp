#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rp2/admissibility.hpp"
#include "rp2/hypergraph.hpp"
#include "rp2/json_io.hpp"
#include "rp2/paths.hpp"
#include "rp2/surface.hpp"

namespace rp2 {

// Disk with a declared boundary walk. Construction through make_disk_patch
// guarantees classify() == Disk, induced boundary, and a matching walk.
struct DiskPatch {
  Complex2 facets;
  std::vector<Vertex> boundary;
  VertexSet interior;
};

// Validates and wraps; throws DefectError if the facets are not a disk with
// induced boundary equal to `boundary` (up to rotation and reflection).
DiskPatch make_disk_patch(Complex2 facets, std::vector<Vertex> boundary);

// The disk {x a_i a_i+1, w a_i a_i+1} u {w b_j b_j+1, x' b_j b_j+1} with
// boundary y x z x'. `a_path` and `b_path` run from y to z with at least one
// internal vertex each.
DiskPatch two_fan_disk(Vertex x, Vertex y, Vertex z, Vertex x2, Vertex w, const Path& a_path, const Path& b_path);

Complex2 build_double_pyramid(Vertex u, Vertex u2, const Cycle& cycle);

struct SphereCertificate {
  Vertex u = 0;
  Vertex u2 = 0;
  Cycle cycle;
  Complex2 facets;
  SurfaceReport report;
};

Json sphere_json(const SphereCertificate& cert);

// Tries up to `budget` vertex pairs in decreasing order of common-link size
// and returns the double pyramid over the first cycle found.
std::optional<SphereCertificate> find_sphere(const Hypergraph3& h, std::size_t budget, std::uint64_t seed);

// Disk with induced boundary y x z x' built from a witness w of the pair
// (xyz, x'yz), interior inside U \ W. U is split by a fair seeded coin into
// the halves feeding the two path families.
std::optional<DiskPatch> build_disk_from_pair(const Hypergraph3& h, Vertex x, Vertex y, Vertex z, Vertex x2,
                                              const VertexSet& through, const VertexSet& avoid,
                                              std::size_t k, std::uint64_t seed);

// Glues A = {u e : e in (C u C') - {v0v1, v0v3}} u D and
// A' = {u' e : e in (C u C') - {v0v2, v0v3}} u D'. Every hypothesis is
// checked first (PreconditionError naming the clause); a result that does
// not classify as RP2 raises DefectError.
Complex2 assemble_rp2(Vertex u, Vertex u2, const Cycle& c, const Cycle& c_prime, const DiskPatch& d,
                      const DiskPatch& d_prime, Vertex v0, Vertex v1, Vertex v2, Vertex v3);

struct DensePair {
  Vertex u = 0;
  Vertex u2 = 0;
  Graph link;
  std::size_t achieved = 0;
  // e(G) >= d n / 4 held; false means only the lenient test passed.
  bool dense = false;
};

// Best pair of the sub-hypergraph (V(H), F). Strict mode needs e(G) >= dn/4,
// lenient mode e(G) > 0. On failure `achieved` still reports the maximum.
std::optional<DensePair> find_dense_pair(const Hypergraph3& h, const std::vector<Triple>& f, double d,
                                         bool strict, std::size_t* achieved = nullptr);

struct ApexParams {
  double p = 1.0 / 6.0;
  double epsilon = 1.0 / 3.0;
  std::size_t k = 2;
  double d = 32.0;
  bool strict = false;
  std::size_t mc_samples = 256;
  std::size_t exact_limit = 12;
  std::uint64_t seed = 1;
};

struct Apex {
  Graph subgraph;
  Vertex v0 = 0;
  Vertex v1 = 0;
  Vertex v3 = 0;
  AdmissibilityEstimate first;
  AdmissibilityEstimate second;
  // Both edges carry an admissible verdict (always true in strict mode).
  bool certified = false;
  std::size_t depth = 0;
};

// Degree-peeling search for v0 with two admissible incident edges and
// deg(v0) <= d in the returned subgraph.
std::optional<Apex> find_apex(const Graph& g, const ApexParams& params);

struct SearchConfig {
  double p = 1.0 / 6.0;
  double epsilon = 0.01;
  // Admissibility tolerance for the apex edges.
  double epsilon_apex = 1.0 / 3.0;
  std::size_t k = 7;
  std::size_t r = 8;
  double d = 32.0;
  double c = 1.0;
  std::size_t retry_budget = 4000;
  std::size_t mc_samples = 256;
  std::size_t exact_limit = 12;
  std::uint64_t seed = 1;
  bool strict = false;
  bool prefilter = false;
  std::size_t filter_budget = 1000;
  std::size_t threads = 1;

  void validate() const;

  // d = 4(1 + 2 alpha) with alpha = 2*2 / (p^2 eps'); smallest r with
  // 2 (2/3)^(r-5) < 1/(6d); eps with 4 r eps < 1/(6d); c from the density bound.
  static SearchConfig strict_defaults();

  // Flat key=value lines; unknown keys are an InputError.
  void apply_key_values(std::string_view text);
  Json to_json() const;
};

struct StageCounters {
  std::size_t attempts = 0;
  std::size_t dense_pair_failed = 0;
  std::size_t apex_failed = 0;
  std::size_t no_v2_candidate = 0;
  std::size_t cycle_c_failed = 0;
  std::size_t cycle_c_prime_failed = 0;
  std::size_t semi_admissible_checked = 0;
  std::size_t semi_admissible_failed = 0;
  std::size_t disk_d_failed = 0;
  std::size_t disk_d_prime_failed = 0;
  std::size_t assembled = 0;

  Json to_json() const;
};

struct Certificate {
  Complex2 facets;
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
  VertexSet w;
  // Vertices actually drawn from U1..U4: V(C)-{v0,v1}, V(C')-{v0,v3}, V°(D), V°(D').
  std::array<VertexSet, 4> partition;
  SearchConfig config;
  std::uint64_t seed = 0;
  std::size_t attempt = 0;
  SurfaceReport report;
};

Json certificate_json(const Certificate& cert);

struct SearchResult {
  std::optional<Certificate> certificate;
  StageCounters counters;
  bool lenient_dense_pair = false;
  bool lenient_apex = false;
};

SearchResult find_rp2(const Hypergraph3& h, const SearchConfig& config);

struct Verification {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-derives every certificate invariant from H and the recorded data only.
Verification verify_certificate(const Hypergraph3& h, const Certificate& cert);

}  // namespace rp2
