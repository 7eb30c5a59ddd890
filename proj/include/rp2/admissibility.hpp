#pragma once

#include <cstdint>
#include <vector>

#include "rp2/hypergraph.hpp"
#include "rp2/json_io.hpp"

namespace rp2 {

struct AdmissibilityParams {
  double p = 0.5;
  double epsilon = 0.1;
  std::size_t k = 1;
  // Witness count for semi-admissibility. 0 makes it vacuous.
  std::size_t r = 1;
  std::size_t mc_samples = 10000;
  // Largest candidate-vertex count enumerated exactly.
  std::size_t exact_limit = 16;
  // Worker threads for Monte-Carlo trials; results do not depend on it.
  std::size_t threads = 1;

  void validate() const;
};

enum class EstimateMode { Exact, MonteCarlo };
enum class AdmissibilityVerdict { Admissible, NotAdmissible, Inconclusive };

const char* verdict_name(AdmissibilityVerdict v);

struct AdmissibilityEstimate {
  double p_hat = 0.0;
  std::size_t samples = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  EstimateMode mode = EstimateMode::Exact;
  AdmissibilityVerdict verdict = AdmissibilityVerdict::Inconclusive;
};

Json estimate_json(const AdmissibilityEstimate& e);

// Vertices lying on some x-y path of length >= 2 that avoids the edge xy.
// Nothing outside this set can influence the event A_xy.
VertexSet path_candidates(const Graph& g, Vertex x, Vertex y);

// Pr[A_xy] for U ~_p V(G): at least k internally disjoint x-y paths through
// U. Throws CapacityError when the candidate set exceeds exact_limit.
double admissible_exact(const Graph& g, Vertex x, Vertex y, double p, std::size_t k,
                        std::size_t exact_limit = 16);

// Seeded Monte-Carlo estimate with a Wilson 95% interval. Trial i draws from
// a stream derived from (seed, i).
AdmissibilityEstimate admissible_mc(const Graph& g, Vertex x, Vertex y, const AdmissibilityParams& params,
                                    std::uint64_t seed);

// Exact when the candidate set fits exact_limit, Monte-Carlo otherwise.
AdmissibilityEstimate assess_edge(const Graph& g, Vertex x, Vertex y, const AdmissibilityParams& params,
                                  std::uint64_t seed);

struct SemiAdmissibility {
  bool holds = false;
  VertexSet witnesses;
  std::size_t candidates = 0;
  std::size_t inconclusive = 0;
};

// (e, f) = (xyz, x'yz). Witnesses are the x'' with x''yz in E(H) such that yz
// is admissible in both H_{x,x''} and H_{x'',x'}. Inconclusive verdicts count
// as failures. With stop_early the scan ends as soon as the outcome is
// decided, so the witness list may be partial.
SemiAdmissibility semi_admissible(const Hypergraph3& h, const Triple& e, const Triple& f,
                                  const AdmissibilityParams& params, std::uint64_t seed,
                                  bool stop_early = false);

struct EdgeAdmissibilityStats {
  std::size_t edges = 0;
  std::size_t admissible = 0;
  std::size_t not_admissible = 0;
  std::size_t inconclusive = 0;
  // (2k / (p^2 eps)) * |V(G)|
  double bound = 0.0;
};

Json stats_json(const EdgeAdmissibilityStats& s);

EdgeAdmissibilityStats admissible_edge_fraction(const Graph& g, const AdmissibilityParams& params,
                                                std::uint64_t seed);

struct FilterResult {
  std::vector<Triple> kept;
  std::size_t tested = 0;
  std::size_t evicted = 0;
  bool budget_exhausted = false;
};

// Peels E(H) until every tested neighbouring pair inside the kept set is
// semi-admissible. At most `budget` pair tests are run.
FilterResult filter_semi_admissible(const Hypergraph3& h, const AdmissibilityParams& params,
                                    std::uint64_t seed, std::size_t budget);

}  // namespace rp2
