#include "rp2/admissibility.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <thread>

#include "rp2/errors.hpp"
#include "rp2/paths.hpp"
#include "rp2/rng.hpp"

namespace rp2 {

void AdmissibilityParams::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("p must lie in (0, 1]");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in (0, 1]");
  if (k < 1) throw InputError("k must be >= 1");
  if (mc_samples < 1) throw InputError("mc_samples must be >= 1");
  if (threads < 1) throw InputError("threads must be >= 1");
}

const char* verdict_name(AdmissibilityVerdict v) {
  switch (v) {
    case AdmissibilityVerdict::Admissible: return "admissible";
    case AdmissibilityVerdict::NotAdmissible: return "not-admissible";
    case AdmissibilityVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Json estimate_json(const AdmissibilityEstimate& e) {
  Json j;
  j["p_hat"] = e.p_hat;
  j["samples"] = e.samples;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["mode"] = e.mode == EstimateMode::Exact ? "exact" : "monte-carlo";
  j["verdict"] = verdict_name(e.verdict);
  return j;
}

Json stats_json(const EdgeAdmissibilityStats& s) {
  Json j;
  j["edges"] = s.edges;
  j["admissible"] = s.admissible;
  j["not_admissible"] = s.not_admissible;
  j["inconclusive"] = s.inconclusive;
  j["bound"] = s.bound;
  return j;
}

namespace {

void check_edge(const Graph& g, Vertex x, Vertex y) {
  if (x == y || !g.contains(x) || !g.contains(y)) throw InputError("edge endpoints must be distinct graph vertices");
  if (!g.has_edge(x, y)) throw InputError("xy is not an edge of the graph");
}

// Counter-based stream so each Monte-Carlo trial is independent of how
// trials are distributed over threads.
class TrialStream {
 public:
  explicit TrialStream(std::uint64_t state) : state_(state) {}
  double uniform01() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

constexpr double kZ95 = 1.959963984540054;

void wilson(AdmissibilityEstimate& e) {
  const double n = static_cast<double>(e.samples);
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (e.p_hat + z2 / (2.0 * n)) / denom;
  const double half = kZ95 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / n + z2 / (4.0 * n * n)) / denom;
  e.ci_low = std::clamp(center - half, 0.0, e.p_hat);
  e.ci_high = std::clamp(center + half, e.p_hat, 1.0);
}

AdmissibilityEstimate exact_estimate(double probability, double epsilon) {
  AdmissibilityEstimate e;
  e.mode = EstimateMode::Exact;
  e.p_hat = probability;
  e.ci_low = e.ci_high = probability;
  e.samples = 0;
  e.verdict = probability >= 1.0 - epsilon - 1e-12 ? AdmissibilityVerdict::Admissible
                                                   : AdmissibilityVerdict::NotAdmissible;
  return e;
}

bool k_paths(DisjointPathCounter& counter, const Graph& g, Vertex x, Vertex y, const std::vector<char>& mask,
             std::size_t k) {
  return counter.count(g, x, y, mask, k) >= k;
}

}  // namespace

VertexSet path_candidates(const Graph& g, Vertex x, Vertex y) {
  // v qualifies iff v has two disjoint paths ending at x and at y in G - xy.
  // Route both through an extra sink joined to x and y.
  const std::size_t n = g.universe();
  const Vertex sink = static_cast<Vertex>(n);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!(e == Edge(x, y))) edges.push_back(e);
  edges.emplace_back(x, sink);
  edges.emplace_back(y, sink);
  std::vector<Vertex> verts = g.vertices();
  verts.push_back(sink);
  Graph aux(n + 1, verts, edges);

  // Only vertices in a component of G - {x, y} adjacent to both ends can qualify.
  std::vector<int> comp(n, -1);
  int next = 0;
  for (Vertex s : g.vertices()) {
    if (s == x || s == y || comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (w != x && w != y && comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  std::vector<char> touches_x(static_cast<std::size_t>(next), 0), touches_y(static_cast<std::size_t>(next), 0);
  for (Vertex w : g.neighbors(x))
    if (w != y) touches_x[static_cast<std::size_t>(comp[w])] = 1;
  for (Vertex w : g.neighbors(y))
    if (w != x) touches_y[static_cast<std::size_t>(comp[w])] = 1;

  std::vector<char> allowed(n + 1, 1);
  allowed[sink] = 0;
  DisjointPathCounter counter;
  VertexSet out;
  for (Vertex v : g.vertices()) {
    if (v == x || v == y) continue;
    auto c = static_cast<std::size_t>(comp[v]);
    if (!touches_x[c] || !touches_y[c]) continue;
    if (counter.count(aux, v, sink, allowed, 2) >= 2) out.push_back(v);
  }
  return out;
}

double admissible_exact(const Graph& g, Vertex x, Vertex y, double p, std::size_t k, std::size_t exact_limit) {
  check_edge(g, x, y);
  const VertexSet cands = path_candidates(g, x, y);
  if (cands.size() > exact_limit)
    throw CapacityError(std::to_string(cands.size()) + " candidate vertices exceed the exact limit of " +
                        std::to_string(exact_limit) + "; use Monte-Carlo mode");
  if (cands.size() < k) return 0.0;
  const std::size_t m = cands.size();
  std::vector<char> mask(g.universe(), 0);
  DisjointPathCounter counter;
  long double total = 0.0L;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const auto size = static_cast<std::size_t>(std::popcount(bits));
    if (size < k) continue;
    for (std::size_t i = 0; i < m; ++i) mask[cands[i]] = static_cast<char>((bits >> i) & 1U);
    if (!k_paths(counter, g, x, y, mask, k)) continue;
    total += std::pow(static_cast<long double>(p), static_cast<long double>(size)) *
             std::pow(1.0L - static_cast<long double>(p), static_cast<long double>(m - size));
  }
  return static_cast<double>(std::min(total, 1.0L));
}

AdmissibilityEstimate admissible_mc(const Graph& g, Vertex x, Vertex y, const AdmissibilityParams& params,
                                    std::uint64_t seed) {
  params.validate();
  check_edge(g, x, y);
  const VertexSet cands = path_candidates(g, x, y);
  // Deterministic events need no sampling.
  if (cands.size() < params.k) return exact_estimate(0.0, params.epsilon);
  if (params.p >= 1.0) {
    std::vector<char> mask(g.universe(), 0);
    for (Vertex v : cands) mask[v] = 1;
    DisjointPathCounter counter;
    return exact_estimate(k_paths(counter, g, x, y, mask, params.k) ? 1.0 : 0.0, params.epsilon);
  }

  const std::size_t samples = params.mc_samples;
  const std::size_t workers = std::min(params.threads, samples);
  std::vector<std::size_t> hits(workers, 0);
  auto run = [&](std::size_t worker) {
    DisjointPathCounter counter;
    std::vector<char> mask(g.universe(), 0);
    const std::size_t begin = samples * worker / workers;
    const std::size_t end = samples * (worker + 1) / workers;
    for (std::size_t trial = begin; trial < end; ++trial) {
      TrialStream stream(derive_seed(seed, {trial}));
      std::size_t chosen = 0;
      for (Vertex v : cands) {
        const bool in = stream.uniform01() < params.p;
        mask[v] = static_cast<char>(in);
        chosen += in ? 1 : 0;
      }
      if (chosen >= params.k && k_paths(counter, g, x, y, mask, params.k)) ++hits[worker];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::size_t successes = 0;
  for (auto h : hits) successes += h;

  AdmissibilityEstimate e;
  e.mode = EstimateMode::MonteCarlo;
  e.samples = samples;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(samples);
  wilson(e);
  const double target = 1.0 - params.epsilon;
  if (e.ci_low >= target)
    e.verdict = AdmissibilityVerdict::Admissible;
  else if (e.ci_high < target)
    e.verdict = AdmissibilityVerdict::NotAdmissible;
  else
    e.verdict = AdmissibilityVerdict::Inconclusive;
  return e;
}

AdmissibilityEstimate assess_edge(const Graph& g, Vertex x, Vertex y, const AdmissibilityParams& params,
                                  std::uint64_t seed) {
  params.validate();
  check_edge(g, x, y);
  // path_candidates runs again inside either branch; it is cheap next to
  // the enumeration or sampling that follows.
  if (path_candidates(g, x, y).size() <= params.exact_limit)
    return exact_estimate(admissible_exact(g, x, y, params.p, params.k, params.exact_limit), params.epsilon);
  return admissible_mc(g, x, y, params, seed);
}

SemiAdmissibility semi_admissible(const Hypergraph3& h, const Triple& e, const Triple& f,
                                  const AdmissibilityParams& params, std::uint64_t seed, bool stop_early) {
  params.validate();
  if (!h.contains(e) || !h.contains(f)) throw InputError("semi_admissible: both triples must be edges of H");
  std::vector<Vertex> shared;
  for (Vertex v : e.v)
    if (f.has(v)) shared.push_back(v);
  if (shared.size() != 2) throw InputError("semi_admissible: edges must share exactly one pair");
  const Vertex y = shared[0];
  const Vertex z = shared[1];
  Vertex x = 0;
  Vertex x2 = 0;
  for (Vertex v : e.v)
    if (v != y && v != z) x = v;
  for (Vertex v : f.v)
    if (v != y && v != z) x2 = v;

  SemiAdmissibility out;
  if (params.r == 0) {
    out.holds = true;
    return out;
  }
  std::vector<Vertex> cands;
  for (const Edge& opp : h.incident(y)) {
    Vertex other = 0;
    if (opp.a == z)
      other = opp.b;
    else if (opp.b == z)
      other = opp.a;
    else
      continue;
    if (other != x && other != x2) cands.push_back(other);
  }
  std::sort(cands.begin(), cands.end());
  out.candidates = cands.size();

  std::size_t remaining = cands.size();
  for (Vertex w : cands) {
    if (stop_early && (out.witnesses.size() >= params.r || out.witnesses.size() + remaining < params.r)) break;
    --remaining;
    auto first = assess_edge(pair_link(h, x, w), y, z, params, derive_seed(seed, {w, 0}));
    bool ok = first.verdict == AdmissibilityVerdict::Admissible;
    bool unsure = first.verdict == AdmissibilityVerdict::Inconclusive;
    if (ok) {
      auto second = assess_edge(pair_link(h, w, x2), y, z, params, derive_seed(seed, {w, 1}));
      ok = second.verdict == AdmissibilityVerdict::Admissible;
      unsure = second.verdict == AdmissibilityVerdict::Inconclusive;
    }
    if (unsure) ++out.inconclusive;
    if (ok) out.witnesses.push_back(w);
  }
  out.holds = out.witnesses.size() >= params.r;
  return out;
}

EdgeAdmissibilityStats admissible_edge_fraction(const Graph& g, const AdmissibilityParams& params,
                                                std::uint64_t seed) {
  params.validate();
  EdgeAdmissibilityStats s;
  s.bound = 2.0 * static_cast<double>(params.k) / (params.p * params.p * params.epsilon) *
            static_cast<double>(g.vertex_count());
  std::uint64_t index = 0;
  for (const Edge& e : g.edges()) {
    auto est = assess_edge(g, e.a, e.b, params, derive_seed(seed, {index++}));
    ++s.edges;
    switch (est.verdict) {
      case AdmissibilityVerdict::Admissible: ++s.admissible; break;
      case AdmissibilityVerdict::NotAdmissible: ++s.not_admissible; break;
      case AdmissibilityVerdict::Inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

FilterResult filter_semi_admissible(const Hypergraph3& h, const AdmissibilityParams& params,
                                    std::uint64_t seed, std::size_t budget) {
  params.validate();
  const auto& edges = h.edges();
  auto index_of = [&](const Triple& t) {
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), t) - edges.begin());
  };

  // Neighbouring pairs, grouped by their shared pair.
  std::map<Edge, std::vector<Vertex>> extenders;
  for (const auto& t : edges) {
    extenders[Edge(t[0], t[1])].push_back(t[2]);
    extenders[Edge(t[0], t[2])].push_back(t[1]);
    extenders[Edge(t[1], t[2])].push_back(t[0]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [yz, xs] : extenders)
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        pairs.emplace_back(index_of(Triple(xs[i], yz.a, yz.b)), index_of(Triple(xs[j], yz.a, yz.b)));
  Rng rng(derive_seed(seed, {0x66696c74}));
  rng.shuffle(pairs);

  const auto table = codegree_table(h);
  const std::size_t n = h.n();
  auto score = [&](const Triple& t) {
    return table[t[0] * n + t[1]] + table[t[0] * n + t[2]] + table[t[1] * n + t[2]];
  };

  std::vector<char> alive(edges.size(), 1);
  FilterResult out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (!alive[a] || !alive[b]) continue;
    if (out.tested >= budget) {
      out.budget_exhausted = true;
      break;
    }
    ++out.tested;
    auto res = semi_admissible(h, edges[a], edges[b], params, derive_seed(seed, {i}), true);
    if (res.holds) continue;
    const auto sa = score(edges[a]);
    const auto sb = score(edges[b]);
    std::size_t victim = sa < sb ? a : (sb < sa ? b : std::max(a, b));
    alive[victim] = 0;
    ++out.evicted;
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) out.kept.push_back(edges[i]);
  return out;
}

}  // namespace rp2
