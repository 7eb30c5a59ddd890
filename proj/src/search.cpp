#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "rp2/errors.hpp"
#include "rp2/rng.hpp"
#include "rp2/rp2_builder.hpp"

namespace rp2 {

// ---------------------------------------------------------- dense pair

std::optional<DensePair> find_dense_pair(const Hypergraph3& h, const std::vector<Triple>& f, double d,
                                         bool strict, std::size_t* achieved) {
  if (achieved) *achieved = 0;
  if (h.n() < 2) return std::nullopt;
  for (const auto& t : f)
    if (!h.contains(t)) throw InputError("F must be a subset of E(H)");
  const Hypergraph3 sub(h.n(), f);
  const BestPair best = best_pair(sub);
  if (achieved) *achieved = best.link_edges;
  const double threshold = d * static_cast<double>(h.n()) / 4.0;
  const bool dense = static_cast<double>(best.link_edges) >= threshold;
  if (strict ? !dense : best.link_edges == 0) return std::nullopt;
  DensePair out;
  out.u = best.u;
  out.u2 = best.u2;
  out.link = pair_link(sub, best.u, best.u2);
  out.achieved = best.link_edges;
  out.dense = dense;
  return out;
}

// ---------------------------------------------------------------- apex

namespace {

// Keeps ceil(target) edges, dropping those whose smaller endpoint degree is
// lowest first.
Graph trim_edges(const Graph& g, std::size_t target) {
  auto edges = g.edges();
  if (edges.size() <= target) return g;
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
    auto kx = std::minmax(g.degree(x.a), g.degree(x.b));
    auto ky = std::minmax(g.degree(y.a), g.degree(y.b));
    return kx < ky;
  });
  std::vector<Edge> keep(edges.end() - static_cast<std::ptrdiff_t>(target), edges.end());
  return g.with_edges(keep);
}

class EdgeAssessor {
 public:
  EdgeAssessor(const Graph& g, const ApexParams& p) : g_(g), params_(p) {}

  const AdmissibilityEstimate& operator()(Vertex a, Vertex b) {
    Edge e(a, b);
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    AdmissibilityParams ap;
    ap.p = params_.p;
    ap.epsilon = params_.epsilon;
    ap.k = params_.k;
    ap.mc_samples = params_.mc_samples;
    ap.exact_limit = params_.exact_limit;
    auto est = assess_edge(g_, e.a, e.b, ap, derive_seed(params_.seed, {e.a, e.b}));
    return cache_.emplace(e, est).first->second;
  }

 private:
  const Graph& g_;
  const ApexParams& params_;
  std::map<Edge, AdmissibilityEstimate> cache_;
};

std::optional<Apex> search_apex(const Graph& sub, const VertexSet& candidates, const ApexParams& params,
                                std::size_t depth) {
  EdgeAssessor assess(sub, params);
  struct Ranked {
    Vertex v0;
    Vertex v1;
    Vertex v3;
    AdmissibilityEstimate first;
    AdmissibilityEstimate second;
  };
  std::optional<Ranked> fallback;
  auto better = [](const Ranked& a, const Ranked& b, const Graph& g) {
    auto key = [&](const Ranked& r) {
      return std::make_tuple(g.degree(r.v0) >= 3, r.second.p_hat, r.first.p_hat);
    };
    return key(a) > key(b);
  };

  for (Vertex v0 : candidates) {
    if (sub.degree(v0) < 2) continue;
    std::vector<std::pair<Vertex, AdmissibilityEstimate>> scored;
    for (Vertex w : sub.neighbors(v0)) scored.emplace_back(w, assess(v0, w));
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      const bool aa = a.second.verdict == AdmissibilityVerdict::Admissible;
      const bool ba = b.second.verdict == AdmissibilityVerdict::Admissible;
      if (aa != ba) return aa;
      return a.second.p_hat > b.second.p_hat;
    });
    Ranked r{v0, scored[0].first, scored[1].first, scored[0].second, scored[1].second};
    if (r.second.verdict == AdmissibilityVerdict::Admissible) {
      Apex apex;
      apex.subgraph = sub;
      apex.v0 = v0;
      apex.v1 = r.v1;
      apex.v3 = r.v3;
      apex.first = r.first;
      apex.second = r.second;
      apex.certified = true;
      apex.depth = depth;
      return apex;
    }
    if (!params.strict && r.second.p_hat > 0.0 && (!fallback || better(r, *fallback, sub))) fallback = r;
  }
  if (!fallback) return std::nullopt;
  Apex apex;
  apex.subgraph = sub;
  apex.v0 = fallback->v0;
  apex.v1 = fallback->v1;
  apex.v3 = fallback->v3;
  apex.first = fallback->first;
  apex.second = fallback->second;
  apex.certified = false;
  apex.depth = depth;
  return apex;
}

}  // namespace

std::optional<Apex> find_apex(const Graph& g, const ApexParams& params) {
  Graph cur = g;
  for (std::size_t depth = 0;; ++depth) {
    const double n = static_cast<double>(cur.vertex_count());
    if (n <= params.d) return search_apex(cur, cur.vertices(), params, depth);

    const auto target = static_cast<std::size_t>(std::ceil(params.d * n / 4.0));
    cur = trim_edges(cur, target);
    VertexSet low;
    VertexSet high;
    for (Vertex v : cur.vertices()) (static_cast<double>(cur.degree(v)) <= params.d ? low : high).push_back(v);
    std::size_t m2 = 0;
    for (Vertex v : high)
      for (Vertex w : cur.neighbors(v))
        if (v < w && set_contains(high, w)) ++m2;
    if (!high.empty() && static_cast<double>(m2) > params.d / 4.0 * static_cast<double>(high.size())) {
      cur = cur.induced(high);
      continue;
    }
    return search_apex(cur, low, params, depth);
  }
}

// -------------------------------------------------------------- config

void SearchConfig::validate() const {
  if (!(p > 0.0 && p <= 1.0 / 6.0 + 1e-12)) throw InputError("p must lie in (0, 1/6]");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in (0, 1]");
  if (!(epsilon_apex > 0.0 && epsilon_apex <= 1.0)) throw InputError("epsilon_apex must lie in (0, 1]");
  if (k < 1 || r < 1) throw InputError("k and r must be >= 1");
  if (!(d >= 1.0) || !(c > 0.0)) throw InputError("d must be >= 1 and c > 0");
  if (mc_samples < 1 || threads < 1) throw InputError("mc_samples and threads must be >= 1");
  if (strict) {
    const double alpha = 2.0 * 2.0 / (p * p * epsilon_apex);
    if (d < 4.0 * (1.0 + 2.0 * alpha) - 1e-9) throw InputError("strict mode needs d >= 4(1 + 2 alpha)");
  }
}

SearchConfig SearchConfig::strict_defaults() {
  SearchConfig cfg;
  cfg.strict = true;
  const double alpha = 2.0 * 2.0 / (cfg.p * cfg.p * cfg.epsilon_apex);
  cfg.d = 4.0 * (1.0 + 2.0 * alpha);
  const double budget = 1.0 / (6.0 * cfg.d);
  std::size_t r = 6;
  while (2.0 * std::pow(2.0 / 3.0, static_cast<double>(r) - 5.0) >= budget) ++r;
  cfg.r = r;
  // Halfway inside 4 r eps < 1/(6d).
  cfg.epsilon = budget / (8.0 * static_cast<double>(r));
  cfg.c = std::max(12.0 * static_cast<double>(cfg.r) / cfg.p * std::sqrt(static_cast<double>(cfg.k) / cfg.epsilon),
                   std::sqrt(cfg.d / 12.0));
  return cfg;
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InputError("config: bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw InputError("config: bad boolean for " + std::string(key));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

void SearchConfig::apply_key_values(std::string_view text) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InputError("config: expected key=value, got '" + std::string(line) + "'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "p") p = parse_number<double>(key, value);
    else if (key == "epsilon") epsilon = parse_number<double>(key, value);
    else if (key == "epsilon_apex") epsilon_apex = parse_number<double>(key, value);
    else if (key == "k") k = parse_number<std::size_t>(key, value);
    else if (key == "r") r = parse_number<std::size_t>(key, value);
    else if (key == "d") d = parse_number<double>(key, value);
    else if (key == "c") c = parse_number<double>(key, value);
    else if (key == "retry_budget") retry_budget = parse_number<std::size_t>(key, value);
    else if (key == "mc_samples") mc_samples = parse_number<std::size_t>(key, value);
    else if (key == "exact_limit") exact_limit = parse_number<std::size_t>(key, value);
    else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
    else if (key == "strict") strict = parse_bool(key, value);
    else if (key == "prefilter") prefilter = parse_bool(key, value);
    else if (key == "filter_budget") filter_budget = parse_number<std::size_t>(key, value);
    else if (key == "threads") threads = parse_number<std::size_t>(key, value);
    else throw InputError("config: unknown key '" + std::string(key) + "'");
  }
}

Json SearchConfig::to_json() const {
  // threads is left out: results do not depend on it.
  Json j;
  j["p"] = p;
  j["epsilon"] = epsilon;
  j["epsilon_apex"] = epsilon_apex;
  j["k"] = k;
  j["r"] = r;
  j["d"] = d;
  j["c"] = c;
  j["retry_budget"] = retry_budget;
  j["mc_samples"] = mc_samples;
  j["exact_limit"] = exact_limit;
  j["strict"] = strict;
  j["prefilter"] = prefilter;
  j["filter_budget"] = filter_budget;
  return j;
}

Json StageCounters::to_json() const {
  Json j;
  j["attempts"] = attempts;
  j["dense_pair_failed"] = dense_pair_failed;
  j["apex_failed"] = apex_failed;
  j["no_v2_candidate"] = no_v2_candidate;
  j["cycle_c_failed"] = cycle_c_failed;
  j["cycle_c_prime_failed"] = cycle_c_prime_failed;
  j["semi_admissible_checked"] = semi_admissible_checked;
  j["semi_admissible_failed"] = semi_admissible_failed;
  j["disk_d_failed"] = disk_d_failed;
  j["disk_d_prime_failed"] = disk_d_prime_failed;
  j["assembled"] = assembled;
  return j;
}

namespace {

Json facets_json(const Complex2& x) {
  Json a = Json::array();
  for (const auto& t : x.facets()) a.push_back({t[0], t[1], t[2]});
  return a;
}

Json disk_json(const DiskPatch& d) {
  Json j;
  j["facets"] = facets_json(d.facets);
  j["boundary"] = d.boundary;
  j["interior"] = d.interior;
  return j;
}

}  // namespace

Json certificate_json(const Certificate& cert) {
  Json j;
  j["facets"] = facets_json(cert.facets);
  j["roles"] = {{"u", cert.u}, {"u1", cert.u2}, {"v0", cert.v0}, {"v1", cert.v1}, {"v2", cert.v2}, {"v3", cert.v3}};
  j["cycles"] = {{"C", cert.c}, {"Cprime", cert.c_prime}};
  j["disks"] = {{"D", disk_json(cert.d)}, {"Dprime", disk_json(cert.d_prime)}};
  j["partition"] = {{"U1", cert.partition[0]},
                    {"U2", cert.partition[1]},
                    {"U3", cert.partition[2]},
                    {"U4", cert.partition[3]}};
  j["W"] = cert.w;
  j["config"] = cert.config.to_json();
  j["seed"] = cert.seed;
  j["attempt"] = cert.attempt;
  j["report"] = report_json(cert.report);
  return j;
}

// ------------------------------------------------------------ pipeline

namespace {

enum class Stage {
  Ok,
  NoV2,
  CycleC,
  CycleCPrime,
  SemiAdmissible,
  DiskD,
  DiskDPrime,
};

struct AttemptOutcome {
  Stage stage = Stage::Ok;
  std::size_t semi_checked = 0;
  std::size_t semi_failed = 0;
  std::optional<Certificate> certificate;
};

struct PipelineState {
  const Hypergraph3& h;
  const SearchConfig& config;
  Vertex u;
  Vertex u2;
  Apex apex;
  VertexSet w;

  std::mutex mutex;
  std::map<std::pair<Vertex, Vertex>, bool> semi_cache;

  // (y_apex, x) -> does (y_apex v0 x, y_apex v0 v3) pass semi-admissibility.
  bool semi_ok(Vertex apex_vertex, Vertex x) {
    {
      std::lock_guard lock(mutex);
      auto it = semi_cache.find({apex_vertex, x});
      if (it != semi_cache.end()) return it->second;
    }
    AdmissibilityParams ap;
    ap.p = config.p;
    ap.epsilon = config.epsilon;
    ap.k = config.k + 2;
    ap.r = config.r;
    ap.mc_samples = config.mc_samples;
    ap.exact_limit = config.exact_limit;
    const Vertex v0 = apex.v0;
    const Vertex v3 = apex.v3;
    const bool ok = semi_admissible(h, Triple(apex_vertex, v0, x), Triple(apex_vertex, v0, v3), ap,
                                    derive_seed(config.seed, {0x73656d69, apex_vertex, x}), true)
                        .holds;
    std::lock_guard lock(mutex);
    semi_cache.emplace(std::pair{apex_vertex, x}, ok);
    return ok;
  }

  AttemptOutcome attempt(std::size_t index) {
    AttemptOutcome out;
    const std::uint64_t attempt_seed = derive_seed(config.seed, {0x61747470, index});
    Rng rng(attempt_seed);
    const Graph& sub = apex.subgraph;
    const Vertex v0 = apex.v0;
    const Vertex v1 = apex.v1;
    const Vertex v3 = apex.v3;

    // U1, U2 with probability p each, U3, U4 with 2p each.
    std::array<VertexSet, 4> parts;
    const double p = config.p;
    for (std::size_t v = 0; v < h.n(); ++v) {
      const double x = rng.uniform01();
      const Vertex vv = static_cast<Vertex>(v);
      if (x < p)
        parts[0].push_back(vv);
      else if (x < 2 * p)
        parts[1].push_back(vv);
      else if (x < 4 * p)
        parts[2].push_back(vv);
      else if (x < 6 * p)
        parts[3].push_back(vv);
    }

    std::vector<Vertex> v2_choices;
    for (Vertex v : sub.neighbors(v0))
      if (v != v1 && v != v3) v2_choices.push_back(v);
    if (v2_choices.empty()) {
      out.stage = Stage::NoV2;
      return out;
    }
    rng.shuffle(v2_choices);

    std::optional<Cycle> c;
    Vertex v2 = 0;
    for (Vertex cand : v2_choices) {
      c = cycle_with_forced_second_vertex(sub, v0, v1, cand, parts[0], w);
      if (c) {
        v2 = cand;
        break;
      }
    }
    if (!c) {
      out.stage = Stage::CycleC;
      return out;
    }
    auto c_prime = cycle_with_edge(sub, v0, v3, parts[1], w);
    if (!c_prime) {
      out.stage = Stage::CycleCPrime;
      return out;
    }

    out.semi_checked = 2;
    const bool semi_d = semi_ok(u, v1);
    const bool semi_dp = semi_ok(u2, v2);
    out.semi_failed = (semi_d ? 0 : 1) + (semi_dp ? 0 : 1);
    if (config.strict && out.semi_failed > 0) {
      out.stage = Stage::SemiAdmissible;
      return out;
    }

    auto d = build_disk_from_pair(h, v1, u, v0, v3, parts[2], w, config.k, derive_seed(attempt_seed, {0x44}));
    if (!d) {
      out.stage = Stage::DiskD;
      return out;
    }
    auto d_prime =
        build_disk_from_pair(h, v2, u2, v0, v3, parts[3], w, config.k, derive_seed(attempt_seed, {0x4450}));
    if (!d_prime) {
      out.stage = Stage::DiskDPrime;
      return out;
    }

    Complex2 rp2;
    try {
      rp2 = assemble_rp2(u, u2, *c, *c_prime, *d, *d_prime, v0, v1, v2, v3);
    } catch (const PreconditionError& e) {
      throw DefectError(std::string("pipeline produced an invalid configuration: ") + e.what());
    }

    Certificate cert;
    cert.facets = std::move(rp2);
    cert.u = u;
    cert.u2 = u2;
    cert.v0 = v0;
    cert.v1 = v1;
    cert.v2 = v2;
    cert.v3 = v3;
    cert.c = std::move(*c);
    cert.c_prime = std::move(*c_prime);
    cert.d = std::move(*d);
    cert.d_prime = std::move(*d_prime);
    cert.w = w;
    cert.partition = {set_difference(make_vertex_set(cert.c), make_vertex_set({v0, v1})),
                      set_difference(make_vertex_set(cert.c_prime), make_vertex_set({v0, v3})),
                      cert.d.interior, cert.d_prime.interior};
    cert.config = config;
    cert.seed = config.seed;
    cert.attempt = index;
    cert.report = classify(cert.facets);
    out.certificate = std::move(cert);
    return out;
  }
};

void tally(StageCounters& counters, const AttemptOutcome& o) {
  ++counters.attempts;
  counters.semi_admissible_checked += o.semi_checked;
  counters.semi_admissible_failed += o.semi_failed;
  switch (o.stage) {
    case Stage::Ok: ++counters.assembled; break;
    case Stage::NoV2: ++counters.no_v2_candidate; break;
    case Stage::CycleC: ++counters.cycle_c_failed; break;
    case Stage::CycleCPrime: ++counters.cycle_c_prime_failed; break;
    case Stage::SemiAdmissible: break;
    case Stage::DiskD: ++counters.disk_d_failed; break;
    case Stage::DiskDPrime: ++counters.disk_d_prime_failed; break;
  }
}

}  // namespace

SearchResult find_rp2(const Hypergraph3& h, const SearchConfig& config) {
  config.validate();
  SearchResult result;
  if (config.retry_budget == 0) return result;

  std::vector<Triple> f = h.edges();
  if (config.prefilter) {
    AdmissibilityParams ap;
    ap.p = config.p;
    ap.epsilon = config.epsilon;
    ap.k = config.k;
    ap.r = config.r;
    ap.mc_samples = config.mc_samples;
    ap.exact_limit = config.exact_limit;
    f = filter_semi_admissible(h, ap, derive_seed(config.seed, {0x66}), config.filter_budget).kept;
  }

  auto dense = find_dense_pair(h, f, config.d, config.strict);
  if (!dense) {
    result.counters.dense_pair_failed = 1;
    return result;
  }
  result.lenient_dense_pair = !dense->dense;

  ApexParams ap;
  ap.p = config.p;
  ap.epsilon = config.epsilon_apex;
  ap.k = 2;
  ap.d = config.d;
  ap.strict = config.strict;
  ap.mc_samples = config.mc_samples;
  ap.exact_limit = config.exact_limit;
  ap.seed = derive_seed(config.seed, {0x61706578});
  auto apex = find_apex(dense->link, ap);
  if (!apex) {
    result.counters.apex_failed = 1;
    return result;
  }
  result.lenient_apex = !apex->certified;

  PipelineState state{h, config, dense->u, dense->u2, std::move(*apex), {}, {}, {}};
  state.w = make_vertex_set({state.u, state.u2, state.apex.v0, state.apex.v1, state.apex.v3});

  const std::size_t batch = std::max<std::size_t>(1, config.threads);
  for (std::size_t start = 0; start < config.retry_budget; start += batch) {
    const std::size_t count = std::min(batch, config.retry_budget - start);
    std::vector<AttemptOutcome> outcomes(count);
    if (count == 1) {
      outcomes[0] = state.attempt(start);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(count);
      for (std::size_t i = 0; i < count; ++i)
        pool.emplace_back([&, i] {
          try {
            outcomes[i] = state.attempt(start + i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (auto& o : outcomes) {
      tally(result.counters, o);
      if (o.certificate) {
        result.certificate = std::move(o.certificate);
        return result;
      }
    }
  }
  return result;
}

// -------------------------------------------------------- verification

Verification verify_certificate(const Hypergraph3& h, const Certificate& cert) {
  Verification v;
  auto fail = [&](std::string msg) {
    if (std::find(v.failures.begin(), v.failures.end(), msg) == v.failures.end()) v.failures.push_back(std::move(msg));
    v.ok = false;
  };

  for (const auto& t : cert.facets.facets())
    if (!h.contains(t)) fail("facet not in hypergraph");

  const Vertex u = cert.u, u2 = cert.u2, v0 = cert.v0, v1 = cert.v1, v2 = cert.v2, v3 = cert.v3;
  std::set<Vertex> roles{u, u2, v0, v1, v2, v3};
  if (roles.size() != 6) fail("roles not distinct");

  auto check_cycle = [&](const Cycle& c, const char* name) {
    std::set<Vertex> seen(c.begin(), c.end());
    if (c.size() < 3 || seen.size() != c.size()) {
      fail(std::string(name) + " is not a simple cycle");
      return;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      if (!h.contains(u, a, b) || !h.contains(u2, a, b)) fail(std::string(name) + " leaves the pair link of u, u'");
    }
  };
  check_cycle(cert.c, "C");
  check_cycle(cert.c_prime, "C'");

  auto adjacent_in = [](const Cycle& c, Vertex a, Vertex b) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex x = c[i], y = c[(i + 1) % c.size()];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };
  if (!adjacent_in(cert.c, v0, v1) || !adjacent_in(cert.c, v0, v2)) fail("v1 v0 v2 is not a subpath of C");
  if (!adjacent_in(cert.c_prime, v0, v3)) fail("v0v3 is not an edge of C'");

  auto check_disk = [&](const DiskPatch& d, std::vector<Vertex> boundary, const char* name) {
    for (const auto& t : d.facets.facets())
      if (!h.contains(t)) fail(std::string(name) + " facet not in hypergraph");
    auto report = classify(d.facets);
    if (report.verdict != Verdict::Disk) {
      fail(std::string(name) + " is not a disk");
      return;
    }
    // Boundary: edges lying in exactly one facet.
    std::map<std::pair<Vertex, Vertex>, int> uses;
    for (const auto& t : d.facets.facets()) {
      ++uses[{t[0], t[1]}];
      ++uses[{t[0], t[2]}];
      ++uses[{t[1], t[2]}];
    }
    std::set<std::pair<Vertex, Vertex>> expected;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      Vertex a = boundary[i], b = boundary[(i + 1) % boundary.size()];
      expected.insert({std::min(a, b), std::max(a, b)});
    }
    std::set<std::pair<Vertex, Vertex>> actual;
    for (const auto& [e, cnt] : uses)
      if (cnt == 1) actual.insert(e);
    if (actual != expected) fail(std::string(name) + " boundary mismatch");
    std::set<Vertex> bverts(boundary.begin(), boundary.end());
    for (const auto& [e, cnt] : uses)
      if (bverts.count(e.first) && bverts.count(e.second) && !expected.count(e))
        fail(std::string(name) + " boundary is not induced");
    for (const auto& t : d.facets.facets())
      if (bverts.count(t[0]) && bverts.count(t[1]) && bverts.count(t[2]))
        fail(std::string(name) + " boundary is not induced");
    std::set<Vertex> interior;
    for (Vertex x : d.facets.vertices())
      if (!bverts.count(x)) interior.insert(x);
    if (interior != std::set<Vertex>(d.interior.begin(), d.interior.end()))
      fail(std::string(name) + " interior mismatch");
  };
  check_disk(cert.d, {v0, v1, u, v3}, "D");
  check_disk(cert.d_prime, {v0, v2, u2, v3}, "D'");

  std::vector<std::set<Vertex>> five(5);
  for (Vertex x : cert.c)
    if (x != v0 && x != v1) five[0].insert(x);
  for (Vertex x : cert.c_prime)
    if (x != v0 && x != v3) five[1].insert(x);
  five[2].insert(cert.d.interior.begin(), cert.d.interior.end());
  five[3].insert(cert.d_prime.interior.begin(), cert.d_prime.interior.end());
  five[4] = {u, u2, v0, v1, v3};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (Vertex x : five[i])
        if (five[j].count(x)) fail("five sets not disjoint");

  // Expected facets: u over (C u C') minus v0v1, v0v3; u' over it minus v0v2, v0v3; both disks.
  std::set<Triple> expected;
  auto add_cycle = [&](const Cycle& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex a = c[i], b = c[(i + 1) % c.size()];
      Edge e(a, b);
      if (e != Edge(v0, v1) && e != Edge(v0, v3)) expected.insert(Triple(u, a, b));
      if (e != Edge(v0, v2) && e != Edge(v0, v3)) expected.insert(Triple(u2, a, b));
    }
  };
  add_cycle(cert.c);
  add_cycle(cert.c_prime);
  expected.insert(cert.d.facets.facets().begin(), cert.d.facets.facets().end());
  expected.insert(cert.d_prime.facets.facets().begin(), cert.d_prime.facets.facets().end());
  if (std::vector<Triple>(expected.begin(), expected.end()) != cert.facets.facets())
    fail("facets do not match the recorded construction");

  auto report = classify(cert.facets);
  if (!report.closed() || report.verdict == Verdict::NotASurface || report.verdict == Verdict::Disk ||
      report.verdict == Verdict::SurfaceWithBoundary)
    fail("not a closed surface");
  else if (!report.is_rp2())
    fail("closed surface is " + report.verdict_name() + ", not RP2");
  if (report_json(report) != report_json(cert.report)) fail("recorded report differs from reclassification");
  return v;
}

}  // namespace rp2
