#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rp2/admissibility.hpp"
#include "rp2/errors.hpp"
#include "rp2/generators.hpp"
#include "rp2/rng.hpp"
#include "rp2/rp2_builder.hpp"

using namespace rp2;

namespace {

constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

Hypergraph3 load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  long long a = -1, b = -1;
  std::string rest;
  if (!(in >> a >> b) || (in >> rest) || a < 0 || b < 0) throw InputError("expected two vertices, got '" + text + "'");
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

struct FindOpts {
  std::string file;
  std::string config_path;
  std::string json_out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> retry_budget;
  bool strict = false;
  bool prefilter = false;
};

int cmd_classify(const std::string& file) {
  const auto h = load_hypergraph(file);
  const auto report = classify(Complex2(h.edges()));
  std::cout << report_json(report).dump() << "\n";
  std::cerr << file << ": " << report.verdict_name() << "\n";
  return kOk;
}

int cmd_find_rp2(const FindOpts& o) {
  const auto h = load_hypergraph(o.file);
  SearchConfig cfg = o.strict ? SearchConfig::strict_defaults() : SearchConfig{};
  if (!o.config_path.empty()) cfg.apply_key_values(read_file(o.config_path));
  if (o.seed) cfg.seed = *o.seed;
  if (o.threads) cfg.threads = *o.threads;
  if (o.retry_budget) cfg.retry_budget = *o.retry_budget;
  if (o.strict) cfg.strict = true;
  if (o.prefilter) cfg.prefilter = true;

  const auto result = find_rp2(h, cfg);
  if (!result.certificate) {
    Json j;
    j["status"] = "not-found";
    j["counters"] = result.counters.to_json();
    std::cout << j.dump() << "\n";
    std::cerr << "no RP2 found after " << result.counters.attempts << " attempts\n";
    return kNotFound;
  }
  const auto check = verify_certificate(h, *result.certificate);
  if (!check.ok) throw DefectError("certificate failed verification: " + check.failures.front());
  const std::string text = certificate_json(*result.certificate).dump(2) + "\n";
  if (!o.json_out.empty()) write_file(o.json_out, text);
  std::cout << text;
  std::cerr << "RP2 with " << result.certificate->facets.facet_count() << " facets at attempt "
            << result.certificate->attempt << (result.lenient_apex ? " (uncertified apex)" : "") << "\n";
  return kOk;
}

int cmd_find_sphere(const std::string& file, std::size_t budget, std::uint64_t seed) {
  const auto h = load_hypergraph(file);
  const auto cert = find_sphere(h, budget, seed);
  if (!cert) {
    std::cout << Json{{"status", "not-found"}}.dump() << "\n";
    std::cerr << "no sphere found\n";
    return kNotFound;
  }
  std::cout << sphere_json(*cert).dump(2) << "\n";
  std::cerr << "sphere with " << cert->facets.facet_count() << " facets\n";
  return kOk;
}

struct AdmOpts {
  std::string file;
  std::string edge;
  std::string pair;
  std::string mode = "auto";
  bool all = false;
  AdmissibilityParams params;
  std::uint64_t seed = 1;
};

int cmd_admissibility(AdmOpts o) {
  Graph g;
  const std::string text = read_file(o.file);
  if (!o.pair.empty()) {
    auto [u, u2] = parse_pair(o.pair);
    const auto h = parse_hypergraph(text);
    if (u >= h.n() || u2 >= h.n() || u == u2) throw InputError("bad --pair");
    g = pair_link(h, u, u2);
  } else {
    g = parse_graph(text);
  }
  o.params.validate();
  if (o.all) {
    std::cout << stats_json(admissible_edge_fraction(g, o.params, o.seed)).dump() << "\n";
    return kOk;
  }
  if (o.edge.empty()) throw InputError("--edge or --all is required");
  auto [x, y] = parse_pair(o.edge);
  AdmissibilityEstimate est;
  if (o.mode == "mc") {
    est = admissible_mc(g, x, y, o.params, o.seed);
  } else if (o.mode == "exact") {
    if (path_candidates(g, x, y).size() > o.params.exact_limit)
      throw InputError("too many candidate vertices for exact mode; raise --exact-limit");
    est = assess_edge(g, x, y, o.params, o.seed);
  } else if (o.mode == "auto") {
    est = assess_edge(g, x, y, o.params, o.seed);
  } else {
    throw InputError("--mode must be exact, mc or auto");
  }
  std::cout << estimate_json(est).dump() << "\n";
  return kOk;
}

int cmd_gen(const std::string& name, std::size_t n, std::size_t m, std::uint64_t seed, const std::string& out) {
  Hypergraph3 h;
  if (name == "random")
    h = random_hypergraph(n, m, seed);
  else if (name == "complete")
    h = complete_hypergraph(n);
  else
    h = complex_as_hypergraph(fixture(name).facets);
  const std::string text = serialize_hypergraph(h);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  std::cerr << "n=" << h.n() << " m=" << h.edge_count() << "\n";
  return kOk;
}

std::vector<std::size_t> parse_n_range(const std::string& spec) {
  std::vector<std::size_t> out;
  if (spec.find(':') != std::string::npos) {
    std::string s = spec;
    for (char& ch : s)
      if (ch == ':') ch = ' ';
    std::istringstream in(s);
    long long lo = 0, hi = 0, step = 1;
    if (!(in >> lo >> hi)) throw InputError("bad --n-range '" + spec + "'");
    if (!(in >> step)) step = 1;
    if (lo < 3 || hi < lo || step < 1) throw InputError("bad --n-range '" + spec + "'");
    for (long long n = lo; n <= hi; n += step) out.push_back(static_cast<std::size_t>(n));
    return out;
  }
  std::string s = spec;
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  long long n = 0;
  while (in >> n) {
    if (n < 3) throw InputError("bad --n-range '" + spec + "'");
    out.push_back(static_cast<std::size_t>(n));
  }
  if (out.empty() || !in.eof()) throw InputError("bad --n-range '" + spec + "'");
  return out;
}

struct ExpOpts {
  std::string n_range = "12,16,20";
  double exponent = 2.5;
  std::vector<double> coeffs{1.0};
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::size_t retry_budget = 200;
  std::size_t threads = 1;
  std::string out;
};

int cmd_experiment(const ExpOpts& o) {
  const auto ns = parse_n_range(o.n_range);
  std::ostringstream csv;
  csv << "n,m,trials,successes,mean_time_ms,seed\n";
  for (std::size_t ci = 0; ci < o.coeffs.size(); ++ci) {
    for (std::size_t n : ns) {
      const double total = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
      const double want = std::ceil(o.coeffs[ci] * std::pow(static_cast<double>(n), o.exponent));
      const auto m = static_cast<std::size_t>(std::max(0.0, std::min(want, total)));
      const std::uint64_t cell_seed = derive_seed(o.seed, {n, ci});
      std::size_t successes = 0;
      double elapsed_ms = 0.0;
      for (std::size_t t = 0; t < o.trials; ++t) {
        const auto h = random_hypergraph(n, m, derive_seed(cell_seed, {t, 0}));
        SearchConfig cfg;
        cfg.seed = derive_seed(cell_seed, {t, 1});
        cfg.retry_budget = o.retry_budget;
        cfg.threads = o.threads;
        const auto start = std::chrono::steady_clock::now();
        const auto res = find_rp2(h, cfg);
        elapsed_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (res.certificate && verify_certificate(h, *res.certificate).ok) ++successes;
      }
      if (o.trials == 0) continue;
      csv << n << "," << m << "," << o.trials << "," << successes << "," << (elapsed_ms / o.trials) << ","
          << cell_seed << "\n";
      std::cerr << "n=" << n << " m=" << m << ": " << successes << "/" << o.trials << "\n";
    }
  }
  if (o.out.empty())
    std::cout << csv.str();
  else
    write_file(o.out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Find and verify triangulated surfaces in 3-uniform hypergraphs"};
  app.require_subcommand(1);

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the complex whose facets are the file's edges");
  classify_cmd->add_option("file", classify_file)->required();

  FindOpts find;
  auto* find_cmd = app.add_subcommand("find-rp2", "Search for a triangulated projective plane");
  find_cmd->add_option("file", find.file)->required();
  find_cmd->add_option("--config", find.config_path, "key=value file with SearchConfig fields");
  find_cmd->add_option("--seed", find.seed);
  find_cmd->add_option("--json", find.json_out, "also write the certificate here");
  find_cmd->add_option("--threads", find.threads)->check(CLI::PositiveNumber);
  find_cmd->add_option("--retry-budget", find.retry_budget);
  find_cmd->add_flag("--strict", find.strict, "theoretical constants; no lenient fallbacks");
  find_cmd->add_flag("--prefilter", find.prefilter);

  std::string sphere_file;
  std::size_t sphere_budget = 1000;
  std::uint64_t sphere_seed = 1;
  auto* sphere_cmd = app.add_subcommand("find-sphere", "Search for a double pyramid");
  sphere_cmd->add_option("file", sphere_file)->required();
  sphere_cmd->add_option("--budget", sphere_budget);
  sphere_cmd->add_option("--seed", sphere_seed);

  AdmOpts adm;
  auto* adm_cmd = app.add_subcommand("admissibility", "Estimate admissibility of a graph edge");
  adm_cmd->add_option("file", adm.file, "graph file, or hypergraph file with --pair")->required();
  adm_cmd->add_option("--edge", adm.edge, "x,y");
  adm_cmd->add_option("--pair", adm.pair, "u,u' : use the common link of u and u'");
  adm_cmd->add_flag("--all", adm.all, "count admissible edges of the whole graph");
  adm_cmd->add_option("--k", adm.params.k);
  adm_cmd->add_option("--p", adm.params.p);
  adm_cmd->add_option("--epsilon", adm.params.epsilon);
  adm_cmd->add_option("--samples", adm.params.mc_samples);
  adm_cmd->add_option("--exact-limit", adm.params.exact_limit);
  adm_cmd->add_option("--threads", adm.params.threads)->check(CLI::PositiveNumber);
  adm_cmd->add_option("--mode", adm.mode, "exact, mc or auto");
  adm_cmd->add_option("--seed", adm.seed);

  std::string gen_name;
  std::size_t gen_n = 10, gen_m = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a fixture, random or complete hypergraph");
  gen_cmd->add_option("name", gen_name, "fixture name, 'random' or 'complete'")->required();
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", gen_out);

  ExpOpts exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Success rate of find-rp2 on random hypergraphs");
  exp_cmd->add_option("--n-range", exp.n_range, "lo:hi[:step] or comma list");
  exp_cmd->add_option("--density-exponent", exp.exponent);
  exp_cmd->add_option("--coeff", exp.coeffs)->delimiter(',');
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--seed", exp.seed);
  exp_cmd->add_option("--retry-budget", exp.retry_budget);
  exp_cmd->add_option("--threads", exp.threads)->check(CLI::PositiveNumber);
  exp_cmd->add_option("--out", exp.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_file);
    if (*find_cmd) return cmd_find_rp2(find);
    if (*sphere_cmd) return cmd_find_sphere(sphere_file, sphere_budget, sphere_seed);
    if (*adm_cmd) return cmd_admissibility(adm);
    if (*gen_cmd) return cmd_gen(gen_name, gen_n, gen_m, gen_seed, gen_out);
    if (*exp_cmd) return cmd_experiment(exp);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
