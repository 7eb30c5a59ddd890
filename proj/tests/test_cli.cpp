#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RP2FIND_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("rp2find_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("classify") {
  const auto tetra = (workdir() / "tetra.txt").string();
  CHECK(run("gen tetra_sphere --out " + tetra).code == 0);
  auto r = run("classify " + tetra);
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "Sphere");
  CHECK(j["chi"] == 2);

  const auto pinch = (workdir() / "pinch.txt").string();
  CHECK(run("gen pinch_point --out " + pinch).code == 0);
  r = run("classify " + pinch);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "NotASurface");

  CHECK(run("classify " + write("bad.txt", "n=4\n0 1 2\n0 1\n")).code == 2);
  CHECK(run("classify " + (workdir() / "missing.txt").string()).code == 2);
}

TEST_CASE("gen round-trips through classify") {
  const auto path = (workdir() / "hemi.txt").string();
  CHECK(run("gen hemi_icosahedron_rp2 --out " + path).code == 0);
  CHECK(nlohmann::json::parse(run("classify " + path).out)["verdict"] == "RP2");
  CHECK(run("gen random --n 10 --m 999").code == 2);
  CHECK(run("gen nonsense").code == 2);
  CHECK(run("gen random --n 10 --m 20 --seed 4").out == run("gen random --n 10 --m 20 --seed 4").out);
}

TEST_CASE("find-rp2") {
  const auto k14 = (workdir() / "k14.txt").string();
  CHECK(run("gen complete --n 14 --out " + k14).code == 0);
  const auto json_path = (workdir() / "cert.json").string();
  auto a = run("find-rp2 " + k14 + " --seed 5 --json " + json_path);
  CHECK(a.code == 0);
  auto cert = nlohmann::json::parse(a.out);
  CHECK(cert["report"]["verdict"] == "RP2");
  CHECK(slurp(json_path) == a.out);
  CHECK(run("find-rp2 " + k14 + " --seed 5").out == a.out);
  CHECK(run("find-rp2 " + k14 + " --seed 5 --threads 4").out == a.out);

  auto none = run("find-rp2 " + write("empty.txt", "n=8\n"));
  CHECK(none.code == 1);
  CHECK(nlohmann::json::parse(none.out)["status"] == "not-found");

  const auto cfg = write("cfg.txt", "retry_budget=50\nseed=2\n");
  CHECK(run("find-rp2 " + k14 + " --config " + cfg).code == 0);
  CHECK(run("find-rp2 " + k14 + " --config " + write("badcfg.txt", "frobnicate=1\n")).code == 2);
  CHECK(run("find-rp2").code == 2);
}

TEST_CASE("find-sphere") {
  const auto k6 = (workdir() / "k6.txt").string();
  CHECK(run("gen complete --n 6 --out " + k6).code == 0);
  auto r = run("find-sphere " + k6);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["report"]["verdict"] == "Sphere");
  const auto tetra = (workdir() / "tetra2.txt").string();
  CHECK(run("gen tetra_sphere --out " + tetra).code == 0);
  CHECK(run("find-sphere " + tetra).code == 1);
}

TEST_CASE("admissibility") {
  const auto g = write("k4minus.txt", "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  auto r = run("admissibility " + g + " --edge 0,1 --k 1 --p 0.5 --mode exact");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["p_hat"].get<double>() == doctest::Approx(0.75));
  CHECK(j["mode"] == "exact");
  r = run("admissibility " + g + " --edge 0,1 --k 1 --p 0.5 --mode mc --samples 20000 --seed 3");
  CHECK(std::abs(nlohmann::json::parse(r.out)["p_hat"].get<double>() - 0.75) < 0.02);
  CHECK(run("admissibility " + g + " --edge 2,3").code == 2);
  CHECK(run("admissibility " + g + " --all").code == 0);

  const auto k8 = (workdir() / "k8.txt").string();
  CHECK(run("gen complete --n 8 --out " + k8).code == 0);
  r = run("admissibility " + k8 + " --pair 0,1 --edge 2,3 --k 2 --p 0.5");
  CHECK(r.code == 0);
}

TEST_CASE("experiment") {
  const auto csv = (workdir() / "exp.csv").string();
  auto r = run("experiment --n-range 12,14 --trials 2 --coeff 0.5 --retry-budget 50 --seed 3 --out " + csv);
  CHECK(r.code == 0);
  const auto text = slurp(csv);
  CHECK(text.rfind("n,m,trials,successes,mean_time_ms,seed\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : text) rows += ch == '\n';
  CHECK(rows == 3);

  r = run("experiment --n-range 12,16 --trials 0");
  CHECK(r.code == 0);
  CHECK(r.out == "n,m,trials,successes,mean_time_ms,seed\n");

  auto strip_time = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::stringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (cells.size() == 6) cells[4].clear();
      for (const auto& c : cells) out += c + ",";
      out += "\n";
    }
    return out;
  };
  const auto once = run("experiment --n-range 13 --trials 2 --retry-budget 30 --seed 8").out;
  CHECK(strip_time(once) == strip_time(run("experiment --n-range 13 --trials 2 --retry-budget 30 --seed 8").out));
  CHECK(run("experiment --n-range 12 --trials 1 --out /nonexistent/dir/x.csv").code == 2);
  CHECK(run("experiment --n-range 2:1").code == 2);
}
