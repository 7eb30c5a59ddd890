#include "rp2/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rp2/errors.hpp"

namespace rp2 {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool set_contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Triple::Triple(Vertex x, Vertex y, Vertex z) : v{x, y, z} {
  std::sort(v.begin(), v.end());
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t universe, std::span<const Vertex> vertices, std::span<const Edge> edges)
    : present_(universe, 0), adj_(universe) {
  for (Vertex v : vertices) {
    if (v >= universe) throw InputError("graph vertex " + std::to_string(v) + " out of range");
    present_[v] = 1;
  }
  for (std::size_t v = 0; v < universe; ++v)
    if (present_[v]) vertices_.push_back(static_cast<Vertex>(v));
  for (const Edge& e : edges) {
    if (e.a == e.b) throw InputError("graph self-loop at " + std::to_string(e.a));
    if (!contains(e.a) || !contains(e.b))
      throw InputError("graph edge endpoint outside vertex set");
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::complete_vertex_set(std::size_t universe, std::span<const Edge> edges) {
  std::vector<Vertex> all(universe);
  for (std::size_t v = 0; v < universe; ++v) all[v] = static_cast<Vertex>(v);
  return Graph(universe, all, edges);
}

bool Graph::has_edge(Vertex x, Vertex y) const {
  if (x >= adj_.size() || y >= adj_.size()) return false;
  const auto& list = adj_[x].size() <= adj_[y].size() ? adj_[x] : adj_[y];
  Vertex other = adj_[x].size() <= adj_[y].size() ? y : x;
  return std::binary_search(list.begin(), list.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v : vertices_)
    for (Vertex w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> vs;
  for (Vertex v : keep)
    if (contains(v)) vs.push_back(v);
  std::vector<char> mask(universe(), 0);
  for (Vertex v : vs) mask[v] = 1;
  std::vector<Edge> es;
  for (Vertex v : vs)
    for (Vertex w : adj_[v])
      if (v < w && mask[w]) es.emplace_back(v, w);
  return Graph(universe(), vs, es);
}

Graph Graph::with_edges(std::span<const Edge> edges) const {
  return Graph(universe(), vertices_, edges);
}

// ---------------------------------------------------------- Hypergraph3

Hypergraph3::Hypergraph3(std::size_t n, std::vector<Triple> edges)
    : n_(n), edges_(std::move(edges)), incident_(n) {
  for (auto& t : edges_) {
    t = Triple(t[0], t[1], t[2]);
    if (!t.distinct()) throw InputError("repeated vertex in triple");
    if (t[2] >= n_) throw InputError("vertex " + std::to_string(t[2]) + " >= n");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& t : edges_) {
    incident_[t[0]].emplace_back(t[1], t[2]);
    incident_[t[1]].emplace_back(t[0], t[2]);
    incident_[t[2]].emplace_back(t[0], t[1]);
  }
  for (auto& list : incident_) std::sort(list.begin(), list.end());
}

bool Hypergraph3::contains(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

bool Hypergraph3::contains(Vertex a, Vertex b, Vertex c) const {
  if (a == b || b == c || a == c) return false;
  return contains(Triple(a, b, c));
}

namespace {

void check_vertex(const Hypergraph3& h, Vertex v) {
  if (v >= h.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

std::vector<Vertex> all_but(std::size_t n, std::initializer_list<Vertex> skip) {
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    bool drop = false;
    for (Vertex s : skip) drop = drop || s == v;
    if (!drop) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

Graph link_graph(const Hypergraph3& h, Vertex u) {
  check_vertex(h, u);
  const auto& inc = h.incident(u);
  return Graph(h.n(), all_but(h.n(), {u}), inc);
}

Graph pair_link(const Hypergraph3& h, Vertex u, Vertex u2) {
  check_vertex(h, u);
  check_vertex(h, u2);
  if (u == u2) throw InputError("pair_link needs two distinct vertices");
  const auto& a = h.incident(u);
  const auto& b = h.incident(u2);
  std::vector<Edge> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  std::erase_if(common, [&](const Edge& e) { return e.a == u || e.b == u || e.a == u2 || e.b == u2; });
  return Graph(h.n(), all_but(h.n(), {u, u2}), common);
}

std::size_t codegree(const Hypergraph3& h, Vertex v, Vertex w) {
  check_vertex(h, v);
  check_vertex(h, w);
  if (v == w) throw InputError("codegree needs two distinct vertices");
  const auto& a = h.incident(v);
  std::size_t count = 0;
  for (const Edge& e : a)
    if (e.a == w || e.b == w) ++count;
  return count;
}

std::vector<std::uint32_t> codegree_table(const Hypergraph3& h) {
  const std::size_t n = h.n();
  std::vector<std::uint32_t> t(n * n, 0);
  for (const auto& e : h.edges()) {
    auto bump = [&](Vertex a, Vertex b) {
      ++t[a * n + b];
      ++t[b * n + a];
    };
    bump(e[0], e[1]);
    bump(e[0], e[2]);
    bump(e[1], e[2]);
  }
  return t;
}

std::vector<std::uint32_t> pair_link_sizes(const Hypergraph3& h) {
  // Every pair vw with extenders L_vw adds one common-link edge to each
  // unordered pair inside L_vw.
  const std::size_t n = h.n();
  std::vector<std::vector<Vertex>> extenders(n * n);
  for (const auto& e : h.edges()) {
    extenders[e[0] * n + e[1]].push_back(e[2]);
    extenders[e[0] * n + e[2]].push_back(e[1]);
    extenders[e[1] * n + e[2]].push_back(e[0]);
  }
  std::vector<std::uint32_t> sizes(n * n, 0);
  for (const auto& list : extenders) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ++sizes[list[i] * n + list[j]];
        ++sizes[list[j] * n + list[i]];
      }
  }
  return sizes;
}

BestPair best_pair(const Hypergraph3& h) {
  const std::size_t n = h.n();
  if (n < 2) throw InputError("best_pair needs at least two vertices");
  auto sizes = pair_link_sizes(h);
  BestPair best{0, 1, sizes[1]};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t u2 = u + 1; u2 < n; ++u2)
      if (sizes[u * n + u2] > best.link_edges)
        best = {static_cast<Vertex>(u), static_cast<Vertex>(u2), sizes[u * n + u2]};
  return best;
}

// ------------------------------------------------------------------ I/O

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Next line that is neither blank nor a comment.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      line.remove_prefix(first);
      if (line.front() == '#') continue;
      return true;
    }
    return false;
  }
};

std::vector<std::uint64_t> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

std::size_t parse_header(LineReader& reader) {
  std::string_view line;
  if (!reader.next(line)) throw ParseError(reader.line_no + 1, "missing 'n=<int>' header");
  if (!line.starts_with("n=")) throw ParseError(reader.line_no, "expected 'n=<int>' header");
  auto ints = parse_ints(line.substr(2), reader.line_no);
  if (ints.size() != 1) throw ParseError(reader.line_no, "expected 'n=<int>' header");
  return static_cast<std::size_t>(ints[0]);
}

}  // namespace

Hypergraph3 parse_hypergraph(std::string_view text) {
  LineReader reader{text};
  const std::size_t n = parse_header(reader);
  std::vector<Triple> edges;
  std::string_view line;
  while (reader.next(line)) {
    auto ints = parse_ints(line, reader.line_no);
    if (ints.size() != 3) throw ParseError(reader.line_no, "expected three vertices");
    for (auto x : ints)
      if (x >= n) throw ParseError(reader.line_no, "vertex " + std::to_string(x) + " >= n");
    Triple t(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]), static_cast<Vertex>(ints[2]));
    if (!t.distinct()) throw ParseError(reader.line_no, "repeated vertex in triple");
    edges.push_back(t);
  }
  return Hypergraph3(n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph3& h) {
  std::ostringstream out;
  out << "n=" << h.n() << '\n';
  for (const auto& t : h.edges()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  LineReader reader{text};
  const std::size_t n = parse_header(reader);
  std::vector<Edge> edges;
  std::string_view line;
  while (reader.next(line)) {
    auto ints = parse_ints(line, reader.line_no);
    if (ints.size() != 2) throw ParseError(reader.line_no, "expected two vertices");
    for (auto x : ints)
      if (x >= n) throw ParseError(reader.line_no, "vertex " + std::to_string(x) + " >= n");
    if (ints[0] == ints[1]) throw ParseError(reader.line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
  }
  return Graph::complete_vertex_set(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.universe() << '\n';
  for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

}  // namespace rp2
