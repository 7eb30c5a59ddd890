#include "rp2/paths.hpp"

#include <algorithm>
#include <queue>

#include "rp2/errors.hpp"

namespace rp2 {

namespace {

constexpr std::uint32_t in_node(Vertex v) { return 2 * v; }
constexpr std::uint32_t out_node(Vertex v) { return 2 * v + 1; }

std::vector<char> mask_of(std::size_t universe, const VertexSet& through, const VertexSet& avoid = {}) {
  std::vector<char> mask(universe, 0);
  for (Vertex v : through)
    if (v < universe) mask[v] = 1;
  for (Vertex v : avoid)
    if (v < universe) mask[v] = 0;
  return mask;
}

// BFS from `from` to `to`; intermediate vertices must satisfy `allowed`.
// Adjacency is sorted, so the result is the lexicographically first
// shortest path.
std::optional<Path> bfs_path(const Graph& g, Vertex from, Vertex to, const std::vector<char>& allowed,
                             bool forbid_direct) {
  const std::size_t n = g.universe();
  std::vector<std::int64_t> parent(n, -1);
  std::queue<Vertex> queue;
  parent[from] = from;
  queue.push(from);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] != -1) continue;
      if (w == to) {
        if (forbid_direct && v == from) continue;
        Path path{to};
        for (Vertex c = v; c != from; c = static_cast<Vertex>(parent[c])) path.push_back(c);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!allowed[w]) continue;
      parent[w] = v;
      queue.push(w);
    }
  }
  return std::nullopt;
}

}  // namespace

void DisjointPathCounter::build(const Graph& g, Vertex x, Vertex y, const std::vector<char>& allowed) {
  const std::size_t nodes = 2 * g.universe();
  if (arcs_.size() < nodes) arcs_.resize(nodes);
  for (auto& list : arcs_) list.clear();
  auto internal = [&](Vertex v) { return v != x && v != y && allowed[v] && g.contains(v); };
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    arcs_[a].push_back({b, static_cast<std::uint32_t>(arcs_[b].size()), 1});
    arcs_[b].push_back({a, static_cast<std::uint32_t>(arcs_[a].size() - 1), 0});
  };
  for (Vertex b : g.neighbors(x))
    if (internal(b)) add(out_node(x), in_node(b));
  for (Vertex a : g.vertices()) {
    if (!internal(a)) continue;
    add(in_node(a), out_node(a));
    for (Vertex b : g.neighbors(a))
      if (b == y || internal(b)) add(out_node(a), in_node(b));
  }
}

bool DisjointPathCounter::augment(std::uint32_t source, std::uint32_t sink) {
  const std::size_t nodes = arcs_.size();
  parent_node_.assign(nodes, ~std::uint32_t{0});
  parent_arc_.assign(nodes, -1);
  queue_.clear();
  queue_.push_back(source);
  parent_node_[source] = source;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    std::uint32_t v = queue_[head];
    for (std::size_t i = 0; i < arcs_[v].size(); ++i) {
      const Arc& a = arcs_[v][i];
      if (a.cap <= 0 || parent_node_[a.to] != ~std::uint32_t{0}) continue;
      parent_node_[a.to] = v;
      parent_arc_[a.to] = static_cast<std::int32_t>(i);
      if (a.to == sink) {
        for (std::uint32_t c = sink; c != source; c = parent_node_[c]) {
          Arc& fwd = arcs_[parent_node_[c]][static_cast<std::size_t>(parent_arc_[c])];
          fwd.cap -= 1;
          arcs_[c][fwd.rev].cap += 1;
        }
        return true;
      }
      queue_.push_back(a.to);
    }
  }
  return false;
}

std::size_t DisjointPathCounter::count(const Graph& g, Vertex x, Vertex y, const std::vector<char>& allowed,
                                       std::size_t limit) {
  build(g, x, y, allowed);
  std::size_t flow = 0;
  while (flow < limit && augment(out_node(x), in_node(y))) ++flow;
  return flow;
}

std::vector<Path> DisjointPathCounter::extract(Vertex x, Vertex y) const {
  // Forward arcs start at capacity 1; a saturated one carries flow.
  auto next_hop = [&](std::uint32_t from) -> std::int64_t {
    for (const Arc& a : arcs_[from])
      if (a.cap == 0 && arcs_[a.to][a.rev].cap == 1 && (a.to % 2 == 0)) return a.to / 2;
    return -1;
  };
  std::vector<Path> paths;
  for (const Arc& first : arcs_[out_node(x)]) {
    if (first.cap != 0 || first.to % 2 != 0) continue;
    Path path{x, first.to / 2};
    Vertex cur = first.to / 2;
    while (cur != y) {
      std::int64_t nxt = next_hop(out_node(cur));
      if (nxt < 0) throw DefectError("broken flow decomposition");
      cur = static_cast<Vertex>(nxt);
      path.push_back(cur);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::optional<PathSystem> disjoint_paths(const Graph& g, Vertex x, Vertex y, const VertexSet& through,
                                         std::size_t k) {
  if (x == y) throw InputError("disjoint_paths needs x != y");
  if (!g.contains(x) || !g.contains(y)) throw InputError("endpoint not in graph");
  if (set_contains(through, x) || set_contains(through, y))
    throw InputError("endpoints must not lie in the through-set");
  DisjointPathCounter counter;
  auto mask = mask_of(g.universe(), through);
  if (counter.count(g, x, y, mask, k) < k) return std::nullopt;
  return PathSystem{counter.extract(x, y)};
}

std::optional<Path> path_through(const Graph& g, Vertex x, Vertex y, const VertexSet& through,
                                 const VertexSet& avoid) {
  if (x == y) throw InputError("path_through needs x != y");
  if (!g.contains(x) || !g.contains(y)) throw InputError("endpoint not in graph");
  if (set_contains(through, x) || set_contains(through, y))
    throw InputError("endpoints must not lie in the through-set");
  return bfs_path(g, x, y, mask_of(g.universe(), through, avoid), true);
}

std::optional<Cycle> cycle_with_forced_second_vertex(const Graph& g, Vertex v0, Vertex v1, Vertex v2,
                                                     const VertexSet& through, const VertexSet& avoid) {
  if (v1 == v2 || v0 == v1 || v0 == v2) throw InputError("v0, v1, v2 must be distinct");
  if (!g.has_edge(v0, v1) || !g.has_edge(v0, v2)) throw InputError("v0v1 and v0v2 must be edges");
  auto mask = mask_of(g.universe(), through, avoid);
  if (!mask[v2]) return std::nullopt;
  mask[v0] = 0;
  mask[v1] = 0;
  auto tail = bfs_path(g, v2, v1, mask, false);
  if (!tail) return std::nullopt;
  // tail = v2 ... v1; the cycle reads v0 v1 ... v2.
  Cycle cycle{v0};
  cycle.insert(cycle.end(), tail->rbegin(), tail->rend());
  return cycle;
}

std::optional<Cycle> cycle_with_edge(const Graph& g, Vertex v0, Vertex v3, const VertexSet& through,
                                     const VertexSet& avoid) {
  if (v0 == v3) throw InputError("v0 and v3 must differ");
  if (!g.has_edge(v0, v3)) throw InputError("v0v3 must be an edge");
  auto mask = mask_of(g.universe(), through, avoid);
  mask[v0] = 0;
  mask[v3] = 0;
  auto path = bfs_path(g, v0, v3, mask, true);
  if (!path) return std::nullopt;
  return Cycle(path->begin(), path->end());
}

}  // namespace rp2
