#include "eo/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "eo/errors.hpp"

namespace eo {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) fail(Errc::param, "negative vertex count");
  n_ = vertex_count;
  edges_.reserve(edges.size());
  incident_.assign(n_, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) fail(Errc::loop, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      fail(Errc::index, "edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    Edge e{std::min(u, v), std::max(u, v)};
    edges_.push_back(e);
    incident_[e.lo].push_back(static_cast<int>(i));
    incident_[e.hi].push_back(static_cast<int>(i));
  }
}

bool Graph::is_eulerian() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) % 2 != 0) return false;
  return true;
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::components() const {
  std::vector<int> comp(n_, -1);
  int c = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int ei : incident_[u]) {
        int w = edges_[ei].lo == u ? edges_[ei].hi : edges_[ei].lo;
        if (comp[w] < 0) {
          comp[w] = c;
          q.push_back(w);
        }
      }
    }
    ++c;
  }
  return c;
}

std::map<int, int> Graph::degree_histogram() const {
  std::map<int, int> h;
  for (int v = 0; v < n_; ++v) ++h[degree(v)];
  return h;
}

std::map<int, Rat> Graph::degree_fractions() const {
  std::map<int, Rat> f;
  if (n_ == 0) return f;
  for (auto& [d, c] : degree_histogram()) f[d] = make_rat(c, n_);
  return f;
}

std::optional<int> Graph::girth() const {
  const int inf = std::numeric_limits<int>::max();
  int best = inf;
  // Shortest cycle through each start vertex; the minimum over starts is the
  // girth. Non-tree edges met at (u,w) close a cycle of <= dist(u)+dist(w)+1.
  std::vector<int> dist(n_), via_edge(n_);
  for (int s = 0; s < n_ && best > 2; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(via_edge.begin(), via_edge.end(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (2 * dist[u] >= best) break;
      for (int ei : incident_[u]) {
        if (ei == via_edge[u]) continue;
        int w = edges_[ei].lo == u ? edges_[ei].hi : edges_[ei].lo;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via_edge[w] = ei;
          q.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::vector<EdgeSet> Graph::cycle_space_basis() const {
  // Spanning forest by BFS; each non-tree edge closes one fundamental cycle.
  std::vector<int> parent_edge(n_, -1), parent(n_, -1), depth(n_, 0);
  std::vector<bool> seen(n_, false), in_tree(edges_.size(), false);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int ei : incident_[u]) {
        int w = edges_[ei].lo == u ? edges_[ei].hi : edges_[ei].lo;
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = u;
          parent_edge[w] = ei;
          depth[w] = depth[u] + 1;
          in_tree[ei] = true;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<EdgeSet> basis;
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    if (in_tree[ei]) continue;
    EdgeSet cyc(edges_.size());
    cyc.set(ei);
    int a = edges_[ei].lo, b = edges_[ei].hi;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cyc.flip(static_cast<std::size_t>(parent_edge[a]));
      a = parent[a];
    }
    basis.push_back(std::move(cyc));
  }
  return basis;
}

Subdivision subdivide(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(g.edge(i).lo, n + i);
    edges.emplace_back(g.edge(i).hi, n + i);
  }
  Subdivision out{Graph(n + m, edges), {}};
  out.origin.reserve(n + m);
  for (int v = 0; v < n; ++v) out.origin.push_back({VertexOrigin::vertex, v});
  for (int i = 0; i < m; ++i) out.origin.push_back({VertexOrigin::edge, i});
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(a.edge_count() + b.edge_count());
  for (auto& e : a.edges()) edges.emplace_back(e.lo, e.hi);
  int off = a.vertex_count();
  for (auto& e : b.edges()) edges.emplace_back(e.lo + off, e.hi + off);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace eo
