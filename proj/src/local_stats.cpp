#include "eo/local_stats.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "eo/entropy.hpp"
#include "eo/errors.hpp"
#include "eo/generators.hpp"
#include "eo/rng.hpp"

namespace eo {

RootedBall ball(const Graph& g, int v, int r) {
  if (v < 0 || v >= g.vertex_count()) fail(Errc::index, "ball root out of range");
  if (r < 0) fail(Errc::param, "ball radius must be >= 0");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[v] = 0;
  std::deque<int> q{v};
  std::vector<int> verts{v};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] == r) continue;
    for (int ei : g.incident(u)) {
      int w = g.edge(ei).lo == u ? g.edge(ei).hi : g.edge(ei).lo;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        verts.push_back(w);
        q.push_back(w);
      }
    }
  }
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return a < b;
  });
  std::vector<int> remap(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto& e : g.edges())
    if (remap[e.lo] >= 0 && remap[e.hi] >= 0) edges.emplace_back(remap[e.lo], remap[e.hi]);
  return {Graph(static_cast<int>(verts.size()), edges), remap[v], r};
}

namespace {

struct CanonCtx {
  int n;
  std::vector<std::vector<std::uint8_t>> adj;  // multiplicity matrix
  std::vector<int> color;                      // stable refined color, root unique
  std::vector<int> perm;                       // position -> vertex
  std::vector<char> used;
  std::string cur;
  std::string best;
  bool have_best = false;
};

// Iterated refinement of (distance-from-root, degree) colors by sorted
// neighbor-color multisets. Color ranks are isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  dist[root] = 0;
  std::deque<int> q{root};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int ei : g.incident(u)) {
      int w = g.edge(ei).lo == u ? g.edge(ei).hi : g.edge(ei).lo;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  std::vector<std::pair<std::pair<int, int>, int>> init(n);
  for (int v = 0; v < n; ++v) init[v] = {{dist[v], g.degree(v)}, v};
  std::sort(init.begin(), init.end());
  std::vector<int> color(n);
  int c = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || init[i].first != init[i - 1].first) ++c;
    color[init[i].second] = c;
  }
  while (true) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int ei : g.incident(v)) {
        int w = g.edge(ei).lo == v ? g.edge(ei).hi : g.edge(ei).lo;
        nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v] = {{color[v], std::move(nb)}, v};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(n);
    int nc = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[i].first != sig[i - 1].first) ++nc;
      next[sig[i].second] = nc;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Minimum adjacency string over color-respecting root-fixing orderings.
void canon_search(CanonCtx& ctx, int pos, bool already_less) {
  if (pos == ctx.n) {
    if (!ctx.have_best || ctx.cur < ctx.best) {
      ctx.best = ctx.cur;
      ctx.have_best = true;
    }
    return;
  }
  int want_color = -1;
  for (int v = 0; v < ctx.n; ++v)
    if (!ctx.used[v]) want_color = want_color < 0 ? ctx.color[v] : std::min(want_color, ctx.color[v]);
  for (int v = 0; v < ctx.n; ++v) {
    if (ctx.used[v] || ctx.color[v] != want_color) continue;
    std::string row(pos, '\0');
    for (int p = 0; p < pos; ++p) row[p] = static_cast<char>(ctx.adj[v][ctx.perm[p]]);
    bool less = already_less;
    if (!less && ctx.have_best) {
      // compare against the same slice of best
      int cmp = 0;
      for (int p = 0; p < pos && cmp == 0; ++p) {
        char b = ctx.best[ctx.cur.size() + p];
        cmp = row[p] < b ? -1 : (row[p] > b ? 1 : 0);
      }
      if (cmp > 0) continue;
      less = cmp < 0;
    }
    ctx.used[v] = 1;
    ctx.perm[pos] = v;
    ctx.cur += row;
    canon_search(ctx, pos + 1, less);
    ctx.cur.resize(ctx.cur.size() - row.size());
    ctx.used[v] = 0;
  }
}

}  // namespace

std::string canonical_key(const RootedBall& b) {
  const int n = b.graph.vertex_count();
  if (n > 64) fail(Errc::size, "ball larger than 64 vertices");
  CanonCtx ctx;
  ctx.n = n;
  ctx.adj.assign(n, std::vector<std::uint8_t>(n, 0));
  for (auto& e : b.graph.edges()) {
    ++ctx.adj[e.lo][e.hi];
    ++ctx.adj[e.hi][e.lo];
  }
  ctx.color = refine_colors(b.graph, b.root);
  ctx.perm.assign(n, -1);
  ctx.used.assign(n, 0);
  canon_search(ctx, 0, false);

  // key = radius, n, color spectrum by position, then the adjacency string
  std::string key;
  key.push_back(static_cast<char>(b.radius));
  key.push_back(static_cast<char>(n));
  std::vector<int> sorted_colors = ctx.color;
  std::sort(sorted_colors.begin(), sorted_colors.end());
  for (int c : sorted_colors) key.push_back(static_cast<char>(c));
  key += ctx.best;
  return key;
}

std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

LocalProfile profile(const Graph& g, int r, std::size_t ball_cap) {
  if (g.vertex_count() == 0) fail(Errc::param, "profile of the empty graph");
  LocalProfile p;
  p.radius = r;
  std::map<std::string, long> counts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    RootedBall b = ball(g, v, r);
    if (static_cast<std::size_t>(b.graph.vertex_count()) > ball_cap)
      fail(Errc::size, "ball exceeds cap");
    ++counts[canonical_key(b)];
  }
  for (auto& [k, c] : counts) p.probs[k] = make_rat(c, g.vertex_count());
  return p;
}

Rat tv_distance(const LocalProfile& p, const LocalProfile& q) {
  if (p.radius != q.radius) fail(Errc::radius_mismatch, "profiles have different radii");
  Rat acc(0);
  auto add = [&acc](const Rat& a, const Rat& b) { acc += abs(a - b); };
  for (auto& [k, pv] : p.probs) {
    auto it = q.probs.find(k);
    add(pv, it == q.probs.end() ? Rat(0) : it->second);
  }
  for (auto& [k, qv] : q.probs)
    if (!p.probs.count(k)) add(Rat(0), qv);
  return acc / 2;
}

double estimate_entropy_sampled(const Graph& g, int r, int k, std::uint64_t seed) {
  ensure_eulerian(g, "sampled estimator");
  if (r < 1 || k < 1) fail(Errc::param, "estimator needs r >= 1, k >= 1");
  SplitMix64 rng(seed);
  std::map<int, long> degs;
  for (int i = 0; i < k; ++i) {
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
    RootedBall b = ball(g, v, r);
    ++degs[b.graph.degree(b.root)];
  }
  std::map<int, Rat> fractions;
  for (auto& [d, c] : degs) fractions[d] = make_rat(c, k);
  return large_girth_limit(fractions);
}

}  // namespace eo
