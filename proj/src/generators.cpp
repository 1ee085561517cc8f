#include "eo/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "eo/errors.hpp"
#include "eo/rng.hpp"

namespace eo {

Family family_from_name(const std::string& name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "torus") return Family::torus;
  if (name == "aztec") return Family::aztec;
  if (name == "circulant") return Family::circulant;
  if (name == "random_even") return Family::random_even;
  if (name == "iterated_subdivision") return Family::iterated_subdivision;
  fail(Errc::param, "unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::torus: return "torus";
    case Family::aztec: return "aztec";
    case Family::circulant: return "circulant";
    case Family::random_even: return "random_even";
    case Family::iterated_subdivision: return "iterated_subdivision";
  }
  return "?";
}

namespace {

void need_params(const FamilySpec& s, std::size_t lo, std::size_t hi) {
  if (s.params.size() < lo || s.params.size() > hi)
    fail(Errc::param, family_name(s.family) + ": wrong number of params");
}

Graph gen_complete(long n) {
  if (n < 1) fail(Errc::param, "complete: n >= 1 required");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(static_cast<int>(n), edges);
}

Graph gen_cycle(long n) {
  if (n < 2) fail(Errc::param, "cycle: n >= 2 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, static_cast<int>((i + 1) % n));
  return Graph(static_cast<int>(n), edges);
}

Graph gen_torus(long a, long b) {
  if (a < 3 || b < 3) fail(Errc::param, "torus: both sides >= 3 required");
  auto id = [b](long i, long j) { return static_cast<int>(i * b + j); };
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < a; ++i)
    for (long j = 0; j < b; ++j) {
      edges.emplace_back(id(i, j), id((i + 1) % a, j));
      edges.emplace_back(id(i, j), id(i, (j + 1) % b));
    }
  return Graph(static_cast<int>(a * b), edges);
}

Graph gen_aztec(long k) {
  if (k < 1) fail(Errc::param, "aztec: k >= 1 required");
  // Odd-odd lattice points with |a|+|b| <= 2k; edges at axis distance 2.
  std::map<std::pair<long, long>, int> id;
  std::vector<std::pair<long, long>> pts;
  for (long a = -2 * k + 1; a <= 2 * k - 1; a += 2)
    for (long b = -2 * k + 1; b <= 2 * k - 1; b += 2)
      if (std::abs(a) + std::abs(b) <= 2 * k) {
        id[{a, b}] = static_cast<int>(pts.size());
        pts.emplace_back(a, b);
      }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [a, b] = pts[i];
    for (auto [da, db] : {std::pair<long, long>{2, 0}, {0, 2}}) {
      auto it = id.find({a + da, b + db});
      if (it != id.end()) edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return Graph(static_cast<int>(pts.size()), edges);
}

Graph gen_circulant(long n, const std::vector<long>& shifts) {
  if (n < 3) fail(Errc::param, "circulant: n >= 3 required");
  std::vector<std::pair<int, int>> edges;
  for (long s : shifts) {
    if (s <= 0 || 2 * s >= n) fail(Errc::param, "circulant: need 0 < s < n/2");
    for (long i = 0; i < n; ++i)
      edges.emplace_back(static_cast<int>(i), static_cast<int>((i + s) % n));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph gen_random_even(long n, long cycles, std::uint64_t seed) {
  if (n < 3 || cycles < 1) fail(Errc::param, "random_even: need n >= 3, cycles >= 1");
  SplitMix64 rng(seed);
  // XOR-superpose seeded simple cycles; every vertex degree stays even.
  std::set<std::pair<int, int>> edges;
  std::vector<int> verts(n);
  for (long c = 0; c < cycles; ++c) {
    long max_len = std::min<long>(n, 7);
    long len = 3 + static_cast<long>(rng.below(static_cast<std::uint64_t>(max_len - 2)));
    for (long i = 0; i < n; ++i) verts[i] = static_cast<int>(i);
    for (long i = 0; i < len; ++i) {
      long j = i + static_cast<long>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(verts[i], verts[j]);
    }
    for (long i = 0; i < len; ++i) {
      int u = verts[i], v = verts[(i + 1) % len];
      auto e = std::minmax(u, v);
      auto key = std::make_pair(e.first, e.second);
      if (!edges.erase(key)) edges.insert(key);
    }
  }
  std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), list);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
      need_params(spec, 1, 1);
      return gen_complete(spec.params[0]);
    case Family::cycle:
      need_params(spec, 1, 1);
      return gen_cycle(spec.params[0]);
    case Family::torus:
      need_params(spec, 2, 2);
      return gen_torus(spec.params[0], spec.params[1]);
    case Family::aztec:
      need_params(spec, 1, 1);
      return gen_aztec(spec.params[0]);
    case Family::circulant: {
      need_params(spec, 2, 16);
      std::vector<long> shifts(spec.params.begin() + 1, spec.params.end());
      return gen_circulant(spec.params[0], shifts);
    }
    case Family::random_even: {
      need_params(spec, 2, 2);
      if (!spec.seed) fail(Errc::param, "random_even: seed required");
      return gen_random_even(spec.params[0], spec.params[1], *spec.seed);
    }
    case Family::iterated_subdivision: {
      need_params(spec, 1, 1);
      if (!spec.base) fail(Errc::param, "iterated_subdivision: base spec required");
      long t = spec.params[0];
      if (t < 0) fail(Errc::param, "iterated_subdivision: t >= 0 required");
      Graph g = generate(*spec.base);
      for (long i = 0; i < t; ++i) g = subdivide(g).graph;
      return g;
    }
  }
  fail(Errc::param, "unhandled family");
}

void ensure_eulerian(const Graph& g, const std::string& what) {
  if (!g.is_eulerian()) fail(Errc::not_eulerian, what + ": some vertex degree is odd");
}

std::vector<Graph> sequence(const FamilySpec& tmpl, const std::vector<long>& sizes) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) fail(Errc::param, "sequence sizes must strictly increase");
  std::vector<Graph> out;
  out.reserve(sizes.size());
  for (long s : sizes) {
    FamilySpec inst = tmpl;
    switch (tmpl.family) {
      case Family::torus: inst.params = {s, s}; break;
      case Family::complete:
      case Family::cycle:
      case Family::aztec:
      case Family::iterated_subdivision: inst.params = {s}; break;
      default: fail(Errc::param, "sequence: unsupported family " + family_name(tmpl.family));
    }
    out.push_back(generate(inst));
  }
  return out;
}

}  // namespace eo
