#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "eo/graph.hpp"
#include "eo/rational.hpp"

namespace eo {

struct RootedBall {
  Graph graph;  // induced subgraph on vertices within distance <= radius
  int root = 0;
  int radius = 0;
};

RootedBall ball(const Graph& g, int v, int r);

// Root-preserving canonical form; equal keys iff the balls are isomorphic by
// a root-fixing map. Edge multiplicities are part of the form. Balls are
// capped at 64 vertices.
std::string canonical_key(const RootedBall& b);
std::string key_hex(const std::string& key);

struct LocalProfile {
  int radius = 0;
  std::map<std::string, Rat> probs;  // canonical key -> exact probability
};

LocalProfile profile(const Graph& g, int r, std::size_t ball_cap = 64);

// (1/2) sum_keys |p - q|; radii must match.
Rat tv_distance(const LocalProfile& p, const LocalProfile& q);

// Demonstration estimator: k sampled vertices, empirical degree fractions
// from their r-balls, then the large-girth formula. Exact only in the
// large-girth regime; deliberately blind to anything beyond degrees.
double estimate_entropy_sampled(const Graph& g, int r, int k, std::uint64_t seed);

}  // namespace eo
