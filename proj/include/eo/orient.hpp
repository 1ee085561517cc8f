#pragma once

#include <cstddef>
#include <vector>

#include "eo/bitset.hpp"
#include "eo/graph.hpp"
#include "eo/rational.hpp"

namespace eo {

// Bit i set = edge i directed lo -> hi.
struct Orientation {
  EdgeSet bits;
};

enum class CountMethod { brute, cycle_space, frontier_dp };
const char* count_method_name(CountMethod m);

struct CountResult {
  Int value;
  CountMethod method;
  double elapsed_ms = 0.0;
};

// Exact epsilon(G) by enumerating all 2^e orientations (Gray code walk,
// complement symmetry halves the work). cap bounds e. threads > 1 splits the
// index range; the sum is order-independent.
CountResult count_eulerian_brute(const Graph& g, int cap = 24, int threads = 1);

// All balanced orientations in increasing bit-vector order.
std::vector<Orientation> enumerate_eulerian_orientations(const Graph& g, int cap = 24);

// Exact epsilon(G) by dynamic programming over edges grouped along a vertex
// order; state maps per-frontier-vertex signed imbalance to a count.
CountResult count_eulerian_frontier_dp(const Graph& g, const std::vector<int>* order = nullptr,
                                       std::size_t state_bound = 10'000'000);

// Exact pm(G) by recursive matching enumeration.
CountResult count_pm_brute(const Graph& g, int cap = 24);

}  // namespace eo
