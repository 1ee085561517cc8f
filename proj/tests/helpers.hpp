#pragma once

#include <utility>
#include <vector>

#include "eo/generators.hpp"
#include "eo/graph.hpp"

namespace eo::test {

inline Graph k5() {
  FamilySpec s{Family::complete, {5}, {}, {}};
  return generate(s);
}

inline Graph cycle(long n) {
  FamilySpec s{Family::cycle, {n}, {}, {}};
  return generate(s);
}

inline Graph torus(long a, long b) {
  FamilySpec s{Family::torus, {a, b}, {}, {}};
  return generate(s);
}

inline Graph aztec(long k) {
  FamilySpec s{Family::aztec, {k}, {}, {}};
  return generate(s);
}

inline Graph random_even(long n, long c, std::uint64_t seed) {
  FamilySpec s{Family::random_even, {n, c}, seed, {}};
  return generate(s);
}

inline Graph k44() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) edges.emplace_back(a, 4 + b);
  return Graph(8, edges);
}

// The standard acceptance corpus: thirteen Eulerian graphs.
struct CorpusEntry {
  const char* name;
  Graph graph;
};

inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"k5", k5()});
  c.push_back({"c4", cycle(4)});
  c.push_back({"c8", cycle(8)});
  c.push_back({"torus33", torus(3, 3)});
  c.push_back({"torus34", torus(3, 4)});
  c.push_back({"torus44", torus(4, 4)});
  c.push_back({"aztec1", aztec(1)});
  c.push_back({"aztec2", aztec(2)});
  c.push_back({"aztec3", aztec(3)});
  c.push_back({"rand_even_a", random_even(9, 2, 12345)});
  c.push_back({"rand_even_b", random_even(10, 2, 777)});
  c.push_back({"union_c3_c4", disjoint_union(cycle(3), cycle(4))});
  c.push_back({"sub_k5", subdivide(k5()).graph});
  return c;
}

}  // namespace eo::test
