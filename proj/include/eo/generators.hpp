#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eo/graph.hpp"

namespace eo {

enum class Family {
  complete,
  cycle,
  torus,
  aztec,
  circulant,
  random_even,
  iterated_subdivision,
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct FamilySpec {
  Family family;
  std::vector<long> params;
  std::optional<std::uint64_t> seed;
  // iterated_subdivision only: the spec of the graph being subdivided.
  std::shared_ptr<FamilySpec> base;
};

// complete(n); cycle(n), n >= 2 (n=2 is a parallel pair); torus(a,b), a,b >= 3;
// aztec(k), k >= 1; circulant(n, s1..sj) with 0 < s < n/2; random_even(n, c)
// with a seed; iterated_subdivision(t) over `base`.
Graph generate(const FamilySpec& spec);

// Throws Errc::not_eulerian unless every degree of g is even.
void ensure_eulerian(const Graph& g, const std::string& what);

// Substitutes each size into the template's size slot (complete/cycle: n,
// torus: (n,n), aztec: k, iterated_subdivision: t). Sizes must increase.
std::vector<Graph> sequence(const FamilySpec& tmpl, const std::vector<long>& sizes);

}  // namespace eo
