#pragma once

#include <vector>

#include "eo/graph.hpp"
#include "eo/rational.hpp"

namespace eo {

// Dense coefficient vector, coeff[k] multiplies z^k. Arithmetic keeps the
// trailing coefficient nonzero; poly_P intentionally carries interior zeros.
struct RationalPoly {
  std::vector<Rat> coeff;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> c) : coeff(std::move(c)) { trim(); }

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  // True when every odd-index coefficient vanishes.
  bool is_even() const;

  Rat eval(const Rat& u) const;
  RationalPoly derivative() const;
  void trim();

  bool operator==(const RationalPoly& o) const;
};

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);

// Per-vertex weights x_0..x_d for a vertex of degree d.
using WeightVector = std::vector<Rat>;

// The weight vector under which the subgraph counting function counts
// Eulerian orientations: s_k = C(d,d/2) C(d/2,k/2) / (2^{d/2} C(d,k)) for even
// k, 0 for odd k. d must be even.
WeightVector s_vector(int d);

// K(z) = sum_k C(d,k) w_k z^k.
RationalPoly key_polynomial(const WeightVector& w);

// F_G = sum over all edge subsets A of prod_v w[v][deg_A(v)]. Full 2^e walk.
Rat eval_F(const Graph& g, const std::vector<WeightVector>& weights, int cap = 24);

// P_G(z): z^{2|A|}-graded specialization of F_G at the s-vectors, computed
// over the cycle space only (s vanishes at odd indices, so only all-even
// subsets contribute). Degree fixed at 2 e(G).
RationalPoly poly_P(const Graph& g, int dim_cap = 30);

Rat eval_P(const Graph& g, const Rat& u, int dim_cap = 30);

// eval_P at 1, checked to be a non-negative integer.
Int count_eulerian_cycle_space(const Graph& g, int dim_cap = 30);

struct PmIdentity {
  Rat f_matching;  // F_G(0,1,0,0,0)
  Rat f_rotated;   // F_G(1,-1/2,0,1/2,-1)
  Int pm;          // brute-force perfect matching count
};

// 4-regular graphs only.
PmIdentity pm_identity_check(const Graph& g, int cap = 24);

}  // namespace eo
