#pragma once

#include <complex>
#include <vector>

#include "eo/graph.hpp"
#include "eo/poly.hpp"
#include "eo/rational.hpp"

namespace eo {

// p_k = sum_i rho_i^k for k = 1..k_max via the Newton identities applied to
// the monic normalization. No root finding involved.
std::vector<Rat> power_sums(const RationalPoly& p, int k_max);

// k-th moment of mu_G = p_k / (2m), exact.
std::vector<Rat> moments(const Graph& g, int k_max, int dim_cap = 30);

// Square-free decomposition p = c * prod parts[i].first ^ parts[i].second
// (Yun). Parts are monic.
std::vector<std::pair<RationalPoly, int>> square_free_decomposition(const RationalPoly& p);

// All deg(p) roots, multiplicity included. Square-free parts are isolated
// exactly first, then Aberth-Ehrlich runs per part (halved through w = z^2
// when the part is even) and roots are Newton-polished. tol bounds the
// relative coefficient-space residual.
std::vector<std::complex<double>> find_roots(const RationalPoly& p, double tol = 1e-12);

double circle_residual(const std::vector<std::complex<double>>& roots);

// Integral of ln|u - z| over the root measure of P_G, evaluated exactly as
// (ln P_G(u) - ln a_{2m}) / 2m. u > 0, u != 1.
double log_potential(const Graph& g, const Rat& u, int dim_cap = 30);

// Same integral from numeric roots: (1/deg) sum_i ln|u - rho_i|.
double log_potential_from_roots(const std::vector<std::complex<double>>& roots, double u);

struct RootMeasureSummary {
  int degree = 0;                           // 2m
  std::vector<std::complex<double>> roots;  // length 2m
  std::vector<Rat> power_sums;              // p_1..p_k, exact
  double circle_residual = 0.0;             // max | |rho| - 1 |
};

RootMeasureSummary root_measure(const Graph& g, int k_max = 20, double tol = 1e-12,
                                int dim_cap = 30);

}  // namespace eo
