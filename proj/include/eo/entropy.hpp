#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eo/generators.hpp"
#include "eo/graph.hpp"
#include "eo/rational.hpp"

namespace eo {

struct EntropyReport {
  int vertices = 0;
  int edges = 0;
  Int eulerian_count;
  double entropy = 0.0;         // ln(eps) / v
  double schrijver_bound = 0.0;
  std::optional<double> pauling_reference;  // regular graphs only
  std::optional<int> girth;                 // nullopt = acyclic
};

// (1/v) ln eps(G); the count is exact, the log is bit-length safe.
double entropy(const Graph& g);
EntropyReport entropy_report(const Graph& g);

// (1/v) sum_v ln( C(d_v, d_v/2) / 2^{d_v/2} ).
double schrijver_bound(const Graph& g);

// sum_k t_k ln( 2^{-k/2} C(k,k/2) ) over even k; fractions must sum to 1.
double large_girth_limit(const std::map<int, Rat>& fractions);

// lieb = 1.5 ln(4/3); baxter = ln(3 sqrt(3)/2), reference only (there is no
// triangular generator); tree_d = ln(C(d,d/2)/2^{d/2}) for even d <= 12.
std::map<std::string, double> reference_constants();

// Rows (u, (1/v) ln P_G(u)); exact inner evaluation, u > 0.
std::vector<std::pair<Rat, double>> p_curve(const Graph& g, const std::vector<Rat>& us,
                                            int dim_cap = 30);

struct SequenceEntry {
  long size = 0;
  EntropyReport report;
  double girth_formula = 0.0;  // large_girth_limit at this graph's degree fractions
  std::optional<double> diff_prev;
  std::vector<std::pair<Rat, double>> curve;
};

struct SequenceReport {
  std::string family;
  std::optional<double> reference_constant;
  std::string reference_note;
  std::vector<SequenceEntry> entries;
};

SequenceReport sequence_report(const FamilySpec& tmpl, const std::vector<long>& sizes,
                               const std::vector<Rat>& curve_us = {});

}  // namespace eo
