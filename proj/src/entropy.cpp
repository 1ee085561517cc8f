#include "eo/entropy.hpp"

#include <cmath>

#include "eo/errors.hpp"
#include "eo/orient.hpp"
#include "eo/poly.hpp"

namespace eo {

namespace {

// ln( C(d,d/2) / 2^{d/2} ) for even d.
double vertex_factor_log(int d) {
  if (d < 0 || d % 2 != 0) fail(Errc::parity, "odd degree has no balanced-orientation factor");
  return ln_int(binom(d, d / 2)) - (d / 2) * M_LN2;
}

}  // namespace

double entropy(const Graph& g) {
  if (g.vertex_count() == 0) fail(Errc::domain, "entropy of the empty graph");
  ensure_eulerian(g, "entropy");
  Int eps = count_eulerian_frontier_dp(g).value;
  return ln_int(eps) / g.vertex_count();
}

EntropyReport entropy_report(const Graph& g) {
  if (g.vertex_count() == 0) fail(Errc::domain, "entropy of the empty graph");
  ensure_eulerian(g, "entropy");
  EntropyReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.eulerian_count = count_eulerian_frontier_dp(g).value;
  r.entropy = ln_int(r.eulerian_count) / r.vertices;
  r.schrijver_bound = schrijver_bound(g);
  if (g.vertex_count() > 0 && g.is_regular(g.degree(0)))
    r.pauling_reference = vertex_factor_log(g.degree(0));
  r.girth = g.girth();
  return r;
}

double schrijver_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0.0;
  double acc = 0;
  for (auto& [d, cnt] : g.degree_histogram()) acc += cnt * vertex_factor_log(d);
  return acc / g.vertex_count();
}

double large_girth_limit(const std::map<int, Rat>& fractions) {
  Rat total(0);
  double acc = 0;
  for (auto& [k, t] : fractions) {
    if (k % 2 != 0) fail(Errc::parity, "degree fractions must be supported on even degrees");
    if (t < 0) fail(Errc::param, "negative degree fraction");
    total += t;
    acc += to_double(t) * vertex_factor_log(k);
  }
  if (total != 1) fail(Errc::param, "degree fractions must sum to 1, got " + rat_str(total));
  return acc;
}

std::map<std::string, double> reference_constants() {
  std::map<std::string, double> c;
  c["lieb"] = 1.5 * std::log(4.0 / 3.0);
  c["baxter"] = std::log(3.0 * std::sqrt(3.0) / 2.0);
  for (int d = 2; d <= 12; d += 2) c["tree_" + std::to_string(d)] = vertex_factor_log(d);
  return c;
}

std::vector<std::pair<Rat, double>> p_curve(const Graph& g, const std::vector<Rat>& us,
                                            int dim_cap) {
  ensure_eulerian(g, "p_curve");
  if (g.vertex_count() == 0) fail(Errc::domain, "p_curve of the empty graph");
  RationalPoly p = poly_P(g, dim_cap);
  std::vector<std::pair<Rat, double>> rows;
  rows.reserve(us.size());
  for (const Rat& u : us) {
    if (u <= 0) fail(Errc::domain, "p_curve needs u > 0");
    rows.emplace_back(u, ln_rat(p.eval(u)) / g.vertex_count());
  }
  return rows;
}

SequenceReport sequence_report(const FamilySpec& tmpl, const std::vector<long>& sizes,
                               const std::vector<Rat>& curve_us) {
  SequenceReport rep;
  rep.family = family_name(tmpl.family);
  switch (tmpl.family) {
    case Family::torus:
    case Family::aztec:
      rep.reference_constant = 1.5 * std::log(4.0 / 3.0);
      rep.reference_note = "lieb";
      break;
    case Family::cycle:
      rep.reference_constant = 0.0;
      rep.reference_note = "large girth, all degrees 2";
      break;
    case Family::iterated_subdivision:
      rep.reference_note = "girth doubles per step; see the girth_formula column";
      break;
    default: break;
  }
  auto graphs = sequence(tmpl, sizes);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ensure_eulerian(graphs[i], "sequence member " + std::to_string(sizes[i]));
    SequenceEntry e;
    e.size = sizes[i];
    e.report = entropy_report(graphs[i]);
    e.girth_formula = large_girth_limit(graphs[i].degree_fractions());
    if (i > 0) e.diff_prev = e.report.entropy - rep.entries.back().report.entropy;
    if (!curve_us.empty()) e.curve = p_curve(graphs[i], curve_us);
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace eo
