#include "eo/nfg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "eo/errors.hpp"
#include "eo/poly.hpp"

namespace eo {

ExactScalar ExactScalar::conj() const { return {ar, -ai, br, -bi}; }

std::complex<double> ExactScalar::to_complex() const {
  const double s2 = std::sqrt(2.0);
  return {to_double(ar) + to_double(br) * s2, to_double(ai) + to_double(bi) * s2};
}

std::string ExactScalar::str() const {
  if (is_rational()) return rat_str(ar);
  return "(" + rat_str(ar) + "+" + rat_str(ai) + "i) + (" + rat_str(br) + "+" + rat_str(bi) +
         "i)*sqrt2";
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  ar += o.ar;
  ai += o.ai;
  br += o.br;
  bi += o.bi;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  ar -= o.ar;
  ai -= o.ai;
  br -= o.br;
  bi -= o.bi;
  return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  // (A + B sqrt2)(C + D sqrt2) = (AC + 2BD) + (AD + BC) sqrt2, complex parts.
  ExactScalar r;
  r.ar = x.ar * y.ar - x.ai * y.ai + 2 * (x.br * y.br - x.bi * y.bi);
  r.ai = x.ar * y.ai + x.ai * y.ar + 2 * (x.br * y.bi + x.bi * y.br);
  r.br = x.ar * y.br - x.ai * y.bi + x.br * y.ar - x.bi * y.ai;
  r.bi = x.ar * y.bi + x.ai * y.br + x.br * y.ai + x.bi * y.ar;
  return r;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ExactScalar::one();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.cols != y.rows) fail(Errc::shape, "matrix dimension mismatch");
  ExactMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_tables(const NormalFactorGraph& h) {
  if (h.alphabet < 1) fail(Errc::param, "alphabet size must be >= 1");
  if (static_cast<int>(h.tables.size()) != h.graph.vertex_count())
    fail(Errc::shape, "need one table per vertex");
  for (int v = 0; v < h.graph.vertex_count(); ++v)
    if (h.tables[v].size() != ipow(static_cast<std::size_t>(h.alphabet), h.graph.degree(v)))
      fail(Errc::shape, "table size at vertex " + std::to_string(v) + " must be q^degree");
}

ExactMatrix gauge_g1() {
  ExactMatrix m(2, 2);
  const ExactScalar is2 = ExactScalar::inv_sqrt2();
  const ExactScalar i = ExactScalar::i();
  m.at(0, 0) = is2;
  m.at(0, 1) = is2;
  m.at(1, 0) = i * is2;
  m.at(1, 1) = ExactScalar::zero() - i * is2;
  return m;
}

ExactMatrix gauge_g2() {
  ExactMatrix m(2, 2);
  const ExactScalar is2 = ExactScalar::inv_sqrt2();
  const ExactScalar i = ExactScalar::i();
  m.at(0, 0) = is2;
  m.at(0, 1) = is2;
  m.at(1, 0) = ExactScalar::zero() - i * is2;
  m.at(1, 1) = i * is2;
  return m;
}

std::vector<int> bfs_vertex_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      order.push_back(u);
      for (int ei : g.incident(u)) {
        int w = g.edge(ei).lo == u ? g.edge(ei).hi : g.edge(ei).lo;
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

ExactScalar partition_function(const NormalFactorGraph& h, int cap) {
  check_tables(h);
  const Graph& g = h.graph;
  const std::size_t q = static_cast<std::size_t>(h.alphabet);

  std::vector<char> processed(g.vertex_count(), 0);
  // State: labels of boundary edges (those with exactly one processed
  // endpoint), keyed in increasing edge-id order.
  std::vector<int> open;
  std::map<std::string, ExactScalar> state{{std::string(), ExactScalar::one()}};

  for (int v : bfs_vertex_order(g)) {
    std::vector<int> closing, opening;  // incident edge ids
    for (int ei : g.incident(v)) {
      int w = g.edge(ei).lo == v ? g.edge(ei).hi : g.edge(ei).lo;
      (processed[w] ? closing : opening).push_back(ei);
    }
    std::vector<std::size_t> closing_slot(closing.size());
    for (std::size_t i = 0; i < closing.size(); ++i)
      closing_slot[i] = static_cast<std::size_t>(
          std::lower_bound(open.begin(), open.end(), closing[i]) - open.begin());

    std::vector<int> next_open;
    for (int e : open)
      if (std::find(closing.begin(), closing.end(), e) == closing.end()) next_open.push_back(e);
    next_open.insert(next_open.end(), opening.begin(), opening.end());
    std::sort(next_open.begin(), next_open.end());
    if (static_cast<int>(next_open.size()) > cap)
      fail(Errc::cap_exceeded, "partition function boundary exceeds cap");

    const auto& inc = g.incident(v);
    std::map<std::string, ExactScalar> next;
    const std::size_t n_assign = ipow(q, static_cast<int>(opening.size()));
    for (auto& [key, val] : state) {
      if (val.is_zero()) continue;
      for (std::size_t a = 0; a < n_assign; ++a) {
        // local table index in incident-edge order
        std::size_t idx = 0, pw = 1;
        std::size_t ci = 0, oi = 0, tmp = a;
        std::vector<char> label(inc.size());
        for (std::size_t p = 0; p < inc.size(); ++p) {
          int ei = inc[p];
          std::size_t lab;
          if (ci < closing.size() && closing[ci] == ei) {
            lab = static_cast<std::size_t>(key[closing_slot[ci]]);
            ++ci;
          } else {
            lab = tmp % q;
            tmp /= q;
            ++oi;
          }
          label[p] = static_cast<char>(lab);
          idx += lab * pw;
          pw *= q;
        }
        const ExactScalar& f = h.tables[v][idx];
        if (f.is_zero()) continue;
        std::string nkey(next_open.size(), '\0');
        for (std::size_t p = 0; p < next_open.size(); ++p) {
          int ei = next_open[p];
          auto it = std::find(inc.begin(), inc.end(), ei);
          if (it != inc.end()) {
            nkey[p] = label[static_cast<std::size_t>(it - inc.begin())];
          } else {
            std::size_t old = static_cast<std::size_t>(
                std::lower_bound(open.begin(), open.end(), ei) - open.begin());
            nkey[p] = key[old];
          }
        }
        next[nkey] += f * val;
      }
    }
    open = std::move(next_open);
    state = std::move(next);
    processed[v] = 1;
    if (state.empty()) return ExactScalar::zero();
  }
  ExactScalar z;
  for (auto& [key, val] : state) z += val;
  return z;
}

ExactScalar partition_function_brute(const NormalFactorGraph& h, int cap) {
  check_tables(h);
  const Graph& g = h.graph;
  const int m = g.edge_count();
  const std::size_t q = static_cast<std::size_t>(h.alphabet);
  double terms = std::pow(static_cast<double>(q), m);
  if (terms > std::pow(2.0, cap)) fail(Errc::cap_exceeded, "q^e exceeds 2^cap");

  std::vector<std::size_t> sigma(m, 0);
  ExactScalar z;
  while (true) {
    ExactScalar term = ExactScalar::one();
    for (int v = 0; v < g.vertex_count() && !term.is_zero(); ++v) {
      std::size_t idx = 0, pw = 1;
      for (int ei : g.incident(v)) {
        idx += sigma[static_cast<std::size_t>(ei)] * pw;
        pw *= q;
      }
      term = term * h.tables[v][idx];
    }
    z += term;
    int p = 0;
    while (p < m && ++sigma[p] == q) sigma[p++] = 0;
    if (p == m) break;
  }
  return z;
}

NormalFactorGraph gauge_transform(const NormalFactorGraph& h, const GaugeSet& s) {
  check_tables(h);
  const Graph& g = h.graph;
  const int q = h.alphabet;
  const int qn = s.to_alphabet;
  if (s.from_alphabet != q) fail(Errc::shape, "gauge alphabet mismatch");
  if (static_cast<int>(s.per_edge.size()) != g.edge_count())
    fail(Errc::shape, "need one gauge pair per edge");
  ExactMatrix id = ExactMatrix::identity(q);
  for (int ei = 0; ei < g.edge_count(); ++ei) {
    const EdgeGauge& eg = s.per_edge[ei];
    if (eg.at_lo.rows != qn || eg.at_lo.cols != q || eg.at_hi.rows != qn || eg.at_hi.cols != q)
      fail(Errc::shape, "gauge matrices must be q' x q");
    if (!(eg.at_lo.transpose() * eg.at_hi == id))
      fail(Errc::gauge_invalid, "G^T G != Id at edge " + std::to_string(ei));
  }

  NormalFactorGraph out;
  out.graph = g;
  out.alphabet = qn;
  out.tables.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    const int d = static_cast<int>(inc.size());
    std::vector<const ExactMatrix*> mat(d);
    for (int p = 0; p < d; ++p) {
      const Edge& e = g.edge(inc[p]);
      mat[p] = (e.lo == v) ? &s.per_edge[inc[p]].at_lo : &s.per_edge[inc[p]].at_hi;
    }
    const std::size_t nold = ipow(static_cast<std::size_t>(q), d);
    const std::size_t nnew = ipow(static_cast<std::size_t>(qn), d);
    std::vector<ExactScalar> table(nnew);
    for (std::size_t sig = 0; sig < nold; ++sig) {
      const ExactScalar& f = h.tables[v][sig];
      if (f.is_zero()) continue;
      std::vector<int> sd(d);
      std::size_t tmp = sig;
      for (int p = 0; p < d; ++p) {
        sd[p] = static_cast<int>(tmp % q);
        tmp /= static_cast<std::size_t>(q);
      }
      for (std::size_t tau = 0; tau < nnew; ++tau) {
        ExactScalar coef = f;
        std::size_t tt = tau;
        for (int p = 0; p < d && !coef.is_zero(); ++p) {
          int tp = static_cast<int>(tt % qn);
          tt /= static_cast<std::size_t>(qn);
          coef = coef * mat[p]->at(tp, sd[p]);
        }
        table[tau] += coef;
      }
    }
    out.tables[v] = std::move(table);
  }
  return out;
}

NormalFactorGraph eulerian_nfg(const Graph& g) {
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "eulerian nfg needs all degrees even");
  Subdivision sub = subdivide(g);
  NormalFactorGraph h;
  h.graph = sub.graph;
  h.alphabet = 2;
  h.tables.resize(sub.graph.vertex_count());
  for (int v = 0; v < sub.graph.vertex_count(); ++v) {
    const int d = sub.graph.degree(v);
    std::vector<ExactScalar> table(ipow(2, d));
    if (sub.origin[v].kind == VertexOrigin::vertex) {
      // balance indicator: exactly d/2 incident subdivision edges chosen
      for (std::size_t sig = 0; sig < table.size(); ++sig)
        if (std::popcount(sig) == d / 2) table[sig] = ExactScalar::one();
    } else {
      // disagreement indicator on the two half-edges
      table[1] = ExactScalar::one();
      table[2] = ExactScalar::one();
    }
    h.tables[v] = std::move(table);
  }
  return h;
}

GaugeSet eulerian_gauges(const Graph& g) {
  ExactMatrix g1 = gauge_g1();
  ExactMatrix g2 = gauge_g2();
  Subdivision sub = subdivide(g);
  GaugeSet s;
  s.from_alphabet = 2;
  s.to_alphabet = 2;
  s.per_edge.resize(sub.graph.edge_count());
  for (int ei = 0; ei < sub.graph.edge_count(); ++ei) {
    // lo endpoint is always the original vertex, hi the edge vertex
    s.per_edge[ei] = {g2, g1};
  }
  return s;
}

bool verify_s_derivation(int d) {
  if (d < 0 || d % 2 != 0) fail(Errc::parity, "verify_s_derivation needs even d");
  if (d > 12) fail(Errc::size, "verify_s_derivation capped at d = 12");
  const ExactMatrix g2 = gauge_g2();
  WeightVector s = s_vector(d);
  const std::size_t total = ipow(2, d);
  for (std::size_t tau = 0; tau < total; ++tau) {
    ExactScalar acc;
    for (std::size_t sig = 0; sig < total; ++sig) {
      if (std::popcount(sig) != d / 2) continue;
      ExactScalar prod = ExactScalar::one();
      for (int p = 0; p < d; ++p)
        prod = prod * g2.at(static_cast<int>((tau >> p) & 1), static_cast<int>((sig >> p) & 1));
      acc += prod;
    }
    ExactScalar want(s[static_cast<std::size_t>(std::popcount(tau))]);
    if (!(acc == want)) return false;
  }
  return true;
}

NfgCertificate nfg_verify(const Graph& g) {
  NfgCertificate cert;
  NormalFactorGraph h = eulerian_nfg(g);
  cert.z_original = partition_function(h);
  NormalFactorGraph hg = gauge_transform(h, eulerian_gauges(g));
  cert.z_gauged = partition_function(hg);
  cert.epsilon = count_eulerian_cycle_space(g);
  cert.pass = cert.z_original == cert.z_gauged && cert.z_original.is_rational() &&
              cert.z_original.ar == Rat(cert.epsilon);
  return cert;
}

}  // namespace eo
