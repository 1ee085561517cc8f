#include "eo/poly.hpp"

#include <bit>
#include <string>

#include "eo/errors.hpp"
#include "eo/orient.hpp"

namespace eo {

int RationalPoly::degree() const {
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k)
    if (coeff[k] != 0) return k;
  return -1;
}

bool RationalPoly::is_even() const {
  for (std::size_t k = 1; k < coeff.size(); k += 2)
    if (coeff[k] != 0) return false;
  return true;
}

Rat RationalPoly::eval(const Rat& u) const {
  Rat acc(0);
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k) acc = acc * u + coeff[k];
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeff.size() <= 1) return RationalPoly{};
  std::vector<Rat> d(coeff.size() - 1);
  for (std::size_t k = 1; k < coeff.size(); ++k) d[k - 1] = coeff[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

void RationalPoly::trim() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

bool RationalPoly::operator==(const RationalPoly& o) const {
  RationalPoly a = *this, b = o;
  a.trim();
  b.trim();
  return a.coeff == b.coeff;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.coeff.empty() || b.coeff.empty()) return RationalPoly{};
  std::vector<Rat> c(a.coeff.size() + b.coeff.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j) c[i + j] += a.coeff[i] * b.coeff[j];
  }
  return RationalPoly(std::move(c));
}

WeightVector s_vector(int d) {
  if (d < 0 || d % 2 != 0) fail(Errc::parity, "s_vector needs an even degree");
  WeightVector s(d + 1, Rat(0));
  Int top = binom(d, d / 2);
  Int pow2 = Int(1) << (d / 2);
  for (int k = 0; k <= d; k += 2)
    s[k] = make_rat(top * binom(d / 2, k / 2), pow2 * binom(d, k));
  return s;
}

RationalPoly key_polynomial(const WeightVector& w) {
  const int d = static_cast<int>(w.size()) - 1;
  std::vector<Rat> c(w.size(), Rat(0));
  for (int k = 0; k <= d; ++k) c[k] = Rat(binom(d, k)) * w[k];
  return RationalPoly(std::move(c));
}

namespace {

// Running product of per-vertex factors with explicit zero bookkeeping, so a
// factor passing through zero never divides.
struct FactorProduct {
  Rat prod{1};
  int zeros = 0;

  void swap_factor(const Rat& out, const Rat& in) {
    if (out != 0)
      prod /= out;
    else
      --zeros;
    if (in != 0)
      prod *= in;
    else
      ++zeros;
  }

  bool nonzero() const { return zeros == 0; }
};

void check_weights(const Graph& g, const std::vector<WeightVector>& weights) {
  if (static_cast<int>(weights.size()) != g.vertex_count())
    fail(Errc::shape, "need one weight vector per vertex");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (static_cast<int>(weights[v].size()) != g.degree(v) + 1)
      fail(Errc::shape, "weight vector at vertex " + std::to_string(v) +
                            " must have length degree+1");
}

}  // namespace

Rat eval_F(const Graph& g, const std::vector<WeightVector>& weights, int cap) {
  check_weights(g, weights);
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > cap)
    fail(Errc::cap_exceeded,
         "eval_F: " + std::to_string(m) + " edges exceed cap " + std::to_string(cap));

  std::vector<int> deg(n, 0);
  FactorProduct fp;
  for (int v = 0; v < n; ++v) fp.swap_factor(Rat(1), weights[v][0]);
  Rat acc = fp.nonzero() ? fp.prod : Rat(0);

  std::vector<char> in_a(m, 0);
  // Gray walk: one edge toggles per subset step.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int e = std::countr_zero(i);
    const int delta = in_a[e] ? -1 : 1;
    in_a[e] ^= 1;
    for (int w : {g.edge(e).lo, g.edge(e).hi}) {
      const Rat& out = weights[w][deg[w]];
      deg[w] += delta;
      fp.swap_factor(out, weights[w][deg[w]]);
    }
    if (fp.nonzero()) acc += fp.prod;
  }
  return acc;
}

RationalPoly poly_P(const Graph& g, int dim_cap) {
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "poly_P needs all degrees even");
  const int m = g.edge_count();
  const int n = g.vertex_count();
  auto basis = g.cycle_space_basis();
  const int dim = static_cast<int>(basis.size());
  if (dim > dim_cap)
    fail(Errc::cap_exceeded, "poly_P: cycle space dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(dim_cap));

  std::vector<WeightVector> s(n);
  for (int v = 0; v < n; ++v) s[v] = s_vector(g.degree(v));

  std::vector<Rat> coeff(2 * m + 1, Rat(0));
  std::vector<int> deg(n, 0);
  std::vector<char> in_a(m, 0);
  FactorProduct fp;
  for (int v = 0; v < n; ++v) fp.swap_factor(Rat(1), s[v][0]);
  int size = 0;
  coeff[0] += fp.prod;  // empty subset

  // Gray walk over the XOR-span of the basis; degrees stay even at step ends.
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
    const int b = std::countr_zero(i);
    basis[b].for_each([&](std::size_t e) {
      const int delta = in_a[e] ? -1 : 1;
      in_a[e] ^= 1;
      size += delta;
      for (int w : {g.edge(static_cast<int>(e)).lo, g.edge(static_cast<int>(e)).hi}) {
        const Rat& out = s[w][deg[w]];
        deg[w] += delta;
        fp.swap_factor(out, s[w][deg[w]]);
      }
    });
    if (fp.nonzero()) coeff[2 * size] += fp.prod;
  }
  RationalPoly p;
  p.coeff = std::move(coeff);  // keep the fixed 2m degree; a_{2m} > 0
  return p;
}

Rat eval_P(const Graph& g, const Rat& u, int dim_cap) { return poly_P(g, dim_cap).eval(u); }

Int count_eulerian_cycle_space(const Graph& g, int dim_cap) {
  Rat v = eval_P(g, Rat(1), dim_cap);
  if (v.get_den() != 1 || v < 0)
    fail(Errc::domain, "P_G(1) must be a non-negative integer, got " + rat_str(v));
  return v.get_num();
}

PmIdentity pm_identity_check(const Graph& g, int cap) {
  if (!g.is_regular(4)) fail(Errc::regularity, "pm identity needs a 4-regular graph");
  const int n = g.vertex_count();
  std::vector<WeightVector> matching(n, WeightVector{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
  std::vector<WeightVector> rotated(
      n, WeightVector{Rat(1), make_rat(-1, 2), Rat(0), make_rat(1, 2), Rat(-1)});
  PmIdentity out;
  out.f_matching = eval_F(g, matching, cap);
  out.f_rotated = eval_F(g, rotated, cap);
  out.pm = count_pm_brute(g, cap).value;
  return out;
}

}  // namespace eo
