#include "eo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eo/errors.hpp"

namespace eo {

std::vector<Rat> power_sums(const RationalPoly& p, int k_max) {
  RationalPoly q = p;
  q.trim();
  const int n = q.degree();
  if (n < 0) fail(Errc::domain, "power sums of the zero polynomial");
  // e_j of the monic normalization; e_j = 0 beyond the degree.
  std::vector<Rat> e(static_cast<std::size_t>(std::min(n, k_max)) + 1, Rat(0));
  for (int j = 1; j <= std::min(n, k_max); ++j) {
    e[j] = q.coeff[n - j] / q.coeff[n];
    if (j % 2 == 1) e[j] = -e[j];
  }
  std::vector<Rat> ps(static_cast<std::size_t>(k_max) + 1, Rat(0));  // ps[0] unused
  for (int k = 1; k <= k_max; ++k) {
    Rat acc(0);
    for (int i = 1; i <= std::min(k - 1, n); ++i) {
      if (i % 2 == 1)
        acc += e[i] * ps[k - i];
      else
        acc -= e[i] * ps[k - i];
    }
    if (k <= n) {
      Rat term = Rat(k) * e[k];
      acc += (k % 2 == 1) ? term : -term;
    }
    ps[k] = acc;
  }
  return {ps.begin() + 1, ps.end()};
}

std::vector<Rat> moments(const Graph& g, int k_max, int dim_cap) {
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "moments need an Eulerian graph");
  const long two_m = 2L * g.edge_count();
  if (two_m == 0) return std::vector<Rat>(static_cast<std::size_t>(k_max), Rat(0));
  auto ps = power_sums(poly_P(g, dim_cap), k_max);
  for (auto& p : ps) p /= two_m;
  return ps;
}

namespace {

RationalPoly monic(const RationalPoly& p) {
  RationalPoly q = p;
  q.trim();
  const int n = q.degree();
  if (n < 0) return q;
  Rat lead = q.coeff[n];
  for (auto& c : q.coeff) c /= lead;
  return q;
}

// Remainder of a by b (b monic-izable, deg b >= 0).
RationalPoly poly_rem(RationalPoly a, const RationalPoly& b) {
  a.trim();
  const int db = b.degree();
  while (a.degree() >= db && db >= 0 && !a.is_zero()) {
    const int da = a.degree();
    Rat f = a.coeff[da] / b.coeff[db];
    for (int j = 0; j <= db; ++j) a.coeff[da - db + j] -= f * b.coeff[j];
    a.coeff[da] = 0;  // cancel exactly
    a.trim();
  }
  return a;
}

// Exact quotient; remainder must vanish.
RationalPoly poly_div_exact(RationalPoly a, const RationalPoly& b) {
  a.trim();
  const int db = b.degree();
  if (db < 0) fail(Errc::domain, "division by zero polynomial");
  std::vector<Rat> q(a.degree() >= db ? a.degree() - db + 1 : 0, Rat(0));
  while (a.degree() >= db) {
    const int da = a.degree();
    Rat f = a.coeff[da] / b.coeff[db];
    q[da - db] = f;
    for (int j = 0; j <= db; ++j) a.coeff[da - db + j] -= f * b.coeff[j];
    a.coeff[da] = 0;
    a.trim();
  }
  if (!a.is_zero()) fail(Errc::domain, "inexact polynomial division");
  return RationalPoly(std::move(q));
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    RationalPoly r = poly_rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return a;  // monic or zero
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> c(std::max(a.coeff.size(), b.coeff.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) c[i] += a.coeff[i];
  for (std::size_t i = 0; i < b.coeff.size(); ++i) c[i] -= b.coeff[i];
  return RationalPoly(std::move(c));
}

// gcd(p, p') degree over a word-size prime; 0 certifies square-freeness.
// Returns -1 when the screen is inconclusive (denominator or leading
// coefficient vanishes mod p).
int squarefree_screen(const RationalPoly& p) {
  static constexpr std::uint64_t P = 2305843009213693951ULL;  // 2^61 - 1
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % P);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  const int n = p.degree();
  std::vector<std::uint64_t> f(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::uint64_t num = mpz_fdiv_ui(p.coeff[i].get_num().get_mpz_t(), P);
    std::uint64_t den = mpz_fdiv_ui(p.coeff[i].get_den().get_mpz_t(), P);
    if (den == 0) return -1;
    f[i] = mulmod(num, powmod(den, P - 2));
  }
  if (f[n] == 0) return -1;
  std::vector<std::uint64_t> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = mulmod(f[i], static_cast<std::uint64_t>(i) % P);
  auto deg = [](const std::vector<std::uint64_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i]) return i;
    return -1;
  };
  std::vector<std::uint64_t> a = f, b = d;
  while (deg(b) >= 0) {
    int da = deg(a), db = deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    std::uint64_t inv = powmod(b[db], P - 2);
    std::uint64_t scale = mulmod(a[da], inv);
    for (int j = 0; j <= db; ++j) {
      std::uint64_t t = mulmod(scale, b[j]);
      a[da - db + j] = (a[da - db + j] + P - t) % P;
    }
    a.resize(da);  // leading term cancelled
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return deg(a);
}

}  // namespace

std::vector<std::pair<RationalPoly, int>> square_free_decomposition(const RationalPoly& p) {
  RationalPoly f = monic(p);
  std::vector<std::pair<RationalPoly, int>> parts;
  if (f.degree() <= 0) return parts;
  if (squarefree_screen(f) == 0) {
    parts.emplace_back(f, 1);
    return parts;
  }
  // Yun's algorithm.
  RationalPoly fp = f.derivative();
  RationalPoly g = poly_gcd(f, fp);
  if (g.degree() <= 0) {
    parts.emplace_back(f, 1);
    return parts;
  }
  RationalPoly c = poly_div_exact(f, g);
  RationalPoly d = poly_sub(poly_div_exact(fp, g), c.derivative());
  for (int i = 1; c.degree() > 0; ++i) {
    RationalPoly a = poly_gcd(c, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    c = poly_div_exact(c, a);
    d = poly_sub(poly_div_exact(d, a), c.derivative());
  }
  return parts;
}

namespace {

using Cplx = std::complex<double>;

Cplx horner(const std::vector<Cplx>& c, Cplx z) {
  Cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double eval_scale(const std::vector<Cplx>& c, double az) {
  double s = 0, pw = 1;
  for (auto& ck : c) {
    s += std::abs(ck) * pw;
    pw *= az;
  }
  return s > 0 ? s : 1.0;
}

// Simultaneous iteration with synchronous sweeps; residual-based stop.
std::vector<Cplx> aberth(const std::vector<Cplx>& c, double tol) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Cplx> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = c[i] * static_cast<double>(i);

  double r = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
  if (!(r > 0) || !std::isfinite(r)) r = 1.0;
  std::vector<Cplx> z(n);
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * M_PI * (k + 0.25) / n + 0.42;
    z[k] = r * Cplx(std::cos(th), std::sin(th));
  }

  std::vector<Cplx> nz(n), pv(n);
  for (int iter = 0; iter <= 500; ++iter) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      pv[k] = horner(c, z[k]);
      worst = std::max(worst, std::abs(pv[k]) / eval_scale(c, std::abs(z[k])));
    }
    if (worst < tol) return z;
    if (iter == 500)
      fail(Errc::convergence, "root iteration did not reach tolerance in 500 sweeps");
    for (int k = 0; k < n; ++k) {
      Cplx dv = horner(d, z[k]);
      Cplx newton = (dv == Cplx(0)) ? Cplx(0) : pv[k] / dv;
      Cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) {
          Cplx diff = z[k] - z[j];
          if (std::abs(diff) < 1e-300) diff = Cplx(1e-300, 1e-300);
          sum += 1.0 / diff;
        }
      Cplx denom = 1.0 - newton * sum;
      Cplx step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      nz[k] = z[k] - step;
    }
    z.swap(nz);
  }
  fail(Errc::convergence, "unreachable");
}

void polish(const std::vector<Cplx>& c, const std::vector<Cplx>& d, Cplx& z) {
  for (int it = 0; it < 32; ++it) {
    Cplx pv = horner(c, z);
    Cplx dv = horner(d, z);
    if (std::abs(dv) < 1e-300) return;
    Cplx step = pv / dv;
    z -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) return;
  }
}

std::vector<Cplx> to_cplx(const RationalPoly& p) {
  std::vector<Cplx> c(p.coeff.size());
  double scale = 0;
  for (auto& q : p.coeff) scale = std::max(scale, std::abs(to_double(q)));
  if (scale == 0) scale = 1;
  for (std::size_t i = 0; i < p.coeff.size(); ++i) c[i] = Cplx(to_double(p.coeff[i]) / scale, 0);
  return c;
}

// Roots of one square-free factor; even factors are solved in w = z^2.
std::vector<Cplx> part_roots(const RationalPoly& s, double tol) {
  const int n = s.degree();
  std::vector<Cplx> c = to_cplx(s);
  c.resize(n + 1);
  std::vector<Cplx> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = c[i] * static_cast<double>(i);

  std::vector<Cplx> roots;
  if (s.is_even() && n >= 2) {
    std::vector<Cplx> q(n / 2 + 1);
    for (int i = 0; i <= n / 2; ++i) q[i] = c[2 * i];
    for (Cplx w : aberth(q, tol)) {
      Cplx z = std::sqrt(w);
      roots.push_back(z);
      roots.push_back(-z);
    }
  } else {
    roots = aberth(c, tol);
  }
  for (auto& z : roots) polish(c, d, z);
  return roots;
}

}  // namespace

std::vector<std::complex<double>> find_roots(const RationalPoly& p, double tol) {
  RationalPoly q = p;
  q.trim();
  if (q.is_zero()) fail(Errc::domain, "find_roots of the zero polynomial");
  std::vector<Cplx> roots;
  // factor out z^k
  std::size_t k0 = 0;
  while (k0 < q.coeff.size() && q.coeff[k0] == 0) ++k0;
  for (std::size_t i = 0; i < k0; ++i) roots.emplace_back(0.0, 0.0);
  if (k0 > 0) q.coeff.erase(q.coeff.begin(), q.coeff.begin() + static_cast<std::ptrdiff_t>(k0));

  for (auto& [part, mult] : square_free_decomposition(q)) {
    auto rs = part_roots(part, tol);
    for (int t = 0; t < mult; ++t) roots.insert(roots.end(), rs.begin(), rs.end());
  }
  std::sort(roots.begin(), roots.end(), [](Cplx a, Cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

double circle_residual(const std::vector<std::complex<double>>& roots) {
  double worst = 0;
  for (auto& z : roots) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  return worst;
}

double log_potential(const Graph& g, const Rat& u, int dim_cap) {
  if (u <= 0 || u == 1) fail(Errc::domain, "log potential needs u > 0, u != 1");
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "log potential needs an Eulerian graph");
  const long two_m = 2L * g.edge_count();
  if (two_m == 0) return 0.0;
  RationalPoly p = poly_P(g, dim_cap);
  return (ln_rat(p.eval(u)) - ln_rat(p.coeff[static_cast<std::size_t>(two_m)])) /
         static_cast<double>(two_m);
}

double log_potential_from_roots(const std::vector<std::complex<double>>& roots, double u) {
  if (roots.empty()) return 0.0;
  double acc = 0;
  for (auto& z : roots) acc += std::log(std::abs(Cplx(u, 0) - z));
  return acc / static_cast<double>(roots.size());
}

RootMeasureSummary root_measure(const Graph& g, int k_max, double tol, int dim_cap) {
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "root measure needs an Eulerian graph");
  RootMeasureSummary out;
  out.degree = 2 * g.edge_count();
  if (out.degree == 0) return out;
  RationalPoly p = poly_P(g, dim_cap);
  out.power_sums = power_sums(p, k_max);
  out.roots = find_roots(p, tol);
  out.circle_residual = circle_residual(out.roots);
  return out;
}

}  // namespace eo
