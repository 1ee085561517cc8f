// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are frozen from independent oracles
// (direct enumeration, hand derivations) or verified constants.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "eo/entropy.hpp"
#include "eo/generators.hpp"
#include "eo/local_stats.hpp"
#include "eo/nfg.hpp"
#include "eo/orient.hpp"
#include "eo/poly.hpp"
#include "eo/rng.hpp"
#include "eo/spectral.hpp"
#include "helpers.hpp"
#include "nfg_helpers.hpp"

using namespace eo;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              seconds);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("        exception: %s\n", e.what());
    ok = false;
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(id, name, ok, secs);
}

bool check(bool cond, const char* what) {
  if (!cond) std::printf("        failed: %s\n", what);
  return cond;
}

RationalPoly golden_k5() {
  std::vector<Rat> c(21, Rat(0));
  c[0] = make_rat(243, 32);
  c[6] = make_rat(45, 16);
  c[8] = make_rat(45, 32);
  c[10] = make_rat(3, 8);
  c[12] = make_rat(45, 32);
  c[14] = make_rat(45, 16);
  c[20] = make_rat(243, 32);
  RationalPoly p;
  p.coeff = std::move(c);
  return p;
}

RootedBall relabel(const RootedBall& b, std::uint64_t seed) {
  const int n = b.graph.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& e : b.graph.edges()) edges.emplace_back(perm[e.lo], perm[e.hi]);
  return {Graph(n, edges), perm[b.root], b.radius};
}

}  // namespace

int main() {
  auto corpus = test::corpus();
  std::printf("corpus: %zu Eulerian graphs\n", corpus.size());

  criterion(1, "golden polynomial P_K5", [&] {
    auto t0 = Clock::now();
    RationalPoly p = poly_P(test::k5());
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = check(p.coeff == golden_k5().coeff, "exact coefficient equality");
    ok &= check(secs < 1.0, "runtime < 1 s");
    return ok;
  });

  criterion(2, "counting identity brute = dp = P(1) on the corpus", [&] {
    auto t0 = Clock::now();
    bool ok = check(corpus.size() >= 12, "corpus has >= 12 graphs");
    for (auto& entry : corpus) {
      Int dp = count_eulerian_frontier_dp(entry.graph).value;
      Int cyc = count_eulerian_cycle_space(entry.graph);
      Int brute = count_eulerian_brute(entry.graph, 40).value;
      bool agree = dp == cyc && cyc == brute;
      if (!agree)
        std::printf("        %s: brute=%s dp=%s P(1)=%s\n", entry.name, brute.get_str().c_str(),
                    dp.get_str().c_str(), cyc.get_str().c_str());
      ok &= agree;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("        corpus agreement took %.1fs\n", secs);
    ok &= check(secs < 120.0, "total runtime < 2 min");
    return ok;
  });

  criterion(3, "eps(K5) = 24 three ways", [&] {
    Graph k5 = test::k5();
    bool ok = check(count_eulerian_brute(k5).value == 24, "brute");
    ok &= check(count_eulerian_cycle_space(k5) == 24, "cycle space");
    ExactScalar z = partition_function(eulerian_nfg(k5));
    ok &= check(z == ExactScalar(Rat(24)), "NFG partition function");
    return ok;
  });

  criterion(4, "unit circle zeros on the corpus", [&] {
    bool ok = true;
    for (auto& entry : corpus) {
      auto roots = find_roots(poly_P(entry.graph));
      double res = circle_residual(roots);
      if (static_cast<int>(roots.size()) != 2 * entry.graph.edge_count() || res > 1e-9) {
        std::printf("        %s: %zu roots, residual %.3e\n", entry.name, roots.size(), res);
        ok = false;
      }
    }
    return ok;
  });

  criterion(5, "Newton-Waring consistency", [&] {
    bool ok = true;
    for (auto& entry : corpus) {
      RationalPoly p = poly_P(entry.graph);
      auto exact = power_sums(p, 20);
      auto roots = find_roots(p);
      const double tolerance = 1e-6 * static_cast<double>(roots.size());
      for (int k = 1; k <= 20; ++k) {
        std::complex<double> acc(0, 0);
        for (auto& z : roots) acc += std::pow(z, k);
        if (std::abs(to_double(exact[k - 1]) - acc.real()) > tolerance ||
            std::abs(acc.imag()) > tolerance) {
          std::printf("        %s: power sum %d mismatch\n", entry.name, k);
          ok = false;
        }
        if (k % 2 == 1 && exact[k - 1] != 0) {
          std::printf("        %s: odd power sum %d nonzero\n", entry.name, k);
          ok = false;
        }
      }
      if (auto g = entry.graph.girth()) {
        auto ps = power_sums(p, 2 * *g - 1);
        for (int k = 1; k <= 2 * *g - 1; ++k)
          if (ps[k - 1] != 0) {
            std::printf("        %s: p_%d should vanish below girth\n", entry.name, k);
            ok = false;
          }
      }
    }
    auto k5 = power_sums(poly_P(test::k5()), 6);
    ok &= check(k5[5] == make_rat(-20, 9), "p_6(K5) = -20/9 exactly");
    return ok;
  });

  criterion(6, "coefficient structure on the corpus", [&] {
    bool ok = true;
    for (auto& entry : corpus) {
      const Graph& g = entry.graph;
      RationalPoly p = poly_P(g);
      const int two_m = 2 * g.edge_count();
      Rat a0(1);
      for (int v = 0; v < g.vertex_count(); ++v) a0 *= Rat(binom(g.degree(v), g.degree(v) / 2));
      a0 /= Rat(Int(1) << g.edge_count());
      bool good = p.coeff[0] == a0 && p.coeff[static_cast<std::size_t>(two_m)] == a0;
      auto girth = g.girth();
      for (int j = 0; j <= two_m && good; ++j) {
        if (p.coeff[j] != p.coeff[two_m - j]) good = false;
        if (p.coeff[j] < 0) good = false;
        if (girth && j > 0 && j < 2 * *girth && p.coeff[j] != 0) good = false;
      }
      if (girth && p.coeff[static_cast<std::size_t>(2 * *girth)] <= 0) good = false;
      if (!good) {
        std::printf("        %s: structure violated\n", entry.name);
        ok = false;
      }
    }
    return ok;
  });

  criterion(7, "monotone sandwich on the corpus", [&] {
    std::vector<Rat> us{make_rat(1, 2), make_rat(3, 4), Rat(1), make_rat(4, 3), Rat(2)};
    bool ok = true;
    for (auto& entry : corpus) {
      RationalPoly p = poly_P(entry.graph);
      const int two_m = 2 * entry.graph.edge_count();
      std::vector<Rat> vals;
      for (auto& u : us) vals.push_back(p.eval(u));
      for (std::size_t i = 0; i < us.size() && ok; ++i)
        for (std::size_t j = i + 1; j < us.size() && ok; ++j) {
          if (vals[i] > vals[j]) ok = false;
          Rat pow(1);
          Rat ratio = us[j] / us[i];
          for (int t = 0; t < two_m; ++t) pow *= ratio;
          if (vals[j] > pow * vals[i]) ok = false;
        }
      if (!ok) std::printf("        %s: sandwich violated\n", entry.name);
    }
    return ok;
  });

  criterion(8, "Schrijver bound on the corpus", [&] {
    bool ok = true;
    for (auto& entry : corpus) {
      double h = entropy(entry.graph);
      double s = schrijver_bound(entry.graph);
      if (h < s - 1e-12) {
        std::printf("        %s: entropy %.6f below bound %.6f\n", entry.name, h, s);
        ok = false;
      }
    }
    double bound_k5 = schrijver_bound(test::k5());
    double ent_k5 = entropy(test::k5());
    ok &= check(std::abs(bound_k5 - std::log(1.5)) < 1e-12, "K5 bound = ln(3/2) ~ 0.405465");
    ok &= check(std::abs(ent_k5 - std::log(24.0) / 5) < 1e-12, "K5 entropy = ln(24)/5 ~ 0.635611");
    return ok;
  });

  criterion(9, "limit constants", [&] {
    auto c = reference_constants();
    bool ok = check(std::abs(c.at("lieb") - 0.431523108678) < 1e-12, "lieb to 12 digits");
    ok &= check(std::abs(c.at("baxter") - 0.954771252442) < 1e-12, "baxter to 12 digits");
    ok &= check(large_girth_limit({{2, Rat(1)}}) == 0.0, "large_girth_limit({2:1}) = 0");
    ok &= check(std::abs(large_girth_limit({{4, Rat(1)}}) - std::log(1.5)) < 1e-15,
                "large_girth_limit({4:1}) = ln(3/2)");
    return ok;
  });

  criterion(10, "sequence behaviour at desk scale", [&] {
    bool ok = true;
    for (long n : {4L, 8L, 16L, 32L}) {
      double h = entropy(test::cycle(n));
      double want = std::log(2.0) / static_cast<double>(n);
      if (h != want) {
        std::printf("        entropy(C_%ld) = %.17g, want %.17g\n", n, h, want);
        ok = false;
      }
    }
    // torus regression constants from exact counts
    const std::pair<std::pair<long, long>, long> torus_counts[] = {
        {{3, 3}, 148}, {{3, 4}, 548}, {{4, 4}, 2970}};
    for (auto& [dims, eps] : torus_counts) {
      Graph t = test::torus(dims.first, dims.second);
      Int count = count_eulerian_frontier_dp(t).value;
      double h = entropy(t);
      if (count != eps) {
        std::printf("        torus %ldx%ld count %s != %ld\n", dims.first, dims.second,
                    count.get_str().c_str(), eps);
        ok = false;
      }
      if (h < 0.40 || h > 0.60) {
        std::printf("        torus %ldx%ld entropy %.4f outside [0.40, 0.60]\n", dims.first,
                    dims.second, h);
        ok = false;
      }
    }
    // aztec-vs-torus r=1 distance is the boundary fraction, strictly decreasing
    LocalProfile torus_ref = profile(test::torus(6, 6), 1);
    const Rat want_tv[] = {make_rat(2, 3), make_rat(1, 2), make_rat(2, 5)};
    Rat prev(1);
    for (int k = 2; k <= 4; ++k) {
      Rat d = tv_distance(profile(test::aztec(k), 1), torus_ref);
      if (d != want_tv[k - 2] || d >= prev) {
        std::printf("        aztec %d tv %s\n", k, rat_str(d).c_str());
        ok = false;
      }
      prev = d;
    }
    return ok;
  });

  criterion(11, "gauge invariance", [&] {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      NormalFactorGraph h = test::random_nfg(seed);
      GaugeSet s = test::random_gauge_set(h, seed * 1001 + 13);
      if (!(partition_function(h) == partition_function(gauge_transform(h, s)))) {
        std::printf("        random gauge seed %llu broke Z\n",
                    static_cast<unsigned long long>(seed));
        ok = false;
      }
    }
    for (auto* entry : {&corpus[0], &corpus[3]}) {  // K5 and torus 3x3
      NormalFactorGraph h = eulerian_nfg(entry->graph);
      ExactScalar z1 = partition_function(h);
      ExactScalar z2 = partition_function(gauge_transform(h, eulerian_gauges(entry->graph)));
      Int eps = count_eulerian_frontier_dp(entry->graph).value;
      if (!(z1 == z2) || !z1.is_rational() || z1.ar != Rat(eps)) {
        std::printf("        eulerian gauges on Sub(%s) failed\n", entry->name);
        ok = false;
      }
    }
    for (int d : {2, 4, 6, 8}) ok &= check(verify_s_derivation(d), "s-vector derivation");
    return ok;
  });

  criterion(12, "perfect matching identity and key polynomial", [&] {
    bool ok = true;
    PmIdentity k5 = pm_identity_check(test::k5());
    ok &= check(k5.f_matching == 0 && k5.f_rotated == 0 && k5.pm == 0, "K5 identity = 0");
    PmIdentity k44 = pm_identity_check(test::k44());
    ok &= check(k44.f_matching == 24 && k44.f_rotated == 24 && k44.pm == 24,
                "K44 identity = 24");
    PmIdentity t34 = pm_identity_check(test::torus(3, 4));
    ok &= check(t34.f_matching == t34.f_rotated && t34.f_matching == Rat(t34.pm),
                "torus 3x4 identity");

    WeightVector rot{Rat(1), make_rat(-1, 2), Rat(0), make_rat(1, 2), Rat(-1)};
    RationalPoly key = key_polynomial(rot);
    RationalPoly one_minus({Rat(1), Rat(-1)});
    RationalPoly want = poly_mul(poly_mul(one_minus, one_minus),
                                 poly_mul(one_minus, RationalPoly({Rat(1), Rat(1)})));
    ok &= check(key == want, "key polynomial = (1-z)^3 (1+z) exactly");
    auto roots = find_roots(key);
    ok &= check(roots.size() == 4, "four roots with multiplicity");
    ok &= check(circle_residual(roots) <= 1e-12, "key roots on the unit circle");
    return ok;
  });

  criterion(13, "profile sanity", [&] {
    bool ok = true;
    for (auto dims : {std::pair{3L, 3L}, {3L, 4L}, {4L, 4L}}) {
      for (int r = 1; r <= 2; ++r) {
        LocalProfile p = profile(test::torus(dims.first, dims.second), r);
        if (p.probs.size() != 1 || p.probs.begin()->second != 1) {
          std::printf("        torus %ldx%ld r=%d not a point mass\n", dims.first, dims.second,
                      r);
          ok = false;
        }
      }
    }
    for (auto& entry : corpus) {
      Rat sum(0);
      for (auto& [k, p] : profile(entry.graph, 1).probs) sum += p;
      if (sum != 1) {
        std::printf("        %s: probabilities sum to %s\n", entry.name, rat_str(sum).c_str());
        ok = false;
      }
    }
    std::vector<RootedBall> balls;
    balls.push_back(ball(test::torus(4, 4), 5, 2));
    balls.push_back(ball(test::aztec(2), 0, 2));
    balls.push_back(ball(test::k5(), 1, 1));
    balls.push_back(ball(test::cycle(9), 4, 3));
    int checked = 0;
    for (auto& b : balls) {
      std::string key = canonical_key(b);
      for (std::uint64_t seed = 0; seed < 250; ++seed, ++checked)
        if (canonical_key(relabel(b, seed)) != key) {
          std::printf("        relabeling changed a canonical key (seed %llu)\n",
                      static_cast<unsigned long long>(seed));
          ok = false;
        }
    }
    ok &= check(checked == 1000, "1000 relabelings exercised");
    return ok;
  });

  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 13 criteria passed\n");
  return 0;
}
