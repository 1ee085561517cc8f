#include <doctest.h>

#include "eo/errors.hpp"
#include "eo/orient.hpp"
#include "eo/poly.hpp"
#include "helpers.hpp"

using namespace eo;

TEST_SUITE_BEGIN("poly");

namespace {

// Golden coefficients of P_{K5}: 243/32 + (45/16)z^6 + (45/32)z^8 + (3/8)z^10
// + (45/32)z^12 + (45/16)z^14 + (243/32)z^20.
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

std::vector<WeightVector> uniform_weights(const Graph& g, const WeightVector& w) {
  return std::vector<WeightVector>(g.vertex_count(), w);
}

std::vector<WeightVector> s_weights(const Graph& g) {
  std::vector<WeightVector> w;
  for (int v = 0; v < g.vertex_count(); ++v) w.push_back(s_vector(g.degree(v)));
  return w;
}

}  // namespace

TEST_CASE("s vectors") {
  CHECK(s_vector(4) ==
        WeightVector{make_rat(3, 2), Rat(0), make_rat(1, 2), Rat(0), make_rat(3, 2)});
  CHECK(s_vector(2) == WeightVector{Rat(1), Rat(0), Rat(1)});
  CHECK(s_vector(0) == WeightVector{Rat(1)});
  CHECK(s_vector(6) == WeightVector{make_rat(5, 2), Rat(0), make_rat(1, 2), Rat(0),
                                    make_rat(1, 2), Rat(0), make_rat(5, 2)});
  CHECK_THROWS_AS(s_vector(3), Error);
}

TEST_CASE("key polynomials") {
  RationalPoly k4 = key_polynomial(s_vector(4));
  CHECK(k4 == RationalPoly({make_rat(3, 2), Rat(0), Rat(3), Rat(0), make_rat(3, 2)}));

  WeightVector rot{Rat(1), make_rat(-1, 2), Rat(0), make_rat(1, 2), Rat(-1)};
  RationalPoly kr = key_polynomial(rot);
  CHECK(kr == RationalPoly({Rat(1), Rat(-2), Rat(0), Rat(2), Rat(-1)}));
  // factors as (1-z)^3 (1+z)
  RationalPoly one_minus({Rat(1), Rat(-1)});
  RationalPoly f = poly_mul(poly_mul(one_minus, one_minus),
                            poly_mul(one_minus, RationalPoly({Rat(1), Rat(1)})));
  CHECK(kr == f);

  CHECK(key_polynomial(WeightVector{Rat(1)}) == RationalPoly({Rat(1)}));
}

TEST_CASE("eval_F basics") {
  Graph k5 = test::k5();
  CHECK(eval_F(k5, uniform_weights(k5, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)})) == 1024);
  CHECK(eval_F(k5, uniform_weights(k5, s_vector(4))) == 24);
  CHECK(eval_F(k5, uniform_weights(k5, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)})) == 0);

  CHECK_THROWS_AS(eval_F(k5, uniform_weights(k5, {Rat(1), Rat(1)})), Error);
  CHECK_THROWS_AS(eval_F(k5, uniform_weights(k5, s_vector(4)), 8), Error);
}

TEST_CASE("poly_P matches the K5 coefficients") {
  RationalPoly p = poly_P(test::k5());
  REQUIRE(p.coeff.size() == 21);
  CHECK(p.coeff == golden_k5().coeff);
}

TEST_CASE("multivariate coefficient of x0^3 x1^2 in F_K5 is 10") {
  // Subsets of K5 edges whose degree profile has three vertices of degree 0
  // and two of degree 1, counted by direct enumeration.
  Graph k5 = test::k5();
  int hits = 0;
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    std::vector<int> deg(5, 0);
    for (int e = 0; e < 10; ++e)
      if ((mask >> e) & 1) {
        ++deg[k5.edge(e).lo];
        ++deg[k5.edge(e).hi];
      }
    int zeros = 0, ones = 0, other = 0;
    for (int v = 0; v < 5; ++v) {
      if (deg[v] == 0)
        ++zeros;
      else if (deg[v] == 1)
        ++ones;
      else
        ++other;
    }
    if (zeros == 3 && ones == 2 && other == 0) ++hits;
  }
  CHECK(hits == 10);
}

TEST_CASE("cycles have P = 1 + z^2n") {
  for (long n : {2L, 3L, 4L, 5L, 6L}) {
    RationalPoly p = poly_P(test::cycle(n));
    std::vector<Rat> want(static_cast<std::size_t>(2 * n + 1), Rat(0));
    want.front() = 1;
    want.back() = 1;
    CHECK(p.coeff == want);
  }
}

TEST_CASE("eval_P") {
  CHECK(eval_P(test::k5(), Rat(1)) == 24);
  CHECK(eval_P(test::cycle(4), Rat(1)) == 2);
  CHECK(eval_P(test::k5(), Rat(0)) == make_rat(243, 32));
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(poly_P(p3), Error);
  CHECK_THROWS_AS(poly_P(test::torus(3, 3), 5), Error);  // dimension cap
}

TEST_CASE("coefficient structure on small corpus graphs") {
  for (auto& entry : test::corpus()) {
    if (entry.graph.edge_count() > 24) continue;
    CAPTURE(entry.name);
    const Graph& g = entry.graph;
    RationalPoly p = poly_P(g);
    const int two_m = 2 * g.edge_count();
    REQUIRE(static_cast<int>(p.coeff.size()) == two_m + 1);

    // a_0 = 2^{-m} prod_v C(d_v, d_v/2)
    Rat a0(1);
    for (int v = 0; v < g.vertex_count(); ++v) a0 *= Rat(binom(g.degree(v), g.degree(v) / 2));
    a0 /= Rat(Int(1) << g.edge_count());
    CHECK(p.coeff[0] == a0);
    CHECK(p.coeff[static_cast<std::size_t>(two_m)] == a0);

    auto girth = g.girth();
    for (int j = 0; j <= two_m; ++j) {
      CHECK(p.coeff[j] == p.coeff[two_m - j]);  // palindromy
      CHECK(p.coeff[j] >= 0);
      if (j % 2 == 1) CHECK(p.coeff[j] == 0);
      if (girth && j > 0 && j < 2 * *girth) CHECK(p.coeff[j] == 0);
    }
    if (girth) CHECK(p.coeff[static_cast<std::size_t>(2 * *girth)] > 0);
  }
}

TEST_CASE("P(1) equals the orientation count") {
  for (auto& entry : test::corpus()) {
    if (entry.graph.edge_count() > 20) continue;
    CAPTURE(entry.name);
    Int brute = count_eulerian_brute(entry.graph).value;
    CHECK(count_eulerian_cycle_space(entry.graph) == brute);
    CHECK(eval_F(entry.graph, s_weights(entry.graph)) == Rat(brute));
  }
}

TEST_CASE("monotone sandwich") {
  Graph g = test::torus(3, 3);
  RationalPoly p = poly_P(g);
  const int two_m = 2 * g.edge_count();
  std::vector<Rat> us{make_rat(1, 2), make_rat(3, 4), Rat(1), make_rat(4, 3), Rat(2)};
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      Rat p1 = p.eval(us[i]), p2 = p.eval(us[j]);
      CHECK(p1 <= p2);
      Rat ratio = us[j] / us[i];
      Rat pow(1);
      for (int t = 0; t < two_m; ++t) pow *= ratio;
      CHECK(p2 <= pow * p1);
    }
}

TEST_CASE("pm identity") {
  PmIdentity k5 = pm_identity_check(test::k5());
  CHECK(k5.f_matching == 0);
  CHECK(k5.f_rotated == 0);
  CHECK(k5.pm == 0);

  PmIdentity k44 = pm_identity_check(test::k44());
  CHECK(k44.f_matching == 24);
  CHECK(k44.f_rotated == 24);
  CHECK(k44.pm == 24);

  CHECK_THROWS_AS(pm_identity_check(test::cycle(6)), Error);
}

TEST_SUITE_END();
