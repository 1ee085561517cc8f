#include <doctest.h>

#include <bit>

#include "eo/errors.hpp"
#include "eo/nfg.hpp"
#include "eo/orient.hpp"
#include "eo/poly.hpp"
#include "helpers.hpp"
#include "nfg_helpers.hpp"

using namespace eo;

TEST_SUITE_BEGIN("nfg");

namespace {

NormalFactorGraph matching_nfg(const Graph& g) {
  NormalFactorGraph h;
  h.graph = g;
  h.alphabet = 2;
  h.tables.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    h.tables[v].resize(std::size_t{1} << g.degree(v));
    for (std::size_t sig = 0; sig < h.tables[v].size(); ++sig)
      if (std::popcount(sig) == 1) h.tables[v][sig] = ExactScalar::one();
  }
  return h;
}

NormalFactorGraph ones_nfg(const Graph& g) {
  NormalFactorGraph h;
  h.graph = g;
  h.alphabet = 2;
  h.tables.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    h.tables[v].assign(std::size_t{1} << g.degree(v), ExactScalar::one());
  return h;
}

}  // namespace

TEST_CASE("exact scalar algebra") {
  ExactScalar s2 = ExactScalar(Rat(0), Rat(0), Rat(1), Rat(0));  // sqrt 2
  CHECK(s2 * s2 == ExactScalar(Rat(2)));
  ExactScalar i = ExactScalar::i();
  CHECK(i * i == ExactScalar(Rat(-1)));
  ExactScalar is2 = ExactScalar::inv_sqrt2();
  CHECK(is2 * is2 == ExactScalar(make_rat(1, 2)));
  CHECK(is2 * s2 == ExactScalar::one());

  ExactScalar x(make_rat(1, 3), Rat(2), make_rat(-1, 2), Rat(1));
  ExactScalar y(Rat(5), make_rat(1, 7), Rat(3), Rat(0));
  ExactScalar z(Rat(-2), Rat(1), Rat(0), make_rat(2, 5));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x * y == y * x);
  // conj is multiplicative and fixes sqrt2
  CHECK((x * y).conj() == x.conj() * y.conj());
  CHECK(s2.conj() == s2);
}

TEST_CASE("gauge pair is exactly dual") {
  GaugeSet s = eulerian_gauges(test::cycle(3));
  const ExactMatrix& g2 = s.per_edge[0].at_lo;
  const ExactMatrix& g1 = s.per_edge[0].at_hi;
  CHECK(g2.transpose() * g1 == ExactMatrix::identity(2));
}

TEST_CASE("partition function basics") {
  CHECK(partition_function(matching_nfg(test::cycle(4))) == ExactScalar(Rat(2)));
  CHECK(partition_function(matching_nfg(test::k44())) == ExactScalar(Rat(24)));
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(partition_function(ones_nfg(g)) == ExactScalar(Rat(8)));  // 2^3
}

TEST_CASE("sweep agrees with brute enumeration") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    NormalFactorGraph h = test::random_nfg(seed, 10);
    CHECK(partition_function(h) == partition_function_brute(h));
  }
  CHECK(partition_function_brute(matching_nfg(test::cycle(4))) == ExactScalar(Rat(2)));
}

TEST_CASE("partition boundary cap") {
  NormalFactorGraph h = ones_nfg(test::k5());
  CHECK_THROWS_AS(partition_function(h, 2), Error);
  CHECK(partition_function(h, 24) == ExactScalar(Rat(1024)));
}

TEST_CASE("eulerian nfg counts orientations") {
  CHECK(partition_function(eulerian_nfg(test::cycle(4))) == ExactScalar(Rat(2)));
  CHECK(partition_function(eulerian_nfg(test::k5())) == ExactScalar(Rat(24)));
  Graph tri2 = disjoint_union(test::cycle(3), test::cycle(3));
  CHECK(partition_function(eulerian_nfg(tri2)) == ExactScalar(Rat(4)));
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(eulerian_nfg(p3), Error);
}

TEST_CASE("identity gauges leave tables alone") {
  NormalFactorGraph h = test::random_nfg(3, 8);
  GaugeSet id;
  id.from_alphabet = 2;
  id.to_alphabet = 2;
  id.per_edge.assign(static_cast<std::size_t>(h.graph.edge_count()),
                     {ExactMatrix::identity(2), ExactMatrix::identity(2)});
  NormalFactorGraph t = gauge_transform(h, id);
  CHECK(t.tables == h.tables);
}

TEST_CASE("random valid gauges preserve Z exactly") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    NormalFactorGraph h = test::random_nfg(seed);
    GaugeSet s = test::random_gauge_set(h, seed * 31 + 7);
    ExactScalar before = partition_function(h);
    ExactScalar after = partition_function(gauge_transform(h, s));
    CHECK(before == after);
  }
}

TEST_CASE("invalid gauges are rejected with the offending edge") {
  NormalFactorGraph h = test::random_nfg(5, 8);
  GaugeSet s = test::random_gauge_set(h, 99);
  s.per_edge[0].at_hi.at(0, 0) += ExactScalar::one();  // break duality
  try {
    gauge_transform(h, s);
    FAIL("expected GaugeInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::gauge_invalid);
    CHECK(std::string(e.what()).find("edge 0") != std::string::npos);
  }
}

TEST_CASE("eulerian gauges rewrite the tables to identity and s-weights") {
  Graph g = test::k5();
  NormalFactorGraph h = eulerian_nfg(g);
  NormalFactorGraph t = gauge_transform(h, eulerian_gauges(g));
  Subdivision sub = subdivide(g);

  WeightVector s4 = s_vector(4);
  for (int v = 0; v < t.graph.vertex_count(); ++v) {
    if (sub.origin[v].kind == VertexOrigin::edge) {
      // edge tables become the 2x2 identity
      REQUIRE(t.tables[v].size() == 4);
      CHECK(t.tables[v][0] == ExactScalar::one());
      CHECK(t.tables[v][1] == ExactScalar::zero());
      CHECK(t.tables[v][2] == ExactScalar::zero());
      CHECK(t.tables[v][3] == ExactScalar::one());
    } else {
      // vertex tables become tau -> s_{|tau|}
      for (std::size_t tau = 0; tau < t.tables[v].size(); ++tau)
        CHECK(t.tables[v][tau] ==
              ExactScalar(s4[static_cast<std::size_t>(std::popcount(tau))]));
    }
  }
  // and Z is still the orientation count, which equals F_G at the s-vectors
  ExactScalar z = partition_function(t);
  CHECK(z == ExactScalar(Rat(24)));
  std::vector<WeightVector> w(5, s4);
  CHECK(z == ExactScalar(eval_F(g, w)));
}

TEST_CASE("verify_s_derivation") {
  CHECK(verify_s_derivation(2));
  CHECK(verify_s_derivation(4));
  CHECK(verify_s_derivation(6));
  CHECK_THROWS_AS(verify_s_derivation(5), Error);
  CHECK_THROWS_AS(verify_s_derivation(14), Error);
}

TEST_CASE("nfg verify certificate") {
  NfgCertificate cert = nfg_verify(test::k5());
  CHECK(cert.pass);
  CHECK(cert.epsilon == 24);
  CHECK(cert.z_original == ExactScalar(Rat(24)));
  CHECK(cert.z_gauged == ExactScalar(Rat(24)));

  NfgCertificate c4 = nfg_verify(test::cycle(4));
  CHECK(c4.pass);
  CHECK(c4.epsilon == 2);
}

TEST_SUITE_END();
