#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "eo/graph.hpp"
#include "eo/rational.hpp"

namespace eo {

// Element of Q(i, sqrt(2)): (ar + ai*i) + (br + bi*i)*sqrt(2). Closed under
// +, -, *, conjugation; equality is exact. 1/sqrt(2) is (0 + (1/2) sqrt(2)).
struct ExactScalar {
  Rat ar, ai, br, bi;

  ExactScalar() = default;
  explicit ExactScalar(const Rat& real) : ar(real) {}
  ExactScalar(Rat re, Rat im, Rat s2re, Rat s2im)
      : ar(std::move(re)), ai(std::move(im)), br(std::move(s2re)), bi(std::move(s2im)) {}

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(Rat(1)); }
  static ExactScalar i() { return ExactScalar(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static ExactScalar inv_sqrt2() { return ExactScalar(Rat(0), Rat(0), make_rat(1, 2), Rat(0)); }

  bool is_zero() const { return ar == 0 && ai == 0 && br == 0 && bi == 0; }
  // True when the value lives in Q (no i, no sqrt(2) component).
  bool is_rational() const { return ai == 0 && br == 0 && bi == 0; }

  ExactScalar conj() const;
  std::complex<double> to_complex() const;
  std::string str() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  bool operator==(const ExactScalar& o) const = default;
};

struct ExactMatrix {
  int rows = 0, cols = 0;
  std::vector<ExactScalar> a;  // row-major

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  ExactScalar& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const ExactScalar& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  static ExactMatrix identity(int n);
  ExactMatrix transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
  bool operator==(const ExactMatrix& o) const = default;
};

// Graph with an alphabet {0..q-1} on edges and a local function per vertex,
// stored as a table of size q^deg(v) indexed in incident-edge order (the
// incident() order of the graph): index = sum_i sigma_{e_i} q^i.
struct NormalFactorGraph {
  Graph graph;
  int alphabet = 2;
  std::vector<std::vector<ExactScalar>> tables;
};

// Per edge (lo,hi) two matrices: at_lo used in the transform at the lo
// endpoint, at_hi at the hi endpoint. Valid when at_lo^T * at_hi = Id_q.
struct EdgeGauge {
  ExactMatrix at_lo;
  ExactMatrix at_hi;
};

struct GaugeSet {
  int from_alphabet = 2;
  int to_alphabet = 2;
  std::vector<EdgeGauge> per_edge;  // indexed by edge id
};

// Z(H) = sum over all edge labelings of the product of local values. Exact.
// Contracted along a BFS vertex sweep; live boundary states are capped at
// q^cap entries (plain enumeration would be q^e terms).
ExactScalar partition_function(const NormalFactorGraph& h, int cap = 24);

// Literal sum over all q^e labelings; test oracle for the sweep.
ExactScalar partition_function_brute(const NormalFactorGraph& h, int cap = 24);

// Validity (at_lo^T at_hi = Id) is checked eagerly; Z is preserved exactly.
NormalFactorGraph gauge_transform(const NormalFactorGraph& h, const GaugeSet& s);

// NFG on Sub(G) over {0,1} whose partition function is eps(G): balance
// indicator at original vertices, disagreement indicator at edge vertices.
NormalFactorGraph eulerian_nfg(const Graph& g);

// The G1/G2 pair on every edge of Sub(G); G2^T G1 = Id exactly.
GaugeSet eulerian_gauges(const Graph& g);

// Replays the gauge computation for one degree-d vertex and compares all 2^d
// entries with s_vector(d). d even, d <= 12.
bool verify_s_derivation(int d);

struct NfgCertificate {
  ExactScalar z_original;
  ExactScalar z_gauged;
  Int epsilon;  // orientation count from the cycle-space path
  bool pass = false;
};

NfgCertificate nfg_verify(const Graph& g);

}  // namespace eo
