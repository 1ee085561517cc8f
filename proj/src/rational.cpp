#include "eo/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "eo/errors.hpp"

namespace eo {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse: return "ParseError";
    case Errc::loop: return "LoopError";
    case Errc::index: return "IndexError";
    case Errc::param: return "ParamError";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_eulerian: return "EulerError";
    case Errc::state_blowup: return "StateBlowup";
    case Errc::parity: return "ParityError";
    case Errc::shape: return "ShapeError";
    case Errc::regularity: return "RegularityError";
    case Errc::convergence: return "ConvergenceFailure";
    case Errc::domain: return "DomainError";
    case Errc::size: return "SizeError";
    case Errc::radius_mismatch: return "RadiusMismatch";
    case Errc::gauge_invalid: return "GaugeInvalid";
  }
  return "Error";
}

Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int binom(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::parse, "empty rational");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      fail(Errc::parse, "bad rational: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) fail(Errc::parse, "zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      fail(Errc::parse, "bad rational: " + s);
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rat(num, den);
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) fail(Errc::parse, "bad rational: " + s);
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double ln_int(const Int& x) {
  if (x <= 0) fail(Errc::domain, "ln of non-positive integer");
  signed long exp;
  double m = mpz_get_d_2exp(&exp, x.get_mpz_t());  // x = m * 2^exp, m in [0.5, 1)
  return std::log(m) + static_cast<double>(exp) * M_LN2;
}

double ln_rat(const Rat& q) {
  if (q <= 0) fail(Errc::domain, "ln of non-positive rational");
  return ln_int(Int(q.get_num())) - ln_int(Int(q.get_den()));
}

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace eo
