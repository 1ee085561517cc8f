#pragma once

#include <gmpxx.h>

#include <string>

namespace eo {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
Rat make_rat(long num, long den);
Rat make_rat(const Int& num, const Int& den);

Int binom(unsigned long n, unsigned long k);

// "p/q" or "p"; also accepts a decimal point form like "1.5".
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);

// Natural log of huge exact values without overflowing double:
// split off the binary exponent, take the log of the mantissa.
double ln_int(const Int& x);
double ln_rat(const Rat& q);

double to_double(const Rat& q);

}  // namespace eo
