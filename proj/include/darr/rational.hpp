#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace darr {

// Exact arithmetic throughout; mpq is kept canonical (reduced, positive
// denominator) by construction.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_pow(const Rational &base, unsigned long e);
Integer int_pow(long base, unsigned long e);
Integer binomial(unsigned long n, unsigned long k);

std::string rat_str(const Rational &q);
// Accepts "p", "-p", "p/q".
Rational parse_rat(const std::string &s);

}  // namespace darr
