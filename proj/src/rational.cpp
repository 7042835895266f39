#include "darr/rational.hpp"

#include "darr/error.hpp"

namespace darr {

const char *err_name(Err e) {
  switch (e) {
    case Err::DuplicateLine: return "DuplicateLine";
    case Err::MissingXLine: return "MissingXLine";
    case Err::TooFewLines: return "TooFewLines";
    case Err::NotDivisible: return "NotDivisible";
    case Err::ArrangementMismatch: return "ArrangementMismatch";
    case Err::NotInT: return "NotInT";
    case Err::NotInS: return "NotInS";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::UnsupportedDegree: return "UnsupportedDegree";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ConditionFails: return "ConditionFails";
    case Err::RankOverflow: return "RankOverflow";
    case Err::ExponentOverflow: return "ExponentOverflow";
    case Err::UncoveredShape: return "UncoveredShape";
    case Err::NotCocycle: return "NotCocycle";
    case Err::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

Rational rat_pow(const Rational &base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;  // powers of a canonical rational are canonical
}

Integer int_pow(long base, unsigned long e) {
  Integer b(base), out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string rat_str(const Rational &q) { return q.get_str(); }

Rational parse_rat(const std::string &s) {
  if (s.empty()) fail(Err::MalformedInput, "empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) fail(Err::MalformedInput, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace darr
