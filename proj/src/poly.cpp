#include "darr/poly.hpp"

#include <sstream>

#include "darr/error.hpp"

namespace darr {

CommPoly::Key CommPoly::key(unsigned i, unsigned j) {
  if (i >= kMaxExp || j >= kMaxExp)
    fail(Err::ExponentOverflow, "polynomial exponent out of range");
  return (i << 16) | j;
}

CommPoly CommPoly::constant(const Rational &c) { return monomial(0, 0, c); }

CommPoly CommPoly::monomial(unsigned i, unsigned j, const Rational &c) {
  CommPoly p;
  p.add_term(i, j, c);
  return p;
}

void CommPoly::add_term(unsigned i, unsigned j, const Rational &c) {
  if (c == 0) return;
  Key k = key(i, j);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> CommPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = -1;
  for (const auto &[k, c] : terms_) {
    int t = int(key_x(k)) + int(key_y(k));
    if (t > d) d = t;
  }
  return d;
}

bool CommPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = -1;
  for (const auto &[k, c] : terms_) {
    int t = int(key_x(k)) + int(key_y(k));
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

CommPoly CommPoly::homogeneous_component(int p) const {
  CommPoly out;
  for (const auto &[k, c] : terms_)
    if (int(key_x(k)) + int(key_y(k)) == p) out.terms_.emplace(k, c);
  return out;
}

Rational CommPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find(key(i, j));
  return it == terms_.end() ? Rational(0) : it->second;
}

CommPoly CommPoly::operator+(const CommPoly &o) const {
  CommPoly out = *this;
  for (const auto &[k, c] : o.terms_) out.add_term(key_x(k), key_y(k), c);
  return out;
}

CommPoly CommPoly::operator-(const CommPoly &o) const {
  CommPoly out = *this;
  for (const auto &[k, c] : o.terms_) out.add_term(key_x(k), key_y(k), -c);
  return out;
}

CommPoly CommPoly::operator-() const {
  CommPoly out;
  for (const auto &[k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

CommPoly CommPoly::operator*(const CommPoly &o) const {
  CommPoly out;
  for (const auto &[k1, c1] : terms_)
    for (const auto &[k2, c2] : o.terms_)
      out.add_term(key_x(k1) + key_x(k2), key_y(k1) + key_y(k2), c1 * c2);
  return out;
}

CommPoly CommPoly::operator*(const Rational &c) const {
  CommPoly out;
  if (c == 0) return out;
  for (const auto &[k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly out = constant(Rational(1));
  for (unsigned t = 0; t < e; ++t) out = out * *this;
  return out;
}

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    unsigned i = key_x(k), j = key_y(k);
    bool unit = (a == 1) && (i + j > 0);
    if (!unit) os << rat_str(a);
    bool need_star = !unit;
    auto put = [&](const char *v, unsigned e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    put("x", i);
    put("y", j);
  }
  return os.str();
}

CommPoly partial_x(const CommPoly &p) {
  CommPoly out;
  for (const auto &[k, c] : p.terms()) {
    unsigned i = CommPoly::key_x(k), j = CommPoly::key_y(k);
    if (i > 0) out.add_term(i - 1, j, c * Rational(long(i)));
  }
  return out;
}

CommPoly partial_y(const CommPoly &p) {
  CommPoly out;
  for (const auto &[k, c] : p.terms()) {
    unsigned i = CommPoly::key_x(k), j = CommPoly::key_y(k);
    if (j > 0) out.add_term(i, j - 1, c * Rational(long(j)));
  }
  return out;
}

LinearForm::LinearForm(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 && b == 0) fail(Err::MalformedInput, "zero linear form");
}

std::string LinearForm::str() const { return to_poly(*this).str(); }

bool proportional(const LinearForm &u, const LinearForm &v) {
  return u.a * v.b - u.b * v.a == 0;
}

CommPoly to_poly(const LinearForm &f) {
  CommPoly p;
  p.add_term(1, 0, f.a);
  p.add_term(0, 1, f.b);
  return p;
}

CommPoly divide_exact(const CommPoly &p, const LinearForm &alpha) {
  CommPoly q;
  if (alpha.a == 0) {
    // alpha = b*y: every term needs a positive y exponent
    for (const auto &[k, c] : p.terms()) {
      unsigned i = CommPoly::key_x(k), j = CommPoly::key_y(k);
      if (j == 0) fail(Err::NotDivisible, "y does not divide " + p.str());
      q.add_term(i, j - 1, c / alpha.b);
    }
    return q;
  }
  CommPoly rem = p;
  while (!rem.is_zero()) {
    auto lead = std::prev(rem.terms().end());  // largest in x-major order
    unsigned i = CommPoly::key_x(lead->first), j = CommPoly::key_y(lead->first);
    if (i == 0)
      fail(Err::NotDivisible, alpha.str() + " does not divide " + p.str());
    Rational c = lead->second / alpha.a;
    q.add_term(i - 1, j, c);
    rem = rem - to_poly(alpha) * CommPoly::monomial(i - 1, j, c);
  }
  return q;
}

}  // namespace darr
