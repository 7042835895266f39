#include "darr/ore.hpp"

#include <sstream>

#include "darr/error.hpp"

namespace darr {

namespace {

void check_same(const ArrPtr &a, const ArrPtr &b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  fail(Err::ArrangementMismatch, "operands live over different arrangements");
}

}  // namespace

PbwKey pbw(unsigned i, unsigned j, unsigned k, unsigned l) {
  if (i >= 0x8000u || j >= 0x8000u || k >= 0x8000u || l >= 0x8000u)
    fail(Err::ExponentOverflow, "PBW exponent out of range");
  return (PbwKey(i) << 48) | (PbwKey(j) << 32) | (PbwKey(k) << 16) | PbwKey(l);
}

std::string pbw_str(PbwKey m) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char *v, unsigned e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << v;
    if (e > 1) os << "^" << e;
    first = false;
  };
  put("x", pbw_i(m));
  put("y", pbw_j(m));
  put("D", pbw_k(m));
  put("E", pbw_l(m));
  if (first) os << "1";
  return os.str();
}

OreElement OreElement::scalar(ArrPtr arr, const Rational &c) {
  OreElement u(std::move(arr));
  u.add_term(kPbwOne, c);
  return u;
}

OreElement OreElement::monomial(ArrPtr arr, unsigned i, unsigned j, unsigned k, unsigned l,
                                const Rational &c) {
  OreElement u(std::move(arr));
  u.add_term(pbw(i, j, k, l), c);
  return u;
}

OreElement OreElement::monomial(ArrPtr arr, PbwKey m, const Rational &c) {
  OreElement u(std::move(arr));
  u.add_term(m, c);
  return u;
}

OreElement OreElement::from_poly(ArrPtr arr, const CommPoly &p) {
  OreElement u(std::move(arr));
  for (const auto &[k, c] : p.terms())
    u.add_term(pbw(CommPoly::key_x(k), CommPoly::key_y(k), 0, 0), c);
  return u;
}

bool OreElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kPbwOne);
}

Rational OreElement::scalar_part() const {
  auto it = terms_.find(kPbwOne);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational OreElement::coeff(PbwKey m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool OreElement::in_S() const {
  for (const auto &[m, c] : terms_)
    if (pbw_k(m) != 0 || pbw_l(m) != 0) return false;
  return true;
}

bool OreElement::in_T() const {
  for (const auto &[m, c] : terms_)
    if (pbw_i(m) != 0 || pbw_j(m) != 0 || pbw_k(m) != 0) return false;
  return true;
}

bool OreElement::in_xyD() const {
  for (const auto &[m, c] : terms_)
    if (pbw_l(m) != 0) return false;
  return true;
}

CommPoly OreElement::poly_part() const {
  if (!in_S()) fail(Err::NotInS, "element has D or E support: " + str());
  CommPoly p;
  for (const auto &[m, c] : terms_) p.add_term(pbw_i(m), pbw_j(m), c);
  return p;
}

void OreElement::add_term(PbwKey m, const Rational &c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

OreElement OreElement::operator+(const OreElement &o) const {
  check_same(arr_, o.arr_);
  OreElement out = *this;
  if (!out.arr_) out.arr_ = o.arr_;
  for (const auto &[m, c] : o.terms_) out.add_term(m, c);
  return out;
}

OreElement OreElement::operator-(const OreElement &o) const {
  check_same(arr_, o.arr_);
  OreElement out = *this;
  if (!out.arr_) out.arr_ = o.arr_;
  for (const auto &[m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

OreElement OreElement::operator-() const {
  OreElement out(arr_);
  for (const auto &[m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

OreElement OreElement::operator*(const Rational &c) const {
  OreElement out(arr_);
  if (c == 0) return out;
  for (const auto &[m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

bool OreElement::operator==(const OreElement &o) const { return terms_ == o.terms_; }

int internal_degree(const Arrangement &arr, PbwKey m) {
  return int(pbw_i(m)) + int(pbw_j(m)) + arr.r() * int(pbw_k(m));
}

bool OreElement::is_homogeneous() const {
  int d = 0;
  bool seen = false;
  for (const auto &[m, c] : terms_) {
    int t = internal_degree(*arr_, m);
    if (!seen) {
      d = t;
      seen = true;
    }
    if (t != d) return false;
  }
  return true;
}

std::map<int, OreElement> OreElement::homogeneous_parts() const {
  std::map<int, OreElement> out;
  for (const auto &[m, c] : terms_) {
    auto [it, fresh] = out.try_emplace(internal_degree(*arr_, m), arr_);
    it->second.add_term(m, c);
  }
  return out;
}

int OreElement::filtration_degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_) d = std::max(d, int(pbw_k(m)) + int(pbw_l(m)));
  return d;
}

int OreElement::max_E_degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_) d = std::max(d, int(pbw_l(m)));
  return d;
}

namespace {

// left multiplication by D:
//   D * x^a y^b D^c E^d = x^a y^b D^(c+1) E^d + b x^a y^(b-1) F D^c E^d
OreElement lmul_D(const OreElement &u) {
  const auto &arr = u.arrangement();
  OreElement out(arr);
  for (const auto &[m, c] : u.terms()) {
    unsigned a = pbw_i(m), b = pbw_j(m), k = pbw_k(m), l = pbw_l(m);
    out.add_term(pbw(a, b, k + 1, l), c);
    if (b > 0) {
      Rational bc = c * Rational(long(b));
      for (const auto &t : arr->F_terms())
        out.add_term(pbw(a + t.i, b - 1 + t.j, k, l), bc * t.c);
    }
  }
  return out;
}

// left multiplication by E^e via E^e w = w (E + deg w)^e on monomials
OreElement lmul_E_pow(const OreElement &u, unsigned e) {
  if (e == 0) return u;
  const auto &arr = u.arrangement();
  OreElement out(arr);
  for (const auto &[m, c] : u.terms()) {
    long d = internal_degree(*arr, m);
    for (unsigned t = 0; t <= e; ++t) {
      Rational w = Rational(binomial(e, t)) * Rational(int_pow(d, e - t));
      if (w == 0) continue;
      out.add_term(pbw(pbw_i(m), pbw_j(m), pbw_k(m), pbw_l(m) + t), c * w);
    }
  }
  return out;
}

OreElement shift_xy(const OreElement &u, unsigned a, unsigned b, const Rational &c) {
  OreElement out(u.arrangement());
  for (const auto &[m, v] : u.terms())
    out.add_term(pbw(pbw_i(m) + a, pbw_j(m) + b, pbw_k(m), pbw_l(m)), v * c);
  return out;
}

}  // namespace

OreElement mul(const OreElement &u, const OreElement &v) {
  check_same(u.arrangement(), v.arrangement());
  const ArrPtr &arr = u.arrangement() ? u.arrangement() : v.arrangement();
  OreElement out(arr);
  for (const auto &[m, c] : u.terms()) {
    OreElement t = lmul_E_pow(v, pbw_l(m));
    for (unsigned s = 0; s < pbw_k(m); ++s) t = lmul_D(t);
    t = shift_xy(t, pbw_i(m), pbw_j(m), c);
    for (const auto &[tm, tc] : t.terms()) out.add_term(tm, tc);
  }
  return out;
}

OreElement mul_mono(const ArrPtr &arr, PbwKey a, PbwKey b) {
  return mul(OreElement::monomial(arr, a), OreElement::monomial(arr, b));
}

OreElement commutator(const OreElement &u, const OreElement &v) {
  return mul(u, v) - mul(v, u);
}

OreElement ore_pow(const OreElement &u, unsigned e) {
  OreElement out = OreElement::scalar(u.arrangement(), Rational(1));
  for (unsigned t = 0; t < e; ++t) out = mul(out, u);
  return out;
}

int ad_nilpotence_order(const OreElement &f, const OreElement &u, int max_iter) {
  OreElement cur = u;
  for (int n = 0; n <= max_iter; ++n) {
    if (cur.is_zero()) return n;
    cur = commutator(f, cur);
  }
  fail(Err::IndexOutOfRange,
       "ad(" + f.str() + ") not nilpotent on " + u.str() + " within " +
           std::to_string(max_iter) + " iterations");
}

CommPoly apply_to_poly(const OreElement &u, const CommPoly &p) {
  const auto &arr = u.arrangement();
  CommPoly out;
  for (const auto &[m, c] : u.terms()) {
    CommPoly q;
    // E^l scales each monomial by (total degree)^l
    for (const auto &[k, v] : p.terms()) {
      unsigned a = CommPoly::key_x(k), b = CommPoly::key_y(k);
      q.add_term(a, b, v * Rational(int_pow(long(a) + long(b), pbw_l(m))));
    }
    for (unsigned s = 0; s < pbw_k(m); ++s) q = arr->F() * partial_y(q);
    out = out + CommPoly::monomial(pbw_i(m), pbw_j(m), c) * q;
  }
  return out;
}

OreElement tau_apply(long t, const OreElement &a) {
  if (!a.in_T()) fail(Err::NotInT, "tau argument has x, y or D support: " + a.str());
  const auto &arr = a.arrangement();
  OreElement out(arr);
  for (const auto &[m, c] : a.terms()) {
    unsigned n = pbw_l(m);
    // E^n - (E+t)^n
    out.add_term(pbw(0, 0, 0, n), c);
    for (unsigned s = 0; s <= n; ++s) {
      Rational w = Rational(binomial(n, s)) * Rational(int_pow(t, n - s));
      out.add_term(pbw(0, 0, 0, s), -c * w);
    }
  }
  return out;
}

OreElement nabla_image(const OreElement &u, Var which, const CommPoly &F) {
  const ArrPtr &arr = u.arrangement();
  OreElement out(arr);
  for (const auto &[k, c] : F.terms()) {
    unsigned i = CommPoly::key_x(k), j = CommPoly::key_y(k);
    if (which == Var::X) {
      for (unsigned t = 0; t + 1 <= i; ++t) {
        unsigned s = i - 1 - t;
        OreElement w = mul(OreElement::monomial(arr, s, 0, 0, 0),
                           mul(u, OreElement::monomial(arr, t, j, 0, 0)));
        out = out + w * c;
      }
    } else {
      for (unsigned t = 0; t + 1 <= j; ++t) {
        unsigned s = j - 1 - t;
        OreElement w = mul(OreElement::monomial(arr, i, s, 0, 0),
                           mul(u, OreElement::monomial(arr, 0, t, 0, 0)));
        out = out + w * c;
      }
    }
  }
  return out;
}

std::string OreElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
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
    if (m == kPbwOne) {
      os << rat_str(a);
    } else if (a == 1) {
      os << pbw_str(m);
    } else {
      os << rat_str(a) << "*" << pbw_str(m);
    }
  }
  return os.str();
}

std::string ore_str(const OreElement &u) { return u.str(); }

namespace {

struct Parser {
  const std::string &s;
  std::size_t pos = 0;

  explicit Parser(const std::string &text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  unsigned parse_exp() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(Err::MalformedInput, "expected exponent at '" + s.substr(start) + "'");
    return unsigned(std::stoul(s.substr(start, pos - start)));
  }

  // coefficient [p[/q]] and/or letters joined with '*'
  void parse_term(const ArrPtr &arr, OreElement &acc, bool negate) {
    Rational coeff(1);
    unsigned e[4] = {0, 0, 0, 0};
    bool any = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                             ((s[pos] == '-' || s[pos] == '+') && !any))) {
        std::size_t start = pos;
        if (s[pos] == '-' || s[pos] == '+') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        coeff *= parse_rat(s.substr(start, pos - start));
        any = true;
      } else if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'y' || s[pos] == 'D' ||
                                    s[pos] == 'E')) {
        int idx = s[pos] == 'x' ? 0 : s[pos] == 'y' ? 1 : s[pos] == 'D' ? 2 : 3;
        ++pos;
        unsigned ex = 1;
        if (eat('^')) ex = parse_exp();
        e[idx] += ex;
        any = true;
      } else {
        fail(Err::MalformedInput, "unexpected input at '" + s.substr(pos) + "'");
      }
      expect_factor = eat('*');
    }
    if (!any) fail(Err::MalformedInput, "empty term");
    if (negate) coeff = -coeff;
    acc.add_term(pbw(e[0], e[1], e[2], e[3]), coeff);
  }
};

}  // namespace

OreElement parse_ore(const ArrPtr &arr, const std::string &text) {
  Parser p(text);
  OreElement acc(arr);
  p.skip_ws();
  if (p.pos >= text.size()) fail(Err::MalformedInput, "empty element");
  bool neg = p.eat('-');
  if (!neg) p.eat('+');
  p.parse_term(arr, acc, neg);
  for (;;) {
    p.skip_ws();
    if (p.pos >= text.size()) break;
    if (p.eat('+')) {
      bool n2 = p.eat('-');
      p.parse_term(arr, acc, n2);
    } else if (p.eat('-')) {
      p.parse_term(arr, acc, true);
    } else {
      fail(Err::MalformedInput, "unexpected input at '" + text.substr(p.pos) + "'");
    }
  }
  return acc;
}

}  // namespace darr
