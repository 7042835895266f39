#include "darr/cochain.hpp"

#include <sstream>

#include "darr/error.hpp"

namespace darr {

Cochain Cochain::term(ArrPtr arr, const OreElement &a, Wedge w) {
  Cochain c(std::move(arr));
  c.add(w, a);
  return c;
}

void Cochain::add_term(Wedge w, PbwKey m, const Rational &c) {
  if (c == 0) return;
  CochainKey key{w, m};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Cochain::add(Wedge w, const OreElement &a) {
  for (const auto &[m, c] : a.terms()) add_term(w, m, c);
}

int Cochain::degree() const {
  int d = -1;
  for (const auto &[k, c] : terms_) {
    int p = wedge_len(k.w);
    if (d < 0) d = p;
    if (p != d) fail(Err::DegreeMismatch, "cochain mixes degrees");
  }
  return d;
}

OreElement Cochain::coefficient(Wedge w) const {
  OreElement out(arr_);
  for (const auto &[k, c] : terms_)
    if (k.w == w) out.add_term(k.m, c);
  return out;
}

Cochain Cochain::operator+(const Cochain &o) const {
  Cochain out = *this;
  if (!out.arr_) out.arr_ = o.arr_;
  for (const auto &[k, c] : o.terms_) out.add_term(k.w, k.m, c);
  return out;
}

Cochain Cochain::operator-(const Cochain &o) const {
  Cochain out = *this;
  if (!out.arr_) out.arr_ = o.arr_;
  for (const auto &[k, c] : o.terms_) out.add_term(k.w, k.m, -c);
  return out;
}

Cochain Cochain::operator*(const Rational &c) const {
  Cochain out(arr_);
  if (c == 0) return out;
  for (const auto &[k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

int Cochain::term_internal_degree(const CochainKey &k) const {
  return internal_degree(*arr_, k.m) - wedge_degree(k.w, arr_->r());
}

bool Cochain::is_homogeneous_of_degree(int d) const {
  for (const auto &[k, c] : terms_)
    if (term_internal_degree(k) != d) return false;
  return true;
}

int Cochain::max_E_degree() const {
  int d = -1;
  for (const auto &[k, c] : terms_) d = std::max(d, int(pbw_l(k.m)));
  return d;
}

std::string Cochain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  Wedge cur = 0xff;
  for (const auto &[k, c] : terms_) {
    if (k.w != cur) {
      if (!first) os << " + ";
      OreElement a = coefficient(k.w);
      os << "(" << a.str() << ") (x) " << wedge_str(k.w, true);
      cur = k.w;
      first = false;
    }
  }
  return os.str();
}

namespace {

struct DTerm {
  Wedge target;
  // coefficient expression pieces
  enum Kind { BracketX, BracketY, BracketD, BracketE, Plain, NablaX, NablaY } kind;
  Rational scale;  // for Plain: scale * a; for brackets: scale * [gen, a]
};

// the d^p displays, rows keyed by source mask
const std::vector<DTerm> &d_rows(Wedge w, long r) {
  using K = DTerm::Kind;
  static std::map<std::pair<Wedge, long>, std::vector<DTerm>> cache;
  auto key = std::make_pair(w, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<DTerm> rows;
  const Wedge xy = kWx | kWy, xE = kWx | kWE, yE = kWy | kWE, xD = kWx | kWD,
              yD = kWy | kWD, DE = kWD | kWE;
  const Wedge xyD = xy | kWD, xyE = xy | kWE, xDE = xD | kWE, yDE = yD | kWE;
  const Wedge full = xy | DE;

  switch (w) {
    case kWEmpty:
      rows = {{kWx, K::BracketX, rat(1)},
              {kWy, K::BracketY, rat(1)},
              {kWD, K::BracketD, rat(1)},
              {kWE, K::BracketE, rat(1)}};
      break;
    case kWx:
      rows = {{xy, K::BracketY, rat(-1)},
              {xE, K::Plain, rat(1)},
              {xE, K::BracketE, rat(-1)},
              {xD, K::BracketD, rat(-1)},
              {yD, K::NablaX, rat(1)}};
      break;
    case kWy:
      rows = {{xy, K::BracketX, rat(1)},
              {yE, K::Plain, rat(1)},
              {yE, K::BracketE, rat(-1)},
              {yD, K::NablaY, rat(1)},
              {yD, K::BracketD, rat(-1)}};
      break;
    case kWD:
      rows = {{xD, K::BracketX, rat(1)},
              {yD, K::BracketY, rat(1)},
              {DE, K::Plain, rat(r)},
              {DE, K::BracketE, rat(-1)}};
      break;
    case kWE:
      rows = {{xE, K::BracketX, rat(1)}, {yE, K::BracketY, rat(1)}, {DE, K::BracketD, rat(1)}};
      break;
    case kWx | kWy:
      rows = {{xyD, K::BracketD, rat(1)},
              {xyD, K::NablaY, rat(-1)},
              {xyE, K::BracketE, rat(1)},
              {xyE, K::Plain, rat(-2)}};
      break;
    case kWx | kWE:
      rows = {{xyE, K::BracketY, rat(-1)},
              {xDE, K::BracketD, rat(-1)},
              {yDE, K::NablaX, rat(1)}};
      break;
    case kWy | kWE:
      rows = {{xyE, K::BracketX, rat(1)}, {yDE, K::NablaY, rat(1)}, {yDE, K::BracketD, rat(-1)}};
      break;
    case kWx | kWD:
      rows = {{xyD, K::BracketY, rat(-1)},
              {xDE, K::BracketE, rat(1)},
              {xDE, K::Plain, rat(-(r + 1))}};
      break;
    case kWy | kWD:
      rows = {{xyD, K::BracketX, rat(1)},
              {yDE, K::BracketE, rat(1)},
              {yDE, K::Plain, rat(-(r + 1))}};
      break;
    case kWD | kWE:
      rows = {{xDE, K::BracketX, rat(1)}, {yDE, K::BracketY, rat(1)}};
      break;
    case kWx | kWy | kWD:
      rows = {{full, K::BracketE, rat(-1)}, {full, K::Plain, rat(r + 2)}};
      break;
    case kWx | kWy | kWE:
      rows = {{full, K::BracketD, rat(1)}, {full, K::NablaY, rat(-1)}};
      break;
    case kWx | kWD | kWE:
      rows = {{full, K::BracketY, rat(-1)}};
      break;
    case kWy | kWD | kWE:
      rows = {{full, K::BracketX, rat(1)}};
      break;
    default:
      rows = {};  // top degree: zero differential
  }
  return cache.emplace(key, std::move(rows)).first->second;
}

}  // namespace

Cochain hh_d(int p, const Cochain &c) {
  if (p < 0 || p > 4) fail(Err::DegreeMismatch, "hh_d degree out of range");
  const ArrPtr &arr = c.arrangement();
  Cochain out(arr);
  if (c.is_zero()) return out;
  if (c.degree() != p) fail(Err::DegreeMismatch, "cochain not in degree " + std::to_string(p));

  // group by wedge for fewer passes
  Wedge cur = 0xff;
  OreElement a;
  auto flush = [&]() {
    if (cur == 0xff || a.is_zero()) return;
    for (const auto &row : d_rows(cur, arr->r())) {
      OreElement val(arr);
      switch (row.kind) {
        case DTerm::BracketX: val = commutator(OreElement::gen_x(arr), a); break;
        case DTerm::BracketY: val = commutator(OreElement::gen_y(arr), a); break;
        case DTerm::BracketD: val = commutator(OreElement::gen_D(arr), a); break;
        case DTerm::BracketE: val = commutator(OreElement::gen_E(arr), a); break;
        case DTerm::Plain: val = a; break;
        case DTerm::NablaX: val = nabla_image(a, Var::X, arr->F()); break;
        case DTerm::NablaY: val = nabla_image(a, Var::Y, arr->F()); break;
      }
      out.add(row.target, val * row.scale);
    }
  };
  for (const auto &[k, coef] : c.terms()) {
    if (k.w != cur) {
      flush();
      cur = k.w;
      a = OreElement(arr);
    }
    a.add_term(k.m, coef);
  }
  flush();
  return out;
}

Cochain homotopy_s(int p, const Cochain &c) {
  if (p < 1 || p > 4) fail(Err::DegreeMismatch, "homotopy degree out of range");
  const ArrPtr &arr = c.arrangement();
  Cochain out(arr);
  if (c.is_zero()) return out;
  if (c.degree() != p) fail(Err::DegreeMismatch, "cochain not in degree " + std::to_string(p));
  Rational sign = (p % 2 == 1) ? rat(1) : rat(-1);
  for (const auto &[k, coef] : c.terms()) {
    if (!wedge_has(k.w, kWE)) continue;
    out.add_term(Wedge(k.w & ~kWE), k.m, coef * sign);
  }
  return out;
}

Cochain euler_gamma(const Cochain &c) {
  Cochain out(c.arrangement());
  for (const auto &[k, coef] : c.terms())
    out.add_term(k.w, k.m, coef * rat(c.term_internal_degree(k)));
  return out;
}

bool is_cocycle(const Cochain &c) {
  if (c.is_zero()) return true;
  return hh_d(c.degree(), c).is_zero();
}

OreElement evaluate_cochain(const Cochain &alpha, const BimoduleChain &chain) {
  const ArrPtr &arr = alpha.arrangement() ? alpha.arrangement() : chain.arrangement();
  OreElement out(arr);
  for (const auto &[k, c] : chain.terms()) {
    OreElement coef = alpha.coefficient(k.w);
    if (coef.is_zero()) continue;
    OreElement val = mul(OreElement::monomial(arr, k.left, c),
                         mul(coef, OreElement::monomial(arr, k.right)));
    out = out + val;
  }
  return out;
}

}  // namespace darr
